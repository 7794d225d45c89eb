// Copyright 2026 The subarch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBARCH_ERROR_HPP_
#define SUBARCH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace subarch {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a documented precondition (bad argument, out-of-range size).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input data is malformed or inconsistent (parse errors, bad edges,
/// hash mismatches, disconnected devices).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured resource limit was exceeded (state space, combination cap,
/// wall-clock budget).
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace subarch

#endif  // SUBARCH_ERROR_HPP_
