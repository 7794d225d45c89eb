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

#ifndef SUBARCH_PARALLEL_HPP_
#define SUBARCH_PARALLEL_HPP_

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>

namespace subarch {

/// Execution knobs shared by the long-running operations. Results never
/// depend on `jobs`.
struct RunOptions {
  int jobs = 1;
  /// Absent means no wall-clock limit.
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static RunOptions with_time_limit(double seconds, int jobs = 1);
  bool expired() const;
  /// Throws ResourceError mentioning `what` once the deadline has passed.
  void check_deadline(const std::string& what) const;
};

/// Runs body(i) for every i in [0, count) on up to `jobs` threads. Each index
/// runs exactly once; callers write results into per-index slots so the
/// merged output is independent of scheduling. The first exception (by
/// index) is rethrown on the calling thread.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body);

}  // namespace subarch

#endif  // SUBARCH_PARALLEL_HPP_
