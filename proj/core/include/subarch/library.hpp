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

// Persisted per-size candidate, optimal-candidate and covering results for
// one architecture.

#ifndef SUBARCH_LIBRARY_HPP_
#define SUBARCH_LIBRARY_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subarch/architecture.hpp"
#include "subarch/enumeration.hpp"
#include "subarch/parallel.hpp"

namespace subarch {

inline constexpr int kLibraryFormatVersion = 1;

struct LibraryCovering {
  int max_elements = 0;
  std::vector<SubarchRef> members;

  friend bool operator==(const LibraryCovering&,
                         const LibraryCovering&) = default;
};

struct LibraryEntry {
  int size = 0;
  std::vector<SubarchRef> candidates;
  std::vector<SubarchRef> optimal;
  std::vector<LibraryCovering> coverings;

  friend bool operator==(const LibraryEntry&, const LibraryEntry&) = default;
};

struct CandidateLibrary {
  std::string architecture;
  std::string architecture_hash;
  std::string tool_version;
  /// UTC, ISO 8601. Taken from SOURCE_DATE_EPOCH when that is set.
  std::string created;
  std::vector<LibraryEntry> entries;

  friend bool operator==(const CandidateLibrary&,
                         const CandidateLibrary&) = default;
};

std::string tool_version();
std::string build_timestamp();

/// Computes one entry per size with the requested covering bounds.
CandidateLibrary build_library(const Architecture& arch,
                               std::span<const int> sizes,
                               std::span<const int> covering_bounds,
                               const RunOptions& run = {});

std::string library_to_json(const CandidateLibrary& lib);

/// Throws ValidationError on malformed input, an unknown format version, a
/// hash that does not match `arch` or a stored class key that disagrees
/// with the recomputed one.
CandidateLibrary library_from_json(std::string_view text,
                                   const Architecture& arch);

void save_library(const CandidateLibrary& lib,
                  const std::filesystem::path& path);
CandidateLibrary load_library(const std::filesystem::path& path,
                              const Architecture& arch);

}  // namespace subarch

#endif  // SUBARCH_LIBRARY_HPP_
