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

#ifndef SUBARCH_ARCHITECTURE_HPP_
#define SUBARCH_ARCHITECTURE_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "subarch/graph.hpp"

namespace subarch {

/// A device coupling graph. Always connected and non-empty.
class Architecture {
 public:
  /// Throws ValidationError if the graph is empty or disconnected or the
  /// name is empty.
  Architecture(std::string name, Graph graph, std::string source = {});

  const std::string& name() const { return name_; }
  const std::string& source() const { return source_; }
  const Graph& graph() const { return graph_; }
  const DistanceMatrix& distances() const { return distances_; }
  int size() const { return graph_.vertex_count(); }
  int diameter() const { return diameter_; }

  /// FNV-1a 64 over the normalized content (name, qubit count, sorted
  /// edges), rendered as 16 hex digits. Whitespace and edge order in the
  /// source file do not change it.
  std::string content_hash() const;

 private:
  std::string name_;
  std::string source_;
  Graph graph_;
  DistanceMatrix distances_;
  int diameter_ = 0;
};

/// Parses the architecture JSON format
///   {"name": str, "num_qubits": int, "edges": [[i, j], ...]}
/// with optional "source" and "labels". Errors are ValidationErrors that
/// name the offending line or edge.
Architecture parse_architecture(std::string_view text);
Architecture load_architecture(const std::filesystem::path& path);

/// Serializes in the same format (edges normalized and sorted).
std::string architecture_to_json(const Architecture& arch);

/// Devices shipped with the library: "ibmq_guadalupe", "rigetti_16",
/// "sycamore_23", plus the small "ring_5", "line_4", "line_5".
std::vector<std::string> bundled_architecture_names();
Architecture bundled_architecture(std::string_view name);

}  // namespace subarch

#endif  // SUBARCH_ARCHITECTURE_HPP_
