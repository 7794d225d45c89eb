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

#include "subarch/dot.hpp"

#include <sstream>

namespace subarch {
namespace {

std::string dot_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Graph& g, VertexMask highlight,
                       std::string_view name) {
  std::ostringstream out;
  out << "graph " << dot_string(name) << " {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    std::string attrs;
    if (!g.labels().empty()) attrs = "label=" + dot_string(g.labels()[v]);
    if (highlight & bit(v)) {
      if (!attrs.empty()) attrs += ", ";
      attrs += "style=filled, fillcolor=\"#f4a261\"";
    }
    if (!attrs.empty()) out << " [" << attrs << "]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) {
    out << "  " << u << " -- " << v;
    if ((highlight & bit(u)) && (highlight & bit(v))) out << " [penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const Architecture& arch, const SubarchRef& sub) {
  return export_dot(arch.graph(), sub.vertices, arch.name());
}

}  // namespace subarch
