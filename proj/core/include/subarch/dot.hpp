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

#ifndef SUBARCH_DOT_HPP_
#define SUBARCH_DOT_HPP_

#include <string>
#include <string_view>

#include "subarch/architecture.hpp"
#include "subarch/enumeration.hpp"
#include "subarch/graph.hpp"

namespace subarch {

/// Undirected Graphviz text. Highlighted vertices are filled and the edges
/// between them drawn bold.
std::string export_dot(const Graph& g, VertexMask highlight = 0,
                       std::string_view name = "coupling");

/// The parent architecture with the members of `sub` highlighted.
std::string export_dot(const Architecture& arch, const SubarchRef& sub);

}  // namespace subarch

#endif  // SUBARCH_DOT_HPP_
