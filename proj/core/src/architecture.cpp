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

#include "subarch/architecture.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "subarch/error.hpp"

namespace subarch {
namespace {

using nlohmann::json;

// Line number of the `index`-th element of the top-level "edges" array, for
// diagnostics. Returns 0 if the text cannot be scanned.
int edge_line(std::string_view text, std::size_t index) {
  const auto key = text.find("\"edges\"");
  if (key == std::string_view::npos) return 0;
  int line = 1;
  for (std::size_t i = 0; i < key; ++i) line += text[i] == '\n';
  int depth = 0;
  std::size_t seen = 0;
  bool in_string = false;
  for (std::size_t i = key + 7; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n') ++line;
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '[') {
      ++depth;
      if (depth == 2) {
        if (seen == index) return line;
        ++seen;
      }
    } else if (c == ']') {
      if (--depth == 0) return 0;
    }
  }
  return 0;
}

std::string at_line(int line) {
  return line > 0 ? " (line " + std::to_string(line) + ")" : std::string{};
}

struct BundledDevice {
  const char* name;
  const char* source;
  int qubits;
  std::vector<Edge> edges;
};

const std::vector<BundledDevice>& bundled_devices() {
  static const std::vector<BundledDevice> devices = [] {
    std::vector<BundledDevice> d;
    d.push_back({"ibmq_guadalupe",
                 "IBM Falcon r4 16-qubit heavy-hex coupling map",
                 16,
                 {{0, 1}, {1, 2}, {1, 4}, {2, 3}, {3, 5}, {4, 7}, {5, 8},
                  {6, 7}, {7, 10}, {8, 9}, {8, 11}, {10, 12}, {11, 14},
                  {12, 13}, {12, 15}, {13, 14}}});
    std::vector<Edge> rigetti;
    for (int i = 0; i < 8; ++i) rigetti.emplace_back(i, (i + 1) % 8);
    for (int i = 0; i < 8; ++i) rigetti.emplace_back(8 + i, 8 + (i + 1) % 8);
    rigetti.emplace_back(1, 14);
    rigetti.emplace_back(2, 13);
    d.push_back({"rigetti_16",
                 "Two 8-qubit rings joined by two couplers into a central "
                 "4-qubit ring (Rigetti Aspen layout)",
                 16, rigetti});
    d.push_back({"sycamore_23",
                 "23-qubit cutout of the Google Sycamore lattice (nearest "
                 "neighbours on the rotated grid)",
                 23,
                 {{0, 2},   {1, 2},   {1, 5},   {2, 3},   {2, 6},
                  {3, 7},   {4, 5},   {5, 6},   {5, 9},   {6, 7},
                  {6, 10},  {7, 8},   {7, 11},  {8, 12},  {9, 10},
                  {10, 11}, {10, 14}, {11, 12}, {11, 15}, {12, 13},
                  {12, 16}, {13, 17}, {14, 15}, {15, 16}, {15, 19},
                  {16, 17}, {16, 20}, {17, 18}, {17, 21}, {19, 20},
                  {20, 21}, {20, 22}}});
    d.push_back({"ring_5", "5-qubit ring", 5,
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}});
    d.push_back({"line_4", "4-qubit line", 4, {{0, 1}, {1, 2}, {2, 3}}});
    d.push_back(
        {"line_5", "5-qubit line", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}});
    return d;
  }();
  return devices;
}

}  // namespace

Architecture::Architecture(std::string name, Graph graph, std::string source)
    : name_(std::move(name)), source_(std::move(source)),
      graph_(std::move(graph)) {
  if (name_.empty()) throw ValidationError("architecture name is empty");
  if (graph_.vertex_count() == 0) {
    throw ValidationError("architecture '" + name_ + "' has no qubits");
  }
  if (!is_connected(graph_)) {
    throw ValidationError("architecture '" + name_ + "' is disconnected");
  }
  distances_ = all_pairs_shortest_paths(graph_);
  diameter_ = subarch::diameter(distances_);
}

std::string Architecture::content_hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  mix(name_);
  mix("\n");
  mix(std::to_string(graph_.vertex_count()));
  for (auto [u, v] : graph_.edges()) {
    mix("\n" + std::to_string(u) + " " + std::to_string(v));
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Architecture parse_architecture(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("architecture parse error: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ValidationError("architecture file must hold a JSON object");
  }
  for (const char* field : {"name", "num_qubits", "edges"}) {
    if (!doc.contains(field)) {
      throw ValidationError(std::string("architecture is missing \"") + field +
                            "\"");
    }
  }
  if (!doc["name"].is_string()) {
    throw ValidationError("\"name\" must be a string");
  }
  if (!doc["num_qubits"].is_number_integer()) {
    throw ValidationError("\"num_qubits\" must be an integer");
  }
  if (!doc["edges"].is_array()) {
    throw ValidationError("\"edges\" must be an array");
  }
  const auto n = doc["num_qubits"].get<std::int64_t>();
  if (n < 1 || n > kMaxVertices) {
    throw ValidationError("\"num_qubits\" must be in [1, " +
                          std::to_string(kMaxVertices) + "]");
  }
  std::vector<Edge> edges;
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  const auto& list = doc["edges"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& e = list[i];
    const std::string where = at_line(edge_line(text, i));
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ValidationError("edge #" + std::to_string(i) +
                            " is not a pair of integers" + where);
    }
    const auto u = e[0].get<std::int64_t>();
    const auto v = e[1].get<std::int64_t>();
    const std::string name =
        "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ValidationError("edge " + name + " has an out-of-range endpoint" +
                            where);
    }
    if (u == v) throw ValidationError("edge " + name + " is a self-loop" + where);
    if (present[u][v]) throw ValidationError("duplicate edge " + name + where);
    present[u][v] = present[v][u] = 1;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  Graph g(static_cast<int>(n), edges);
  if (doc.contains("labels")) {
    const auto& labels = doc["labels"];
    if (!labels.is_array() || static_cast<std::int64_t>(labels.size()) != n) {
      throw ValidationError("\"labels\" must list one string per qubit");
    }
    std::vector<std::string> out;
    for (const auto& l : labels) {
      if (!l.is_string()) throw ValidationError("labels must be strings");
      out.push_back(l.get<std::string>());
    }
    g.set_labels(std::move(out));
  }
  std::string source;
  if (doc.contains("source") && doc["source"].is_string()) {
    source = doc["source"].get<std::string>();
  }
  return Architecture(doc["name"].get<std::string>(), std::move(g),
                      std::move(source));
}

Architecture load_architecture(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ValidationError("cannot open architecture file '" + path.string() +
                          "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_architecture(buf.str());
}

std::string architecture_to_json(const Architecture& arch) {
  nlohmann::ordered_json doc;
  doc["name"] = arch.name();
  if (!arch.source().empty()) doc["source"] = arch.source();
  doc["num_qubits"] = arch.size();
  if (!arch.graph().labels().empty()) doc["labels"] = arch.graph().labels();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : arch.graph().edges()) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::vector<std::string> bundled_architecture_names() {
  std::vector<std::string> names;
  for (const auto& d : bundled_devices()) names.emplace_back(d.name);
  return names;
}

Architecture bundled_architecture(std::string_view name) {
  for (const auto& d : bundled_devices()) {
    if (name == d.name) {
      Graph g(d.qubits, d.edges);
      if (name == "sycamore_23") {
        static const int kRows[] = {3, 4, 4, 4, 5, 5, 5, 5, 5, 6, 6, 6,
                                    6, 6, 7, 7, 7, 7, 7, 8, 8, 8, 9};
        static const int kCols[] = {2, 1, 2, 3, 0, 1, 2, 3, 4, 1, 2, 3,
                                    4, 5, 2, 3, 4, 5, 6, 3, 4, 5, 4};
        std::vector<std::string> labels;
        for (int i = 0; i < 23; ++i) {
          labels.push_back("q(" + std::to_string(kRows[i]) + "," +
                           std::to_string(kCols[i]) + ")");
        }
        g.set_labels(std::move(labels));
      }
      return Architecture(d.name, std::move(g), d.source);
    }
  }
  throw UsageError("unknown bundled architecture '" + std::string(name) + "'");
}

}  // namespace subarch
