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

// Command-line front end. Exit codes: 0 success, 1 usage error,
// 2 validation error, 3 resource or time limit, 4 internal error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "subarch/architecture.hpp"
#include "subarch/candidates.hpp"
#include "subarch/covering.hpp"
#include "subarch/dot.hpp"
#include "subarch/enumeration.hpp"
#include "subarch/error.hpp"
#include "subarch/isomorphism.hpp"
#include "subarch/library.hpp"
#include "subarch/mapping.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace subarch;

struct Globals {
  bool json = false;
  std::string dot;
  int jobs = 1;
  std::uint64_t seed = 1;
  double time_limit = 0;

  RunOptions run() const { return RunOptions::with_time_limit(time_limit, jobs); }
};

struct Highlight {
  std::string name;
  const Graph* graph;
  VertexMask vertices;
};

Architecture resolve_architecture(const std::string& arch_arg) {
  if (std::filesystem::is_regular_file(arch_arg)) return load_architecture(arch_arg);
  for (const auto& name : bundled_architecture_names()) {
    if (name == arch_arg) return bundled_architecture(arch_arg);
  }
  throw ValidationError("cannot open architecture '" + arch_arg +
                        "' (neither a file nor a bundled name)");
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
        continue;
      }
      const int lo = std::stoi(item.substr(0, dots));
      const int hi = std::stoi(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument(item);
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + " '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

VertexMask parse_subset(const std::string& text, const Architecture& arch) {
  VertexMask m = 0;
  for (int v : parse_int_list(text, "vertex list")) {
    if (v < 0 || v >= arch.size()) {
      throw UsageError("vertex " + std::to_string(v) + " is not on '" +
                       arch.name() + "'");
    }
    m |= bit(v);
  }
  return m;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out += (i ? "," : "") + std::to_string(vs[i]);
  }
  return out;
}

Json ref_json(const SubarchRef& r) {
  Json j;
  j["qubits"] = r.size();
  j["edges"] = r.graph.edge_count();
  j["vertices"] = r.vertex_list();
  j["class_key"] = to_hex(r.class_key);
  return j;
}

Json refs_json(const std::vector<SubarchRef>& refs) {
  Json out = Json::array();
  for (const auto& r : refs) out.push_back(ref_json(r));
  return out;
}

void print_refs(const std::vector<SubarchRef>& refs) {
  for (const auto& r : refs) {
    std::cout << "  " << r.size() << " qubits, " << r.graph.edge_count()
              << " edges: {" << join(r.vertex_list()) << "}\n";
  }
}

void write_dot(const Globals& g, const std::vector<Highlight>& parts) {
  if (g.dot.empty()) return;
  std::ofstream out(g.dot, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + g.dot + "'");
  for (const auto& p : parts) out << export_dot(*p.graph, p.vertices, p.name);
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_census(const Globals& g, const std::string& arch_arg) {
  const Architecture arch = resolve_architecture(arch_arg);
  const Census c = census(arch, g.run());
  if (g.json) {
    Json doc;
    doc["architecture"] = arch.name();
    doc["qubits"] = arch.size();
    doc["connected"] = c.connected;
    doc["non_isomorphic"] = c.non_isomorphic;
    Json rows = Json::array();
    for (const auto& r : c.rows) {
      rows.push_back(
          {{"size", r.size}, {"connected", r.connected}, {"classes", r.classes}});
    }
    doc["sizes"] = std::move(rows);
    emit(doc);
  } else {
    std::cout << arch.name() << " (" << arch.size() << " qubits)\n";
    std::cout << "  size  connected  classes\n";
    for (const auto& r : c.rows) {
      std::cout << "  " << std::setw(4) << r.size << "  " << std::setw(9)
                << r.connected << "  " << std::setw(7) << r.classes << "\n";
    }
    std::cout << "  total " << std::setw(9) << c.connected << "  "
              << std::setw(7) << c.non_isomorphic << "\n";
  }
  write_dot(g, {{arch.name(), &arch.graph(), 0}});
  return 0;
}

int run_enumerate(const Globals& g, const std::string& arch_arg, int n,
                  bool classes) {
  const Architecture arch = resolve_architecture(arch_arg);
  Json doc;
  doc["architecture"] = arch.name();
  doc["size"] = n;
  std::vector<Highlight> parts;
  if (classes) {
    const IsoClassSet set = iso_classes(arch, n, g.run());
    Json list = Json::array();
    for (const auto& c : set.classes) {
      list.push_back({{"representative", c.representative.vertex_list()},
                      {"edges", c.representative.graph.edge_count()},
                      {"multiplicity", c.multiplicity()},
                      {"class_key", to_hex(c.representative.class_key)}});
      parts.push_back({"class_" + std::to_string(parts.size()), &arch.graph(),
                       c.representative.vertices});
    }
    doc["connected"] = set.connected_count();
    doc["classes"] = std::move(list);
    if (!g.json) {
      std::cout << set.classes.size() << " classes of " << n
                << "-qubit subarchitectures (" << set.connected_count()
                << " placements)\n";
      for (const auto& c : set.classes) {
        std::cout << "  x" << c.multiplicity() << " {"
                  << join(c.representative.vertex_list()) << "}\n";
      }
    }
  } else {
    const auto subsets = enumerate_connected(arch, n);
    Json list = Json::array();
    for (VertexMask m : subsets) list.push_back(mask_to_vertices(m));
    doc["connected"] = subsets.size();
    doc["subsets"] = std::move(list);
    if (!g.json) {
      std::cout << subsets.size() << " connected " << n
                << "-qubit subsets\n";
      for (VertexMask m : subsets) {
        std::cout << "  {" << join(mask_to_vertices(m)) << "}\n";
      }
    }
  }
  if (g.json) emit(doc);
  write_dot(g, parts);
  return 0;
}

std::vector<Highlight> highlights(const Architecture& arch,
                                  const std::vector<SubarchRef>& refs,
                                  const std::string& prefix) {
  std::vector<Highlight> out;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    out.push_back({prefix + "_" + std::to_string(i), &arch.graph(),
                   refs[i].vertices});
  }
  return out;
}

int run_candidates(const Globals& g, const std::string& arch_arg, int n) {
  const Architecture arch = resolve_architecture(arch_arg);
  const CandidateSet cand = candidates(arch, n, g.run());
  if (g.json) {
    Json doc;
    doc["architecture"] = arch.name();
    doc["size"] = n;
    Json members = refs_json(cand.members);
    for (std::size_t i = 0; i < members.size(); ++i) {
      Json from = Json::array();
      for (const auto& k : cand.provenance[i]) from.push_back(to_hex(k));
      members[i]["derived_from"] = std::move(from);
    }
    doc["members"] = std::move(members);
    emit(doc);
  } else {
    std::cout << arch.name() << ": " << cand.members.size()
              << " candidates for " << n << " qubits\n";
    print_refs(cand.members);
  }
  write_dot(g, highlights(arch, cand.members, "candidate"));
  return 0;
}

int run_optimal(const Globals& g, const std::string& arch_arg, int n) {
  const Architecture arch = resolve_architecture(arch_arg);
  const RunOptions run = g.run();
  const CandidateSet cand = candidates(arch, n, run);
  const auto best = optimal_candidates(arch, cand, run);
  if (g.json) {
    Json doc;
    doc["architecture"] = arch.name();
    doc["size"] = n;
    doc["candidates"] = cand.members.size();
    doc["members"] = refs_json(best);
    emit(doc);
  } else {
    std::cout << arch.name() << ": " << best.size()
              << " optimal candidates for " << n << " qubits ("
              << cand.members.size() << " candidates)\n";
    print_refs(best);
  }
  write_dot(g, highlights(arch, best, "optimal"));
  return 0;
}

int run_cover(const Globals& g, const std::string& arch_arg, int n, int k) {
  const Architecture arch = resolve_architecture(arch_arg);
  const Covering c = cover(arch, n, k, g.run());
  check_covering(c);
  if (g.json) {
    Json doc;
    doc["architecture"] = arch.name();
    doc["size"] = n;
    doc["max_elements"] = k;
    doc["candidates"] = refs_json(c.candidates);
    doc["members"] = refs_json(c.members);
    doc["assignment"] = c.assignment;
    doc["queue_popped"] = c.popped;
    emit(doc);
  } else {
    std::cout << arch.name() << ": covering of " << c.candidates.size()
              << " candidates for " << n << " qubits with " << c.members.size()
              << " members (bound " << k << ")\n";
    print_refs(c.members);
  }
  write_dot(g, highlights(arch, c.members, "member"));
  return 0;
}

Json result_json(const MappingResult& r) {
  Json doc;
  doc["swap_count"] = r.swap_count;
  doc["budget_reached"] = r.budget_reached;
  doc["initial_assignment"] = r.initial_assignment;
  Json steps = Json::array();
  for (const auto& s : r.schedule) {
    if (s.kind == MappingStep::Kind::kGate) {
      steps.push_back({{"gate", s.gate}});
    } else {
      steps.push_back({{"swap", {s.u, s.v}}});
    }
  }
  doc["schedule"] = std::move(steps);
  return doc;
}

int run_oracle(const Globals& g, const std::string& arch_arg,
               const std::string& circuit_path, std::optional<int> budget) {
  const Architecture arch = resolve_architecture(arch_arg);
  const Circuit c = load_circuit(circuit_path);
  OracleOptions options;
  options.budget = budget;
  const MappingResult r = s_opt(c, arch.graph(), options);
  if (!r.budget_reached) {
    if (auto why = replay_error(c, arch.graph(), r)) {
      throw Error("schedule failed replay: " + *why);
    }
  }
  if (g.json) {
    Json doc;
    doc["architecture"] = arch.name();
    doc["gates"] = c.gates.size();
    doc.update(result_json(r));
    emit(doc);
  } else if (r.budget_reached) {
    std::cout << "s_opt >= " << r.swap_count << " (budget reached)\n";
  } else {
    std::cout << "s_opt = " << r.swap_count << "\n";
    std::cout << "initial assignment (logical -> physical): "
              << join(r.initial_assignment) << "\n";
    for (const auto& s : r.schedule) {
      if (s.kind == MappingStep::Kind::kSwap) {
        std::cout << "  swap " << s.u << " " << s.v << "\n";
      } else {
        const auto [a, b] = c.gates[s.gate];
        std::cout << "  cx q" << a << " q" << b << "\n";
      }
    }
  }
  write_dot(g, {{"assignment", &arch.graph(),
                 vertices_to_mask(r.initial_assignment)}});
  return 0;
}

int run_witness(const Globals& g, const std::string& arch_arg,
                const std::string& sub1, const std::string& sub2,
                std::optional<int> reps) {
  const Architecture arch = resolve_architecture(arch_arg);
  const VertexMask m1 = parse_subset(sub1, arch);
  const VertexMask m2 = parse_subset(sub2, arch);
  const WitnessReport w = separation_witness(arch.graph(), m1, m2, reps);
  if (g.json) {
    Json doc;
    doc["architecture"] = arch.name();
    doc["sub1"] = mask_to_vertices(m1);
    doc["sub2"] = mask_to_vertices(m2);
    doc["transform_swaps"] = w.transform_swaps;
    doc["reps"] = w.reps;
    doc["gates"] = w.circuit.gates.size();
    doc["swaps_device"] = w.on_device.swap_count;
    doc["swaps_sub1"] = w.on_first.swap_count;
    doc["swaps_sub2"] = w.on_second.swap_count;
    doc["strict"] = w.strict();
    emit(doc);
  } else {
    std::cout << "relocation swaps " << w.transform_swaps << ", reps "
              << w.reps << ", " << w.circuit.gates.size() << " gates\n";
    std::cout << "  s_opt on " << arch.name() << ": "
              << w.on_device.swap_count << "\n";
    std::cout << "  s_opt on sub1: " << w.on_first.swap_count << "\n";
    std::cout << "  s_opt on sub2: " << w.on_second.swap_count << "\n";
    std::cout << (w.strict() ? "strictly cheaper on the full device\n"
                             : "not strictly cheaper\n");
  }
  write_dot(g, {{"sub1", &arch.graph(), m1}, {"sub2", &arch.graph(), m2}});
  return 0;
}

int run_compare(const Globals& g, const std::string& spec1,
                const std::string& spec2, int width, int gates,
                std::size_t samples) {
  const Architecture a1 = resolve_architecture(spec1);
  const Architecture a2 = resolve_architecture(spec2);
  CoverageOptions options;
  options.samples = samples;
  options.seed = g.seed;
  const CoverageReport r =
      compare_coverage(a1.graph(), a2.graph(), width, gates, options);
  auto witness = [](const std::optional<Circuit>& c,
                    const std::optional<std::pair<int, int>>& costs) {
    if (!c) return Json();
    Json gates_json = Json::array();
    for (auto [a, b] : c->gates) gates_json.push_back({a, b});
    return Json{{"gates", gates_json},
                {"swaps_first", costs->first},
                {"swaps_second", costs->second}};
  };
  if (g.json) {
    Json doc;
    doc["first"] = a1.name();
    doc["second"] = a2.name();
    doc["width"] = width;
    doc["max_gates"] = gates;
    doc["exhaustive"] = r.exhaustive;
    doc["circuits"] = r.circuits;
    doc["first_cheaper"] = r.first_cheaper;
    doc["second_cheaper"] = r.second_cheaper;
    doc["verdict"] = to_string(r.verdict());
    doc["first_witness"] = witness(r.first_witness, r.first_witness_costs);
    doc["second_witness"] = witness(r.second_witness, r.second_witness_costs);
    emit(doc);
  } else {
    std::cout << (r.exhaustive ? "exhaustive" : "sampled") << " over "
              << r.circuits << " circuits: " << a1.name() << " cheaper "
              << r.first_cheaper << "x, " << a2.name() << " cheaper "
              << r.second_cheaper << "x -> " << to_string(r.verdict())
              << "\n";
  }
  return 0;
}

int run_precompute(const Globals& g, const std::string& arch_arg,
                   const std::string& sizes, const std::string& bounds,
                   const std::string& out) {
  const Architecture arch = resolve_architecture(arch_arg);
  const auto ns = parse_int_list(sizes, "size range");
  std::vector<int> ks;
  if (!bounds.empty()) ks = parse_int_list(bounds, "covering bounds");
  for (int n : ns) {
    if (n < 1 || n > arch.size()) {
      throw UsageError("size " + std::to_string(n) + " outside [1, " +
                       std::to_string(arch.size()) + "]");
    }
  }
  const CandidateLibrary lib = build_library(arch, ns, ks, g.run());
  save_library(lib, out);
  if (g.json) {
    Json doc;
    doc["architecture"] = arch.name();
    doc["hash"] = lib.architecture_hash;
    doc["library"] = out;
    Json entries = Json::array();
    for (const auto& e : lib.entries) {
      entries.push_back({{"size", e.size},
                         {"candidates", e.candidates.size()},
                         {"optimal", e.optimal.size()},
                         {"coverings", e.coverings.size()}});
    }
    doc["entries"] = std::move(entries);
    emit(doc);
  } else {
    std::cout << "wrote " << lib.entries.size() << " entries for "
              << arch.name() << " to " << out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subarchitecture candidates, coverings and exact routing"};
  app.set_version_flag("--version", subarch::tool_version());
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Print JSON on stdout");
  app.add_option("--dot", g.dot, "Write Graphviz output to this file");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--seed", g.seed, "Seed for sampled comparisons");
  app.add_option("--time-limit", g.time_limit, "Wall-clock limit in seconds")
      ->check(CLI::NonNegativeNumber);

  std::string arch, arch2, circuit, sub1, sub2, sizes, bounds, out;
  int size = 0, max_elements = 0, width = 0, gates = 0;
  std::size_t samples = 200;
  bool classes = false;
  std::optional<int> budget, reps;
  std::function<int()> action;

  auto add_arch = [&](CLI::App* cmd) {
    cmd->add_option("arch", arch, "Architecture file or bundled name")
        ->required();
  };

  auto* c_census = app.add_subcommand("census", "Count subarchitectures");
  add_arch(c_census);
  c_census->callback([&] { action = [&] { return run_census(g, arch); }; });

  auto* c_enum = app.add_subcommand("enumerate", "List connected subsets");
  add_arch(c_enum);
  c_enum->add_option("--size", size, "Qubit count")->required();
  c_enum->add_flag("--classes", classes, "Group by isomorphism class");
  c_enum->callback(
      [&] { action = [&] { return run_enumerate(g, arch, size, classes); }; });

  auto* c_cand = app.add_subcommand("candidates", "Candidate set");
  add_arch(c_cand);
  c_cand->add_option("--size", size, "Qubit count")->required();
  c_cand->callback(
      [&] { action = [&] { return run_candidates(g, arch, size); }; });

  auto* c_opt = app.add_subcommand("optimal", "Optimal candidates");
  add_arch(c_opt);
  c_opt->add_option("--size", size, "Qubit count")->required();
  c_opt->callback([&] { action = [&] { return run_optimal(g, arch, size); }; });

  auto* c_cover = app.add_subcommand("cover", "Greedy covering");
  add_arch(c_cover);
  c_cover->add_option("--size", size, "Qubit count")->required();
  c_cover->add_option("--max", max_elements, "Maximum members")->required();
  c_cover->callback([&] {
    action = [&] { return run_cover(g, arch, size, max_elements); };
  });

  auto* c_oracle = app.add_subcommand("oracle", "Exact minimum-SWAP routing");
  add_arch(c_oracle);
  c_oracle->add_option("--circuit", circuit, "Circuit file")->required();
  c_oracle->add_option("--budget", budget, "Stop once this many swaps");
  c_oracle->callback([&] {
    action = [&] { return run_oracle(g, arch, circuit, budget); };
  });

  auto* c_wit = app.add_subcommand("witness",
                                   "Circuit cheaper on the device than on "
                                   "either of two subsets");
  add_arch(c_wit);
  c_wit->add_option("--sub1", sub1, "Vertices, e.g. 0,1,2,3")->required();
  c_wit->add_option("--sub2", sub2, "Vertices")->required();
  c_wit->add_option("--reps", reps, "Repetitions of each block");
  c_wit->callback(
      [&] { action = [&] { return run_witness(g, arch, sub1, sub2, reps); }; });

  auto* c_cmp = app.add_subcommand("compare",
                                   "Compare routing cost on two devices");
  c_cmp->add_option("first", arch, "First architecture")->required();
  c_cmp->add_option("second", arch2, "Second architecture")->required();
  c_cmp->add_option("--width", width, "Logical qubits")->required();
  c_cmp->add_option("--gates", gates, "Maximum gates per circuit")->required();
  c_cmp->add_option("--samples", samples, "Circuits drawn when sampling");
  c_cmp->callback([&] {
    action = [&] {
      return run_compare(g, arch, arch2, width, gates, samples);
    };
  });

  auto* c_pre = app.add_subcommand("precompute", "Write a candidate library");
  add_arch(c_pre);
  c_pre->add_option("--sizes", sizes, "Sizes, e.g. 4..9 or 5,7")->required();
  c_pre->add_option("--max", bounds, "Covering bounds, e.g. 2,4");
  c_pre->add_option("--out", out, "Library path")->required();
  c_pre->callback([&] {
    action = [&] { return run_precompute(g, arch, sizes, bounds, out); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
