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

// Prints one [PASS]/[FAIL] line per acceptance criterion and exits non-zero
// if any fails. Usage:
//   subarch_acceptance --data DIR [--cli PATH] [--sycamore]

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "subarch/architecture.hpp"
#include "subarch/candidates.hpp"
#include "subarch/covering.hpp"
#include "subarch/enumeration.hpp"
#include "subarch/isomorphism.hpp"
#include "subarch/mapping.hpp"

namespace fs = std::filesystem;
using namespace subarch;

namespace {

// Wall-clock limits, in seconds.
constexpr double kGuadalupeCensusLimit = 60;
constexpr double kRigettiCensusLimit = 120;
constexpr double kSycamoreCensusLimit = 4 * 3600;
constexpr double kOracleLimit = 1;

int g_failures = 0;

void report(const std::string& criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion << " (" << detail
            << ")" << std::endl;
  if (!ok) ++g_failures;
}

void note(bool ok, const std::string& what) {
  std::cout << "    " << (ok ? "ok   " : "FAIL ") << what << std::endl;
}

// Runs `body`, reporting an exception as a failure of `criterion`.
void guarded(const std::string& criterion, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(criterion, false, std::string("exception: ") + e.what());
  }
}

template <typename F>
auto timed(F&& f, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
  return result;
}

std::string fixed(double v, int digits = 2) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

std::string sizes_text(const std::vector<SubarchRef>& refs) {
  std::string out;
  for (const auto& r : refs) out += (out.empty() ? "" : ",") + std::to_string(r.size());
  return "{" + out + "}";
}

std::vector<int> sizes_of(const std::vector<SubarchRef>& refs) {
  std::vector<int> out;
  for (const auto& r : refs) out.push_back(r.size());
  std::sort(out.begin(), out.end());
  return out;
}

void census_check(const std::string& criterion, const Architecture& arch,
                  std::size_t connected, std::size_t classes, double limit) {
  guarded(criterion, [&] {
    double seconds = 0;
    const Census c = timed([&] { return census(arch); }, seconds);
    report(criterion,
           c.connected == connected && c.non_isomorphic == classes &&
               seconds < limit,
           std::to_string(c.connected) + "/" + std::to_string(c.non_isomorphic) +
               ", expected " + std::to_string(connected) + "/" +
               std::to_string(classes) + ", " + fixed(seconds) + " s, limit " +
               fixed(limit, 0) + " s");
  });
}

void guadalupe_nine(const Architecture& g) {
  const std::string criterion = "ibmq_guadalupe n=9 classes, candidates, optimal candidates";
  guarded(criterion, [&] {
    const std::size_t nine = iso_classes(g, 9).classes.size();
    std::size_t at_least = 0;
    for (int n = 9; n <= g.size(); ++n) at_least += iso_classes(g, n).classes.size();
    const CandidateSet cand = candidates(g, 9);
    const auto sizes = sizes_of(cand.members);
    const bool cand_ok = sizes.size() == 5 && sizes.front() >= 9 && sizes.back() <= 13;
    const auto opt = optimal_candidates(g, cand);
    bool opt_ok = !opt.empty();
    for (const auto& o : opt) {
      opt_ok = opt_ok && o.size() == 15 && contains_all(o.graph, cand.members);
    }
    note(nine == 7, "Sub_9 classes = " + std::to_string(nine) + " (expected 7)");
    note(at_least == 91, "classes of size >= 9 = " + std::to_string(at_least) +
                             " (expected 91)");
    note(cand_ok, "Cand_9 sizes " + sizes_text(cand.members) +
                      " (expected 5 members within [9,13])");
    note(opt_ok, "OptCand_9: " + std::to_string(opt.size()) +
                     " member(s) of sizes " + sizes_text(opt) +
                     ", each containing all candidates");
    report(criterion, nine == 7 && at_least == 91 && cand_ok && opt_ok,
           "7 / 91 / 5 in [9,13] / size 15");
  });
}

void guadalupe_coverings(const Architecture& g) {
  const std::string criterion = "ibmq_guadalupe n=9 coverings k=4 and k=2";
  guarded(criterion, [&] {
    const CandidateSet cand = candidates(g, 9);
    const Covering four = cover(g, cand, 4);
    property::checked(four);
    const Covering two = cover(g, cand, 2);
    property::checked(two);
    const bool four_ok = sizes_of(four.members) == std::vector<int>{9, 9, 9, 13};
    bool eleven_ok = false;
    for (const auto& m : two.members) {
      if (m.size() != 11) continue;
      int nines = 0;
      for (const auto& c : cand.members) {
        nines += c.size() == 9 && is_monomorphic(c.graph, m.graph);
      }
      eleven_ok = eleven_ok || nines == 3;
    }
    note(four_ok, "k=4 sizes " + sizes_text(four.members) + " (expected {9,9,9,13})");
    note(eleven_ok, "k=2 sizes " + sizes_text(two.members) +
                        ", 11-qubit member covers the three 9-qubit candidates");
    report(criterion, four_ok && eleven_ok, "coverage verified by check_covering");
  });
}

void oracle_ground_truth() {
  const std::string criterion = "routing oracle on the 4-qubit example circuit";
  guarded(criterion, [&] {
    const Circuit c{4, {{2, 3}, {2, 1}, {1, 0}, {3, 0}}};
    double t_line = 0, t_ring = 0;
    const auto line = timed([&] { return s_opt(c, path_graph(4)); }, t_line);
    const auto ring = timed([&] { return s_opt(c, cycle_graph(5)); }, t_ring);
    const bool replay = !replay_error(c, path_graph(4), line) &&
                        !replay_error(c, cycle_graph(5), ring);
    report(criterion,
           line.swap_count == 2 && ring.swap_count == 1 && replay &&
               t_line < kOracleLimit && t_ring < kOracleLimit,
           "4-path " + std::to_string(line.swap_count) + " in " +
               fixed(t_line * 1000, 1) + " ms, 5-ring " +
               std::to_string(ring.swap_count) + " in " + fixed(t_ring * 1000, 1) +
               " ms, expected 2 and 1 under " + fixed(kOracleLimit, 0) + " s");
  });
}

void path_claw_witness(const fs::path& data) {
  const std::string criterion = "host cheaper than both 4-qubit parts (chair host)";
  guarded(criterion, [&] {
    const Architecture chair = load_architecture(data / "architectures" / "chair_5.json");
    const WitnessReport w = separation_witness(chair.graph(), 0b01111, 0b10111);
    const bool replay = !replay_error(w.circuit, chair.graph(), w.on_device) &&
                        !replay_error(w.circuit, path_graph(4), w.on_first);
    report(criterion,
           w.on_device.swap_count <= 3 && w.on_first.swap_count >= 4 &&
               w.on_second.swap_count >= 4 && w.strict() && replay,
           "r=" + std::to_string(w.reps) + ", host " +
               std::to_string(w.on_device.swap_count) + ", path " +
               std::to_string(w.on_first.swap_count) + ", claw " +
               std::to_string(w.on_second.swap_count));
  });
}

void property_suites() {
  const std::string criterion = "property suites";
  guarded(criterion, [&] {
    struct Suite {
      const char* name;
      std::function<property::Outcome()> run;
    };
    const Suite suites[] = {
        {"monomorphism distance contraction", [] { return property::distance_contraction(); }},
        {"canonical key vs isomorphism, n <= 7", [] { return property::canonical_key_classes(); }},
        {"enumeration vs power set", [] { return property::enumeration_power_set(); }},
        {"desirable sets vs superset scan, n <= 8", [] { return property::desirable_sets(); }},
        {"covering postcondition", [] { return property::cover_postcondition(); }},
        {"routing replay and monotonicity", [] { return property::routing_instances(); }},
    };
    bool all = true;
    for (const auto& s : suites) {
      double seconds = 0;
      const auto r = timed(s.run, seconds);
      note(r.ok, std::string(s.name) + ": " + r.detail + " [" + fixed(seconds, 1) + " s]");
      all = all && r.ok;
    }
    report(criterion, all,
           std::to_string(property::coverings_checked()) +
               " coverings checked in this run");
  });
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_command(const std::string& command) {
  Run r;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  std::size_t n;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism(const fs::path& cli, const fs::path& data) {
  const std::string criterion = "CLI output byte-identical across runs and --jobs 1 vs 8";
  if (cli.empty()) {
    report(criterion, false, "no --cli given");
    return;
  }
  guarded(criterion, [&] {
    ::setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
    const fs::path work = fs::temp_directory_path() /
                          ("subarch_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(work);
    const std::string arch = (data / "architectures").string() + "/";
    const std::string circuit = (data / "circuits" / "swap_example.qgates").string();
    const std::vector<std::string> commands = {
        "census " + arch + "ibmq_guadalupe.json --json",
        "census rigetti_16",
        "enumerate ibmq_guadalupe --size 6 --classes --json",
        "enumerate ring_5 --size 3",
        "candidates ibmq_guadalupe --size 9 --json",
        "candidates rigetti_16 --size 7",
        "optimal ibmq_guadalupe --size 9 --json",
        "cover ibmq_guadalupe --size 9 --max 2 --json",
        "cover rigetti_16 --size 6 --max 3",
        "oracle ring_5 --circuit " + circuit + " --json",
        "witness " + arch + "chair_5.json --sub1 0,1,2,3 --sub2 0,1,2,4 --json",
        "compare line_4 ring_5 --width 4 --gates 3 --json",
        "compare line_5 ring_5 --width 5 --gates 5 --samples 20 --seed 7 --json",
        "precompute ibmq_guadalupe --sizes 8..9 --max 2,4 --out LIB --json",
        "cover ibmq_guadalupe --size 9 --max 4 --dot DOT",
    };
    bool all = true;
    int compared = 0;
    for (const auto& base : commands) {
      std::string outputs[3];
      const char* jobs[3] = {"1", "1", "8"};
      bool ran = true;
      for (int i = 0; i < 3; ++i) {
        std::string cmd = base;
        const fs::path lib = work / "lib.json";
        const fs::path dot = work / "out.dot";
        fs::remove(lib);
        fs::remove(dot);
        if (auto at = cmd.find("LIB"); at != std::string::npos) cmd.replace(at, 3, lib.string());
        if (auto at = cmd.find("DOT"); at != std::string::npos) cmd.replace(at, 3, dot.string());
        const Run r = run_command("\"" + cli.string() + "\" --jobs " + jobs[i] + " " +
                                  cmd + " 2>/dev/null");
        ran = ran && r.status == 0;
        outputs[i] = r.out;
        if (fs::exists(lib)) outputs[i] += slurp(lib);
        if (fs::exists(dot)) outputs[i] += slurp(dot);
      }
      const bool same = ran && outputs[0] == outputs[1] && outputs[0] == outputs[2] &&
                        !outputs[0].empty();
      if (!same) {
        note(false, base + (ran ? ": output differs" : ": non-zero exit"));
      }
      all = all && same;
      ++compared;
    }
    fs::remove_all(work);
    ::unsetenv("SOURCE_DATE_EPOCH");
    report(criterion, all,
           std::to_string(compared) + " commands, 3 runs each");
  });
}

void sycamore_checks(const Architecture& syc) {
  census_check("Sycamore-23 census 300015/24786", syc, 300015, 24786,
               kSycamoreCensusLimit);

  const std::string criterion = "Sycamore-23 n=13 candidates, optimal size, k=97 covering";
  guarded(criterion, [&] {
    RunOptions run;
    run.jobs = 1;
    double t_cand = 0, t_opt = 0, t_cover = 0;
    const CandidateSet cand = timed([&] { return candidates(syc, 13, run); }, t_cand);
    const auto opt = timed([&] { return optimal_candidates(syc, cand, run); }, t_opt);
    const Covering c = timed([&] { return cover(syc, cand, 97, run); }, t_cover);
    property::checked(c);
    int largest = 0;
    for (const auto& m : c.members) largest = std::max(largest, m.size());
    const bool count_ok = cand.members.size() == 1153;
    bool opt_ok = !opt.empty();
    for (const auto& o : opt) opt_ok = opt_ok && o.size() == 22;
    const bool cover_ok = largest <= 18 && c.members.size() <= 97;
    note(count_ok, "|Cand_13| = " + std::to_string(cand.members.size()) +
                       " (expected 1153) [" + fixed(t_cand, 1) + " s]");
    note(opt_ok, "OptCand_13 size " + sizes_text(opt) + " (expected 22) [" +
                     fixed(t_opt, 1) + " s]");
    note(cover_ok, "k=97 covering: " + std::to_string(c.members.size()) +
                       " members, largest " + std::to_string(largest) +
                       " (expected <= 18) [" + fixed(t_cover, 1) + " s]");
    report(criterion, count_ok && opt_ok && cover_ok,
           std::to_string(cand.members.size()) + " candidates, optimal " +
               sizes_text(opt) + ", covering max " + std::to_string(largest));
  });
}

}  // namespace

int main(int argc, char** argv) {
  fs::path data;
  fs::path cli;
  bool sycamore = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--data" && i + 1 < argc) {
      data = argv[++i];
    } else if (a == "--cli" && i + 1 < argc) {
      cli = argv[++i];
    } else if (a == "--sycamore") {
      sycamore = true;
    } else {
      std::cerr << "usage: subarch_acceptance --data DIR [--cli PATH] [--sycamore]\n";
      return 2;
    }
  }
  if (data.empty()) {
    std::cerr << "--data is required\n";
    return 2;
  }
  const fs::path archs = data / "architectures";

  if (sycamore) {
    guarded("Sycamore-23 checks", [&] {
      sycamore_checks(load_architecture(archs / "sycamore_23.json"));
    });
  } else {
    guarded("bundled architectures load", [&] {
      const Architecture g = load_architecture(archs / "ibmq_guadalupe.json");
      census_check("ibmq_guadalupe census 746/110", g, 746, 110,
                   kGuadalupeCensusLimit);
      census_check("Rigetti-16 census 1312/184",
                   load_architecture(archs / "rigetti_16.json"), 1312, 184,
                   kRigettiCensusLimit);
      guadalupe_nine(g);
      guadalupe_coverings(g);
    });
    oracle_ground_truth();
    path_claw_witness(data);
    property_suites();
    determinism(cli, data);
  }
  std::cout << (g_failures == 0 ? "all criteria passed"
                                : std::to_string(g_failures) + " criterion(s) failed")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
