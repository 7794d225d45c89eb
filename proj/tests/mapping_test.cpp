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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "subarch/error.hpp"
#include "subarch/isomorphism.hpp"
#include "subarch/mapping.hpp"

namespace subarch {
namespace {

const Circuit kFourGates{4, {{2, 3}, {2, 1}, {1, 0}, {3, 0}}};

Graph chair() {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {1, 4}};
  return Graph(5, edges);
}

TEST(Circuit, InteractionCircuits) {
  EXPECT_EQ(interaction_circuit(path_graph(4)).gates,
            (std::vector<Circuit::Gate>{{0, 1}, {1, 2}, {2, 3}}));
  const Circuit claw = interaction_circuit(star_graph(3));
  ASSERT_EQ(claw.gates.size(), 3u);
  for (auto [a, b] : claw.gates) EXPECT_TRUE(a == 0 || b == 0);
  EXPECT_TRUE(interaction_circuit(Graph(3)).gates.empty());
}

TEST(Circuit, RepeatAndConcat) {
  EXPECT_TRUE(repeat(kFourGates, 0).gates.empty());
  EXPECT_EQ(repeat(kFourGates, 1), kFourGates);
  EXPECT_EQ(repeat(kFourGates, 3).gates.size(), 12u);
  EXPECT_EQ(concat(kFourGates, repeat(kFourGates, 2)).gates.size(), 12u);
  EXPECT_THROW(concat(kFourGates, Circuit{3, {}}), UsageError);
  EXPECT_THROW(validate(Circuit{2, {{0, 0}}}), UsageError);
  EXPECT_THROW(validate(Circuit{2, {{0, 2}}}), UsageError);
}

TEST(Circuit, TextRoundTripAndErrors) {
  const Circuit parsed =
      parse_circuit("# example\nqubits 4\ncx 2 3\n\ncx 2 1  # note\ncx 1 0\ncx 3 0\n");
  EXPECT_EQ(parsed, kFourGates);
  EXPECT_EQ(parse_circuit(circuit_to_text(kFourGates)), kFourGates);
  EXPECT_EQ(load_circuit(SUBARCH_TEST_DATA_DIR "/circuits/swap_example.qgates"), kFourGates);
  try {
    parse_circuit("qubits 2\nh 0\n");
    FAIL() << "unknown verb accepted";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_circuit("cx 0 1\n"), ValidationError);
  EXPECT_THROW(parse_circuit("qubits 2\ncx 0 5\n"), ValidationError);
  EXPECT_THROW(parse_circuit("qubits 2\ncx 0\n"), ValidationError);
}

TEST(Oracle, FourGateExample) {
  const MappingResult line = s_opt(kFourGates, path_graph(4));
  EXPECT_EQ(line.swap_count, 2);
  EXPECT_FALSE(replay_error(kFourGates, path_graph(4), line).has_value());
  const MappingResult ring = s_opt(kFourGates, cycle_graph(5));
  EXPECT_EQ(ring.swap_count, 1);
  EXPECT_FALSE(replay_error(kFourGates, cycle_graph(5), ring).has_value());
}

TEST(Oracle, InteractionCircuitIsFree) {
  for (const Graph& g : {path_graph(5), cycle_graph(6), star_graph(4), chair()}) {
    const MappingResult r = s_opt(interaction_circuit(g), g);
    EXPECT_EQ(r.swap_count, 0);
    EXPECT_FALSE(replay_error(interaction_circuit(g), g, r).has_value());
  }
}

TEST(Oracle, ZeroCostExactlyWhenInteractionGraphEmbeds) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 150; ++t) {
    std::uniform_int_distribution<int> hsize(3, 7);
    const Graph device = oracle::random_connected_graph(rng, hsize(rng), 0.2);
    std::uniform_int_distribution<int> width(2, std::min(5, device.vertex_count()));
    const int n = width(rng);
    std::uniform_int_distribution<int> q(0, n - 1);
    Circuit c{n, {}};
    std::vector<Edge> interaction;
    for (int g = 0; g < 5; ++g) {
      int a = q(rng), b = q(rng);
      if (a == b) continue;
      c.gates.emplace_back(a, b);
      const Edge e{std::min(a, b), std::max(a, b)};
      if (std::find(interaction.begin(), interaction.end(), e) == interaction.end()) {
        interaction.push_back(e);
      }
    }
    const bool embeds = find_monomorphism(Graph(n, interaction), device).has_value();
    ASSERT_EQ(s_opt(c, device).swap_count == 0, embeds);
  }
}

TEST(Oracle, MatchesZeroOneBfsOnFixedDevices) {
  std::mt19937_64 rng(29);
  const std::vector<Graph> devices = {path_graph(4), cycle_graph(5), chair(),
                                      star_graph(4), path_graph(6)};
  for (const Graph& d : devices) {
    for (int t = 0; t < 20; ++t) {
      std::uniform_int_distribution<int> q(0, 3);
      Circuit c{4, {}};
      for (int g = 0; g < 7; ++g) {
        int a = q(rng), b = q(rng);
        if (a != b) c.gates.emplace_back(a, b);
      }
      OracleOptions plain;
      plain.use_lower_bound = false;
      const MappingResult r = s_opt(c, d);
      ASSERT_EQ(r.swap_count, oracle::brute_s_opt(c, d));
      ASSERT_EQ(s_opt(c, d, plain).swap_count, r.swap_count);
      ASSERT_FALSE(replay_error(c, d, r).has_value());
    }
  }
}

TEST(Oracle, BudgetStopsEarly) {
  OracleOptions capped;
  capped.budget = 1;
  const MappingResult r = s_opt(kFourGates, path_graph(4), capped);
  EXPECT_TRUE(r.budget_reached);
  EXPECT_EQ(r.swap_count, 1);
  capped.budget = 5;
  EXPECT_FALSE(s_opt(kFourGates, path_graph(4), capped).budget_reached);
}

TEST(Oracle, LimitsAndErrors) {
  EXPECT_THROW(s_opt(kFourGates, Graph(4)), ValidationError);
  EXPECT_THROW(s_opt(kFourGates, path_graph(3)), UsageError);
  OracleOptions small;
  small.max_physical = 4;
  EXPECT_THROW(s_opt(kFourGates, path_graph(5), small), ResourceError);
  OracleOptions tight;
  tight.max_states = 3;
  EXPECT_THROW(s_opt(repeat(kFourGates, 3), path_graph(6), tight), ResourceError);
  EXPECT_EQ(s_opt(Circuit{3, {}}, path_graph(3)).swap_count, 0);
}

TEST(Oracle, ReplayCatchesBrokenSchedules) {
  MappingResult r = s_opt(kFourGates, path_graph(4));
  MappingResult wrong_count = r;
  wrong_count.swap_count += 1;
  EXPECT_TRUE(replay_error(kFourGates, path_graph(4), wrong_count).has_value());
  MappingResult no_swaps = r;
  std::erase_if(no_swaps.schedule, [](const MappingStep& s) {
    return s.kind == MappingStep::Kind::kSwap;
  });
  no_swaps.swap_count = 0;
  EXPECT_TRUE(replay_error(kFourGates, path_graph(4), no_swaps).has_value());
}

TEST(TokenSwap, Examples) {
  EXPECT_EQ(token_swap_distance(path_graph(3), {0, 2}, {2, 0}), 3);
  EXPECT_EQ(token_swap_distance(path_graph(3), {0}, {2}), 2);
  EXPECT_EQ(token_swap_distance(cycle_graph(4), {0, 1}, {1, 0}), 1);
}

TEST(Witness, ChairPathAndClaw) {
  const WitnessReport w = separation_witness(chair(), 0b01111, 0b10111);
  EXPECT_EQ(w.transform_swaps, 3);
  EXPECT_EQ(w.reps, 4);
  EXPECT_LE(w.on_device.swap_count, 3);
  EXPECT_GE(w.on_first.swap_count, 4);
  EXPECT_GE(w.on_second.swap_count, 4);
  EXPECT_TRUE(w.strict());
  EXPECT_FALSE(replay_error(w.circuit, chair(), w.on_device).has_value());
}

TEST(Witness, ZeroRepetitionsAndErrors) {
  const WitnessReport w = separation_witness(chair(), 0b01111, 0b10111, 0);
  EXPECT_TRUE(w.circuit.gates.empty());
  EXPECT_EQ(w.on_device.swap_count, 0);
  EXPECT_EQ(w.on_first.swap_count, 0);
  EXPECT_EQ(w.on_second.swap_count, 0);
  // Any two 4-subsets of the ring are both 4-paths.
  EXPECT_THROW(separation_witness(cycle_graph(5), 0b01111, 0b11110), UsageError);
  EXPECT_THROW(separation_witness(chair(), 0b01111, 0b00111), UsageError);
  EXPECT_THROW(separation_witness(chair(), 0b01111, 0b11101), UsageError);
  EXPECT_THROW(separation_witness(chair(), 0b01111, 0b11001), UsageError);
}

TEST(Coverage, LineVersusRing) {
  const CoverageReport r = compare_coverage(path_graph(4), cycle_graph(5), 4, 4);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.circuits, 1555u);  // sum of 6^k for k = 0..4
  EXPECT_EQ(r.first_cheaper, 0u);
  // Same ensemble through the 0-1 BFS oracle.
  const std::vector<Circuit::Gate> pairs = {{0, 1}, {0, 2}, {0, 3},
                                            {1, 2}, {1, 3}, {2, 3}};
  std::size_t ring_cheaper = 0;
  Circuit circ{4, {}};
  auto visit = [&](auto&& self, int left) -> void {
    ring_cheaper += oracle::brute_s_opt(circ, cycle_graph(5)) <
                    oracle::brute_s_opt(circ, path_graph(4));
    if (left == 0) return;
    for (auto p : pairs) {
      circ.gates.push_back(p);
      self(self, left - 1);
      circ.gates.pop_back();
    }
  };
  visit(visit, 4);
  EXPECT_EQ(r.second_cheaper, ring_cheaper);
  EXPECT_EQ(r.second_cheaper, 48u);
  EXPECT_EQ(r.verdict(), CoverageReport::Verdict::kSecondBetter);
  ASSERT_TRUE(r.second_witness.has_value());
  EXPECT_EQ(r.second_witness_costs->first, r.second_witness_costs->second + 1);
}

TEST(Coverage, LineVersusLongerLineIsEquivalent) {
  // Reference: every 4-qubit circuit of at most three gates costs the same
  // on both lines under the 0-1 BFS oracle.
  const std::vector<Circuit::Gate> pairs = {{0, 1}, {0, 2}, {0, 3},
                                            {1, 2}, {1, 3}, {2, 3}};
  std::size_t differ = 0;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      for (std::size_t c = 0; c < 6; ++c) {
        const Circuit circ{4, {pairs[a], pairs[b], pairs[c]}};
        differ += oracle::brute_s_opt(circ, path_graph(4)) !=
                  oracle::brute_s_opt(circ, path_graph(5));
      }
    }
  }
  ASSERT_EQ(differ, 0u);
  const CoverageReport r = compare_coverage(path_graph(4), path_graph(5), 4, 3);
  EXPECT_EQ(r.circuits, 259u);
  EXPECT_EQ(r.verdict(), CoverageReport::Verdict::kEquivalent);
}

TEST(Coverage, SelfComparisonAndSampling) {
  const CoverageReport same = compare_coverage(chair(), chair(), 3, 3);
  EXPECT_EQ(same.verdict(), CoverageReport::Verdict::kEquivalent);
  CoverageOptions opts;
  opts.samples = 30;
  const CoverageReport a = compare_coverage(path_graph(6), cycle_graph(6), 5, 6, opts);
  const CoverageReport b = compare_coverage(path_graph(6), cycle_graph(6), 5, 6, opts);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.circuits, 30u);
  EXPECT_EQ(a.first_cheaper, 0u);
  EXPECT_EQ(a.second_cheaper, b.second_cheaper);
  EXPECT_THROW(compare_coverage(path_graph(3), path_graph(4), 4, 2), UsageError);
}

}  // namespace
}  // namespace subarch
