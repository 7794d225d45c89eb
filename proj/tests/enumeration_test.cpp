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

#include <map>
#include <set>

#include "oracles.hpp"
#include "subarch/architecture.hpp"
#include "subarch/enumeration.hpp"
#include "subarch/error.hpp"
#include "subarch/isomorphism.hpp"

namespace subarch {
namespace {

Architecture named(std::string name, Graph g) {
  return Architecture(std::move(name), std::move(g));
}

TEST(Enumerate, SmallExamples) {
  EXPECT_EQ(enumerate_connected(path_graph(3), 2),
            (std::vector<VertexMask>{0b011, 0b110}));
  EXPECT_EQ(enumerate_connected(path_graph(3), 3),
            (std::vector<VertexMask>{0b111}));
  const auto ring4 = enumerate_connected(cycle_graph(5), 4);
  ASSERT_EQ(ring4.size(), 5u);
  for (auto m : ring4) {
    EXPECT_TRUE(are_isomorphic(induced_subgraph(cycle_graph(5), m), path_graph(4)));
  }
}

TEST(Enumerate, SizeOutOfRange) {
  EXPECT_THROW(enumerate_connected(path_graph(3), 0), UsageError);
  EXPECT_THROW(enumerate_connected(path_graph(3), 4), UsageError);
}

TEST(Enumerate, BySizeAgreesWithSingleSize) {
  const Architecture g = bundled_architecture("ibmq_guadalupe");
  const auto by_size = enumerate_connected_by_size(g.graph(), 8);
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(by_size[k], enumerate_connected(g, k)) << k;
  }
}

TEST(Enumerate, FullPowerSetOnRigettiSmallSizes) {
  const Architecture r = bundled_architecture("rigetti_16");
  for (int k = 1; k <= 4; ++k) {
    std::set<VertexMask> expected;
    for (int a = 0; a < 16; ++a) {
      expected.insert(bit(a));
    }
    // Grow level by level from the previous size.
    std::set<VertexMask> level = expected;
    for (int s = 1; s < k; ++s) {
      std::set<VertexMask> next;
      for (auto m : level) {
        for (int v = 0; v < 16; ++v) {
          if (!(m & bit(v)) && (r.graph().neighbors(v) & m)) next.insert(m | bit(v));
        }
      }
      level = next;
    }
    const auto got = enumerate_connected(r, k);
    EXPECT_EQ(std::set<VertexMask>(got.begin(), got.end()), level) << k;
  }
}

TEST(IsoClasses, RingAndPath) {
  const auto ring = named("ring", cycle_graph(5));
  const auto classes = iso_classes(ring, 4);
  ASSERT_EQ(classes.classes.size(), 1u);
  EXPECT_EQ(classes.classes[0].multiplicity(), 5u);
  EXPECT_TRUE(are_isomorphic(classes.classes[0].representative.graph, path_graph(4)));
}

TEST(IsoClasses, MultiplicitiesSumToSubsetCount) {
  const Architecture g = bundled_architecture("ibmq_guadalupe");
  for (int n = 1; n <= g.size(); ++n) {
    const auto set = iso_classes(g, n);
    std::size_t total = 0;
    for (const auto& c : set.classes) {
      total += c.multiplicity();
      EXPECT_EQ(c.representative.vertices, c.placements.front());
      for (auto p : c.placements) {
        ASSERT_EQ(canonical_key(induced_subgraph(g.graph(), p)), c.representative.class_key);
      }
    }
    EXPECT_EQ(total, enumerate_connected(g, n).size());
    EXPECT_EQ(total, set.connected_count());
  }
}

TEST(IsoClasses, GuadalupeNineQubits) {
  const Architecture g = bundled_architecture("ibmq_guadalupe");
  EXPECT_EQ(iso_classes(g, 9).classes.size(), 7u);
  std::size_t at_least_nine = 0;
  for (int n = 9; n <= g.size(); ++n) at_least_nine += iso_classes(g, n).classes.size();
  EXPECT_EQ(at_least_nine, 91u);
}

TEST(IsoClasses, ParallelRunMatchesSerial) {
  const Architecture r = bundled_architecture("rigetti_16");
  RunOptions many;
  many.jobs = 8;
  for (int n : {5, 8, 11}) {
    const auto a = iso_classes(r, n);
    const auto b = iso_classes(r, n, many);
    ASSERT_EQ(a.classes.size(), b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
      EXPECT_EQ(a.classes[i].representative, b.classes[i].representative);
      EXPECT_EQ(a.classes[i].placements, b.classes[i].placements);
    }
  }
}

TEST(Census, GuadalupeAndRigetti) {
  const Census g = census(bundled_architecture("ibmq_guadalupe"));
  EXPECT_EQ(g.connected, 746u);
  EXPECT_EQ(g.non_isomorphic, 110u);
  ASSERT_EQ(g.rows.size(), 16u);
  EXPECT_EQ(g.rows.front().connected, 16u);
  EXPECT_EQ(g.rows.back().classes, 1u);
  const Census r = census(bundled_architecture("rigetti_16"));
  EXPECT_EQ(r.connected, 1312u);
  EXPECT_EQ(r.non_isomorphic, 184u);
}

TEST(Census, RingCounts) {
  // n=1..4 give 5 subsets each (arcs), plus the whole ring.
  const Census c = census(named("ring", cycle_graph(5)));
  EXPECT_EQ(c.connected, 21u);
  EXPECT_EQ(c.non_isomorphic, 5u);
}

TEST(MakeSubarch, RejectsBadSubsets) {
  const auto ring = named("ring", cycle_graph(5));
  EXPECT_THROW(make_subarch(ring, 0), UsageError);
  EXPECT_THROW(make_subarch(ring, 0b00101), UsageError);
  EXPECT_THROW(make_subarch(ring, bit(7)), UsageError);
  const auto s = make_subarch(ring, 0b01111);
  EXPECT_EQ(s.graph, path_graph(4));
  EXPECT_EQ(s.vertex_list(), (std::vector<Vertex>{0, 1, 2, 3}));
}

}  // namespace
}  // namespace subarch
