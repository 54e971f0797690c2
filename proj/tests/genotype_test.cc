// Copyright 2026 The ENAS-EHT Authors.
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

#include "enas/genotype.h"

#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.h"

namespace enas {
namespace {

TEST(SearchSpaceParams, CaseStudyGeometry) {
  const auto p = SearchSpaceParams::derive(7, 2);
  EXPECT_EQ(p.n1, 21);
  EXPECT_EQ(p.n2, 5);
  EXPECT_EQ(p.n, 26);
  EXPECT_EQ(p.Q, 31);
}

TEST(SearchSpaceParams, SmallestSpace) {
  const auto p = SearchSpaceParams::derive(3, 2);
  EXPECT_EQ(p.n1, 3);
  EXPECT_EQ(p.n2, 1);
  EXPECT_EQ(p.n, 4);
  EXPECT_EQ(p.Q, 5);
}

TEST(SearchSpaceParams, RejectsDegenerateInputs) {
  EXPECT_THROW(SearchSpaceParams::derive(2, 2), std::invalid_argument);
  EXPECT_THROW(SearchSpaceParams::derive(7, 0), std::invalid_argument);
}

TEST(Genotype, ParseRoundTrip) {
  const auto p = SearchSpaceParams::derive(7, 2);
  const std::string text = "110011000101000100101:12012";
  const Genotype g = Genotype::parse(text, p);
  EXPECT_EQ(g.size(), 26);
  EXPECT_EQ(g.edge_count(), 21);
  EXPECT_EQ(g.op_count(), 5);
  EXPECT_EQ(g.to_string(), text);
  EXPECT_EQ(g[0], 1);
  EXPECT_EQ(g[21], 1);
  EXPECT_EQ(g[22], 2);
}

TEST(Genotype, ParseRejectsBadText) {
  const auto p = SearchSpaceParams::derive(3, 2);
  EXPECT_THROW(Genotype::parse("101", p), std::invalid_argument);
  EXPECT_THROW(Genotype::parse("1012:1", p), std::invalid_argument);
  EXPECT_THROW(Genotype::parse("102:1", p), std::invalid_argument);
  EXPECT_THROW(Genotype::parse("101:3", p), std::invalid_argument);
  EXPECT_THROW(Genotype::parse("101:12", p), std::invalid_argument);
  EXPECT_NO_THROW(Genotype::parse("101:2", p));
}

TEST(Genotype, ValidateChecksShapeAndRange) {
  const auto p = SearchSpaceParams::derive(3, 1);
  EXPECT_TRUE(Genotype({1, 0, 1}, {1}).fits(p));
  EXPECT_FALSE(Genotype({1, 0, 1}, {2}).fits(p));
  EXPECT_FALSE(Genotype({1, 0}, {1}).fits(p));
  EXPECT_FALSE(Genotype({1, 0, 2}, {0}).fits(p));
  EXPECT_THROW(Genotype({1, 0, 1}, {2}).validate(p), std::invalid_argument);
}

TEST(Hamming, CountsDifferingSlots) {
  const auto p = SearchSpaceParams::derive(3, 2);
  const Genotype a = Genotype::parse("101:2", p);
  const Genotype b = Genotype::parse("001:1", p);
  EXPECT_EQ(hamming(a, b), 2);
  EXPECT_EQ(hamming(a, a), 0);
  const DistanceProfile prof = distance_profile(a, b);
  EXPECT_EQ(prof, DistanceProfile::of(1, 1));
}

TEST(Hamming, ShapeMismatchThrows) {
  const auto p3 = SearchSpaceParams::derive(3, 2);
  const auto p4 = SearchSpaceParams::derive(4, 2);
  EXPECT_THROW(hamming(Genotype::zeros(p3), Genotype::zeros(p4)),
               std::invalid_argument);
}

TEST(Hamming, IsAMetricOnSmallSpace) {
  const auto p = SearchSpaceParams::derive(3, 1);
  const auto space = testing::all_genotypes(p);
  for (const auto& a : space) {
    for (const auto& b : space) {
      EXPECT_EQ(hamming(a, b), hamming(b, a));
      EXPECT_EQ(hamming(a, b) == 0, a == b);
      for (const auto& c : space) {
        EXPECT_LE(hamming(a, c), hamming(a, b) + hamming(b, c));
      }
    }
  }
}

TEST(DistanceProfile, Feasibility) {
  const auto p = SearchSpaceParams::derive(3, 2);
  EXPECT_TRUE(DistanceProfile::of(3, 1).feasible(p));
  EXPECT_FALSE(DistanceProfile::of(4, 0).feasible(p));
  EXPECT_FALSE(DistanceProfile::of(0, 2).feasible(p));
  EXPECT_FALSE(DistanceProfile::of(-1, 0).feasible(p));
}

TEST(ArchitectureGraph, RoundTripsEveryGenotype) {
  const auto p = SearchSpaceParams::derive(4, 2);
  for (const auto& g : testing::all_genotypes(p)) {
    const ArchitectureGraph graph = decode_to_graph(g, p);
    ASSERT_EQ(encode_graph(graph, p), g);
  }
}

TEST(ArchitectureGraph, UpperTriangleOrder) {
  const auto p = SearchSpaceParams::derive(4, 1);
  // Slot 0 -> (0,1), slot 2 -> (0,3), slot 3 -> (1,2), slot 5 -> (2,3).
  const Genotype g = Genotype::parse("101101:10", p);
  const ArchitectureGraph graph = decode_to_graph(g, p);
  EXPECT_EQ(graph.adjacency[0][1], 1);
  EXPECT_EQ(graph.adjacency[0][2], 0);
  EXPECT_EQ(graph.adjacency[0][3], 1);
  EXPECT_EQ(graph.adjacency[1][2], 1);
  EXPECT_EQ(graph.adjacency[1][3], 0);
  EXPECT_EQ(graph.adjacency[2][3], 1);
  EXPECT_EQ(graph.adjacency[3][0], 0);
  EXPECT_EQ(graph.ops, (std::vector<int>{1, 0}));
}

TEST(ForEachGenotype, VisitsEachGenotypeOnce) {
  const auto p = SearchSpaceParams::derive(3, 2);
  std::set<std::string> seen;
  int calls = 0;
  for_each_genotype(p, [&](const Genotype& g) {
    ++calls;
    seen.insert(g.to_string());
  });
  EXPECT_EQ(calls, 24);
  EXPECT_EQ(seen.size(), 24u);
}

TEST(GenotypeHash, EqualGenotypesHashEqual) {
  const auto p = SearchSpaceParams::derive(3, 2);
  const GenotypeHash h;
  EXPECT_EQ(h(Genotype::parse("101:2", p)), h(Genotype::parse("101:2", p)));
  EXPECT_NE(h(Genotype::parse("101:2", p)), h(Genotype::parse("101:1", p)));
}

}  // namespace
}  // namespace enas
