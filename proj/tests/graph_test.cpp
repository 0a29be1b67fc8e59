// Copyright 2026 The chemgraph Authors
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

#include "chemgraph/graph.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "chemgraph/enumerate.hpp"
#include "support/oracles.hpp"

namespace chemgraph {
namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

TEST(Graph, BasicAccessors) {
  const Graph g = path(4);
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(std::vector<int>(g.neighbors(1).begin(), g.neighbors(1).end()), (std::vector<int>{0, 2}));
  EXPECT_TRUE(g.is_connected());
}

TEST(Graph, RejectsBadEdges) {
  const std::vector<Edge> loop = {{1, 1}};
  const std::vector<Edge> twice = {{0, 1}, {1, 0}};
  const std::vector<Edge> outside = {{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, loop), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, twice), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, outside), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(65, {}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(-1, {}), std::invalid_argument);
}

TEST(Graph, FromRowsChecksSymmetry) {
  const std::vector<std::uint64_t> asymmetric = {0b10, 0b00};
  const std::vector<std::uint64_t> loop = {0b01};
  EXPECT_THROW(Graph::from_rows(asymmetric), std::invalid_argument);
  EXPECT_THROW(Graph::from_rows(loop), std::invalid_argument);
  const std::vector<std::uint64_t> edge = {0b10, 0b01};
  EXPECT_EQ(Graph::from_rows(edge).size(), 1);
}

TEST(Graph, RelabelMovesVertices) {
  const Graph g = path(3);  // 0-1-2
  const std::vector<int> perm = {1, 0, 2};
  const Graph h = g.relabeled(perm);  // 1-0-2
  EXPECT_TRUE(h.adjacent(1, 0));
  EXPECT_TRUE(h.adjacent(0, 2));
  EXPECT_FALSE(h.adjacent(1, 2));
  const std::vector<int> bad = {0, 0, 1};
  EXPECT_THROW(g.relabeled(bad), std::invalid_argument);
}

TEST(Graph, Connectivity) {
  const std::vector<Edge> two_pieces = {{0, 1}, {2, 3}};
  EXPECT_FALSE(Graph::from_edges(4, two_pieces).is_connected());
  EXPECT_FALSE(Graph::from_edges(2, {}).is_connected());
  EXPECT_TRUE(Graph::from_edges(1, {}).is_connected());
}

TEST(ChemicalGraph, PathOfSevenIsChemical) {
  const ChemicalCheck c = is_chemical_graph(path(7));
  EXPECT_TRUE(c.chemical);
  EXPECT_EQ(c.reason, ChemicalViolation::kNone);
}

TEST(ChemicalGraph, ReportsFirstViolatedClause) {
  EXPECT_EQ(is_chemical_graph(cycle(6)).reason, ChemicalViolation::kOrderBelowSeven);

  std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}};
  EXPECT_EQ(is_chemical_graph(Graph::from_edges(7, star)).reason, ChemicalViolation::kDegreeAboveThree);

  // Disconnected wins over the degree clause.
  star.pop_back();
  EXPECT_EQ(is_chemical_graph(Graph::from_edges(7, star)).reason, ChemicalViolation::kDisconnected);

  // Order 7 with 10 edges and maximum degree 3 exceeds (3n-3)/2 = 9.
  const auto& seven = enumerate_connected_maxdeg3(7);
  int dense = 0;
  for (const Graph& g : seven) {
    if (g.size() != 10) continue;
    ++dense;
    EXPECT_EQ(is_chemical_graph(g).reason, ChemicalViolation::kSizeAboveLimit);
  }
  EXPECT_GT(dense, 0);
}

TEST(ChemicalGraph, DescribeIsNonEmpty) {
  for (auto v : {ChemicalViolation::kNone, ChemicalViolation::kDisconnected, ChemicalViolation::kDegreeAboveThree,
                 ChemicalViolation::kOrderBelowSeven, ChemicalViolation::kSizeAboveLimit}) {
    EXPECT_FALSE(describe(v).empty());
  }
}

TEST(EdgeCensus, PathAndCycle) {
  EXPECT_EQ(edge_census(path(7)), (EdgeCensus{2, 0, 4, 0, 0}));
  EXPECT_EQ(edge_census(cycle(8)), (EdgeCensus{0, 0, 8, 0, 0}));
}

TEST(EdgeCensus, RejectsHighDegreeAndLeafPairs) {
  const std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  EXPECT_THROW(edge_census(Graph::from_edges(5, star)), std::invalid_argument);
  EXPECT_THROW(edge_census(path(2)), std::invalid_argument);
}

TEST(EdgeCensus, AgreesWithDirectCountAndDegreeTally) {
  for (int n = 3; n <= 9; ++n) {
    for (const Graph& g : enumerate_connected_maxdeg3(n)) {
      const EdgeCensus x = edge_census(g);
      EXPECT_EQ(x, testing::direct_census(g));
      EXPECT_EQ(x.size(), g.size());
      EXPECT_EQ(vertex_counts(x), degree_tally(g));
    }
  }
}

}  // namespace
}  // namespace chemgraph
