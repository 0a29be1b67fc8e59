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

#include "chemgraph/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "chemgraph/enumerate.hpp"
#include "chemgraph/graph6.hpp"
#include "support/oracles.hpp"

namespace chemgraph {
namespace {

std::set<EdgeCensus> observed_set(GraphCatalog& catalog, int n, int m) {
  std::set<EdgeCensus> out;
  for (const ObservedCensus& o : catalog.census_atlas(n, m)) out.insert(o.census);
  return out;
}

TEST(Direction, RoundTrip) {
  EXPECT_EQ(to_string(Direction::kMax), "max");
  EXPECT_EQ(parse_direction("min"), Direction::kMin);
  EXPECT_EQ(parse_direction("max"), Direction::kMax);
  EXPECT_FALSE(parse_direction("median").has_value());
}

TEST(Catalog, AtlasMatchesBruteForceAtOrderSeven) {
  GraphCatalog catalog;
  for (int m = 6; m <= 9; ++m) EXPECT_EQ(observed_set(catalog, 7, m), testing::brute_census_atlas(7, m)) << m;
}

TEST(Catalog, AtlasMatchesBruteForceAtOrderEightSparse) {
  GraphCatalog catalog;
  for (int m = 7; m <= 9; ++m) EXPECT_EQ(observed_set(catalog, 8, m), testing::brute_census_atlas(8, m)) << m;
}

TEST(Catalog, TreesMatchPrueferCodes) {
  GraphCatalog catalog;
  for (int n = 7; n <= 10; ++n) EXPECT_EQ(observed_set(catalog, n, n - 1), testing::pruefer_tree_censuses(n)) << n;
}

TEST(Catalog, EntriesAreConsistent) {
  GraphCatalog catalog(2);
  for (int n = 7; n <= 9; ++n) {
    std::int64_t total = 0;
    for (int m = n - 1; m <= (3 * n - 3) / 2; ++m) {
      for (const ObservedCensus& o : catalog.census_atlas(n, m)) {
        EXPECT_EQ(order_size(o.census), (OrderSize{n, m}));
        EXPECT_TRUE(is_realizable(o.census).realizable) << to_string(o.census);
        EXPECT_EQ(edge_census(parse_graph6(o.witness_graph6)), o.census);
        EXPECT_GT(o.graphs, 0);
        total += o.graphs;
      }
    }
    std::int64_t chemical = 0;
    for (const Graph& g : catalog.graphs(n)) chemical += is_chemical_graph(g).chemical ? 1 : 0;
    EXPECT_EQ(total, chemical) << n;
  }
}

TEST(Extremal, RandicTreesOfOrderSeven) {
  GraphCatalog catalog;
  const IndexDefinition randic = builtin("Randic");
  const ExtremalReport max = extremal_censuses(randic, 7, 6, Direction::kMax, catalog);
  EXPECT_EQ(max.optimal_censuses, (std::vector<EdgeCensus>{{2, 0, 4, 0, 0}}));
  EXPECT_NEAR(max.optimum, 2 / std::sqrt(2.0) + 2.0, 1e-12);
  EXPECT_EQ(max.graph_count, 6);
  ASSERT_EQ(max.witnesses.size(), 1U);
  EXPECT_EQ(edge_census(parse_graph6(max.witnesses[0])), (EdgeCensus{2, 0, 4, 0, 0}));
}

TEST(Extremal, RandicMinAtEightNine) {
  GraphCatalog catalog;
  const ExtremalReport r = extremal_censuses(builtin("Randić"), 8, 9, Direction::kMin, catalog);
  EXPECT_EQ(r.optimal_censuses, (std::vector<EdgeCensus>{{0, 3, 0, 0, 6}}));
}

TEST(Extremal, AZagrebMaxAtSevenEight) {
  GraphCatalog catalog;
  const ExtremalReport r = extremal_censuses(builtin("aZagreb"), 7, 8, Direction::kMax, catalog);
  EXPECT_EQ(r.optimal_censuses, (std::vector<EdgeCensus>{{1, 1, 0, 1, 5}}));
}

TEST(Extremal, TiesAreKept) {
  const IndexDefinition flat = IndexDefinition::from_coefficients("flat", {1, 1, 1, 1, 1});
  GraphCatalog catalog;
  const ExtremalReport r = extremal_censuses(flat, 8, 9, Direction::kMax, catalog);
  EXPECT_EQ(r.optimal_censuses.size(), catalog.census_atlas(8, 9).size());
  EXPECT_DOUBLE_EQ(r.optimum, 9.0);
}

TEST(Extremal, OverExplicitAtlas) {
  const std::vector<ObservedCensus> atlas = {{{1, 0, 0, 0, 0}, 1, ""}, {{0, 1, 0, 0, 0}, 2, ""}};
  const IndexDefinition f = IndexDefinition::from_coefficients("f", {1, 2, 0, 0, 0});
  const ExtremalReport max = extremal_over(f, 7, 6, Direction::kMax, atlas);
  EXPECT_EQ(max.optimal_censuses, (std::vector<EdgeCensus>{{0, 1, 0, 0, 0}}));
  EXPECT_EQ(max.graph_count, 3);
  const ExtremalReport min = extremal_over(f, 7, 6, Direction::kMin, atlas);
  EXPECT_EQ(min.optimal_censuses, (std::vector<EdgeCensus>{{1, 0, 0, 0, 0}}));
}

TEST(Extremal, EmptyAtlasIsAnError) {
  EXPECT_THROW(extremal_over(builtin("GA"), 7, 6, Direction::kMax, {}), std::invalid_argument);
}

TEST(Extremal, RejectsBadOrderSize) {
  GraphCatalog catalog;
  const IndexDefinition f = builtin("Zagreb1");
  EXPECT_THROW(extremal_censuses(f, 6, 6, Direction::kMax, catalog), std::invalid_argument);
  EXPECT_THROW(extremal_censuses(f, 8, 11, Direction::kMax, catalog), std::invalid_argument);
  EXPECT_THROW(extremal_censuses(f, 8, 6, Direction::kMax, catalog), std::invalid_argument);
  EXPECT_THROW(extremal_censuses(f, kMaxEnumerationOrder + 1, kMaxEnumerationOrder + 1, Direction::kMax, catalog),
               std::invalid_argument);
}

}  // namespace
}  // namespace chemgraph
