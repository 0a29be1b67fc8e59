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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chemgraph/enumerate.hpp"
#include "chemgraph/graph6.hpp"

namespace chemgraph {

std::string_view to_string(Direction d) { return d == Direction::kMax ? "max" : "min"; }

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "max") return Direction::kMax;
  if (text == "min") return Direction::kMin;
  return std::nullopt;
}

const GraphCatalog::Level& GraphCatalog::level(int n) {
  std::lock_guard lock(mutex_);
  auto it = levels_.find(n);
  if (it != levels_.end()) return *it->second;

  auto lv = std::make_unique<Level>();
  lv->graphs = enumerate_connected_maxdeg3(n, EnumerateOptions{.workers = workers_});
  std::map<int, std::map<EdgeCensus, ObservedCensus>> grouped;
  for (const Graph& g : lv->graphs) {
    bool has_leaf_pair = false;
    for (const Edge& e : g.edges()) {
      if (g.degree(e.first) == 1 && g.degree(e.second) == 1) has_leaf_pair = true;
    }
    if (has_leaf_pair) continue;
    const EdgeCensus x = edge_census(g);
    ObservedCensus& entry = grouped[g.size()][x];
    if (entry.graphs++ == 0) {
      entry.census = x;
      entry.witness_graph6 = write_graph6(g);
    }
  }
  for (auto& [m, by_census] : grouped) {
    auto& out = lv->by_size[m];
    for (auto& [x, entry] : by_census) out.push_back(std::move(entry));
  }
  return *levels_.emplace(n, std::move(lv)).first->second;
}

const std::vector<Graph>& GraphCatalog::graphs(int n) { return level(n).graphs; }

const std::vector<ObservedCensus>& GraphCatalog::census_atlas(int n, int m) {
  static const std::vector<ObservedCensus> kEmpty;
  const Level& lv = level(n);
  auto it = lv.by_size.find(m);
  return it == lv.by_size.end() ? kEmpty : it->second;
}

ExtremalReport extremal_over(const IndexDefinition& f, int n, int m, Direction direction,
                             const std::vector<ObservedCensus>& atlas) {
  if (atlas.empty()) {
    throw std::invalid_argument("no chemical graphs of order " + std::to_string(n) + " and size " +
                                std::to_string(m));
  }
  ExtremalReport report;
  report.index_name = f.name;
  report.n = n;
  report.m = m;
  report.direction = direction;

  const double sign = direction == Direction::kMax ? 1.0 : -1.0;
  std::vector<double> values;
  values.reserve(atlas.size());
  double best = -INFINITY;
  for (const ObservedCensus& entry : atlas) {
    values.push_back(sign * evaluate(f, entry.census));
    best = std::max(best, values.back());
    report.graph_count += entry.graphs;
  }
  const double tol = kTieTolerance * std::max(1.0, std::abs(best));
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    if (best - values[i] <= tol) {
      report.optimal_censuses.push_back(atlas[i].census);
      report.witnesses.push_back(atlas[i].witness_graph6);
    }
  }
  report.optimum = sign * best;
  return report;
}

ExtremalReport extremal_censuses(const IndexDefinition& f, int n, int m, Direction direction,
                                 GraphCatalog& catalog) {
  if (n < 7 || n > kMaxEnumerationOrder || !in_chemical_range(n, m)) {
    throw std::invalid_argument("(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                                ") is outside 7 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                                ", n-1 <= m <= (3n-3)/2");
  }
  return extremal_over(f, n, m, direction, catalog.census_atlas(n, m));
}

}  // namespace chemgraph
