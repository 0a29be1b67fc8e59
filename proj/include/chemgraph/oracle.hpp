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

#ifndef CHEMGRAPH_ORACLE_HPP_
#define CHEMGRAPH_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chemgraph/census.hpp"
#include "chemgraph/graph.hpp"
#include "chemgraph/index.hpp"

namespace chemgraph {

enum class Direction { kMax, kMin };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

/// Relative tolerance for ties between index values.
inline constexpr double kTieTolerance = 1e-9;

struct ObservedCensus {
  EdgeCensus census;
  std::int64_t graphs = 0;     // how many enumerated graphs have this census
  std::string witness_graph6;  // first one in enumeration order
};

/// Enumerated graphs and their censuses, computed on first use and cached per
/// order. Safe to share between threads; returned references stay valid for
/// the catalog's lifetime.
class GraphCatalog {
 public:
  explicit GraphCatalog(int workers = 1) : workers_(workers) {}

  GraphCatalog(const GraphCatalog&) = delete;
  GraphCatalog& operator=(const GraphCatalog&) = delete;

  int workers() const { return workers_; }

  const std::vector<Graph>& graphs(int n);

  /// Censuses observed among the enumerated graphs of order n and size m,
  /// sorted by census. Graphs with a (1,1) edge (only K2) are skipped.
  const std::vector<ObservedCensus>& census_atlas(int n, int m);

 private:
  struct Level {
    std::vector<Graph> graphs;
    std::map<int, std::vector<ObservedCensus>> by_size;
  };
  const Level& level(int n);

  int workers_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<Level>> levels_;
};

struct ExtremalReport {
  std::string index_name;
  int n = 0;
  int m = 0;
  Direction direction = Direction::kMax;
  double optimum = 0;
  std::vector<EdgeCensus> optimal_censuses;  // sorted
  std::vector<std::string> witnesses;        // graph6, parallel to optimal_censuses
  std::int64_t graph_count = 0;
};

/// Best value of f over all chemical graphs of order n and size m, and every
/// census attaining it. Values within kTieTolerance * max(1, |best|) of the
/// best are tied. Throws std::invalid_argument outside 7 <= n, the chemical
/// size range, or the enumerator's limit.
ExtremalReport extremal_censuses(const IndexDefinition& f, int n, int m, Direction direction,
                                 GraphCatalog& catalog);

/// Same search over an explicit list of censuses; the building block of the
/// function above, exposed for callers that already hold an atlas.
ExtremalReport extremal_over(const IndexDefinition& f, int n, int m, Direction direction,
                             const std::vector<ObservedCensus>& atlas);

}  // namespace chemgraph

#endif  // CHEMGRAPH_ORACLE_HPP_
