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

#ifndef CHEMGRAPH_REALIZE_HPP_
#define CHEMGRAPH_REALIZE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chemgraph/census.hpp"
#include "chemgraph/families.hpp"
#include "chemgraph/graph.hpp"

namespace chemgraph {

inline constexpr std::int64_t kDefaultRealizerBudget = 5'000'000;

enum class RealizeStatus {
  kFound,
  kNone,            // no connected graph has this census
  kBudgetExceeded,  // search abandoned; nothing is known
};

struct RealizeOptions {
  std::int64_t node_budget = kDefaultRealizerBudget;
  /// Reject censuses failing is_realizable before searching. With the check
  /// off the search alone decides, which is what the cross-validation tests
  /// use.
  bool precheck = true;
  RealizabilityOptions realizability;
};

struct RealizeResult {
  RealizeStatus status = RealizeStatus::kNone;
  std::optional<Graph> graph;
  std::int64_t nodes = 0;
};

/// Builds a connected graph with exactly the requested edge census, by
/// backtracking over stubs of degree-labelled vertices. The graph is grown as
/// a single component from a highest-degree vertex; untouched vertices of the
/// same degree are interchangeable, so only the first is tried. Partner
/// candidates are ordered by scarcest remaining edge-type budget, then by
/// vertex index, which makes the witness deterministic.
RealizeResult realize_census(const EdgeCensus& x, const RealizeOptions& options = {});

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct F1Construction {
  Graph graph;
  /// False when the cycle-plus-chords graph did not have the expected census
  /// and the realizer supplied the witness instead.
  bool explicit_construction_valid = true;
};

/// Cycle on m - n/2 vertices, m - n chords v_i v_{ceil((2m-n)/4)+i} for
/// i = 1..m-n, and one pendant vertex on every cycle vertex without a chord.
/// The result is checked against the even-order F1 census; on mismatch the
/// realizer is used. Throws ConstructionError unless n is even, n >= 8 and
/// n <= m <= (3n-3)/2.
F1Construction construct_f1_explicit(std::int64_t n, std::int64_t m);

struct FamilyWitness {
  EdgeCensus census;
  RealizeStatus status = RealizeStatus::kNone;
  std::optional<Graph> graph;
  bool explicit_construction = false;  // built by construct_f1_explicit
};

/// One witness per census of family_censuses(id, n, m), in the same order.
/// F1 at even n and m >= n goes through construct_f1_explicit; everything else
/// through realize_census.
std::vector<FamilyWitness> construct_family_graphs(FamilyId id, std::int64_t n, std::int64_t m,
                                                   const RealizeOptions& options = {});

struct AtlasRow {
  FamilyId family = FamilyId::F1;
  std::int64_t n = 0;
  std::int64_t m = 0;
  FamilyWitness witness;
};

/// Every census of every listed family for n_min <= n <= n_max and each
/// chemical m, with a witness. Ordered by family, n, m, census.
std::vector<AtlasRow> family_atlas(const std::vector<FamilyId>& ids, std::int64_t n_min, std::int64_t n_max,
                                   const RealizeOptions& options = {});

}  // namespace chemgraph

#endif  // CHEMGRAPH_REALIZE_HPP_
