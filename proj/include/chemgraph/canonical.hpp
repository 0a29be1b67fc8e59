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

#ifndef CHEMGRAPH_CANONICAL_HPP_
#define CHEMGRAPH_CANONICAL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "chemgraph/graph.hpp"

namespace chemgraph {

/// Result of canonical labelling by individualisation-refinement.
///
/// The search tree is explored completely (no automorphism pruning), so the
/// leaves attaining the canonical code are in bijection with the automorphism
/// group, which is returned in full. This is meant for the small, sparse
/// graphs of the enumerator; the cost is proportional to |Aut(G)| times the
/// number of inequivalent leaves.
struct CanonicalLabeling {
  std::vector<int> order;     // order[p] = vertex placed at canonical position p
  std::vector<int> position;  // inverse of order
  std::vector<std::uint64_t> canonical_rows;  // adjacency rows after relabelling
  std::vector<std::vector<int>> automorphisms;  // each maps v -> image; identity first
  std::vector<int> orbit;     // smallest vertex of each vertex's orbit
};

CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> rows);

inline CanonicalLabeling canonical_labeling(const Graph& g) { return canonical_labeling(g.rows()); }

/// g relabelled into canonical form; isomorphic graphs give equal results.
Graph canonical_form(const Graph& g);

}  // namespace chemgraph

#endif  // CHEMGRAPH_CANONICAL_HPP_
