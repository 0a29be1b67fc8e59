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

#ifndef CHEMGRAPH_ENUMERATE_HPP_
#define CHEMGRAPH_ENUMERATE_HPP_

#include <vector>

#include "chemgraph/graph.hpp"

namespace chemgraph {

/// Largest order the enumerator accepts. Counts grow about 3.5x per vertex
/// (19430 graphs at order 12, 262044 at 14).
inline constexpr int kMaxEnumerationOrder = 14;

struct EnumerateOptions {
  int workers = 1;
  /// Order at which the generation tree is cut into independent subtrees for
  /// the workers. 0 picks the first order with at least 4 subtrees per worker.
  int split_order = 0;
};

/// One representative of every isomorphism class of connected graphs of order
/// n with maximum degree <= 3, all sizes.
///
/// Generation is by canonical augmentation: a graph is extended by a new
/// vertex joined to 1-3 vertices of degree < 3, one attachment set per orbit
/// of the parent's automorphism group, and the child is kept only if the new
/// vertex lies in the orbit of the child's canonical deletion vertex (the
/// first, in canonical order, of its non-cut vertices of least degree and
/// least neighbour-degree signature). Every graph is connected at every level,
/// so connectivity needs no final filter.
///
/// Graphs are returned in canonical labelling, sorted by size and then by
/// graph6 string; the output does not depend on the worker count. Throws
/// std::invalid_argument unless 1 <= n <= kMaxEnumerationOrder.
std::vector<Graph> enumerate_connected_maxdeg3(int n, const EnumerateOptions& options = {});

}  // namespace chemgraph

#endif  // CHEMGRAPH_ENUMERATE_HPP_
