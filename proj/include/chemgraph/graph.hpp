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

#ifndef CHEMGRAPH_GRAPH_HPP_
#define CHEMGRAPH_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "chemgraph/census.hpp"

namespace chemgraph {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
///
/// Adjacency is held twice: as one 64-bit row per vertex (constant-time edge
/// queries, used heavily by the enumerator) and as sorted neighbour lists.
/// The degree bound of chemical graphs is not a representation invariant;
/// see is_chemical_graph and edge_census.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;

  /// Throws std::invalid_argument on self-loops, parallel edges, endpoints out
  /// of range or n outside [0, kMaxOrder].
  static Graph from_edges(int n, std::span<const Edge> edges);

  /// rows[v] bit u set iff uv is an edge. Must be symmetric and irreflexive.
  static Graph from_rows(std::span<const std::uint64_t> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const { return size_; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }
  int max_degree() const;
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t row(int v) const { return rows_[v]; }
  std::span<const std::uint64_t> rows() const { return rows_; }
  std::span<const int> neighbors(int v) const { return neighbors_[v]; }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const int> perm) const;

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  explicit Graph(std::vector<std::uint64_t> rows);

  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<int>> neighbors_;
  int size_ = 0;
};

enum class ChemicalViolation {
  kNone,
  kDisconnected,     // includes isolated vertices and the empty graph
  kDegreeAboveThree,
  kOrderBelowSeven,
  kSizeAboveLimit,   // m > (3n-3)/2
};

std::string_view describe(ChemicalViolation v);

struct ChemicalCheck {
  bool chemical = false;
  ChemicalViolation reason = ChemicalViolation::kNone;  // first violated clause
  explicit operator bool() const { return chemical; }
};

/// Connected, maximum degree <= 3, order >= 7 and size <= (3n-3)/2, checked in
/// that order.
ChemicalCheck is_chemical_graph(const Graph& g);

/// Counts (i,j)-edges. Throws std::invalid_argument if some vertex has degree
/// above 3 or the graph has an edge joining two degree-1 vertices.
EdgeCensus edge_census(const Graph& g);

/// Tally of vertices of degree 1, 2, 3 by direct inspection. Throws like
/// edge_census on degrees above 3; degree-0 vertices are ignored.
VertexCounts degree_tally(const Graph& g);

}  // namespace chemgraph

#endif  // CHEMGRAPH_GRAPH_HPP_
