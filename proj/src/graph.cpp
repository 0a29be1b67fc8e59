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

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace chemgraph {

Graph::Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {
  const int n = order();
  neighbors_.resize(n);
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    for (std::uint64_t r = rows_[v]; r != 0; r &= r - 1) {
      neighbors_[v].push_back(std::countr_zero(r));
    }
    degree_sum += static_cast<int>(neighbors_[v].size());
  }
  size_ = degree_sum / 2;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
  }
  std::vector<std::uint64_t> rows(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if ((rows[u] >> v) & 1U) {
      throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  return Graph(std::move(rows));
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxOrder) throw std::invalid_argument("graph order above 64");
  const std::uint64_t valid = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int v = 0; v < n; ++v) {
    if ((rows[v] & ~valid) != 0) throw std::invalid_argument("adjacency row out of range");
    if ((rows[v] >> v) & 1U) throw std::invalid_argument("self-loop in adjacency rows");
    for (std::uint64_t r = rows[v]; r != 0; r &= r - 1) {
      const int u = std::countr_zero(r);
      if (((rows[u] >> v) & 1U) == 0) throw std::invalid_argument("asymmetric adjacency rows");
    }
  }
  return Graph(std::vector<std::uint64_t>(rows.begin(), rows.end()));
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : neighbors_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::uint64_t> rows(n, 0);
  std::uint64_t seen = 0;
  for (int v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || ((seen >> perm[v]) & 1U)) {
      throw std::invalid_argument("not a permutation");
    }
    seen |= std::uint64_t{1} << perm[v];
  }
  for (int v = 0; v < n; ++v) {
    for (int u : neighbors_[v]) rows[perm[v]] |= std::uint64_t{1} << perm[u];
  }
  return Graph(std::move(rows));
}

bool Graph::is_connected() const {
  const int n = order();
  if (n == 0) return false;
  std::uint64_t reached = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows_[std::countr_zero(f)];
    frontier = next & ~reached;
    reached |= next;
  }
  return std::popcount(reached) == n;
}

std::string_view describe(ChemicalViolation v) {
  switch (v) {
    case ChemicalViolation::kNone:
      return "chemical";
    case ChemicalViolation::kDisconnected:
      return "not connected";
    case ChemicalViolation::kDegreeAboveThree:
      return "maximum degree above 3";
    case ChemicalViolation::kOrderBelowSeven:
      return "order below 7";
    case ChemicalViolation::kSizeAboveLimit:
      return "size above (3n-3)/2";
  }
  return "unknown";
}

ChemicalCheck is_chemical_graph(const Graph& g) {
  auto fail = [](ChemicalViolation v) { return ChemicalCheck{false, v}; };
  if (!g.is_connected()) return fail(ChemicalViolation::kDisconnected);
  if (g.max_degree() > 3) return fail(ChemicalViolation::kDegreeAboveThree);
  if (g.order() < 7) return fail(ChemicalViolation::kOrderBelowSeven);
  if (2 * g.size() > 3 * g.order() - 3) return fail(ChemicalViolation::kSizeAboveLimit);
  return {true, ChemicalViolation::kNone};
}

EdgeCensus edge_census(const Graph& g) {
  if (g.max_degree() > 3) throw std::invalid_argument("edge census needs maximum degree <= 3");
  EdgeCensus x;
  for (auto [u, v] : g.edges()) {
    int a = g.degree(u);
    int b = g.degree(v);
    if (a > b) std::swap(a, b);
    switch (a * 4 + b) {
      case 1 * 4 + 2: ++x.x12; break;
      case 1 * 4 + 3: ++x.x13; break;
      case 2 * 4 + 2: ++x.x22; break;
      case 2 * 4 + 3: ++x.x23; break;
      case 3 * 4 + 3: ++x.x33; break;
      default: throw std::invalid_argument("edge between two degree-1 vertices");
    }
  }
  return x;
}

VertexCounts degree_tally(const Graph& g) {
  VertexCounts c;
  for (int v = 0; v < g.order(); ++v) {
    switch (g.degree(v)) {
      case 0: break;
      case 1: ++c.n1; break;
      case 2: ++c.n2; break;
      case 3: ++c.n3; break;
      default: throw std::invalid_argument("degree tally needs maximum degree <= 3");
    }
  }
  return c;
}

}  // namespace chemgraph
