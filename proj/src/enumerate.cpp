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

#include "chemgraph/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

#include "chemgraph/canonical.hpp"
#include "chemgraph/graph6.hpp"

namespace chemgraph {
namespace {

constexpr int kMaxDegree = 3;

struct Node {
  std::vector<std::uint64_t> rows;
  CanonicalLabeling labeling;
};

bool connected_without(const std::vector<std::uint64_t>& rows, int removed) {
  const int n = static_cast<int>(rows.size());
  const std::uint64_t all = ((n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) &
                            ~(std::uint64_t{1} << removed);
  if (all == 0) return true;
  const std::uint64_t seed = all & (~all + 1);
  std::uint64_t reached = seed;
  std::uint64_t frontier = seed;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
    next &= all;
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all;
}

// Sorted neighbour degrees packed base 4; ties among deletion candidates are
// broken on it before falling back to canonical order.
int neighbour_signature(const std::vector<std::uint64_t>& rows, int v) {
  std::array<int, kMaxDegree> degrees{};
  int k = 0;
  for (std::uint64_t r = rows[v]; r != 0; r &= r - 1) degrees[k++] = std::popcount(rows[std::countr_zero(r)]);
  std::sort(degrees.begin(), degrees.begin() + k);
  int sig = 0;
  for (int i = 0; i < k; ++i) sig = sig * 4 + degrees[i];
  return sig;
}

// Vertices eligible as the canonical deletion vertex, as a bitmask.
std::uint64_t deletion_candidates(const std::vector<std::uint64_t>& rows) {
  const int n = static_cast<int>(rows.size());
  std::uint64_t best = 0;
  int best_degree = kMaxDegree + 1;
  int best_sig = 0;
  for (int v = 0; v < n; ++v) {
    const int d = std::popcount(rows[v]);
    if (d > best_degree) continue;
    const int sig = neighbour_signature(rows, v);
    if (d == best_degree && sig > best_sig) continue;
    if (!connected_without(rows, v)) continue;
    if (d < best_degree || sig < best_sig) {
      best = 0;
      best_degree = d;
      best_sig = sig;
    }
    best |= std::uint64_t{1} << v;
  }
  return best;
}

bool orbit_minimal(std::uint64_t set, const std::vector<std::vector<int>>& automorphisms) {
  for (const auto& gamma : automorphisms) {
    std::uint64_t image = 0;
    for (std::uint64_t s = set; s != 0; s &= s - 1) image |= std::uint64_t{1} << gamma[std::countr_zero(s)];
    if (image < set) return false;
  }
  return true;
}

Node root() {
  Node node;
  node.rows = {0};
  node.labeling = canonical_labeling(node.rows);
  return node;
}

// Calls emit(child) for every accepted one-vertex extension of parent.
template <typename Emit>
void extend(const Node& parent, Emit&& emit) {
  const int k = static_cast<int>(parent.rows.size());
  std::uint64_t open = 0;
  for (int v = 0; v < k; ++v) {
    if (std::popcount(parent.rows[v]) < kMaxDegree) open |= std::uint64_t{1} << v;
  }
  std::vector<int> open_list;
  for (std::uint64_t o = open; o != 0; o &= o - 1) open_list.push_back(std::countr_zero(o));
  const int count = static_cast<int>(open_list.size());

  auto try_set = [&](std::uint64_t set) {
    if (!orbit_minimal(set, parent.labeling.automorphisms)) return;
    std::vector<std::uint64_t> rows = parent.rows;
    rows.push_back(set);
    for (std::uint64_t s = set; s != 0; s &= s - 1) rows[std::countr_zero(s)] |= std::uint64_t{1} << k;
    const std::uint64_t candidates = deletion_candidates(rows);
    if (((candidates >> k) & 1U) == 0) return;
    CanonicalLabeling labeling = canonical_labeling(rows);
    if (candidates != (std::uint64_t{1} << k)) {
      int chosen = -1;
      for (std::uint64_t c = candidates; c != 0; c &= c - 1) {
        const int v = std::countr_zero(c);
        if (chosen < 0 || labeling.position[v] < labeling.position[chosen]) chosen = v;
      }
      if (labeling.orbit[chosen] != labeling.orbit[k]) return;
    }
    emit(Node{std::move(rows), std::move(labeling)});
  };

  for (int a = 0; a < count; ++a) {
    const std::uint64_t sa = std::uint64_t{1} << open_list[a];
    try_set(sa);
    for (int b = a + 1; b < count; ++b) {
      const std::uint64_t sb = sa | (std::uint64_t{1} << open_list[b]);
      try_set(sb);
      for (int c = b + 1; c < count; ++c) try_set(sb | (std::uint64_t{1} << open_list[c]));
    }
  }
}

void grow(const Node& node, int target, std::vector<Graph>& out) {
  if (static_cast<int>(node.rows.size()) == target) {
    out.push_back(Graph::from_rows(node.labeling.canonical_rows));
    return;
  }
  extend(node, [&](Node child) { grow(child, target, out); });
}

}  // namespace

std::vector<Graph> enumerate_connected_maxdeg3(int n, const EnumerateOptions& options) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration order must be in [1, " + std::to_string(kMaxEnumerationOrder) +
                                "], got " + std::to_string(n));
  }
  const int workers = std::max(1, options.workers);

  // Breadth-first down to the split order; the nodes there root independent
  // subtrees.
  std::vector<Node> frontier;
  frontier.push_back(root());
  int order = 1;
  auto want_split = [&](int k) {
    if (options.split_order > 0) return k >= std::min(options.split_order, n);
    return k >= n || static_cast<int>(frontier.size()) >= 4 * workers;
  };
  while (!want_split(order)) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      extend(node, [&](Node child) { next.push_back(std::move(child)); });
    }
    frontier = std::move(next);
    ++order;
  }

  std::vector<std::vector<Graph>> results(frontier.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) grow(frontier[i], n, results[i]);
  };
  if (workers == 1 || frontier.size() <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    const int spawned = std::min<int>(workers, static_cast<int>(frontier.size()));
    for (int t = 0; t < spawned; ++t) pool.emplace_back(work);
  }

  std::vector<std::pair<std::pair<int, std::string>, Graph>> keyed;
  for (auto& part : results) {
    for (Graph& g : part) {
      keyed.push_back({{g.size(), write_graph6(g)}, std::move(g)});
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

}  // namespace chemgraph
