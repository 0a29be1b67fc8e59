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

#include "chemgraph/realize.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <vector>

namespace chemgraph {
namespace {

// Index into the census for a degree pair; -1 for (1,1) or anything invalid.
int edge_type(int a, int b) {
  if (a > b) std::swap(a, b);
  switch (a * 4 + b) {
    case 1 * 4 + 2: return 0;
    case 1 * 4 + 3: return 1;
    case 2 * 4 + 2: return 2;
    case 2 * 4 + 3: return 3;
    case 3 * 4 + 3: return 4;
    default: return -1;
  }
}

class BudgetExceeded {};

class StubSearch {
 public:
  StubSearch(const VertexCounts& counts, const EdgeCensus& x, std::int64_t node_budget)
      : budget_(x.to_array()), node_budget_(node_budget) {
    for (std::int64_t i = 0; i < counts.n3; ++i) target_.push_back(3);
    for (std::int64_t i = 0; i < counts.n2; ++i) target_.push_back(2);
    for (std::int64_t i = 0; i < counts.n1; ++i) target_.push_back(1);
    n_ = static_cast<int>(target_.size());
    degree_.assign(n_, 0);
    rows_.assign(n_, 0);
  }

  std::optional<Graph> run() {
    if (n_ == 0) return std::nullopt;
    component_ = 1;
    untouched_ = n_ - 1;
    open_stubs_ = target_[0];
    if (n_ == 1) {
      if (std::all_of(budget_.begin(), budget_.end(), [](std::int64_t b) { return b == 0; })) {
        return Graph::from_rows(rows_);
      }
      return std::nullopt;
    }
    if (search()) return Graph::from_rows(rows_);
    return std::nullopt;
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  bool search() {
    if (++nodes_ > node_budget_) throw BudgetExceeded{};
    if (std::all_of(budget_.begin(), budget_.end(), [](std::int64_t b) { return b == 0; })) {
      return untouched_ == 0 && open_stubs_ == 0;
    }
    int u = -1;
    for (std::uint64_t c = component_; c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      if (degree_[v] < target_[v]) {
        u = v;
        break;
      }
    }
    if (u < 0) return false;

    struct Candidate {
      std::int64_t scarcity;
      int vertex;
      int type;
    };
    std::vector<Candidate> candidates;
    std::array<bool, 4> fresh_class_seen{};
    for (int w = 0; w < n_; ++w) {
      if (w == u || degree_[w] >= target_[w] || ((rows_[u] >> w) & 1U)) continue;
      const int type = edge_type(target_[u], target_[w]);
      if (type < 0 || budget_[type] == 0) continue;
      if (degree_[w] == 0) {
        if (fresh_class_seen[target_[w]]) continue;
        fresh_class_seen[target_[w]] = true;
      }
      candidates.push_back({budget_[type], w, type});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.scarcity < b.scarcity; });

    for (const Candidate& cand : candidates) {
      const int w = cand.vertex;
      const bool joins = degree_[w] == 0;
      link(u, w, cand.type, joins);
      const bool dead = untouched_ > 0 && open_stubs_ == 0;
      if (!dead && search()) return true;
      unlink(u, w, cand.type, joins);
    }
    return false;
  }

  void link(int u, int w, int type, bool joins) {
    rows_[u] |= std::uint64_t{1} << w;
    rows_[w] |= std::uint64_t{1} << u;
    ++degree_[u];
    ++degree_[w];
    --budget_[type];
    if (joins) {
      component_ |= std::uint64_t{1} << w;
      --untouched_;
      open_stubs_ += target_[w];
    }
    open_stubs_ -= 2;
  }

  void unlink(int u, int w, int type, bool joins) {
    rows_[u] &= ~(std::uint64_t{1} << w);
    rows_[w] &= ~(std::uint64_t{1} << u);
    --degree_[u];
    --degree_[w];
    ++budget_[type];
    open_stubs_ += 2;
    if (joins) {
      component_ &= ~(std::uint64_t{1} << w);
      ++untouched_;
      open_stubs_ -= target_[w];
    }
  }

  std::array<std::int64_t, 5> budget_;
  std::int64_t node_budget_;
  std::int64_t nodes_ = 0;
  int n_ = 0;
  std::vector<int> target_;
  std::vector<int> degree_;
  std::vector<std::uint64_t> rows_;
  std::uint64_t component_ = 0;
  int untouched_ = 0;
  std::int64_t open_stubs_ = 0;  // unfilled stubs of component vertices
};

}  // namespace

RealizeResult realize_census(const EdgeCensus& x, const RealizeOptions& options) {
  RealizeResult result;
  VertexCounts counts;
  try {
    counts = vertex_counts(x);
  } catch (const CensusError&) {
    return result;
  }
  if (options.precheck && !is_realizable(x, options.realizability).realizable) return result;
  if (counts.order() > Graph::kMaxOrder || counts.order() == 0) return result;

  StubSearch search(counts, x, options.node_budget);
  try {
    result.graph = search.run();
    result.status = result.graph ? RealizeStatus::kFound : RealizeStatus::kNone;
  } catch (const BudgetExceeded&) {
    result.status = RealizeStatus::kBudgetExceeded;
  }
  result.nodes = search.nodes();
  return result;
}

F1Construction construct_f1_explicit(std::int64_t n, std::int64_t m) {
  if (n % 2 != 0 || n < 8 || m < n || m > max_chemical_size(n) || n > Graph::kMaxOrder) {
    throw ConstructionError("explicit F1 construction needs even n >= 8 and n <= m <= (3n-3)/2, got (" +
                            std::to_string(n) + ", " + std::to_string(m) + ")");
  }
  const EdgeCensus expected{0, (3 * n - 2 * m) / 2, 0, 0, (4 * m - 3 * n) / 2};

  const int cycle = static_cast<int>(m - n / 2);
  const int chords = static_cast<int>(m - n);
  const int offset = static_cast<int>((2 * m - n + 3) / 4);  // ceil((2m-n)/4)
  std::vector<Edge> edges;
  std::vector<bool> matched(cycle, false);
  for (int i = 0; i < cycle; ++i) edges.emplace_back(i, (i + 1) % cycle);
  for (int i = 1; i <= chords; ++i) {
    const int a = i - 1;
    const int b = offset + i - 1;
    edges.emplace_back(a, b);
    if (b < cycle) {
      matched[a] = true;
      matched[b] = true;
    }
  }
  int next = cycle;
  for (int i = 0; i < cycle; ++i) {
    if (!matched[i]) edges.emplace_back(i, next++);
  }

  try {
    if (next == n) {
      Graph g = Graph::from_edges(static_cast<int>(n), edges);
      if (is_chemical_graph(g) && edge_census(g) == expected) return {std::move(g), true};
    }
  } catch (const std::invalid_argument&) {
    // fall through to the realizer
  }
  RealizeResult fallback = realize_census(expected);
  if (fallback.status != RealizeStatus::kFound) {
    throw ConstructionError("no witness for F1 census " + to_string(expected));
  }
  return {std::move(*fallback.graph), false};
}

std::vector<FamilyWitness> construct_family_graphs(FamilyId id, std::int64_t n, std::int64_t m,
                                                   const RealizeOptions& options) {
  std::vector<FamilyWitness> out;
  const bool explicit_f1 = id == FamilyId::F1 && n % 2 == 0 && n >= 8 && m >= n && n <= Graph::kMaxOrder;
  for (const EdgeCensus& x : family_censuses(id, n, m).censuses) {
    FamilyWitness w;
    w.census = x;
    if (explicit_f1) {
      F1Construction built = construct_f1_explicit(n, m);
      w.status = RealizeStatus::kFound;
      w.graph = std::move(built.graph);
      w.explicit_construction = built.explicit_construction_valid;
    } else {
      RealizeResult r = realize_census(x, options);
      w.status = r.status;
      w.graph = std::move(r.graph);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<AtlasRow> family_atlas(const std::vector<FamilyId>& ids, std::int64_t n_min, std::int64_t n_max,
                                   const RealizeOptions& options) {
  std::vector<AtlasRow> rows;
  for (FamilyId id : ids) {
    for (std::int64_t n = std::max<std::int64_t>(n_min, 7); n <= n_max; ++n) {
      for (std::int64_t m = min_chemical_size(n); m <= max_chemical_size(n); ++m) {
        for (FamilyWitness& w : construct_family_graphs(id, n, m, options)) {
          rows.push_back({id, n, m, std::move(w)});
        }
      }
    }
  }
  return rows;
}

}  // namespace chemgraph
