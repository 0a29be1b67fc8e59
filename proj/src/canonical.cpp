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

#include "chemgraph/canonical.hpp"

#include <algorithm>
#include <bit>

namespace chemgraph {
namespace {

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

class Labeler {
 public:
  explicit Labeler(std::span<const std::uint64_t> rows) : rows_(rows.begin(), rows.end()) {}

  CanonicalLabeling run() {
    const int n = static_cast<int>(rows_.size());
    CanonicalLabeling out;
    if (n == 0) return out;

    // Initial partition by degree.
    Partition start;
    for (int d = 0; d < n; ++d) {
      Cell cell;
      for (int v = 0; v < n; ++v) {
        if (std::popcount(rows_[v]) == d) cell.push_back(v);
      }
      if (!cell.empty()) start.push_back(std::move(cell));
    }
    refine(start);
    search(start);

    out.order = best_leaves_.front();
    out.position.assign(n, 0);
    for (int p = 0; p < n; ++p) out.position[out.order[p]] = p;
    out.canonical_rows = best_code_;
    out.orbit.resize(n);
    for (int v = 0; v < n; ++v) out.orbit[v] = v;
    for (const auto& leaf : best_leaves_) {
      std::vector<int> gamma(n);
      for (int p = 0; p < n; ++p) gamma[out.order[p]] = leaf[p];
      for (int v = 0; v < n; ++v) out.orbit[v] = std::min(out.orbit[v], gamma[v]);
      out.automorphisms.push_back(std::move(gamma));
    }
    // The orbit minimum of v is min over the group of gamma(v); the group is
    // closed under inverses so this is the same for every orbit member.
    return out;
  }

 private:
  // Splits cells by neighbour counts into other cells until equitable. Split
  // pieces are ordered by count, so the result commutes with relabelling.
  void refine(Partition& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        std::uint64_t mask = 0;
        for (int v : cells[s]) mask |= std::uint64_t{1} << v;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          Cell& cell = cells[i];
          if (cell.size() == 1) continue;
          auto count = [&](int v) { return std::popcount(rows_[v] & mask); };
          const int first = count(cell.front());
          if (std::all_of(cell.begin(), cell.end(), [&](int v) { return count(v) == first; })) continue;
          std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return count(a) < count(b); });
          Partition pieces;
          for (int v : cell) {
            if (pieces.empty() || count(pieces.back().front()) != count(v)) pieces.emplace_back();
            pieces.back().push_back(v);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  void search(const Partition& cells) {
    const auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    for (int v : cells[index]) {
      Partition child = cells;
      Cell rest;
      for (int u : cells[index]) {
        if (u != v) rest.push_back(u);
      }
      child[index] = Cell{v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(index) + 1, std::move(rest));
      refine(child);
      search(child);
    }
  }

  void leaf(const Partition& cells) {
    const int n = static_cast<int>(rows_.size());
    std::vector<int> order(n);
    std::vector<int> position(n);
    for (int p = 0; p < n; ++p) {
      order[p] = cells[p].front();
      position[order[p]] = p;
    }
    std::vector<std::uint64_t> code(n, 0);
    for (int p = 0; p < n; ++p) {
      for (std::uint64_t r = rows_[order[p]]; r != 0; r &= r - 1) {
        code[p] |= std::uint64_t{1} << position[std::countr_zero(r)];
      }
    }
    if (best_leaves_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_leaves_.clear();
      best_leaves_.push_back(std::move(order));
    } else if (code == best_code_) {
      best_leaves_.push_back(std::move(order));
    }
  }

  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> best_code_;
  std::vector<std::vector<int>> best_leaves_;
};

}  // namespace

CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> rows) {
  return Labeler(rows).run();
}

Graph canonical_form(const Graph& g) {
  return Graph::from_rows(canonical_labeling(g).canonical_rows);
}

}  // namespace chemgraph
