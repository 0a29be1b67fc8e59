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

#include "chemgraph/families.hpp"

#include <algorithm>

namespace chemgraph {
namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t mod3(std::int64_t a) { return ((a % 3) + 3) % 3; }

// Collects table rows; rows with a negative entry describe no graph and are
// dropped.
class Rows {
 public:
  void add(std::int64_t x12, std::int64_t x13, std::int64_t x22, std::int64_t x23, std::int64_t x33) {
    if (x12 < 0 || x13 < 0 || x22 < 0 || x23 < 0 || x33 < 0) return;
    out_.push_back({x12, x13, x22, x23, x33});
  }
  std::vector<EdgeCensus> take() {
    std::sort(out_.begin(), out_.end());
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return std::move(out_);
  }

 private:
  std::vector<EdgeCensus> out_;
};

// Rows shared by F2, F5, F7 and F12 for trees and unicyclic graphs.
void add_path_and_cycle(Rows& r, std::int64_t n, std::int64_t m) {
  if (m == n - 1) r.add(2, 0, m - 2, 0, 0);
  if (m == n) r.add(0, 0, m, 0, 0);
}

void f1_rows(Rows& r, std::int64_t n, std::int64_t m) {
  if (n % 2 == 0) {
    r.add(0, (3 * n - 2 * m) / 2, 0, 0, (4 * m - 3 * n) / 2);
  } else {
    r.add(0, (3 * n - 2 * m - 1) / 2, 0, 2, (4 * m - 3 * n - 3) / 2);
  }
}

void f3_rows(Rows& r, std::int64_t n, std::int64_t m) {
  if (n % 2 == 0) {
    r.add(0, (3 * n - 2 * m) / 2, 0, 0, (4 * m - 3 * n) / 2);
  } else {
    r.add(1, (3 * n - 2 * m - 3) / 2, 0, 1, (4 * m - 3 * n - 1) / 2);
  }
}

void f2_rows(Rows& r, std::int64_t n, std::int64_t m) {
  add_path_and_cycle(r, n, m);
  if (m == n + 1) r.add(0, 0, m - 5, 4, 1);
  if (m > n + 1) r.add(0, 0, 3 * n - 2 * m - 1, 2, 3 * m - 3 * n - 1);
}

void f4_rows(Rows& r, std::int64_t n, std::int64_t m) {
  if (m == n - 1) r.add(2, 0, m - 2, 0, 0);
  if (m >= n && 5 * m < 6 * n) r.add(0, 0, 6 * n - 5 * m, 6 * m - 6 * n, 0);
  if (5 * m >= 6 * n) r.add(0, 0, 0, 6 * n - 4 * m, 5 * m - 6 * n);
}

void f5_rows(Rows& r, std::int64_t n, std::int64_t m) {
  add_path_and_cycle(r, n, m);
  if (m == n + 1) {
    r.add(0, 0, m - 6, 6, 0);
    r.add(0, 0, m - 5, 4, 1);
  }
  if (m > n + 1) {
    for (std::int64_t a = std::max<std::int64_t>(0, 6 * n - 5 * m); a <= 3 * n - 2 * m - 1; ++a) {
      r.add(0, 0, a, 6 * n - 4 * m - 2 * a, 5 * m - 6 * n + a);
    }
  }
}

void f6_rows(Rows& r, std::int64_t n, std::int64_t m) {
  const std::int64_t lo = std::max<std::int64_t>(0, ceil_div(6 * n - 5 * m, 3));
  const std::int64_t hi = floor_div(3 * n - 2 * m, 2);
  for (std::int64_t a = lo; a <= hi; ++a) {
    r.add(0, a, 0, 6 * n - 4 * m - 4 * a, 5 * m - 6 * n + 3 * a);
  }
}

void f7_rows(Rows& r, std::int64_t n, std::int64_t m) {
  add_path_and_cycle(r, n, m);
  if (m == n + 1) {
    r.add(0, 0, m - 5, 4, 1);
    r.add(1, 0, m - 7, 3, 3);
    if (n >= 8) r.add(2, 0, m - 9, 2, 5);
  }
  if (m > n + 1) {
    r.add(0, 0, 3 * n - 2 * m - 1, 2, 3 * m - 3 * n - 1);
    r.add(1, 0, 3 * n - 2 * m - 3, 1, 3 * m - 3 * n + 1);
  }
}

void f8_rows(Rows& r, std::int64_t n, std::int64_t m) {
  if (m + 1 == n && n >= 7 && n <= 9) {
    r.add(2, 0, m - 2, 0, 0);
    r.add(3, 0, m - 6, 3, 0);
  } else if (m == n && (n == 7 || n == 8)) {
    r.add(2, 0, m - 7, 4, 1);
  } else if (n == 7 && m == 8) {
    r.add(1, 0, 1, 3, 3);
  } else {
    const std::int64_t pendant = floor_div(3 * n - 2 * m, 3);
    r.add(pendant, 0, mod3(m), pendant, floor_div(7 * m - 6 * n, 3));
  }
}

void f9_rows(Rows& r, std::int64_t n, std::int64_t m) {
  const std::int64_t rem = mod3(2 * m);
  if (m >= n - 1 && 5 * m <= 6 * n + 2) {
    r.add(0, (6 * n - 5 * m + rem) / 3, 0, (8 * m - 6 * n - 4 * rem) / 3, rem);
  }
  if (5 * m >= 6 * n + 3) r.add(0, 0, 0, 6 * n - 4 * m, 5 * m - 6 * n);
}

void f10_rows(Rows& r, std::int64_t n, std::int64_t m) {
  if (m >= n - 1 && 5 * m <= 6 * n - 2) {
    switch (mod3(m)) {
      case 0: r.add(0, (6 * n - 5 * m) / 3, 0, (8 * m - 6 * n) / 3, 0); break;
      case 1: r.add(0, (6 * n - 5 * m - 1) / 3, 1, (8 * m - 6 * n - 2) / 3, 0); break;
      default: r.add(0, (6 * n - 5 * m + 1) / 3, 0, (8 * m - 6 * n - 4) / 3, 1); break;
    }
  }
  if (5 * m == 6 * n - 1) r.add(0, 0, 1, m - 1, 0);
  if (5 * m >= 6 * n) r.add(0, 0, 0, 6 * n - 4 * m, 5 * m - 6 * n);
}

void f11_rows(Rows& r, std::int64_t n, std::int64_t m) {
  f10_rows(r, n, m);
  if (m >= n - 1 && 5 * m <= 6 * n - 2 && mod3(m) == 1) {
    r.add(1, (6 * n - 5 * m - 4) / 3, 0, (8 * m - 6 * n + 1) / 3, 0);
    r.add(0, (6 * n - 5 * m + 2) / 3, 0, (8 * m - 6 * n - 8) / 3, 2);
  }
  if (5 * m == 6 * n - 1) r.add(0, 1, 0, m - 3, 2);
}

void f12_rows(Rows& r, std::int64_t n, std::int64_t m) {
  add_path_and_cycle(r, n, m);
  if (m == n + 1) {
    if (n >= 8) r.add(2, 0, m - 9, 2, 5);
    r.add(1, 1, m - 8, 1, 5);
    r.add(1, 0, m - 7, 3, 3);
    r.add(0, 1, m - 6, 2, 3);
    r.add(0, 0, m - 5, 4, 1);
  }
  if (m > n + 1) {
    r.add(0, 0, 3 * n - 2 * m - 1, 2, 3 * m - 3 * n - 1);
    r.add(1, 0, 3 * n - 2 * m - 3, 1, 3 * m - 3 * n + 1);
  }
}

}  // namespace

std::string to_string(FamilyId id) { return "F" + std::to_string(static_cast<int>(id)); }

std::optional<FamilyId> parse_family_id(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'F' && text[0] != 'f')) return std::nullopt;
  int value = 0;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9') return std::nullopt;
    value = value * 10 + (ch - '0');
    if (value > 12) return std::nullopt;
  }
  if (value < 1 || text[1] == '0') return std::nullopt;
  return static_cast<FamilyId>(value);
}

FamilyCensusSet family_censuses(FamilyId id, std::int64_t n, std::int64_t m) {
  FamilyCensusSet set{id, n, m, {}, {}};
  if (!in_chemical_range(n, m)) {
    set.reason = "(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                 ") outside the chemical range n >= 7, n-1 <= m <= (3n-3)/2";
    return set;
  }
  Rows rows;
  switch (id) {
    case FamilyId::F1: f1_rows(rows, n, m); break;
    case FamilyId::F2: f2_rows(rows, n, m); break;
    case FamilyId::F3: f3_rows(rows, n, m); break;
    case FamilyId::F4: f4_rows(rows, n, m); break;
    case FamilyId::F5: f5_rows(rows, n, m); break;
    case FamilyId::F6: f6_rows(rows, n, m); break;
    case FamilyId::F7: f7_rows(rows, n, m); break;
    case FamilyId::F8: f8_rows(rows, n, m); break;
    case FamilyId::F9: f9_rows(rows, n, m); break;
    case FamilyId::F10: f10_rows(rows, n, m); break;
    case FamilyId::F11: f11_rows(rows, n, m); break;
    case FamilyId::F12: f12_rows(rows, n, m); break;
  }
  set.censuses = rows.take();
  if (set.censuses.empty()) set.reason = "no row of " + to_string(id) + " applies";
  return set;
}

bool is_member(const EdgeCensus& x, FamilyId id) {
  const OrderSize nm = order_size(x);
  const FamilyCensusSet set = family_censuses(id, nm.n, nm.m);
  return std::binary_search(set.censuses.begin(), set.censuses.end(), x);
}

}  // namespace chemgraph
