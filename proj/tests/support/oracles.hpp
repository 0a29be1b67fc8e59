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

// Slow, obviously-correct reference implementations used to check the
// library. None of them share code with the library beyond the Graph and
// EdgeCensus value types.

#ifndef CHEMGRAPH_TESTS_SUPPORT_ORACLES_HPP_
#define CHEMGRAPH_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chemgraph/census.hpp"
#include "chemgraph/graph.hpp"

namespace chemgraph::testing {

using Rows = std::vector<std::uint64_t>;

/// Every labelled connected graph on n vertices with maximum degree <= 3, by
/// trying every edge subset. Feasible for n <= 6.
std::vector<Rows> labelled_connected_maxdeg3(int n);

/// Lexicographically smallest adjacency matrix over all n! relabellings,
/// packed row-major into bits. n <= 8.
std::vector<std::uint64_t> brute_canonical(const Rows& rows);

/// Isomorphism test by backtracking over degree-preserving bijections.
bool brute_isomorphic(const Graph& a, const Graph& b);

/// graph6 written straight from the format description, for n <= 62.
std::string reference_graph6(const Graph& g);

/// Censuses of all labelled connected graphs of order n, size m, maximum
/// degree <= 3, found by adding edges in lexicographic order with a degree cap.
std::set<EdgeCensus> brute_census_atlas(int n, int m);

/// Censuses of all labelled trees on n vertices with maximum degree <= 3,
/// via Pruefer sequences.
std::set<EdgeCensus> pruefer_tree_censuses(int n);

/// Census counted by looking at each edge's endpoint degrees.
EdgeCensus direct_census(const Graph& g);

/// Exact rational with 64-bit parts, always normalised.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

/// Fixed-seed generator shared by the property tests.
inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed'c0de'2026ULL ^ salt); }

/// g with its vertices permuted at random.
Graph shuffled(const Graph& g, std::mt19937_64& rng);

}  // namespace chemgraph::testing

#endif  // CHEMGRAPH_TESTS_SUPPORT_ORACLES_HPP_
