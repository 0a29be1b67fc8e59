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

#ifndef CHEMGRAPH_CENSUS_HPP_
#define CHEMGRAPH_CENSUS_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chemgraph {

/// Counts of (i,j)-edges of a graph with maximum degree 3, in the fixed order
/// (1,2), (1,3), (2,2), (2,3), (3,3). (1,1)-edges cannot occur in a connected
/// graph on three or more vertices and are not represented.
struct EdgeCensus {
  std::int64_t x12 = 0;
  std::int64_t x13 = 0;
  std::int64_t x22 = 0;
  std::int64_t x23 = 0;
  std::int64_t x33 = 0;

  static EdgeCensus from_array(const std::array<std::int64_t, 5>& v) {
    return {v[0], v[1], v[2], v[3], v[4]};
  }
  std::array<std::int64_t, 5> to_array() const { return {x12, x13, x22, x23, x33}; }

  std::int64_t size() const { return x12 + x13 + x22 + x23 + x33; }

  EdgeCensus& operator+=(const EdgeCensus& o) {
    x12 += o.x12;
    x13 += o.x13;
    x22 += o.x22;
    x23 += o.x23;
    x33 += o.x33;
    return *this;
  }
  friend EdgeCensus operator+(EdgeCensus a, const EdgeCensus& b) { return a += b; }

  friend auto operator<=>(const EdgeCensus&, const EdgeCensus&) = default;
};

/// "(x12, x13, x22, x23, x33)"
std::string to_string(const EdgeCensus& x);

/// Parses "a,b,c,d,e" (whitespace tolerated). Throws std::invalid_argument.
EdgeCensus parse_census(std::string_view text);

struct VertexCounts {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t n3 = 0;

  std::int64_t order() const { return n1 + n2 + n3; }
  friend auto operator<=>(const VertexCounts&, const VertexCounts&) = default;
};

struct OrderSize {
  std::int64_t n = 0;
  std::int64_t m = 0;
  friend auto operator<=>(const OrderSize&, const OrderSize&) = default;
};

/// An integer direction in census space; see apply_transform.
struct TransformVector {
  std::int64_t a12 = 0;
  std::int64_t a13 = 0;
  std::int64_t a22 = 0;
  std::int64_t a23 = 0;
  std::int64_t a33 = 0;

  friend auto operator<=>(const TransformVector&, const TransformVector&) = default;
};

/// Raised when a census has no integral vertex counts, or a transform leaves
/// the nonnegative cone.
class CensusError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Degree-class vertex counts implied by a census. Throws CensusError
/// ("inconsistent census") when n2 or n3 is not integral or a component is
/// negative.
VertexCounts vertex_counts(const EdgeCensus& x);

/// Order and size implied by a census; the order is evaluated as
/// (9 x12 + 8 x13 + 6 x22 + 5 x23 + 4 x33) / 6 in exact integers.
OrderSize order_size(const EdgeCensus& x);

/// True iff every (A,k)-transform keeps the implied order and size.
bool is_nm_preserving(const TransformVector& a);

/// x + k A componentwise. Throws CensusError("transform leaves census cone")
/// if any component would become negative.
EdgeCensus apply_transform(const EdgeCensus& x, const TransformVector& a, std::int64_t k);

/// Size range of chemical graphs of order n: n-1 <= m <= floor((3n-3)/2).
std::int64_t min_chemical_size(std::int64_t n);
std::int64_t max_chemical_size(std::int64_t n);
bool in_chemical_range(std::int64_t n, std::int64_t m);

enum class RealizabilityCondition {
  kInconsistentCensus,     // no integral vertex counts
  kOrderBelowSeven,        // chemical gate: n >= 7
  kSizeAboveLimit,         // chemical gate: 2m <= 3n - 3
  kCubicEdgeCapacity,      // x33 <= n3(n3-1)/2 when n3 in {1,2,3}
  kPathEdgeCapacity,       // x22 <= n2(n2-1)/2 when n2 in {1,2}
  kMixedEdgeCapacity,      // x23 <= n2 n3 when n2 in {1,2} and n3 = 1
  kMixedEdgeLowerBound,    // x23 >= d(n2) + d(n3) - 1
  kCubicConnectivity,      // x23 + x33 >= n3 + d(n2) - 1
  kPathConnectivity,       // x22 + x23 >= n2 + d(n3) - 1
  kTreeBound,              // m >= n - 1
};

std::string_view describe(RealizabilityCondition c);

struct RealizabilityReport {
  bool realizable = false;
  std::vector<RealizabilityCondition> violated;
};

struct RealizabilityOptions {
  /// Also require n >= 7 and m <= (3n-3)/2.
  bool chemical_gate = true;
};

/// Decides whether some connected graph of maximum degree <= 3 has census x.
/// The inequalities are the chemical-graph specialisation of the general
/// existence conditions; with the gate switched off they are applied as-is to
/// small or dense censuses, where they are not guaranteed to be exact.
RealizabilityReport is_realizable(const EdgeCensus& x, const RealizabilityOptions& options = {});

/// Every nonnegative census whose implied order and size are (n, m).
std::vector<EdgeCensus> censuses_with_order_size(std::int64_t n, std::int64_t m);

}  // namespace chemgraph

#endif  // CHEMGRAPH_CENSUS_HPP_
