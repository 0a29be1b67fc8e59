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

#include "chemgraph/census.hpp"

#include <charconv>
#include <sstream>

namespace chemgraph {
namespace {

// 6 * order, from the per-edge-type vertex shares 3/2, 4/3, 1, 5/6, 2/3.
std::int64_t six_times_order(std::int64_t a12, std::int64_t a13, std::int64_t a22,
                             std::int64_t a23, std::int64_t a33) {
  return 9 * a12 + 8 * a13 + 6 * a22 + 5 * a23 + 4 * a33;
}

std::int64_t indicator(std::int64_t v) { return v >= 1 ? 1 : 0; }

}  // namespace

std::string to_string(const EdgeCensus& x) {
  std::ostringstream os;
  os << '(' << x.x12 << ", " << x.x13 << ", " << x.x22 << ", " << x.x23 << ", " << x.x33 << ')';
  return os.str();
}

EdgeCensus parse_census(std::string_view text) {
  std::array<std::int64_t, 5> v{};
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(pos, end - pos);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
    if (count == 5) throw std::invalid_argument("census needs exactly 5 components");
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw std::invalid_argument("bad census component '" + std::string(field) + "'");
    }
    v[count++] = value;
    pos = end + 1;
  }
  if (count != 5) throw std::invalid_argument("census needs exactly 5 components");
  return EdgeCensus::from_array(v);
}

VertexCounts vertex_counts(const EdgeCensus& x) {
  for (std::int64_t c : x.to_array()) {
    if (c < 0) throw CensusError("inconsistent census: negative component in " + to_string(x));
  }
  const std::int64_t twice_n2 = x.x12 + 2 * x.x22 + x.x23;
  const std::int64_t thrice_n3 = x.x13 + x.x23 + 2 * x.x33;
  if (twice_n2 % 2 != 0 || thrice_n3 % 3 != 0) {
    throw CensusError("inconsistent census: non-integral vertex counts for " + to_string(x));
  }
  return {x.x12 + x.x13, twice_n2 / 2, thrice_n3 / 3};
}

OrderSize order_size(const EdgeCensus& x) {
  return {vertex_counts(x).order(), x.size()};
}

bool is_nm_preserving(const TransformVector& a) {
  return six_times_order(a.a12, a.a13, a.a22, a.a23, a.a33) == 0 &&
         a.a12 + a.a13 + a.a22 + a.a23 + a.a33 == 0;
}

EdgeCensus apply_transform(const EdgeCensus& x, const TransformVector& a, std::int64_t k) {
  const EdgeCensus y{x.x12 + k * a.a12, x.x13 + k * a.a13, x.x22 + k * a.a22,
                     x.x23 + k * a.a23, x.x33 + k * a.a33};
  for (std::int64_t c : y.to_array()) {
    if (c < 0) throw CensusError("transform leaves census cone: " + to_string(y));
  }
  return y;
}

std::int64_t min_chemical_size(std::int64_t n) { return n - 1; }

std::int64_t max_chemical_size(std::int64_t n) {
  // floor((3n-3)/2) for n >= 1
  return (3 * n - 3) / 2;
}

bool in_chemical_range(std::int64_t n, std::int64_t m) {
  return n >= 7 && m >= min_chemical_size(n) && m <= max_chemical_size(n);
}

std::string_view describe(RealizabilityCondition c) {
  switch (c) {
    case RealizabilityCondition::kInconsistentCensus:
      return "inconsistent census (non-integral vertex counts)";
    case RealizabilityCondition::kOrderBelowSeven:
      return "order below 7";
    case RealizabilityCondition::kSizeAboveLimit:
      return "size above (3n-3)/2";
    case RealizabilityCondition::kCubicEdgeCapacity:
      return "x33 <= n3(n3-1)/2 when n3 in {1,2,3}";
    case RealizabilityCondition::kPathEdgeCapacity:
      return "x22 <= n2(n2-1)/2 when n2 in {1,2}";
    case RealizabilityCondition::kMixedEdgeCapacity:
      return "x23 <= n2*n3 when n2 in {1,2} and n3 = 1";
    case RealizabilityCondition::kMixedEdgeLowerBound:
      return "x23 >= d(n2) + d(n3) - 1";
    case RealizabilityCondition::kCubicConnectivity:
      return "x23 + x33 >= n3 + d(n2) - 1";
    case RealizabilityCondition::kPathConnectivity:
      return "x22 + x23 >= n2 + d(n3) - 1";
    case RealizabilityCondition::kTreeBound:
      return "m >= n - 1";
  }
  return "unknown";
}

RealizabilityReport is_realizable(const EdgeCensus& x, const RealizabilityOptions& options) {
  using C = RealizabilityCondition;
  RealizabilityReport report;
  VertexCounts v;
  try {
    v = vertex_counts(x);
  } catch (const CensusError&) {
    report.violated.push_back(C::kInconsistentCensus);
    return report;
  }
  const std::int64_t n = v.order();
  const std::int64_t m = x.size();

  if (options.chemical_gate) {
    if (n < 7) report.violated.push_back(C::kOrderBelowSeven);
    if (2 * m > 3 * n - 3) report.violated.push_back(C::kSizeAboveLimit);
  }
  if (v.n3 >= 1 && v.n3 <= 3 && x.x33 > v.n3 * (v.n3 - 1) / 2) {
    report.violated.push_back(C::kCubicEdgeCapacity);
  }
  if (v.n2 >= 1 && v.n2 <= 2 && x.x22 > v.n2 * (v.n2 - 1) / 2) {
    report.violated.push_back(C::kPathEdgeCapacity);
  }
  if (v.n2 >= 1 && v.n2 <= 2 && v.n3 == 1 && x.x23 > v.n2 * v.n3) {
    report.violated.push_back(C::kMixedEdgeCapacity);
  }
  if (x.x23 < indicator(v.n2) + indicator(v.n3) - 1) {
    report.violated.push_back(C::kMixedEdgeLowerBound);
  }
  if (x.x23 + x.x33 < v.n3 + indicator(v.n2) - 1) {
    report.violated.push_back(C::kCubicConnectivity);
  }
  if (x.x22 + x.x23 < v.n2 + indicator(v.n3) - 1) {
    report.violated.push_back(C::kPathConnectivity);
  }
  if (m < n - 1) report.violated.push_back(C::kTreeBound);

  report.realizable = report.violated.empty();
  return report;
}

std::vector<EdgeCensus> censuses_with_order_size(std::int64_t n, std::int64_t m) {
  std::vector<EdgeCensus> out;
  if (n < 0 || m < 0) return out;
  for (std::int64_t a = 0; a <= m; ++a) {
    for (std::int64_t b = 0; a + b <= m; ++b) {
      for (std::int64_t c = 0; a + b + c <= m; ++c) {
        for (std::int64_t d = 0; a + b + c + d <= m; ++d) {
          const EdgeCensus x{a, b, c, d, m - a - b - c - d};
          if (six_times_order(x.x12, x.x13, x.x22, x.x23, x.x33) != 6 * n) continue;
          if ((x.x12 + x.x23) % 2 != 0 || (x.x13 + x.x23 + 2 * x.x33) % 3 != 0) continue;
          out.push_back(x);
        }
      }
    }
  }
  return out;
}

}  // namespace chemgraph
