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

#ifndef CHEMGRAPH_INDEX_HPP_
#define CHEMGRAPH_INDEX_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chemgraph/census.hpp"

namespace chemgraph {

inline constexpr double kDefaultEpsilon = 1e-9;

/// A degree-based topological index: a linear functional on the edge census,
/// f(x) = c12 x12 + c13 x13 + c22 x22 + c23 x23 + c33 x33.
struct IndexDefinition {
  std::string name;
  double c12 = 0;
  double c13 = 0;
  double c22 = 0;
  double c23 = 0;
  double c33 = 0;

  std::array<double, 5> coefficients() const { return {c12, c13, c22, c23, c33}; }

  /// Coefficient of the unordered degree pair {i, j}; i, j in {1,2,3},
  /// {1,1} excluded.
  double c(int i, int j) const;

  /// Throws std::invalid_argument if a coefficient is not finite.
  static IndexDefinition from_coefficients(std::string name, const std::array<double, 5>& c);
};

/// The 33 built-in indices, in table order.
const std::vector<IndexDefinition>& builtins();

/// Indices that are defined for reference but are not part of the built-in
/// table (currently the reduced reciprocal Randic index, rrRandic).
const std::vector<IndexDefinition>& extra_indices();

/// Case-insensitive lookup among builtins() and extra_indices(); "c" matches
/// "ć". Throws std::invalid_argument listing the available names.
IndexDefinition builtin(std::string_view name);

/// nullopt instead of throwing.
std::optional<IndexDefinition> find_builtin(std::string_view name);

double evaluate(const IndexDefinition& f, const EdgeCensus& x);

/// All coefficients negated; the name gains a "-complement" suffix, or loses
/// it when already present.
IndexDefinition complement(const IndexDefinition& f);

/// True if all five coefficients agree within eps.
bool same_coefficients(const IndexDefinition& a, const IndexDefinition& b, double eps);

enum class Sign { kNegative, kZero, kPositive };

std::string_view to_string(Sign s);

Sign sign_of(double value, double eps);

/// Extremality witnesses of an index. v[0..7] hold V1..V8; s2 = V5 + V7 - 2 V6
/// and s4 = V5 + V7 - 4 V6.
struct VProfile {
  std::array<double, 8> v{};
  double s2 = 0;
  double s4 = 0;
  std::array<Sign, 8> v_sign{};
  Sign s2_sign = Sign::kZero;
  Sign s4_sign = Sign::kZero;
  double epsilon = kDefaultEpsilon;

  double value(int k) const { return v[k - 1]; }  // 1-based
  Sign sign(int k) const { return v_sign[k - 1]; }
};

/// Signs use an absolute tolerance: zero iff |value| < eps. Throws
/// std::invalid_argument unless eps > 0.
VProfile v_profile(const IndexDefinition& f, double eps = kDefaultEpsilon);

}  // namespace chemgraph

#endif  // CHEMGRAPH_INDEX_HPP_
