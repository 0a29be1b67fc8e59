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

#include "chemgraph/index.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace chemgraph {
namespace {

TEST(Builtins, NamesInTableOrder) {
  const std::vector<std::string> expected = {
      "ABC",       "ABSC",      "Albertson", "AG",      "AG-GA",    "Extended",  "Forgotten",
      "GA",        "Gourava1",  "Gourava2",  "hGourava1", "hGourava2", "GouravaSC", "GouravaPC",
      "Harmonic",  "InvDeg",    "InvSumDeg", "Randić",  "rRandić",  "Sigma",     "Sombor",
      "rSombor",   "SumConn",   "rSumConn",  "Zagreb1", "Zagreb2",  "aZagreb",   "hZagreb1",
      "hZagreb2",  "lnZagreb1", "lnZagreb2", "lnZagreb3", "mZagreb"};
  std::vector<std::string> names;
  for (const auto& f : builtins()) names.push_back(f.name);
  EXPECT_EQ(names, expected);
  ASSERT_EQ(extra_indices().size(), 1U);
  EXPECT_EQ(extra_indices()[0].name, "rrRandić");
}

TEST(Builtins, SpotCoefficients) {
  const double tol = 1e-12;
  EXPECT_NEAR(builtin("Randić").c12, 1 / std::sqrt(2.0), tol);
  EXPECT_NEAR(builtin("Randić").c33, 1.0 / 3, tol);
  EXPECT_NEAR(builtin("ABC").c12, std::sqrt(0.5), tol);
  EXPECT_NEAR(builtin("ABC").c33, 2.0 / 3, tol);
  EXPECT_EQ(builtin("Albertson").coefficients(), (std::array<double, 5>{1, 2, 0, 1, 0}));
  EXPECT_EQ(builtin("Sigma").coefficients(), (std::array<double, 5>{1, 4, 0, 1, 0}));
  EXPECT_EQ(builtin("Zagreb1").coefficients(), (std::array<double, 5>{3, 4, 4, 5, 6}));
  EXPECT_EQ(builtin("Zagreb2").coefficients(), (std::array<double, 5>{2, 3, 4, 6, 9}));
  EXPECT_EQ(builtin("Forgotten").coefficients(), (std::array<double, 5>{5, 10, 8, 13, 18}));
  EXPECT_NEAR(builtin("aZagreb").c12, 8, tol);
  EXPECT_NEAR(builtin("aZagreb").c13, 27.0 / 8, tol);
  EXPECT_NEAR(builtin("aZagreb").c22, 8, tol);
  EXPECT_NEAR(builtin("aZagreb").c33, 729.0 / 64, tol);
  EXPECT_NEAR(builtin("lnZagreb2").c22, 2 * std::log(2.0), tol);
  EXPECT_NEAR(builtin("mZagreb").c13, 1 + 1.0 / 27, tol);
  EXPECT_NEAR(builtin("rSombor").c12, 1, tol);
  EXPECT_NEAR(builtin("hGourava2").c12, 36, tol);
  EXPECT_NEAR(extra_indices()[0].c12, 0, tol);
  EXPECT_NEAR(extra_indices()[0].c33, 2, tol);
}

TEST(Builtins, CoefficientAccessIsSymmetric) {
  const IndexDefinition f = builtin("Zagreb2");
  EXPECT_EQ(f.c(2, 1), f.c12);
  EXPECT_EQ(f.c(3, 2), f.c23);
  EXPECT_THROW(f.c(1, 1), std::invalid_argument);
}

TEST(Builtins, LookupFoldsCaseAndAccent) {
  EXPECT_EQ(builtin("randic").name, "Randić");
  EXPECT_EQ(builtin("RANDIĆ").name, "Randić");
  EXPECT_EQ(builtin("rrrandic").name, "rrRandić");
  EXPECT_EQ(builtin("ag-ga").name, "AG-GA");
  EXPECT_FALSE(find_builtin("Wiener").has_value());
  try {
    builtin("Wiener");
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("Zagreb1"), std::string::npos);
  }
}

TEST(Builtins, RejectsNonFinite) {
  EXPECT_THROW(IndexDefinition::from_coefficients("x", {1, NAN, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(IndexDefinition::from_coefficients("x", {1, 0, INFINITY, 0, 0}), std::invalid_argument);
}

TEST(Evaluate, Linear) {
  EXPECT_NEAR(evaluate(builtin("Randić"), {2, 0, 4, 0, 0}), std::sqrt(2.0) + 2, 1e-12);
  EXPECT_EQ(evaluate(builtin("Zagreb1"), {0, 0, 7, 0, 0}), 28);
}

TEST(Complement, NegatesAndInverts) {
  for (const auto& f : builtins()) {
    const IndexDefinition g = complement(f);
    EXPECT_EQ(g.name, f.name + "-complement");
    for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(g.coefficients()[k], -f.coefficients()[k]);
    const IndexDefinition h = complement(g);
    EXPECT_EQ(h.name, f.name);
    EXPECT_EQ(h.coefficients(), f.coefficients());
    EXPECT_TRUE(same_coefficients(f, h, 1e-15));
    EXPECT_FALSE((same_coefficients(f, g, 1e-9) && f.coefficients() != std::array<double, 5>{}));
  }
}

TEST(Sign, Tolerance) {
  EXPECT_EQ(sign_of(5e-10, 1e-9), Sign::kZero);
  EXPECT_EQ(sign_of(-5e-10, 1e-9), Sign::kZero);
  EXPECT_EQ(sign_of(1e-9, 1e-9), Sign::kPositive);
  EXPECT_EQ(sign_of(-2e-9, 1e-9), Sign::kNegative);
  EXPECT_EQ(to_string(Sign::kPositive), "+");
}

TEST(VProfile, HandComputedValues) {
  const IndexDefinition f = IndexDefinition::from_coefficients("powers", {1, 2, 4, 8, 16});
  const VProfile p = v_profile(f);
  const std::array<double, 8> expected = {3, -7, -14, -17, 18, 4, 7, 4};
  for (int k = 1; k <= 8; ++k) EXPECT_DOUBLE_EQ(p.value(k), expected[k - 1]) << "V" << k;
  EXPECT_DOUBLE_EQ(p.s2, 17);
  EXPECT_DOUBLE_EQ(p.s4, 9);
  EXPECT_EQ(p.sign(2), Sign::kNegative);
  EXPECT_EQ(p.sign(5), Sign::kPositive);
  EXPECT_THROW(v_profile(f, 0), std::invalid_argument);
  EXPECT_THROW(v_profile(f, -1), std::invalid_argument);
}

TEST(VProfile, AlgebraicallyZeroValuesAreZero) {
  // V7 of lnZagreb2 is zero by a logarithm identity, not exactly in doubles.
  EXPECT_EQ(v_profile(builtin("lnZagreb2")).sign(6), Sign::kZero);
  EXPECT_EQ(v_profile(complement(builtin("lnZagreb2"))).sign(7), Sign::kZero);
  EXPECT_EQ(v_profile(builtin("Zagreb1")).sign(7), Sign::kZero);
  EXPECT_EQ(v_profile(builtin("Sigma")).sign(5), Sign::kZero);
}

TEST(VProfile, AugmentedZagrebAuxiliaryValues) {
  const IndexDefinition f = builtin("aZagreb");
  const double w1 = f.c12 - f.c13 - f.c23 + f.c33;
  const double w2 = f.c12 - f.c13 - f.c22 + f.c23;
  const double w3 = 2 * f.c12 - 3 * f.c13 + 2 * f.c23 - f.c33;
  EXPECT_NEAR(w1, 8.01, 0.01);
  EXPECT_NEAR(w2, 4.62, 0.01);
  EXPECT_NEAR(w3, 10.48, 0.01);
}

}  // namespace
}  // namespace chemgraph
