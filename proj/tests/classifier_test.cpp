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

#include "chemgraph/classifier.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "support/oracles.hpp"

namespace chemgraph {
namespace {

using Labels = std::pair<std::string, std::string>;

// Expected (max, min) labels of every built-in index.
std::map<std::string, Labels> expected_labels() {
  std::map<std::string, Labels> out;
  for (const char* name : {"ABSC", "AG", "AG-GA", "Extended", "rSumConn", "Sombor", "rSombor", "lnZagreb1"}) {
    out[name] = {"F1", "F2"};
  }
  for (const char* name : {"GA", "GouravaSC", "Harmonic", "Randić", "SumConn"}) out[name] = {"F2", "F1"};
  for (const char* name : {"Gourava1", "Gourava2", "hGourava1", "hGourava2", "GouravaPC", "InvSumDeg", "rRandić",
                           "Zagreb2", "hZagreb1", "hZagreb2"}) {
    out[name] = {"F3", "F4"};
  }
  for (const char* name : {"Forgotten", "InvDeg", "Zagreb1", "lnZagreb3", "mZagreb"}) out[name] = {"F1∪F3", "F5"};
  out["lnZagreb2"] = {"F5", "F1∪F3"};
  out["Sigma"] = {"F6", "F7"};
  out["ABC"] = {"F9", "F8"};
  out["aZagreb"] = {"aZagreb-max", "aZagreb-min"};
  out["Albertson"] = {"Albertson-max", "Albertson-min"};
  return out;
}

TEST(Descriptor, Labels) {
  EXPECT_EQ(FamilyDescriptor::of({FamilyId::F2}).label(), "F2");
  EXPECT_EQ(FamilyDescriptor::of({FamilyId::F1, FamilyId::F3}).label(), "F1∪F3");
  EXPECT_EQ(FamilyDescriptor::unclassified().label(), "unclassified");
  EXPECT_EQ(FamilyDescriptor::special(DescriptorKind::kAZagrebMax).label(), "aZagreb-max");
  EXPECT_THROW(FamilyDescriptor::special(DescriptorKind::kFamilies), std::invalid_argument);
}

TEST(Rules, TenRulesInOrder) {
  const auto& rules = classification_rules();
  ASSERT_EQ(rules.size(), 10U);
  const std::vector<std::string> names = {"F1", "F2", "F3", "F4", "F1∪F3", "F5", "F6", "F7", "F8", "F9"};
  for (std::size_t i = 0; i < rules.size(); ++i) EXPECT_EQ(rules[i].name, names[i]);
}

TEST(Classify, EveryBuiltinGetsItsFamilies) {
  const auto expected = expected_labels();
  ASSERT_EQ(expected.size(), builtins().size());
  for (const IndexDefinition& f : builtins()) {
    const ClassificationResult r = classify(f);
    ASSERT_TRUE(expected.count(f.name)) << f.name;
    EXPECT_EQ(r.max_family.label(), expected.at(f.name).first) << f.name;
    EXPECT_EQ(r.min_family.label(), expected.at(f.name).second) << f.name;
    EXPECT_TRUE(r.conflicts.empty()) << f.name;
  }
}

TEST(Classify, ComplementSwapsDirections) {
  for (const IndexDefinition& f : builtins()) {
    const ClassificationResult a = classify(f);
    const ClassificationResult b = classify(complement(f));
    EXPECT_EQ(a.max_family, b.min_family) << f.name;
    EXPECT_EQ(a.min_family, b.max_family) << f.name;
  }
  EXPECT_EQ(classify(complement(builtin("aZagreb"))).special, "aZagreb-complement");
}

TEST(Classify, ReducedReciprocalRandicIsUnclassified) {
  const ClassificationResult r = classify(builtin("rrRandic"));
  EXPECT_EQ(r.max_family.kind, DescriptorKind::kUnclassified);
  EXPECT_EQ(r.min_family.kind, DescriptorKind::kUnclassified);
  EXPECT_TRUE(r.fired_max.empty());
  EXPECT_TRUE(r.fired_min.empty());
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(r.max_profile.sign(k), Sign::kNegative) << k;
}

TEST(Classify, RejectsNonPositiveEpsilon) {
  EXPECT_THROW(classify(builtin("Randic"), 0), std::invalid_argument);
}

// No two rules can fire together: V1 + V3 <= 0, V2 <= -V7, V4 <= -s2 and
// V4 <= -s4 rule out every pair. Checked on integer boxes, where exact zeros
// are common, and on random reals with random tolerances.
TEST(Rules, AtMostOneRuleFires) {
  auto count_fired = [](const VProfile& p) {
    int k = 0;
    for (const auto& r : classification_rules()) k += r.holds(p) ? 1 : 0;
    return k;
  };
  std::array<double, 5> c{};
  for (int i = 0; i < 7 * 7 * 7 * 7 * 7; ++i) {
    int code = i;
    for (double& v : c) {
      v = code % 7 - 3;
      code /= 7;
    }
    const IndexDefinition f = IndexDefinition::from_coefficients("box", c);
    ASSERT_LE(count_fired(v_profile(f)), 1);
  }
  auto rng = testing::make_rng(7);
  std::uniform_real_distribution<double> coef(-10, 10);
  std::uniform_real_distribution<double> log_eps(-12, 0);
  for (int trial = 0; trial < 20000; ++trial) {
    for (double& v : c) v = coef(rng);
    const IndexDefinition f = IndexDefinition::from_coefficients("random", c);
    const double eps = std::pow(10.0, log_eps(rng));
    const ClassificationResult r = classify(f, eps);
    ASSERT_LE(r.fired_max.size(), 1U);
    ASSERT_LE(r.fired_min.size(), 1U);
    ASSERT_TRUE(r.conflicts.empty());
  }
}

TEST(Predicted, Examples) {
  const ClassificationResult randic = classify(builtin("Randic"));
  EXPECT_EQ(predicted_censuses(randic, Direction::kMin, 8, 9), (std::vector<EdgeCensus>{{0, 3, 0, 0, 6}}));
  const ClassificationResult zagreb1 = classify(builtin("Zagreb1"));
  EXPECT_EQ(predicted_censuses(zagreb1, Direction::kMax, 9, 10),
            (std::vector<EdgeCensus>{{0, 3, 0, 2, 5}, {1, 2, 0, 1, 6}}));
  const ClassificationResult azagreb = classify(builtin("aZagreb"));
  EXPECT_EQ(predicted_censuses(azagreb, Direction::kMax, 7, 8), (std::vector<EdgeCensus>{{1, 1, 0, 1, 5}}));
  EXPECT_EQ(predicted_censuses(azagreb, Direction::kMax, 8, 8), (std::vector<EdgeCensus>{{2, 1, 0, 2, 3}}));
  EXPECT_EQ(predicted_censuses(azagreb, Direction::kMax, 9, 10),
            predicted_censuses(FamilyDescriptor::of({FamilyId::F8}), 9, 10));
  EXPECT_FALSE(predicted_censuses(FamilyDescriptor::unclassified(), 9, 10).has_value());
  EXPECT_THROW(predicted_censuses(randic, Direction::kMax, 8, 12), std::invalid_argument);
}

TEST(Verify, RandicAndAlbertsonAgreeThroughTen) {
  GraphCatalog catalog;
  for (const char* name : {"Randic", "Albertson", "Sigma", "aZagreb"}) {
    const VerificationReport r = verify_characterization(builtin(name), 10, catalog);
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.count(Outcome::kSkipped), 0U) << name;
    EXPECT_EQ(r.count(Outcome::kAgree), r.entries.size()) << name;
  }
}

TEST(Verify, UnclassifiedIsSkipped) {
  GraphCatalog catalog;
  const VerificationReport r = verify_characterization(builtin("rrRandic"), 9, catalog);
  EXPECT_EQ(r.count(Outcome::kSkipped), r.entries.size());
  EXPECT_TRUE(r.ok());
}

TEST(Verify, EntriesAreOrderedAndDeterministic) {
  GraphCatalog serial;
  GraphCatalog parallel(4);
  const IndexDefinition f = builtin("Zagreb1");
  const VerificationReport a = verify_characterization(f, 9, serial);
  const VerificationReport b = verify_characterization(f, 9, parallel);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].n, b.entries[i].n);
    EXPECT_EQ(a.entries[i].m, b.entries[i].m);
    EXPECT_EQ(a.entries[i].direction, b.entries[i].direction);
    EXPECT_EQ(a.entries[i].observed.optimal_censuses, b.entries[i].observed.optimal_censuses);
  }
  EXPECT_EQ(a.entries.front().direction, Direction::kMax);
  EXPECT_EQ(a.entries[1].direction, Direction::kMin);
  EXPECT_THROW(verify_characterization(f, 6, serial), std::invalid_argument);
}

}  // namespace
}  // namespace chemgraph
