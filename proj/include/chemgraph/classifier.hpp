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

#ifndef CHEMGRAPH_CLASSIFIER_HPP_
#define CHEMGRAPH_CLASSIFIER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chemgraph/census.hpp"
#include "chemgraph/families.hpp"
#include "chemgraph/index.hpp"
#include "chemgraph/oracle.hpp"

namespace chemgraph {

enum class DescriptorKind {
  kFamilies,       // union of the listed families
  kAZagrebMax,     // F8 except at (7,8) and (8,8)
  kAZagrebMin,     // F10
  kAlbertsonMax,   // F11
  kAlbertsonMin,   // F12
  kUnclassified,
};

struct FamilyDescriptor {
  DescriptorKind kind = DescriptorKind::kUnclassified;
  std::vector<FamilyId> families;

  static FamilyDescriptor of(std::vector<FamilyId> ids) { return {DescriptorKind::kFamilies, std::move(ids)}; }
  static FamilyDescriptor special(DescriptorKind kind);
  static FamilyDescriptor unclassified() { return {}; }

  /// "F2", "F1∪F3", "aZagreb-max", "unclassified", ...
  std::string label() const;

  bool operator==(const FamilyDescriptor&) const = default;
};

/// Quantities a rule can test: V1..V8, then s2 = V5+V7-2V6 and s4 = V5+V7-4V6.
enum class Quantity { V1, V2, V3, V4, V5, V6, V7, V8, S2, S4 };

std::string_view to_string(Quantity q);

struct Condition {
  Quantity quantity;
  Sign sign;
};

struct ClassificationRule {
  std::string name;  // label of the conclusion
  std::vector<Condition> conditions;
  FamilyDescriptor conclusion;

  bool holds(const VProfile& p) const;
};

/// The ten sign rules, in a fixed order.
const std::vector<ClassificationRule>& classification_rules();

struct ClassificationResult {
  std::string index_name;
  FamilyDescriptor max_family;
  FamilyDescriptor min_family;
  std::vector<std::string> fired_max;  // rule names that fired on f
  std::vector<std::string> fired_min;  // rule names that fired on the complement
  std::vector<std::string> conflicts;  // one message per direction with > 1 rule
  std::string special;                 // "aZagreb", "Albertson" or empty
  VProfile max_profile;
  VProfile min_profile;
};

/// Applies the rules to f for maximisation and to its complement for
/// minimisation. aZagreb and Albertson (and their complements) are recognised
/// by coefficients within eps and get their dedicated results. No rule firing
/// gives Unclassified; several firing are listed as a conflict and the
/// direction is left Unclassified. Throws std::invalid_argument unless eps > 0.
ClassificationResult classify(const IndexDefinition& f, double eps = kDefaultEpsilon);

/// Census set predicted for the given direction at (n, m); std::nullopt means
/// no prediction (Unclassified). Throws std::invalid_argument when (n, m) is
/// outside the chemical range.
std::optional<std::vector<EdgeCensus>> predicted_censuses(const ClassificationResult& result, Direction direction,
                                                          int n, int m);

std::optional<std::vector<EdgeCensus>> predicted_censuses(const FamilyDescriptor& descriptor, int n, int m);

enum class Outcome { kAgree, kDisagree, kSkipped };

std::string_view to_string(Outcome o);

struct VerificationEntry {
  int n = 0;
  int m = 0;
  Direction direction = Direction::kMax;
  Outcome outcome = Outcome::kSkipped;
  std::optional<std::vector<EdgeCensus>> predicted;
  ExtremalReport observed;
};

struct VerificationReport {
  std::string index_name;
  int n_max = 0;
  ClassificationResult classification;
  std::vector<VerificationEntry> entries;  // by n, then m, then max before min

  std::size_t count(Outcome o) const;
  bool ok() const { return count(Outcome::kDisagree) == 0; }
};

/// Compares prediction and oracle for every chemical (n, m) with
/// 7 <= n <= n_max, both directions. Evaluations are spread over the catalog's
/// worker count; the report is the same for any count. Throws
/// std::invalid_argument unless 7 <= n_max <= kMaxEnumerationOrder.
VerificationReport verify_characterization(const IndexDefinition& f, int n_max, GraphCatalog& catalog,
                                           double eps = kDefaultEpsilon);

}  // namespace chemgraph

#endif  // CHEMGRAPH_CLASSIFIER_HPP_
