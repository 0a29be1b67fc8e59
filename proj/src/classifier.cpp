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

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "chemgraph/enumerate.hpp"

namespace chemgraph {
namespace {

Sign quantity_sign(const VProfile& p, Quantity q) {
  switch (q) {
    case Quantity::S2: return p.s2_sign;
    case Quantity::S4: return p.s4_sign;
    default: return p.v_sign[static_cast<int>(q)];
  }
}

std::vector<EdgeCensus> merged(const std::vector<FamilyId>& ids, int n, int m) {
  std::vector<EdgeCensus> out;
  for (FamilyId id : ids) {
    auto part = family_censuses(id, n, m).censuses;
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

}  // namespace

FamilyDescriptor FamilyDescriptor::special(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::kAZagrebMax: return {kind, {FamilyId::F8}};
    case DescriptorKind::kAZagrebMin: return {kind, {FamilyId::F10}};
    case DescriptorKind::kAlbertsonMax: return {kind, {FamilyId::F11}};
    case DescriptorKind::kAlbertsonMin: return {kind, {FamilyId::F12}};
    default: throw std::invalid_argument("not a special descriptor");
  }
}

std::string FamilyDescriptor::label() const {
  switch (kind) {
    case DescriptorKind::kAZagrebMax: return "aZagreb-max";
    case DescriptorKind::kAZagrebMin: return "aZagreb-min";
    case DescriptorKind::kAlbertsonMax: return "Albertson-max";
    case DescriptorKind::kAlbertsonMin: return "Albertson-min";
    case DescriptorKind::kUnclassified: return "unclassified";
    case DescriptorKind::kFamilies: break;
  }
  std::string out;
  for (FamilyId id : families) {
    if (!out.empty()) out += "∪";
    out += to_string(id);
  }
  return out;
}

std::string_view to_string(Quantity q) {
  static constexpr std::string_view kNames[] = {"V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", "s2", "s4"};
  return kNames[static_cast<int>(q)];
}

bool ClassificationRule::holds(const VProfile& p) const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const Condition& c) { return quantity_sign(p, c.quantity) == c.sign; });
}

const std::vector<ClassificationRule>& classification_rules() {
  using Q = Quantity;
  constexpr Sign kPos = Sign::kPositive;
  constexpr Sign kNeg = Sign::kNegative;
  constexpr Sign kZero = Sign::kZero;
  auto rule = [](std::vector<Condition> conds, std::vector<FamilyId> ids) {
    FamilyDescriptor d = FamilyDescriptor::of(std::move(ids));
    return ClassificationRule{d.label(), std::move(conds), d};
  };
  static const std::vector<ClassificationRule> kRules = {
      rule({{Q::V1, kPos}, {Q::V2, kPos}, {Q::V5, kPos}}, {FamilyId::F1}),
      rule({{Q::V3, kPos}, {Q::V4, kPos}, {Q::V6, kPos}}, {FamilyId::F2}),
      rule({{Q::V1, kPos}, {Q::V6, kPos}, {Q::V7, kPos}, {Q::V8, kPos}}, {FamilyId::F3}),
      rule({{Q::V3, kPos}, {Q::V4, kPos}, {Q::V6, kNeg}}, {FamilyId::F4}),
      rule({{Q::V1, kPos}, {Q::V5, kPos}, {Q::V7, kZero}}, {FamilyId::F1, FamilyId::F3}),
      rule({{Q::V3, kPos}, {Q::V4, kPos}, {Q::V6, kZero}}, {FamilyId::F5}),
      rule({{Q::V1, kPos}, {Q::V2, kPos}, {Q::V5, kZero}}, {FamilyId::F6}),
      rule({{Q::V3, kPos}, {Q::V6, kPos}, {Q::S2, kZero}}, {FamilyId::F7}),
      rule({{Q::V3, kPos}, {Q::V6, kPos}, {Q::S4, kZero}}, {FamilyId::F8}),
      rule({{Q::V1, kPos}, {Q::V2, kPos}, {Q::V5, kNeg}}, {FamilyId::F9}),
  };
  return kRules;
}

ClassificationResult classify(const IndexDefinition& f, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("epsilon must be positive");
  ClassificationResult result;
  result.index_name = f.name;
  result.max_profile = v_profile(f, eps);
  result.min_profile = v_profile(complement(f), eps);

  auto decide = [&](const VProfile& p, std::vector<std::string>& fired, std::string_view direction) {
    const ClassificationRule* only = nullptr;
    for (const ClassificationRule& r : classification_rules()) {
      if (r.holds(p)) {
        fired.push_back(r.name);
        only = &r;
      }
    }
    if (fired.size() == 1) return only->conclusion;
    if (fired.size() > 1) {
      result.conflicts.push_back(std::string(direction) + ": rules " + join(fired, ", ") + " all fire");
    }
    return FamilyDescriptor::unclassified();
  };
  result.max_family = decide(result.max_profile, result.fired_max, "max");
  result.min_family = decide(result.min_profile, result.fired_min, "min");

  struct Special {
    std::string_view name;
    DescriptorKind max;
    DescriptorKind min;
  };
  static constexpr Special kSpecials[] = {
      {"aZagreb", DescriptorKind::kAZagrebMax, DescriptorKind::kAZagrebMin},
      {"Albertson", DescriptorKind::kAlbertsonMax, DescriptorKind::kAlbertsonMin},
  };
  for (const Special& s : kSpecials) {
    const IndexDefinition ref = builtin(s.name);
    if (same_coefficients(f, ref, eps)) {
      result.max_family = FamilyDescriptor::special(s.max);
      result.min_family = FamilyDescriptor::special(s.min);
      result.special = s.name;
    } else if (same_coefficients(f, complement(ref), eps)) {
      result.max_family = FamilyDescriptor::special(s.min);
      result.min_family = FamilyDescriptor::special(s.max);
      result.special = std::string(s.name) + "-complement";
    }
  }
  if (!result.special.empty()) result.conflicts.clear();
  return result;
}

std::optional<std::vector<EdgeCensus>> predicted_censuses(const FamilyDescriptor& d, int n, int m) {
  if (!in_chemical_range(n, m)) {
    throw std::invalid_argument("(n, m) = (" + std::to_string(n) + ", " + std::to_string(m) +
                                ") is outside the chemical range");
  }
  switch (d.kind) {
    case DescriptorKind::kUnclassified: return std::nullopt;
    case DescriptorKind::kAZagrebMax:
      if (n == 7 && m == 8) return std::vector<EdgeCensus>{{1, 1, 0, 1, 5}};
      if (n == 8 && m == 8) return std::vector<EdgeCensus>{{2, 1, 0, 2, 3}};
      break;
    default: break;
  }
  return merged(d.families, n, m);
}

std::optional<std::vector<EdgeCensus>> predicted_censuses(const ClassificationResult& result, Direction direction,
                                                          int n, int m) {
  return predicted_censuses(direction == Direction::kMax ? result.max_family : result.min_family, n, m);
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::kAgree: return "agree";
    case Outcome::kDisagree: return "disagree";
    case Outcome::kSkipped: return "skipped";
  }
  return "?";
}

std::size_t VerificationReport::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [o](const VerificationEntry& e) { return e.outcome == o; }));
}

VerificationReport verify_characterization(const IndexDefinition& f, int n_max, GraphCatalog& catalog,
                                           double eps) {
  if (n_max < 7 || n_max > kMaxEnumerationOrder) {
    throw std::invalid_argument("n_max must be in [7, " + std::to_string(kMaxEnumerationOrder) + "]");
  }
  VerificationReport report;
  report.index_name = f.name;
  report.n_max = n_max;
  report.classification = classify(f, eps);

  for (int n = 7; n <= n_max; ++n) {
    catalog.graphs(n);  // enumerate up front; the workers below only read
    for (int m = static_cast<int>(min_chemical_size(n)); m <= max_chemical_size(n); ++m) {
      for (Direction d : {Direction::kMax, Direction::kMin}) {
        VerificationEntry e;
        e.n = n;
        e.m = m;
        e.direction = d;
        report.entries.push_back(std::move(e));
      }
    }
  }

  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor++; i < report.entries.size(); i = cursor++) {
      VerificationEntry& e = report.entries[i];
      e.observed = extremal_censuses(f, e.n, e.m, e.direction, catalog);
      e.predicted = predicted_censuses(report.classification, e.direction, e.n, e.m);
      if (!e.predicted) {
        e.outcome = Outcome::kSkipped;
      } else {
        e.outcome = *e.predicted == e.observed.optimal_censuses ? Outcome::kAgree : Outcome::kDisagree;
      }
    }
  };
  const int workers = std::max(1, catalog.workers());
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  return report;
}

}  // namespace chemgraph
