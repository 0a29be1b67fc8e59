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

#ifndef CHEMGRAPH_FAMILIES_HPP_
#define CHEMGRAPH_FAMILIES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chemgraph/census.hpp"
#include "chemgraph/graph.hpp"

namespace chemgraph {

/// The twelve extremal graph families. Each is defined purely by the edge
/// censuses it admits at a given order and size.
enum class FamilyId { F1 = 1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12 };

inline constexpr std::array<FamilyId, 12> kAllFamilies = {
    FamilyId::F1, FamilyId::F2, FamilyId::F3, FamilyId::F4,  FamilyId::F5,  FamilyId::F6,
    FamilyId::F7, FamilyId::F8, FamilyId::F9, FamilyId::F10, FamilyId::F11, FamilyId::F12};

std::string to_string(FamilyId id);

/// Accepts "F7" or "f7". nullopt on anything else.
std::optional<FamilyId> parse_family_id(std::string_view text);

struct FamilyCensusSet {
  FamilyId family = FamilyId::F1;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<EdgeCensus> censuses;  // sorted, unique
  std::string reason;                // why the set is empty, if it is
};

/// The admissible censuses of a family at order n and size m. Parameterised
/// rows are expanded over their whole range. Outside the chemical range the
/// set is empty and `reason` says why.
FamilyCensusSet family_censuses(FamilyId id, std::int64_t n, std::int64_t m);

/// x is in family_censuses(id, order_size(x)). Throws CensusError when x has
/// no integral vertex counts.
bool is_member(const EdgeCensus& x, FamilyId id);

}  // namespace chemgraph

#endif  // CHEMGRAPH_FAMILIES_HPP_
