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

#ifndef CHEMGRAPH_SERIALIZE_HPP_
#define CHEMGRAPH_SERIALIZE_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "chemgraph/census.hpp"
#include "chemgraph/classifier.hpp"
#include "chemgraph/families.hpp"
#include "chemgraph/index.hpp"
#include "chemgraph/oracle.hpp"
#include "chemgraph/realize.hpp"

namespace chemgraph {

using Json = nlohmann::ordered_json;

/// Shortest decimal that reads back to the same double.
std::string format_real(double v);

/// Columns padded to the widest cell (UTF-8 aware), two spaces apart, no
/// trailing blanks. The first row is the header.
std::string aligned_table(const std::vector<std::vector<std::string>>& rows);

Json json_of(const EdgeCensus& x);  // [x12, x13, x22, x23, x33]
EdgeCensus census_from_json(const Json& j);

Json json_of(const IndexDefinition& f);  // {"name": ..., "c": [c12, c13, c22, c23, c33]}
/// Accepts the form above; a missing name becomes "custom". Throws
/// std::invalid_argument on anything else.
IndexDefinition index_from_json(const Json& j);

Json json_of(const VProfile& p);
Json json_of(const FamilyCensusSet& s);  // the census list only
Json json_of(const ExtremalReport& r);
Json json_of(const ClassificationResult& r);
Json json_of(const VerificationReport& r);
Json json_of(const RealizeResult& r, const EdgeCensus& requested);
Json json_of(const std::vector<AtlasRow>& rows);

std::string_view to_string(RealizeStatus s);

std::string csv_of(const FamilyCensusSet& s);
std::string csv_of(const std::vector<ExtremalReport>& reports);
std::string csv_of(const std::vector<AtlasRow>& rows);
std::string csv_of(const std::vector<IndexDefinition>& indices);

std::string text_of(const std::vector<IndexDefinition>& indices);
std::string text_of(const ExtremalReport& r);
std::string text_of(const std::vector<ClassificationResult>& results);
std::string text_of(const std::vector<VerificationReport>& reports);

}  // namespace chemgraph

#endif  // CHEMGRAPH_SERIALIZE_HPP_
