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

#include "chemgraph/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "chemgraph/graph6.hpp"

namespace chemgraph {
namespace {

std::size_t display_width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string census_csv(const EdgeCensus& x) {
  std::string out;
  for (std::int64_t v : x.to_array()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string census_list(const std::vector<EdgeCensus>& xs) {
  std::string out = "{";
  for (const auto& x : xs) {
    if (out.size() > 1) out += ", ";
    out += to_string(x);
  }
  return out + "}";
}

// Quotes a CSV field when it needs it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json sign_json(Sign s) { return std::string(to_string(s)); }

Json census_array(const std::vector<EdgeCensus>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(json_of(x));
  return arr;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - display_width(row[i]) + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

Json json_of(const EdgeCensus& x) {
  Json arr = Json::array();
  for (std::int64_t v : x.to_array()) arr.push_back(v);
  return arr;
}

EdgeCensus census_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 5) throw std::invalid_argument("census must be an array of 5 integers");
  std::array<std::int64_t, 5> a{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (!j[i].is_number_integer()) throw std::invalid_argument("census must be an array of 5 integers");
    a[i] = j[i].get<std::int64_t>();
  }
  return EdgeCensus::from_array(a);
}

Json json_of(const IndexDefinition& f) {
  Json c = Json::array();
  for (double v : f.coefficients()) c.push_back(v);
  return Json{{"name", f.name}, {"c", c}};
}

IndexDefinition index_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c") || !j["c"].is_array() || j["c"].size() != 5) {
    throw std::invalid_argument(R"(index JSON must look like {"name": "...", "c": [c12, c13, c22, c23, c33]})");
  }
  std::array<double, 5> c{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (!j["c"][i].is_number()) throw std::invalid_argument("index coefficients must be numbers");
    c[i] = j["c"][i].get<double>();
  }
  std::string name = "custom";
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw std::invalid_argument("index name must be a string");
    name = j["name"].get<std::string>();
  }
  return IndexDefinition::from_coefficients(std::move(name), c);
}

Json json_of(const VProfile& p) {
  Json v = Json::array();
  Json signs = Json::array();
  for (int k = 0; k < 8; ++k) {
    v.push_back(p.v[k]);
    signs.push_back(sign_json(p.v_sign[k]));
  }
  return Json{{"v", v},           {"v_sign", signs},          {"s2", p.s2},
              {"s2_sign", sign_json(p.s2_sign)}, {"s4", p.s4}, {"s4_sign", sign_json(p.s4_sign)},
              {"epsilon", p.epsilon}};
}

Json json_of(const FamilyCensusSet& s) { return census_array(s.censuses); }

Json json_of(const ExtremalReport& r) {
  return Json{{"index", r.index_name},
              {"n", r.n},
              {"m", r.m},
              {"direction", std::string(to_string(r.direction))},
              {"optimum", r.optimum},
              {"optimal_censuses", census_array(r.optimal_censuses)},
              {"witnesses", r.witnesses},
              {"graph_count", r.graph_count}};
}

Json json_of(const ClassificationResult& r) {
  return Json{{"index", r.index_name},
              {"max_family", r.max_family.label()},
              {"min_family", r.min_family.label()},
              {"fired_max", r.fired_max},
              {"fired_min", r.fired_min},
              {"conflicts", r.conflicts},
              {"special", r.special.empty() ? Json(nullptr) : Json(r.special)},
              {"max_profile", json_of(r.max_profile)},
              {"min_profile", json_of(r.min_profile)}};
}

Json json_of(const VerificationReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"n", e.n},
                           {"m", e.m},
                           {"direction", std::string(to_string(e.direction))},
                           {"outcome", std::string(to_string(e.outcome))},
                           {"predicted", e.predicted ? census_array(*e.predicted) : Json(nullptr)},
                           {"observed", census_array(e.observed.optimal_censuses)},
                           {"optimum", e.observed.optimum},
                           {"graph_count", e.observed.graph_count}});
  }
  return Json{{"index", r.index_name},
              {"n_max", r.n_max},
              {"max_family", r.classification.max_family.label()},
              {"min_family", r.classification.min_family.label()},
              {"agree", r.count(Outcome::kAgree)},
              {"disagree", r.count(Outcome::kDisagree)},
              {"skipped", r.count(Outcome::kSkipped)},
              {"entries", entries}};
}

std::string_view to_string(RealizeStatus s) {
  switch (s) {
    case RealizeStatus::kFound: return "found";
    case RealizeStatus::kNone: return "none";
    case RealizeStatus::kBudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

Json json_of(const RealizeResult& r, const EdgeCensus& requested) {
  return Json{{"census", json_of(requested)},
              {"status", std::string(to_string(r.status))},
              {"graph6", r.graph ? Json(write_graph6(*r.graph)) : Json(nullptr)},
              {"nodes", r.nodes}};
}

Json json_of(const std::vector<AtlasRow>& rows) {
  Json arr = Json::array();
  for (const auto& row : rows) {
    const auto& w = row.witness;
    arr.push_back(Json{{"family", to_string(row.family)},
                       {"n", row.n},
                       {"m", row.m},
                       {"census", json_of(w.census)},
                       {"status", std::string(to_string(w.status))},
                       {"witness_graph6", w.graph ? Json(write_graph6(*w.graph)) : Json(nullptr)},
                       {"explicit_construction", w.explicit_construction}});
  }
  return arr;
}

std::string csv_of(const FamilyCensusSet& s) {
  std::string out = "family,n,m,x12,x13,x22,x23,x33\n";
  for (const auto& x : s.censuses) {
    out += to_string(s.family) + "," + std::to_string(s.n) + "," + std::to_string(s.m) + "," + census_csv(x) + "\n";
  }
  return out;
}

std::string csv_of(const std::vector<ExtremalReport>& reports) {
  std::string out = "index,n,m,direction,optimum,x12,x13,x22,x23,x33,witness_graph6,graph_count\n";
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.optimal_censuses.size(); ++i) {
      out += csv_field(r.index_name) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
             std::string(to_string(r.direction)) + "," + format_real(r.optimum) + "," +
             census_csv(r.optimal_censuses[i]) + "," + csv_field(r.witnesses[i]) + "," +
             std::to_string(r.graph_count) + "\n";
    }
  }
  return out;
}

std::string csv_of(const std::vector<AtlasRow>& rows) {
  std::string out = "family,n,m,x12,x13,x22,x23,x33,witness_graph6\n";
  for (const auto& row : rows) {
    const auto& w = row.witness;
    out += to_string(row.family) + "," + std::to_string(row.n) + "," + std::to_string(row.m) + "," +
           census_csv(w.census) + "," + (w.graph ? csv_field(write_graph6(*w.graph)) : "") + "\n";
  }
  return out;
}

std::string csv_of(const std::vector<IndexDefinition>& indices) {
  std::string out = "name,c12,c13,c22,c23,c33\n";
  for (const auto& f : indices) {
    out += csv_field(f.name);
    for (double c : f.coefficients()) out += "," + format_real(c);
    out += "\n";
  }
  return out;
}

std::string text_of(const std::vector<IndexDefinition>& indices) {
  std::vector<std::vector<std::string>> rows = {{"name", "c12", "c13", "c22", "c23", "c33"}};
  for (const auto& f : indices) {
    std::vector<std::string> row = {f.name};
    for (double c : f.coefficients()) row.push_back(format_real(c));
    rows.push_back(std::move(row));
  }
  return aligned_table(rows);
}

std::string text_of(const ExtremalReport& r) {
  std::string out = aligned_table({{"index", r.index_name},
                                   {"n", std::to_string(r.n)},
                                   {"m", std::to_string(r.m)},
                                   {"direction", std::string(to_string(r.direction))},
                                   {"optimum", format_real(r.optimum)},
                                   {"graphs", std::to_string(r.graph_count)}});
  std::vector<std::vector<std::string>> rows = {{"census", "witness"}};
  for (std::size_t i = 0; i < r.optimal_censuses.size(); ++i) {
    rows.push_back({to_string(r.optimal_censuses[i]), r.witnesses[i]});
  }
  return out + "\n" + aligned_table(rows);
}

std::string text_of(const std::vector<ClassificationResult>& results) {
  std::vector<std::vector<std::string>> rows = {{"index", "max", "min", "rules max", "rules min"}};
  std::string notes;
  auto names = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s.empty() ? std::string("-") : s;
  };
  for (const auto& r : results) {
    rows.push_back({r.index_name, r.max_family.label(), r.min_family.label(), names(r.fired_max),
                    names(r.fired_min)});
    for (const auto& c : r.conflicts) notes += "conflict in " + r.index_name + ": " + c + "\n";
  }
  return aligned_table(rows) + notes;
}

std::string text_of(const std::vector<VerificationReport>& reports) {
  std::vector<std::vector<std::string>> rows = {{"index", "max", "min", "agree", "disagree", "skipped"}};
  std::string notes;
  for (const auto& r : reports) {
    rows.push_back({r.index_name, r.classification.max_family.label(), r.classification.min_family.label(),
                    std::to_string(r.count(Outcome::kAgree)), std::to_string(r.count(Outcome::kDisagree)),
                    std::to_string(r.count(Outcome::kSkipped))});
    for (const auto& e : r.entries) {
      if (e.outcome != Outcome::kDisagree) continue;
      notes += r.index_name + " (" + std::to_string(e.n) + ", " + std::to_string(e.m) + ") " +
               std::string(to_string(e.direction)) + ": predicted " + census_list(*e.predicted) + ", observed " +
               census_list(e.observed.optimal_censuses) + "\n";
    }
  }
  return aligned_table(rows) + notes;
}

}  // namespace chemgraph
