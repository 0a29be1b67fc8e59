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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace chemgraph {
namespace {

constexpr std::string_view kComplementSuffix = "-complement";

using Weight = std::function<double(double, double)>;

IndexDefinition from_formula(std::string name, const Weight& w) {
  return IndexDefinition::from_coefficients(
      std::move(name), {w(1, 2), w(1, 3), w(2, 2), w(2, 3), w(3, 3)});
}

std::vector<IndexDefinition> make_builtins() {
  using std::log;
  using std::sqrt;
  std::vector<IndexDefinition> out;
  out.push_back(from_formula("ABC", [](double i, double j) { return sqrt((i + j - 2) / (i * j)); }));
  out.push_back(from_formula("ABSC", [](double i, double j) { return sqrt((i + j - 2) / (i + j)); }));
  out.push_back(from_formula("Albertson", [](double i, double j) { return std::abs(i - j); }));
  out.push_back(from_formula("AG", [](double i, double j) { return (i + j) / (2 * sqrt(i * j)); }));
  out.push_back(from_formula("AG-GA", [](double i, double j) {
    return (i + j) / (2 * sqrt(i * j)) - 2 * sqrt(i * j) / (i + j);
  }));
  out.push_back(from_formula("Extended", [](double i, double j) { return (i / j + j / i) / 2; }));
  out.push_back(from_formula("Forgotten", [](double i, double j) { return i * i + j * j; }));
  out.push_back(from_formula("GA", [](double i, double j) { return 2 * sqrt(i * j) / (i + j); }));
  out.push_back(from_formula("Gourava1", [](double i, double j) { return i + j + i * j; }));
  out.push_back(from_formula("Gourava2", [](double i, double j) { return (i + j) * i * j; }));
  out.push_back(from_formula("hGourava1", [](double i, double j) {
    const double t = i + j + i * j;
    return t * t;
  }));
  out.push_back(from_formula("hGourava2", [](double i, double j) {
    const double t = (i + j) * i * j;
    return t * t;
  }));
  out.push_back(from_formula("GouravaSC", [](double i, double j) { return 1 / sqrt(i + j + i * j); }));
  out.push_back(from_formula("GouravaPC", [](double i, double j) { return sqrt(i * j * (i + j)); }));
  out.push_back(from_formula("Harmonic", [](double i, double j) { return 2 / (i + j); }));
  out.push_back(from_formula("InvDeg", [](double i, double j) { return 1 / (i * i) + 1 / (j * j); }));
  out.push_back(from_formula("InvSumDeg", [](double i, double j) { return i * j / (i + j); }));
  out.push_back(from_formula("Randić", [](double i, double j) { return 1 / sqrt(i * j); }));
  out.push_back(from_formula("rRandić", [](double i, double j) { return sqrt(i * j); }));
  out.push_back(from_formula("Sigma", [](double i, double j) { return (i - j) * (i - j); }));
  out.push_back(from_formula("Sombor", [](double i, double j) { return sqrt(i * i + j * j); }));
  out.push_back(from_formula("rSombor", [](double i, double j) {
    return sqrt((i - 1) * (i - 1) + (j - 1) * (j - 1));
  }));
  out.push_back(from_formula("SumConn", [](double i, double j) { return 1 / sqrt(i + j); }));
  out.push_back(from_formula("rSumConn", [](double i, double j) { return sqrt(i + j); }));
  out.push_back(from_formula("Zagreb1", [](double i, double j) { return i + j; }));
  out.push_back(from_formula("Zagreb2", [](double i, double j) { return i * j; }));
  out.push_back(from_formula("aZagreb", [](double i, double j) {
    const double t = i * j / (i + j - 2);
    return t * t * t;
  }));
  out.push_back(from_formula("hZagreb1", [](double i, double j) { return (i + j) * (i + j); }));
  out.push_back(from_formula("hZagreb2", [](double i, double j) { return (i * j) * (i * j); }));
  out.push_back(from_formula("lnZagreb1", [](double i, double j) { return log(i + j); }));
  out.push_back(from_formula("lnZagreb2", [](double i, double j) { return 2 * (log(i) / i + log(j) / j); }));
  out.push_back(from_formula("lnZagreb3", [](double i, double j) { return log(i) + log(j); }));
  out.push_back(from_formula("mZagreb", [](double i, double j) {
    return 1 / (i * i * i) + 1 / (j * j * j);
  }));
  return out;
}

// Lower-case ASCII, with c-acute folded to c.
std::string fold(std::string_view name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const auto ch = static_cast<unsigned char>(name[i]);
    if (ch == 0xC4 && i + 1 < name.size() &&
        (static_cast<unsigned char>(name[i + 1]) == 0x86 ||
         static_cast<unsigned char>(name[i + 1]) == 0x87)) {
      out.push_back('c');
      ++i;
      continue;
    }
    out.push_back(ch < 0x80 ? static_cast<char>(std::tolower(ch)) : static_cast<char>(ch));
  }
  return out;
}

// min over the listed partner degrees of (c(a, p) - c(b, p)).
double min_difference(const IndexDefinition& f, int a, int b, std::initializer_list<int> partners) {
  double best = INFINITY;
  for (int p : partners) best = std::min(best, f.c(a, p) - f.c(b, p));
  return best;
}

}  // namespace

double IndexDefinition::c(int i, int j) const {
  if (i > j) std::swap(i, j);
  switch (i * 4 + j) {
    case 1 * 4 + 2: return c12;
    case 1 * 4 + 3: return c13;
    case 2 * 4 + 2: return c22;
    case 2 * 4 + 3: return c23;
    case 3 * 4 + 3: return c33;
    default: throw std::invalid_argument("no coefficient for degree pair");
  }
}

IndexDefinition IndexDefinition::from_coefficients(std::string name, const std::array<double, 5>& c) {
  for (double v : c) {
    if (!std::isfinite(v)) throw std::invalid_argument("index '" + name + "' has a non-finite coefficient");
  }
  return {std::move(name), c[0], c[1], c[2], c[3], c[4]};
}

const std::vector<IndexDefinition>& builtins() {
  static const std::vector<IndexDefinition> table = make_builtins();
  return table;
}

const std::vector<IndexDefinition>& extra_indices() {
  static const std::vector<IndexDefinition> table = {
      from_formula("rrRandić", [](double i, double j) { return std::sqrt((i - 1) * (j - 1)); }),
  };
  return table;
}

std::optional<IndexDefinition> find_builtin(std::string_view name) {
  const std::string key = fold(name);
  for (const auto* table : {&builtins(), &extra_indices()}) {
    for (const auto& f : *table) {
      if (fold(f.name) == key) return f;
    }
  }
  return std::nullopt;
}

IndexDefinition builtin(std::string_view name) {
  if (auto f = find_builtin(name)) return *f;
  std::string known;
  for (const auto* table : {&builtins(), &extra_indices()}) {
    for (const auto& f : *table) known += (known.empty() ? "" : ", ") + f.name;
  }
  throw std::invalid_argument("unknown index '" + std::string(name) + "'; available: " + known);
}

double evaluate(const IndexDefinition& f, const EdgeCensus& x) {
  return f.c12 * static_cast<double>(x.x12) + f.c13 * static_cast<double>(x.x13) +
         f.c22 * static_cast<double>(x.x22) + f.c23 * static_cast<double>(x.x23) +
         f.c33 * static_cast<double>(x.x33);
}

IndexDefinition complement(const IndexDefinition& f) {
  std::string name = f.name;
  if (name.ends_with(kComplementSuffix)) {
    name.resize(name.size() - kComplementSuffix.size());
  } else {
    name += kComplementSuffix;
  }
  return {std::move(name), -f.c12, -f.c13, -f.c22, -f.c23, -f.c33};
}

bool same_coefficients(const IndexDefinition& a, const IndexDefinition& b, double eps) {
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  for (std::size_t k = 0; k < ca.size(); ++k) {
    if (std::abs(ca[k] - cb[k]) >= eps) return false;
  }
  return true;
}

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::kNegative: return "-";
    case Sign::kZero: return "0";
    case Sign::kPositive: return "+";
  }
  return "?";
}

Sign sign_of(double value, double eps) {
  if (std::abs(value) < eps) return Sign::kZero;
  return value > 0 ? Sign::kPositive : Sign::kNegative;
}

VProfile v_profile(const IndexDefinition& f, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("epsilon must be positive");
  VProfile p;
  p.epsilon = eps;
  auto& v = p.v;
  v[0] = f.c13 - f.c22 + min_difference(f, 3, 2, {1, 2, 3}) + min_difference(f, 3, 2, {2, 3});
  v[1] = f.c13 - f.c12 + min_difference(f, 2, 3, {2, 3});
  v[2] = f.c22 - f.c13 + min_difference(f, 2, 3, {1, 2, 3}) + min_difference(f, 2, 3, {2, 3});
  v[3] = 2 * f.c22 - f.c12 - f.c23 + 2 * min_difference(f, 2, 3, {1, 2, 3});
  v[4] = f.c13 - 4 * f.c23 + 3 * f.c33;
  v[5] = f.c22 - 2 * f.c23 + f.c33;
  v[6] = f.c12 - f.c13 - f.c23 + f.c33;
  v[7] = -2 * f.c12 + 3 * f.c13 - 2 * f.c23 + f.c33;
  p.s2 = v[4] + v[6] - 2 * v[5];
  p.s4 = v[4] + v[6] - 4 * v[5];
  for (std::size_t k = 0; k < v.size(); ++k) p.v_sign[k] = sign_of(v[k], eps);
  p.s2_sign = sign_of(p.s2, eps);
  p.s4_sign = sign_of(p.s4, eps);
  return p;
}

}  // namespace chemgraph
