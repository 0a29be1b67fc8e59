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

#include "chemgraph/cli.hpp"

#include <charconv>
#include <cstring>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "chemgraph/classifier.hpp"
#include "chemgraph/enumerate.hpp"
#include "chemgraph/graph6.hpp"
#include "chemgraph/oracle.hpp"
#include "chemgraph/realize.hpp"
#include "chemgraph/serialize.hpp"

namespace chemgraph::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string index;
  std::string coeffs;
  std::string index_file;
  bool all_builtins = false;
  bool extra = false;
  int n = 0;
  int m = 0;
  int n_min = 7;
  int n_max = 0;
  int order = 0;
  std::string id;
  std::vector<std::string> ids;
  std::string direction = "max";
  std::string format;
  int workers = 1;
  double epsilon = kDefaultEpsilon;
  std::int64_t budget = kDefaultRealizerBudget;
  std::string output;
  bool count = false;
  std::string census;
  std::string graph6;
};

// What a subcommand produced: text for the output stream, a diagnostic for
// the error stream, and an exit code.
struct CommandResult {
  CommandResult() = default;
  CommandResult(std::string t) : text(std::move(t)) {}  // NOLINT(google-explicit-constructor)

  std::string text;
  int status = kExitOk;
  std::string note;
};

std::optional<std::array<double, 5>> parse_coefficients(const std::string& text) {
  std::array<double, 5> c{};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t end = text.find(',', pos);
    if ((end == std::string::npos) != (i == 4)) return std::nullopt;
    std::string field = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    field.erase(0, field.find_first_not_of(' '));
    field.erase(field.find_last_not_of(' ') + 1);
    const char* first = field.data();
    const char* last = first + field.size();
    auto res = std::from_chars(first, last, c[i]);
    if (field.empty() || res.ec != std::errc() || res.ptr != last) return std::nullopt;
    pos = end + 1;
  }
  return c;
}

IndexDefinition resolve_index(const Options& o) {
  const int forms = !o.index.empty() + !o.coeffs.empty() + !o.index_file.empty();
  if (forms != 1) throw UsageError("give exactly one of --index, --coeffs, --index-file");
  if (!o.index.empty()) {
    if (auto f = find_builtin(o.index)) return *f;
    if (auto c = parse_coefficients(o.index)) return IndexDefinition::from_coefficients("custom", *c);
    builtin(o.index);  // throws with the list of names
  }
  if (!o.coeffs.empty()) {
    auto c = parse_coefficients(o.coeffs);
    if (!c) throw UsageError("--coeffs expects five comma-separated numbers c12,c13,c22,c23,c33");
    return IndexDefinition::from_coefficients("custom", *c);
  }
  std::ifstream in(o.index_file);
  if (!in) throw UsageError("cannot read " + o.index_file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(o.index_file + ": " + e.what());
  }
  return index_from_json(j);
}

std::vector<IndexDefinition> resolve_indices(const Options& o) {
  if (!o.all_builtins) return {resolve_index(o)};
  if (!o.index.empty() || !o.coeffs.empty() || !o.index_file.empty()) {
    throw UsageError("--all-builtins excludes the other index selectors");
  }
  std::vector<IndexDefinition> all = builtins();
  if (o.extra) all.insert(all.end(), extra_indices().begin(), extra_indices().end());
  return all;
}

FamilyId resolve_family(const std::string& text) {
  if (auto id = parse_family_id(text)) return *id;
  throw UsageError("unknown family '" + text + "'; expected F1..F12");
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CommandResult cmd_indices(const Options& o) {
  std::vector<IndexDefinition> all = builtins();
  if (o.extra) all.insert(all.end(), extra_indices().begin(), extra_indices().end());
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& f : all) arr.push_back(json_of(f));
    return {dump(arr)};
  }
  if (o.format == "csv") return {csv_of(all)};
  return {text_of(all)};
}

CommandResult cmd_eval(const Options& o) {
  const IndexDefinition f = resolve_index(o);
  if (o.census.empty() == o.graph6.empty()) throw UsageError("give exactly one of --census, --graph6");
  const EdgeCensus x = o.census.empty() ? edge_census(parse_graph6(o.graph6)) : parse_census(o.census);
  const double value = evaluate(f, x);
  if (o.format == "json") return {dump(Json{{"index", json_of(f)}, {"census", json_of(x)}, {"value", value}})};
  return {format_real(value) + "\n"};
}

CommandResult cmd_census(const Options& o) {
  if (o.census.empty() == o.graph6.empty()) throw UsageError("give exactly one of --census, --graph6");
  if (!o.graph6.empty()) {
    const Graph g = parse_graph6(o.graph6);
    const ChemicalCheck check = is_chemical_graph(g);
    std::optional<EdgeCensus> x;
    if (g.max_degree() <= 3) {
      try {
        x = edge_census(g);
      } catch (const std::invalid_argument&) {
        // a (1,1) edge has no census entry
      }
    }
    if (o.format == "json") {
      return {dump(Json{{"graph6", write_graph6(g)},
                        {"n", g.order()},
                        {"m", g.size()},
                        {"chemical", check.chemical},
                        {"reason", std::string(describe(check.reason))},
                        {"census", x ? json_of(*x) : Json(nullptr)}})};
    }
    return {aligned_table({{"graph6", write_graph6(g)},
                           {"n", std::to_string(g.order())},
                           {"m", std::to_string(g.size())},
                           {"chemical", check.chemical ? "yes" : "no (" + std::string(describe(check.reason)) + ")"},
                           {"census", x ? to_string(*x) : "-"}})};
  }

  const EdgeCensus x = parse_census(o.census);
  const RealizabilityReport rep = is_realizable(x);
  std::optional<VertexCounts> counts;
  try {
    counts = vertex_counts(x);
  } catch (const CensusError&) {
  }
  Json violated = Json::array();
  for (auto c : rep.violated) violated.push_back(std::string(describe(c)));
  if (o.format == "json") {
    Json j{{"census", json_of(x)}};
    if (counts) {
      j["n"] = counts->order();
      j["m"] = x.size();
      j["vertices"] = Json::array({counts->n1, counts->n2, counts->n3});
    }
    j["realizable"] = rep.realizable;
    j["violated"] = violated;
    return {dump(j)};
  }
  std::vector<std::vector<std::string>> rows = {{"census", to_string(x)}};
  if (counts) {
    rows.push_back({"n", std::to_string(counts->order())});
    rows.push_back({"m", std::to_string(x.size())});
    rows.push_back({"vertices", "n1=" + std::to_string(counts->n1) + " n2=" + std::to_string(counts->n2) +
                                    " n3=" + std::to_string(counts->n3)});
  }
  rows.push_back({"realizable", yes_no(rep.realizable)});
  for (auto c : rep.violated) rows.push_back({"violated", std::string(describe(c))});
  return {aligned_table(rows)};
}

CommandResult cmd_enumerate(const Options& o) {
  std::vector<Graph> graphs = enumerate_connected_maxdeg3(o.order, EnumerateOptions{.workers = o.workers});
  if (o.count) {
    if (o.format == "json") return {dump(Json{{"order", o.order}, {"count", graphs.size()}})};
    return {std::to_string(graphs.size()) + "\n"};
  }
  if (o.format == "json") {
    Json arr = Json::array();
    for (const Graph& g : graphs) arr.push_back(write_graph6(g));
    return {dump(arr)};
  }
  std::string text;
  for (const Graph& g : graphs) text += write_graph6(g) + "\n";
  return {text};
}

Direction resolve_direction(const std::string& text) {
  if (auto d = parse_direction(text)) return *d;
  throw UsageError("direction must be max or min");
}

CommandResult cmd_extremal(const Options& o) {
  const IndexDefinition f = resolve_index(o);
  GraphCatalog catalog(o.workers);
  const ExtremalReport r = extremal_censuses(f, o.n, o.m, resolve_direction(o.direction), catalog);
  if (o.format == "json") return {dump(json_of(r))};
  if (o.format == "csv") return {csv_of(std::vector<ExtremalReport>{r})};
  return {text_of(r)};
}

CommandResult cmd_classify(const Options& o) {
  std::vector<ClassificationResult> results;
  for (const auto& f : resolve_indices(o)) results.push_back(classify(f, o.epsilon));
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(json_of(r));
    return {dump(o.all_builtins ? arr : arr[0])};
  }
  return {text_of(results)};
}

CommandResult cmd_family(const Options& o) {
  const FamilyCensusSet s = family_censuses(resolve_family(o.id), o.n, o.m);
  if (o.format == "json") return {dump(json_of(s))};
  if (o.format == "csv") return {csv_of(s)};
  std::string text;
  for (const auto& x : s.censuses) text += to_string(x) + "\n";
  if (s.censuses.empty() && !s.reason.empty()) text += "# " + s.reason + "\n";
  return {text};
}

CommandResult cmd_construct(const Options& o) {
  RealizeOptions ropts;
  ropts.node_budget = o.budget;
  const FamilyId id = resolve_family(o.id);
  if (!in_chemical_range(o.n, o.m)) {
    throw UsageError("(n, m) must satisfy n >= 7 and n-1 <= m <= (3n-3)/2");
  }
  std::vector<AtlasRow> rows;
  for (FamilyWitness& w : construct_family_graphs(id, o.n, o.m, ropts)) rows.push_back({id, o.n, o.m, std::move(w)});
  CommandResult result;
  for (const auto& row : rows) {
    if (row.witness.graph) continue;
    result.status = kExitFailure;
    result.note += "no witness for " + to_string(row.witness.census) + " (" +
                   std::string(to_string(row.witness.status)) + ")\n";
  }
  if (rows.empty()) result.note = family_censuses(id, o.n, o.m).reason;
  if (o.format == "json") {
    result.text = dump(json_of(rows));
  } else if (o.format == "csv") {
    result.text = csv_of(rows);
  } else {
    for (const auto& row : rows) {
      if (row.witness.graph) result.text += write_graph6(*row.witness.graph) + "\n";
    }
  }
  return result;
}

CommandResult cmd_realize(const Options& o) {
  const EdgeCensus x = parse_census(o.census);
  RealizeOptions ropts;
  ropts.node_budget = o.budget;
  const RealizeResult r = realize_census(x, ropts);
  CommandResult result;
  result.status = r.status == RealizeStatus::kFound ? kExitOk : kExitFailure;
  if (r.status == RealizeStatus::kNone) result.note = "no chemical graph has census " + to_string(x);
  if (r.status == RealizeStatus::kBudgetExceeded) {
    result.note = "search budget of " + std::to_string(o.budget) + " nodes exhausted for " + to_string(x);
  }
  if (o.format == "json") {
    result.text = dump(json_of(r, x));
  } else if (r.graph) {
    result.text = write_graph6(*r.graph) + "\n";
  }
  return result;
}

CommandResult cmd_verify(const Options& o) {
  GraphCatalog catalog(o.workers);
  std::vector<VerificationReport> reports;
  for (const auto& f : resolve_indices(o)) {
    reports.push_back(verify_characterization(f, o.n_max, catalog, o.epsilon));
  }
  CommandResult result;
  for (const auto& r : reports) {
    if (r.ok()) continue;
    result.status = kExitFailure;
    result.note += r.index_name + ": " + std::to_string(r.count(chemgraph::Outcome::kDisagree)) + " disagreements\n";
  }
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(json_of(r));
    result.text = dump(o.all_builtins ? arr : arr[0]);
  } else {
    result.text = text_of(reports);
  }
  return result;
}

CommandResult cmd_atlas(const Options& o) {
  std::vector<FamilyId> ids;
  for (const auto& s : o.ids) ids.push_back(resolve_family(s));
  if (ids.empty()) ids.assign(kAllFamilies.begin(), kAllFamilies.end());
  if (o.n_max < 7 || o.n_max > Graph::kMaxOrder) throw UsageError("--n-max must be in [7, 64]");
  RealizeOptions ropts;
  ropts.node_budget = o.budget;
  const std::vector<AtlasRow> rows = family_atlas(ids, o.n_min, o.n_max, ropts);
  CommandResult result;
  for (const auto& row : rows) {
    if (row.witness.graph) continue;
    result.status = kExitFailure;
    result.note += "no witness for " + to_string(row.family) + " " + to_string(row.witness.census) + "\n";
  }
  result.text = o.format == "json" ? dump(json_of(rows)) : csv_of(rows);
  return result;
}

void add_index_options(CLI::App* sub, Options& o) {
  sub->add_option("--index", o.index, "built-in index name, or c12,c13,c22,c23,c33");
  sub->add_option("--coeffs", o.coeffs, "custom coefficients c12,c13,c22,c23,c33");
  sub->add_option("--index-file", o.index_file, "JSON file {\"name\": ..., \"c\": [5 numbers]}");
}

void add_format(CLI::App* sub, Options& o, std::vector<std::string> allowed) {
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
}

}  // namespace

int default_workers() {
  if (const char* env = std::getenv("CHEMGRAPH_WORKERS")) {
    int v = 0;
    auto res = std::from_chars(env, env + std::strlen(env), v);
    if (res.ec == std::errc() && *res.ptr == '\0' && v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal chemical graphs for degree-based indices", "chemgraph"};
  app.require_subcommand(1);
  Options o;
  o.workers = default_workers();

  std::map<CLI::App*, std::function<CommandResult(const Options&)>> handlers;
  std::map<CLI::App*, std::vector<std::string>> formats;
  auto sub = [&](const char* name, const char* help, std::vector<std::string> fmts,
                 std::function<CommandResult(const Options&)> fn) {
    CLI::App* s = app.add_subcommand(name, help);
    add_format(s, o, fmts);
    formats[s] = std::move(fmts);
    s->add_option("--output", o.output, "write results to this file");
    handlers[s] = std::move(fn);
    return s;
  };

  auto* indices = sub("indices", "list the built-in indices", {"text", "json", "csv"}, cmd_indices);
  indices->add_flag("--extra", o.extra, "include indices outside the main table");

  auto* eval = sub("eval", "evaluate an index on a census or graph", {"text", "json"}, cmd_eval);
  add_index_options(eval, o);
  eval->add_option("--census", o.census, "x12,x13,x22,x23,x33");
  eval->add_option("--graph6", o.graph6, "graph in graph6");

  auto* census = sub("census", "census of a graph, or realizability of a census", {"text", "json"}, cmd_census);
  census->add_option("--census", o.census, "x12,x13,x22,x23,x33");
  census->add_option("--graph6", o.graph6, "graph in graph6");

  auto* enumerate = sub("enumerate", "connected graphs with maximum degree 3", {"graph6", "json"}, cmd_enumerate);
  enumerate->add_option("--order", o.order, "number of vertices")->required()->check(
      CLI::Range(1, kMaxEnumerationOrder));
  enumerate->add_flag("--count", o.count, "print only the number of graphs");
  enumerate->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);

  auto* extremal = sub("extremal", "extremal censuses by exhaustive search", {"text", "json", "csv"}, cmd_extremal);
  add_index_options(extremal, o);
  extremal->add_option("--n", o.n, "order")->required();
  extremal->add_option("--m", o.m, "size")->required();
  extremal->add_option("--direction", o.direction, "max or min")->check(CLI::IsMember({"max", "min"}));
  extremal->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);

  auto* classify_cmd = sub("classify", "predicted extremal families", {"text", "json"}, cmd_classify);
  add_index_options(classify_cmd, o);
  classify_cmd->add_flag("--all-builtins", o.all_builtins, "classify every built-in index");
  classify_cmd->add_flag("--extra", o.extra, "with --all-builtins, include the extra indices");
  classify_cmd->add_option("--epsilon", o.epsilon, "zero tolerance for V-values")->check(CLI::PositiveNumber);

  auto* family = sub("family", "censuses of a family at (n, m)", {"text", "json", "csv"}, cmd_family);
  family->add_option("--id", o.id, "F1..F12")->required();
  family->add_option("--n", o.n, "order")->required();
  family->add_option("--m", o.m, "size")->required();

  auto* construct = sub("construct", "witness graphs for a family at (n, m)", {"graph6", "json", "csv"},
                        cmd_construct);
  construct->add_option("--id", o.id, "F1..F12")->required();
  construct->add_option("--n", o.n, "order")->required();
  construct->add_option("--m", o.m, "size")->required();
  construct->add_option("--budget", o.budget, "realizer node budget")->check(CLI::PositiveNumber);

  auto* realize = sub("realize", "a chemical graph with the given census", {"graph6", "json"}, cmd_realize);
  realize->add_option("--census", o.census, "x12,x13,x22,x23,x33")->required();
  realize->add_option("--budget", o.budget, "realizer node budget")->check(CLI::PositiveNumber);

  auto* verify = sub("verify", "compare predictions with exhaustive search", {"text", "json"}, cmd_verify);
  add_index_options(verify, o);
  verify->add_flag("--all-builtins", o.all_builtins, "verify every built-in index");
  verify->add_flag("--extra", o.extra, "with --all-builtins, include the extra indices");
  verify->add_option("--n-max", o.n_max, "largest order")->required()->check(CLI::Range(7, kMaxEnumerationOrder));
  verify->add_option("--workers", o.workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--epsilon", o.epsilon, "zero tolerance for V-values")->check(CLI::PositiveNumber);

  auto* atlas = sub("atlas", "every family census with a witness", {"csv", "json"}, cmd_atlas);
  atlas->add_option("--id", o.ids, "families to include (default all)");
  atlas->add_option("--n-min", o.n_min, "smallest order")->check(CLI::Range(7, 64));
  atlas->add_option("--n-max", o.n_max, "largest order")->required();
  atlas->add_option("--budget", o.budget, "realizer node budget")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen->count("--format") == 0) o.format = formats.at(chosen).front();
  CommandResult result;
  try {
    result = handlers.at(chosen)(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (!result.note.empty()) {
    err << result.note;
    if (result.note.back() != '\n') err << "\n";
  }
  if (!o.output.empty()) {
    std::ofstream file(o.output, std::ios::binary);
    file << result.text;
    if (!file) {
      err << "error: cannot write " << o.output << "\n";
      return kExitFailure;
    }
  } else {
    out << result.text;
  }
  return result.status;
}

}  // namespace chemgraph::cli
