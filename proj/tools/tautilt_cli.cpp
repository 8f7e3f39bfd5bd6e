// Command-line driver: parse quiver DSL files or Dynkin specs, build the
// algebras, count tilting modules along the available routes, enumerate
// exchange quivers, and verify the explicit module lists. Reports are JSON
// on stdout; DOT export for exchange quivers; machine-readable errors on
// stderr. Exit codes: 0 success, 1 verification mismatch, 2 input/parse
// error, 3 budget or field error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tautilt/counting.hpp"
#include "tautilt/dsl.hpp"

using nlohmann::json;
using namespace tautilt;

namespace {

struct CommonOpts {
  uint32_t field = 32003;
  bool field_set = false;
  long long budget = 1000000;
  int threads = 1;
  std::string out;
  std::string labels = "gvec";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--field", o.field, "prime field characteristic")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { o.field_set = true; });
  cmd->add_option("--budget", o.budget, "node budget for enumerations")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", o.threads, "worker threads for the search")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "write the JSON report to this path instead of stdout");
}

void write_output(const CommonOpts& o, const json& j) {
  std::string s = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << s;
  } else {
    std::ofstream f(o.out);
    if (!f) throw ParseError("cannot open output path " + o.out);
    f << s;
  }
}

DynkinSpec spec_from(const std::string& series, int rank) {
  if (series.size() != 1) throw ParseError("series must be one of A, D, E");
  DynkinSpec s{series[0], rank};
  s.validate();
  return s;
}

std::string profile_label(const STTPair& p) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < p.summands.size(); ++i) {
    if (i) os << " | ";
    auto prof = dim_profile(p.summands[i]);
    bool first = true;
    for (const auto& [v, d] : prof) {
      if (!first) os << " ";
      first = false;
      os << v;
      if (d > 1) os << "^" << d;
    }
  }
  os << "] k{";
  bool first = true;
  for (int v : p.killed) {
    if (!first) os << ",";
    first = false;
    os << v;
  }
  os << "}";
  return os.str();
}

void write_dot(const ExchangeQuiver& q, const std::string& path, const std::string& labels) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open DOT output path " + path);
  std::map<std::string, int> id;
  int n = 0;
  for (const auto& [key, node] : q.nodes) id[key] = n++;
  f << "digraph stt {\n  rankdir=TB;\n";
  for (const auto& [key, node] : q.nodes) {
    std::string label = labels == "dims" ? profile_label(node) : key;
    for (char& c : label)
      if (c == '"') c = '\'';
    f << "  n" << id[key] << " [label=\"" << label << "\"];\n";
  }
  for (const EQEdge& e : q.edges)
    f << "  n" << id[e.src] << " -> n" << id[e.tgt] << " [label=\"" << e.position << "\"];\n";
  f << "}\n";
}

json report_json(const CountReport& r, uint32_t p) {
  return json{{"input", r.input},     {"route", r.route}, {"count", r.count},
              {"nodes", r.nodes},     {"edges", r.edges}, {"p", p},
              {"elapsed_ms", r.elapsed_ms}};
}

int run_count(const std::string& series, int rank, const std::string& route, CommonOpts& o) {
  DynkinSpec spec = spec_from(series, rank);
  std::vector<CountReport> reports;
  if (route == "formula" || route == "all") {
    CountReport r;
    r.input = spec.name();
    r.route = "closed_formula";
    r.count = closed_formula(spec);
    reports.push_back(r);
  }
  if (route == "bijection" || route == "all")
    reports.push_back(count_tilting_via_bijection(spec, o.field, o.budget, o.threads));
  if (route == "direct" || (route == "all" && spec.series == 'A' && spec.rank <= 3)) {
    CountReport r = count_tilting_direct(auslander_presentation(spec, o.field), o.budget, o.threads);
    r.input = spec.name();
    reports.push_back(r);
  }
  if (reports.empty()) throw ParseError("unknown route " + route);

  bool agree = true;
  for (const CountReport& r : reports) agree = agree && r.count == reports[0].count;
  json j = report_json(reports[0], o.field);
  j["input"] = spec.name();
  j["route"] = route;
  j["count"] = reports[0].count;
  j["agree"] = agree;
  json routes = json::array();
  long long nodes = 0, edges = 0;
  for (const CountReport& r : reports) {
    routes.push_back(report_json(r, o.field));
    nodes = std::max(nodes, r.nodes);
    edges = std::max(edges, r.edges);
  }
  j["nodes"] = nodes;
  j["edges"] = edges;
  j["routes"] = routes;
  write_output(o, j);
  return agree ? 0 : 1;
}

int run_enumerate(const std::string& file, const std::string& series, int rank, bool full_gamma,
                  const std::string& dot, CommonOpts& o, bool list_nodes) {
  AlgebraPtr A;
  std::string input;
  auto t0 = std::chrono::steady_clock::now();
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw ParseError("cannot open " + file);
    std::stringstream ss;
    ss << f.rdbuf();
    DslFile d = parse_dsl(ss.str());
    uint32_t p = o.field_set ? o.field : d.p;
    A = build_algebra(d.quiver, d.relations, p);
    input = file;
  } else {
    DynkinSpec spec = spec_from(series, rank);
    A = full_gamma ? auslander_presentation(spec, o.field) : reduced_algebra(spec, o.field);
    input = spec.name() + (full_gamma ? ":gamma" : ":reduced");
  }
  ExchangeQuiver q = exchange_quiver(A, o.budget, o.threads);
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  json j{{"input", input},
         {"route", "enumerate"},
         {"count", q.nodes.size()},
         {"nodes", q.nodes.size()},
         {"edges", q.edges.size()},
         {"p", A->p},
         {"elapsed_ms", ms},
         {"root", q.root_key},
         {"sink", q.sink_key}};
  if (list_nodes) {
    json nodes = json::array();
    for (const auto& [key, node] : q.nodes)
      nodes.push_back(json{{"key", key}, {"label", profile_label(node)}});
    j["node_list"] = nodes;
    json edges = json::array();
    for (const EQEdge& e : q.edges)
      edges.push_back(json{{"src", e.src}, {"tgt", e.tgt}, {"position", e.position}});
    j["edge_list"] = edges;
  }
  if (!dot.empty()) write_dot(q, dot, o.labels);
  write_output(o, j);
  return 0;
}

int run_verify(const std::string& series, int rank, CommonOpts& o) {
  DynkinSpec spec = spec_from(series, rank);
  json j;
  bool ok;
  if ((spec.series == 'D' && spec.rank == 4) || (spec.series == 'E' && spec.rank == 6)) {
    VerifyReport r = verify_example_lists(spec, o.field, o.budget, o.threads);
    ok = r.ok;
    j = json{{"input", r.input},       {"mode", "example-lists"}, {"ok", r.ok},
             {"count", r.count},       {"expected", r.expected},  {"missing", r.missing},
             {"p", o.field}};
  } else {
    CountReport b = count_tilting_via_bijection(spec, o.field, o.budget, o.threads);
    long long expected = closed_formula(spec);
    ok = b.count == expected;
    j = json{{"input", spec.name()}, {"mode", "route-agreement"}, {"ok", ok},
             {"count", b.count},     {"expected", expected},      {"p", o.field}};
  }
  write_output(o, j);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for bound quiver algebras and support tau-tilting pairs"};
  app.require_subcommand(1);

  std::string series, route = "all", file, dot;
  int rank = 0;
  bool full_gamma = false, list_nodes = false;
  CommonOpts opts;

  CLI::App* present = app.add_subcommand("present", "emit an Auslander-algebra presentation as DSL");
  present->add_option("--series", series)->required();
  present->add_option("--rank", rank)->required();
  add_common(present, opts);

  CLI::App* count = app.add_subcommand("count", "count tilting modules along one or all routes");
  count->add_option("--series", series)->required();
  count->add_option("--rank", rank)->required();
  count->add_option("--route", route)->check(CLI::IsMember({"bijection", "formula", "direct", "all"}));
  add_common(count, opts);

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate an exchange quiver");
  enumerate->add_option("file", file, "DSL presentation file");
  enumerate->add_option("--series", series);
  enumerate->add_option("--rank", rank);
  enumerate->add_flag("--gamma", full_gamma, "use the full Auslander algebra, not the reduced one");
  enumerate->add_option("--dot", dot, "write the exchange quiver as DOT");
  enumerate->add_flag("--list", list_nodes, "include node and edge listings in the report");
  enumerate->add_option("--labels", opts.labels, "DOT node labels: gvec or dims")
      ->check(CLI::IsMember({"gvec", "dims"}));
  add_common(enumerate, opts);

  CLI::App* verify = app.add_subcommand("verify", "verify counts and explicit module lists");
  verify->add_option("--series", series)->required();
  verify->add_option("--rank", rank)->required();
  add_common(verify, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (present->parsed()) {
      DynkinSpec spec = spec_from(series, rank);
      auto [q, rels] = auslander_quiver(spec);
      std::cout << emit_dsl(q, rels, opts.field,
                            "Auslander algebra of the radical-square-zero algebra of type " +
                                spec.name());
      return 0;
    }
    if (count->parsed()) return run_count(series, rank, route, opts);
    if (enumerate->parsed()) {
      if (file.empty() == series.empty())
        throw ParseError("enumerate needs exactly one input: a DSL file or --series/--rank");
      return run_enumerate(file, series, rank, full_gamma, dot, opts, list_nodes);
    }
    if (verify->parsed()) return run_verify(series, rank, opts);
  } catch (const BudgetError& e) {
    std::cerr << json{{"error", "budget"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const FieldError& e) {
    std::cerr << json{{"error", "field"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << json{{"error", "parse"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
  return 0;
}
