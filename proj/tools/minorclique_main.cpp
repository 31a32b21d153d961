// Command-line front end. Every subcommand prints one JSON document to
// stdout (schema_version 1). Exit codes: 0 success, 1 input/guard
// error, 2 usage error. Counts are decimal strings so arbitrary
// precision survives JSON; small structural integers stay numbers.
//
// Graphs are passed with --graph as either an inline string (literal
// "\n" sequences become newlines) or @path to read a file; --format
// selects edge-list (default) or graph6.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minorclique/clique.hpp"
#include "minorclique/graph.hpp"
#include "minorclique/graph_io.hpp"
#include "minorclique/matching.hpp"
#include "minorclique/minor.hpp"
#include "minorclique/numeric.hpp"
#include "minorclique/optimizer.hpp"
#include "minorclique/social.hpp"
#include "minorclique/suites.hpp"

namespace mc = minorclique;
using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

std::string load_graph_text(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::string text;
  for (std::size_t i = 0; i < arg.size(); ++i) {
    if (arg[i] == '\\' && i + 1 < arg.size() && arg[i + 1] == 'n') {
      text += '\n';
      ++i;
    } else {
      text += arg[i];
    }
  }
  return text;
}

mc::GraphFormat parse_format(const std::string& name) {
  if (name == "edge-list") return mc::GraphFormat::EdgeList;
  if (name == "graph6") return mc::GraphFormat::Graph6;
  throw std::invalid_argument("unknown format: " + name);
}

mc::Graph load_graph(const std::string& arg, const std::string& format) {
  return mc::parse_graph(load_graph_text(arg), parse_format(format));
}

json rational_json(const mc::Rational& r) {
  return json{{"num", mc::to_decimal(boost::multiprecision::numerator(r))},
              {"den", mc::to_decimal(boost::multiprecision::denominator(r))}};
}

json point_json(const mc::Rational& a, const mc::Rational& b) {
  return json{{"a", rational_json(a)}, {"b", rational_json(b)}};
}

json shape_json(const mc::ShapeParams& s) {
  return json{{"a", s.a}, {"b", s.b}};
}

json mask_json(std::uint64_t mask) {
  json arr = json::array();
  for (int v = 0; v < 64; ++v)
    if (mask >> v & 1) arr.push_back(v);
  return arr;
}

json model_json(const mc::MinorModel& model) {
  json arr = json::array();
  for (std::uint64_t s : model.branch_sets) arr.push_back(mask_json(s));
  return arr;
}

json family_json(const std::vector<mc::ForbiddenMinorSpec>& family) {
  json arr = json::array();
  for (const auto& s : family) arr.push_back(json{{"t", s.t}, {"x", s.x}});
  return arr;
}

// family specs: whitespace-separated members, each "t,x" or "kN"
std::vector<mc::ForbiddenMinorSpec> parse_family(const std::string& text) {
  std::vector<mc::ForbiddenMinorSpec> family;
  std::istringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    if (tok.size() >= 2 && (tok[0] == 'k' || tok[0] == 'K') &&
        tok.find(',') == std::string::npos) {
      int t = std::stoi(tok.substr(1));
      family.push_back(mc::ForbiddenMinorSpec::from_graph(mc::complete_graph(t)));
    } else {
      auto comma = tok.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("family member must be t,x or kN: " + tok);
      int t = std::stoi(tok.substr(0, comma));
      int x = std::stoi(tok.substr(comma + 1));
      family.push_back(mc::ForbiddenMinorSpec::from_params(t, x));
    }
  }
  if (family.empty())
    throw std::invalid_argument("family specification is empty");
  return family;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_census(const std::string& graph_arg, const std::string& format) {
  mc::Graph g = load_graph(graph_arg, format);
  mc::CliqueCensus census = mc::clique_census(g);
  json alpha = json::array();
  for (const mc::Rational& f : census.fractions) alpha.push_back(rational_json(f));
  emit(json{{"schema_version", kSchemaVersion},
            {"n", g.vertex_count()},
            {"count", mc::to_decimal(census.total)},
            {"omega", census.omega},
            {"alpha", alpha}});
  return 0;
}

int run_minor(const std::string& graph_arg, const std::string& minor_arg,
              const std::string& format, std::optional<std::uint64_t> budget) {
  mc::Graph g = load_graph(graph_arg, format);
  mc::Graph h = load_graph(minor_arg, format);
  mc::MinorSearchOptions opts;
  if (budget) opts.step_budget = *budget;
  mc::MinorResult r = mc::find_minor_model(g, h, opts);
  json out{{"schema_version", kSchemaVersion},
           {"status", r.status == mc::MinorStatus::Found      ? "found"
                      : r.status == mc::MinorStatus::Absent   ? "absent"
                                                              : "indeterminate"},
           {"steps", r.steps}};
  if (r.status == mc::MinorStatus::Found)
    out["branch_sets"] = model_json(r.model);
  emit(out);
  return 0;
}

int run_hadwiger(const std::string& graph_arg, const std::string& format,
                 bool dense) {
  mc::Graph g = load_graph(graph_arg, format);
  mc::HadwigerResult r = dense ? mc::hadwiger_dense(g) : mc::hadwiger_exact(g);
  emit(json{{"schema_version", kSchemaVersion},
            {"mode", dense ? "dense" : "exact"},
            {"hadwiger", r.number},
            {"branch_sets", model_json(r.model)}});
  return 0;
}

int run_matching(const std::string& graph_arg, const std::string& format,
                 bool missing) {
  mc::Graph g = load_graph(graph_arg, format);
  mc::Matching m = mc::maximum_matching(missing ? g.complement() : g);
  json edges = json::array();
  for (auto [u, v] : m.edges) edges.push_back(json::array({u, v}));
  emit(json{{"schema_version", kSchemaVersion},
            {"missing", missing},
            {"size", m.size()},
            {"edges", edges}});
  return 0;
}

json optimum_json(const mc::ShapeOptimum& opt, int factor) {
  return json{
      {"ip", json{{"shape", shape_json(opt.ip_shape)},
                  {"count", mc::to_decimal(opt.ip_count)}}},
      {"lp", json{{"point", point_json(opt.lp_a, opt.lp_b)},
                  {"log2_value", opt.lp_log2}}},
      {"factor", factor}};
}

int run_bound(const std::string& family_arg, std::vector<int> wood,
              std::vector<int> small_n, std::optional<int> k_s) {
  int modes = (!family_arg.empty()) + !wood.empty() + !small_n.empty() +
              k_s.has_value();
  if (modes != 1)
    throw std::invalid_argument(
        "bound: give exactly one of --family, --wood, --small-n, --k-s");
  json out{{"schema_version", kSchemaVersion}};
  if (!family_arg.empty()) {
    auto family = parse_family(family_arg);
    out["family"] = family_json(family);
    if (family.size() == 1) {
      mc::ShapeOptimum opt = mc::single_minor_optimum(family[0]);
      out.update(optimum_json(opt, 3));
    } else {
      mc::ExtremalExponent ext = mc::extremal_exponent(family);
      json pts = json::array();
      for (const mc::EnvelopePoint& p : ext.envelope.extremes)
        pts.push_back(point_json(p.a, p.b));
      out["envelope"] = json{{"extreme_points", pts}};
      out.update(optimum_json(ext.optimum, 6));
    }
  } else if (!wood.empty()) {
    if (wood.size() != 2)
      throw std::invalid_argument("bound: --wood needs t and n");
    out["wood"] = json{{"t", wood[0]},
                       {"n", wood[1]},
                       {"count", mc::to_decimal(mc::wood_bound(wood[0], wood[1]))}};
  } else if (!small_n.empty()) {
    if (small_n.size() != 2)
      throw std::invalid_argument("bound: --small-n needs t and n");
    mc::SmallNBound b = mc::small_n_bound(small_n[0], small_n[1]);
    out["small_n"] = json{{"t", b.t},
                          {"n", b.n},
                          {"clique_case", b.clique_case},
                          {"shape", shape_json(b.shape)},
                          {"count", mc::to_decimal(b.count)},
                          {"pow2_exp", b.pow2_exp},
                          {"pow3_exp", b.pow3_exp}};
  } else {
    mc::KsBound b = mc::k_s_bound(*k_s);
    json k{{"s", b.s}, {"three_pow_s", mc::to_decimal(b.three_pow_s)}};
    if (b.equality_witness) k["witness"] = shape_json(*b.equality_witness);
    out["k_s"] = k;
  }
  emit(out);
  return 0;
}

int run_construct(const std::string& family_arg, long n, bool emit_graph,
                  const std::string& format) {
  auto family = parse_family(family_arg);
  mc::UnionConstruction c = mc::extremal_union_construct(family, n);
  json pieces = json::array();
  for (const mc::UnionPiece& p : c.pieces)
    pieces.push_back(json{{"shape", shape_json(p.shape)}, {"copies", p.copies}});
  json out{{"schema_version", kSchemaVersion},
           {"family", family_json(family)},
           {"n", n},
           {"count", mc::to_decimal(c.count)},
           {"pieces", pieces}};
  if (emit_graph)
    out["graph"] = mc::serialize_graph(mc::realize(c), parse_format(format));
  emit(out);
  return 0;
}

int run_social(const std::string& graph_arg, const std::string& format,
               bool best_minor) {
  mc::Graph g = load_graph(graph_arg, format);
  mc::SocialReport rep = mc::verify_structure(g);
  json out{{"schema_version", kSchemaVersion},
           {"is_social", rep.is_social},
           {"violating_edge",
            rep.violating_edge
                ? json(json::array(
                      {rep.violating_edge->first, rep.violating_edge->second}))
                : json(nullptr)},
           {"bad_vertices", rep.bad_vertices},
           {"alpha_star", json{{"description", "(2-sqrt(2))/2 - 1/1000"},
                               {"approx", rep.alpha_star}}},
           {"structure_violations", rep.structure_violations}};
  if (best_minor) {
    mc::ContractionOptimum opt = mc::best_contraction_minor(g);
    out["best_minor"] =
        json{{"mode", opt.mode == mc::SearchMode::Exhaustive ? "exact"
                                                             : "heuristic"},
             {"count", mc::to_decimal(opt.count)},
             {"graph", mc::serialize_graph(opt.graph, parse_format(format))}};
  }
  emit(out);
  return 0;
}

int run_verify(const std::string& suite, std::optional<int> n,
               std::optional<int> max_n, std::optional<int> t,
               std::optional<int> max_shape) {
  mc::SuiteOptions opts;
  opts.n = n;
  opts.max_n = max_n;
  opts.t = t;
  opts.max_shape = max_shape;
  mc::VerificationResult r = mc::run_suite(suite, opts);
  emit(json{{"schema_version", kSchemaVersion},
            {"suite", r.suite},
            {"params", r.params},
            {"passed", r.passed},
            {"counterexample", r.counterexample},
            {"instances", r.instances},
            {"wall_seconds", r.wall_seconds}});
  return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique censuses, minor models and extremal shape bounds"};
  app.require_subcommand(1);

  std::string graph_arg, minor_arg, format = "edge-list";
  std::vector<std::string> family_args;
  std::string suite;
  std::optional<std::uint64_t> budget;
  std::optional<int> opt_n, opt_max_n, opt_t, opt_max_shape, k_s;
  std::vector<int> wood, small_n;
  long construct_n = 0;
  bool dense = false, missing = false, best_minor = false, emit_graph = false;

  auto add_graph = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--graph,-g", graph_arg,
                              "graph, inline or @file");
    if (required) o->required();
    cmd->add_option("--format,-f", format, "edge-list|graph6")
        ->check(CLI::IsMember({"edge-list", "graph6"}));
  };

  auto* census = app.add_subcommand("census", "clique census with fractions");
  add_graph(census);

  auto* minor = app.add_subcommand("minor", "search for a minor model");
  add_graph(minor);
  minor->add_option("--minor,-m", minor_arg, "minor graph, inline or @file")
      ->required();
  minor->add_option("--budget", budget,
                    "search step budget (0 = unlimited)");

  auto* hadwiger = app.add_subcommand("hadwiger", "hadwiger number");
  add_graph(hadwiger);
  hadwiger->add_flag("--dense", dense, "dense-regime construction");

  auto* matching = app.add_subcommand("matching", "maximum matching");
  add_graph(matching);
  matching->add_flag("--missing", missing, "match in the complement");

  auto* bound = app.add_subcommand("bound", "extremal shape bounds");
  bound->add_option("--family", family_args,
                    "forbidden minor, \"t,x\" or \"kN\" (repeatable)");
  bound->add_option("--wood", wood, "t n")->expected(2);
  bound->add_option("--small-n", small_n, "t n")->expected(2);
  bound->add_option("--k-s", k_s, "s");

  auto* construct = app.add_subcommand("construct", "extremal disjoint union");
  construct->add_option("--family", family_args, "forbidden minor family")
      ->required();
  construct->add_option("--n,-n", construct_n, "vertex count")->required();
  construct->add_flag("--emit-graph", emit_graph, "serialize the graph");
  construct->add_option("--format,-f", format, "edge-list|graph6")
      ->check(CLI::IsMember({"edge-list", "graph6"}));

  auto* social = app.add_subcommand("social", "social-graph analysis");
  add_graph(social);
  social->add_flag("--best-minor", best_minor,
                   "also search for the best contraction minor");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(mc::registered_suites()));
  verify->add_option("--n", opt_n, "single enumeration level");
  verify->add_option("--max-n", opt_max_n, "sweep ceiling");
  verify->add_option("--t", opt_t, "parameter t");
  verify->add_option("--max-shape", opt_max_shape, "a,b grid bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (census->parsed()) return run_census(graph_arg, format);
    if (minor->parsed()) return run_minor(graph_arg, minor_arg, format, budget);
    if (hadwiger->parsed()) return run_hadwiger(graph_arg, format, dense);
    if (matching->parsed()) return run_matching(graph_arg, format, missing);
    std::string family_arg;
    for (const auto& f : family_args)
      family_arg += (family_arg.empty() ? "" : " ") + f;
    if (bound->parsed()) return run_bound(family_arg, wood, small_n, k_s);
    if (construct->parsed())
      return run_construct(family_arg, construct_n, emit_graph, format);
    if (social->parsed()) return run_social(graph_arg, format, best_minor);
    if (verify->parsed())
      return run_verify(suite, opt_n, opt_max_n, opt_t, opt_max_shape);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
