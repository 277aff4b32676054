#include "sosi/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <random>

#include "sosi/json_io.hpp"
#include "sosi/oracle.hpp"

namespace sosi {

namespace {

using json_io::Json;

struct Options {
  std::string input;
  std::string weights;
  std::string within;
  bool pretty = false;
  int budget_arcs = oracle::OracleBudget{}.max_arcs;
  int random = 0;
  std::uint64_t seed = 1;
};

struct Outcome {
  Json body;
  int code = 0;
};

// Node weights under `key`; absent key means w = 1 everywhere.
std::vector<Rational> unit_default(const Json& j, const char* key, const json_io::NamedDigraph& g) {
  if (!j.contains(key)) return std::vector<Rational>(g.digraph.node_count(), Rational(1));
  return json_io::parse_node_weights(j, key, g);
}

Outcome solve_digraph(const Options& o) {
  const Json j = json_io::read_file(o.input);
  const Json wj = o.weights.empty() ? j : json_io::read_file(o.weights);
  const auto g = json_io::parse_digraph(j);
  const WeightPair w{json_io::parse_node_weights(wj, "w_o", g), json_io::parse_node_weights(wj, "w_i", g)};
  return {json_io::certificate_json(g, max_so_si(g.digraph, w))};
}

Outcome sink_stable(const Options& o) {
  const Json j = json_io::read_file(o.input);
  const auto g = json_io::parse_digraph(j);
  const auto w = unit_default(o.weights.empty() ? j : json_io::read_file(o.weights), "w", g);
  return {json_io::sink_stable_json(g, sink_stable_max(g.digraph, w))};
}

Outcome resonant(const Options& o) {
  const Json j = json_io::read_file(o.input);
  const auto g = json_io::parse_digraph(j);
  std::vector<Rational> w;
  if (!o.within.empty()) {
    Json list;
    try {
      list = Json::parse(o.within);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("--within: ") + e.what());
    }
    w.assign(g.digraph.node_count(), Rational(0));
    for (NodeId v : json_io::parse_node_list(list, g)) w[v] = 1;
  } else {
    w = unit_default(o.weights.empty() ? j : json_io::read_file(o.weights), "w", g);
  }
  const SoSiCertificate cert = resonant_max(g.digraph, w);
  Json body = json_io::certificate_json(g, cert);
  NodeSet set = cert.sources;
  set.insert(set.end(), cert.sinks.begin(), cert.sinks.end());
  std::vector<std::string> sorted;
  for (NodeId v : set) sorted.push_back(g.names[v]);
  std::sort(sorted.begin(), sorted.end());
  body["resonant_set"] = sorted;
  return {body};
}

Outcome plane_command(const Options& o, const std::string& which) {
  const auto p = json_io::parse_plane(json_io::read_file(o.input));
  if (which == "clar") return {json_io::face_set_json(p.graph, plane::clar_number(p.graph))};
  if (which == "fries") return {json_io::face_set_json(p.graph, plane::fries_number(p.graph))};
  return {json_io::clar_fries_json(p.graph, plane::solve_clar_fries(p.graph, p.w1, p.w2))};
}

Json compare_digraph(const Digraph& d, const WeightPair& w, const oracle::OracleBudget& budget) {
  const Rational solver = max_so_si(d, w).value;
  const Rational brute = oracle::brute_max_so_si(d, w, budget).value;
  return Json{{"agree", solver == brute},
              {"solver", json_io::rational_json(solver)},
              {"oracle", json_io::rational_json(brute)}};
}

Outcome verify(const Options& o) {
  const oracle::OracleBudget budget{o.budget_arcs, oracle::OracleBudget{}.max_matchings};
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    Json mismatches = Json::array();
    for (int k = 0; k < o.random; ++k) {
      const int n = std::uniform_int_distribution<int>(2, 7)(rng);
      const int m = std::uniform_int_distribution<int>(n - 1, std::min(12, budget.max_arcs))(rng);
      const Digraph d = oracle::random_digraph(rng, n, m);
      std::uniform_int_distribution<int> weight(0, 3);
      WeightPair w = WeightPair::zero(n);
      for (NodeId v = 0; v < n; ++v) {
        w.source[v] = weight(rng);
        w.sink[v] = weight(rng);
      }
      Json r = compare_digraph(d, w, budget);
      if (!r["agree"].get<bool>()) {
        r["instance"] = k;
        mismatches.push_back(r);
      }
    }
    const bool agree = mismatches.empty();
    return {Json{{"agree", agree}, {"instances", o.random}, {"seed", o.seed}, {"mismatches", mismatches}},
            agree ? 0 : 3};
  }
  if (o.input.empty()) throw InputError("verify needs an input file or --random N");
  const Json j = json_io::read_file(o.input);
  Json r;
  if (j.contains("S")) {
    const auto p = json_io::parse_plane(j);
    const Rational solver = plane::solve_clar_fries(p.graph, p.w1, p.w2).value;
    const auto brute = oracle::brute_clar_fries(p.graph, p.w1, p.w2, budget);
    r = Json{{"agree", solver == brute.value},
             {"solver", json_io::rational_json(solver)},
             {"oracle", json_io::rational_json(brute.value)},
             {"matchings", brute.matchings}};
  } else {
    const auto g = json_io::parse_digraph(j);
    const WeightPair w{json_io::parse_node_weights(j, "w_o", g), json_io::parse_node_weights(j, "w_i", g)};
    r = compare_digraph(g.digraph, w, budget);
  }
  const int code = r["agree"].get<bool>() ? 0 : 3;
  return {r, code};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum source-sink pairs, circular covers and Clar-Fries optima", "sosi"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  auto add_input = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("input", o.input, "Input JSON file");
    if (required) opt->required();
    return cmd;
  };
  auto* solve_cmd = add_input(app.add_subcommand("solve-digraph", "Maximum (w_o, w_i)-weight source-sink pair"), true);
  solve_cmd->add_option("--weights", o.weights, "Separate weight JSON");
  auto* sink_cmd = add_input(app.add_subcommand("sink-stable", "Maximum weight sink-stable set"), true);
  sink_cmd->add_option("--weights", o.weights, "Separate weight JSON");
  auto* res_cmd = add_input(app.add_subcommand("resonant", "Maximum weight resonant set"), true);
  res_cmd->add_option("--weights", o.weights, "Separate weight JSON");
  res_cmd->add_option("--within", o.within, "JSON list of nodes; w is their indicator");
  add_input(app.add_subcommand("clar", "Clar number of a plane bipartite graph"), true);
  add_input(app.add_subcommand("fries", "Fries number of a plane bipartite graph"), true);
  add_input(app.add_subcommand("clar-fries", "Double-weighted Clar-Fries optimum"), true);
  auto* verify_cmd = add_input(app.add_subcommand("verify", "Cross-check the solver against brute force"), false);
  verify_cmd->add_option("--random", o.random, "Number of random digraph instances")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", o.seed, "Seed for --random");
  verify_cmd->add_option("--budget-arcs", o.budget_arcs, "Oracle arc limit")->check(CLI::Range(1, 30));

  auto emit = [&](const Json& body) { out << (o.pretty ? body.dump(2) : body.dump()) << '\n'; };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    emit(Json{{"error", e.what()}});
    return 1;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    Outcome r;
    if (name == "solve-digraph") r = solve_digraph(o);
    else if (name == "sink-stable") r = sink_stable(o);
    else if (name == "resonant") r = resonant(o);
    else if (name == "verify") r = verify(o);
    else r = plane_command(o, name);
    emit(r.body);
    return r.code;
  } catch (const InvariantError& e) {
    err << "self-check failed: " << e.what() << '\n';
    emit(Json{{"error", e.what()}, {"kind", "invariant"}});
    return 2;
  } catch (const plane::PlaneError& e) {
    err << e.what() << '\n';
    emit(Json{{"error", e.what()}, {"kind", plane::to_string(e.kind())}});
    return 1;
  } catch (const std::runtime_error& e) {
    // InputError, BudgetError and malformed JSON values.
    err << e.what() << '\n';
    emit(Json{{"error", e.what()}});
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << e.what() << '\n';
    emit(Json{{"error", e.what()}});
    return 1;
  }
}

}  // namespace sosi
