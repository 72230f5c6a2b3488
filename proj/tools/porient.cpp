// Command-line front end: graph parsing, command dispatch, human-readable
// and JSON output.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <porient/porient.hpp>

using json = nlohmann::json;
using namespace porient;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OrientationClass parse_class(const std::string& s) {
  if (s == "acyclic") return OrientationClass::Acyclic;
  if (s == "strong" || s == "strongly-connected") return OrientationClass::StronglyConnected;
  if (s == "cut-min" || s == "cut-minimal") return OrientationClass::CutMinimal;
  if (s == "cycle-min" || s == "cycle-minimal") return OrientationClass::CycleMinimal;
  if (s == "cycle-cut-min" || s == "cycle-cut-minimal") return OrientationClass::CycleCutMinimal;
  if (s == "cycle-path-min" || s == "cycle-path-minimal")
    return OrientationClass::CyclePathMinimal;
  if (s == "all") return OrientationClass::All;
  throw std::runtime_error("unknown class: " + s);
}

// "a/b" or a decimal literal, parsed exactly.
BigRational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::runtime_error("rational with zero denominator: " + s);
    return BigRational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return BigRational(BigInt(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  BigInt den = 1;
  for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
  return BigRational(BigInt(digits), den);
}

std::string rational_str(const BigRational& r) {
  BigInt num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// --pair default | q:V | random:SEED
ReferencePair parse_pair(const Multigraph& g, const std::string& s) {
  if (s == "default") return default_pair(g);
  if (s.rfind("q:", 0) == 0) return q_connected_pair(g, std::stoi(s.substr(2)));
  if (s.rfind("random:", 0) == 0) return random_pair(g, std::stoull(s.substr(7)));
  throw std::runtime_error("unknown pair option: " + s + " (want default | q:V | random:SEED)");
}

json graph_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& [t, h] : g.edges) edges.push_back({t, h});
  return {{"n", g.n}, {"m", g.m()}, {"edges", edges}};
}

json witness_json(const Witness& w) {
  switch (w.kind) {
    case Witness::Kind::Cut:
      return {{"move", "cut-reversal"}, {"side", w.cut.side}, {"crossing", w.cut.crossing}};
    case Witness::Kind::Cycle:
      return {{"move", "cycle-reversal"}, {"edges", w.cycle.edges}};
    case Witness::Kind::Path:
      return {{"move", "cascade"},
              {"path_edges", w.path.path_edges},
              {"terminal_edge", w.path.terminal_edge},
              {"imagined", w.path.imagined == EdgeState::Forward ? "+" : "-"}};
  }
  throw std::logic_error("bad witness kind");
}

std::string witness_text(const Witness& w) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  switch (w.kind) {
    case Witness::Kind::Cut:
      return "cut-reversal side=" + join(w.cut.side) + " crossing=" + join(w.cut.crossing);
    case Witness::Kind::Cycle:
      return "cycle-reversal edges=" + join(w.cycle.edges);
    case Witness::Kind::Path:
      return "cascade path=" + join(w.path.path_edges) +
             " terminal=" + std::to_string(w.path.terminal_edge) +
             " imagined=" + (w.path.imagined == EdgeState::Forward ? "+" : "-");
  }
  throw std::logic_error("bad witness kind");
}

json report_json(const CensusReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.records)
    rows.push_back({{"identity", r.identity},
                    {"formula", r.formula_value},
                    {"brute", r.brute_value},
                    {"equal", r.equal},
                    {"millis", r.millis}});
  return {{"graph", rep.graph}, {"records", rows}, {"all_equal", rep.all_equal()}};
}

void print_report(const CensusReport& rep) {
  for (const auto& r : rep.records)
    std::cout << (r.equal ? "ok   " : "FAIL ") << r.identity << ": formula=" << r.formula_value
              << " brute=" << r.brute_value << "\n";
  std::cout << (rep.all_equal() ? "all identities hold" : "IDENTITY FAILURES") << "\n";
}

void emit(bool as_json, const Multigraph& g, const std::string& command, const json& result,
          const std::string& text) {
  if (as_json) {
    json out = {{"graph", graph_json(g)}, {"command", command}, {"result", result}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of partial graph orientations"};
  app.require_subcommand(1);

  std::string graph_path = "-";
  bool as_json = false;
  app.add_option("-g,--graph", graph_path, "graph file (\"-\" = stdin)");
  app.add_flag("--json", as_json, "emit JSON {graph, command, result}");

  auto* cmd_tutte = app.add_subcommand("tutte", "Tutte polynomial by deletion-contraction");

  std::string cls_name = "acyclic", method = "formula";
  unsigned k = 1, l = 1;
  auto* cmd_count = app.add_subcommand("count", "count class members, formula and/or brute force");
  cmd_count->add_option("--class", cls_name, "orientation class")->required();
  cmd_count->add_option("--method", method, "formula | brute | both");
  cmd_count->add_option("-k", k, "oriented-edge weight");
  cmd_count->add_option("-l", l, "unoriented-edge weight");

  std::string orient_str, canon_cls = "cut-min", pair_spec = "default";
  auto* cmd_canon = app.add_subcommand("canonical", "canonical minimal representative + trace");
  cmd_canon->add_option("--orientation", orient_str, "orientation string over 0,+,-")->required();
  cmd_canon->add_option("--class", canon_cls, "minimality class");
  cmd_canon->add_option("--pair", pair_spec, "default | q:V | random:SEED");

  auto* cmd_census = app.add_subcommand("census", "full identity report for the graph");

  unsigned verify_pairs = 3;
  std::uint64_t verify_seed = 0;
  auto* cmd_verify = app.add_subcommand("verify", "identity suite; nonzero exit on failure");
  cmd_verify->add_option("--pairs", verify_pairs, "number of random reference pairs");
  cmd_verify->add_option("--seed", verify_seed, "seed for random pairs");

  std::string p_str = "1/2", rel_method = "exact";
  std::uint64_t trials = 100000, mc_seed = 0;
  auto* cmd_rel = app.add_subcommand("reliability", "all-terminal reliability R(p)");
  cmd_rel->add_option("--p", p_str, "edge probability, rational a/b or decimal");
  cmd_rel->add_option("--trials", trials, "Monte Carlo trials");
  cmd_rel->add_option("--seed", mc_seed, "Monte Carlo seed");
  cmd_rel->add_option("--method", rel_method, "exact | mc-subgraph | mc-cutmin");

  CLI11_PARSE(app, argc, argv);

  try {
    Multigraph g = parse_graph(read_input(graph_path));

    if (cmd_tutte->parsed()) {
      TuttePolynomial t = tutte_polynomial(g);
      json triples = json::array();
      std::string text;
      for (const auto& [ij, c] : t.coeffs) {
        triples.push_back({ij.first, ij.second, c.str()});
        text += std::to_string(ij.first) + " " + std::to_string(ij.second) + " " + c.str() + "\n";
      }
      emit(as_json, g, "tutte", {{"coefficients", triples}}, text);
      return 0;
    }

    if (cmd_count->parsed()) {
      OrientationClass cls = parse_class(cls_name);
      std::optional<BigInt> formula, brute;
      if (method == "formula" || method == "both") formula = chromatic_count(g, cls, k, l);
      if (method == "brute" || method == "both") brute = brute_count(g, cls, default_pair(g), k, l);
      if (!formula && !brute) throw std::runtime_error("unknown method: " + method);
      json result = {{"class", cls_name}, {"k", k}, {"l", l}};
      std::string text;
      if (formula) {
        result["formula"] = formula->str();
        text += formula->str();
      }
      if (brute) {
        result["brute"] = brute->str();
        if (!text.empty()) text += " ";
        text += brute->str();
      }
      text += "\n";
      bool mismatch = formula && brute && *formula != *brute;
      if (formula && brute) result["equal"] = !mismatch;
      emit(as_json, g, "count", result, text);
      return mismatch ? 1 : 0;
    }

    if (cmd_canon->parsed()) {
      OrientationClass cls = parse_class(canon_cls);
      ReferencePair pair = parse_pair(g, pair_spec);
      PartialOrientation o = orientation_from_string(orient_str, g.m());
      auto [rep, trace] = canonical_rep(g, o, pair, cls);
      json moves = json::array();
      std::string text = orientation_to_string(rep) + "\n";
      for (const auto& w : trace.moves) {
        moves.push_back(witness_json(w));
        text += witness_text(w) + "\n";
      }
      emit(as_json, g, "canonical",
           {{"canonical", orientation_to_string(rep)},
            {"class", canon_cls},
            {"pair", pair_to_string(pair)},
            {"moves", moves}},
           text);
      return 0;
    }

    if (cmd_census->parsed() || cmd_verify->parsed()) {
      std::vector<ReferencePair> pairs{default_pair(g)};
      std::vector<std::pair<unsigned, unsigned>> kl{{1, 1}};
      std::string command = "census";
      if (cmd_verify->parsed()) {
        command = "verify";
        std::mt19937_64 seeder(verify_seed);
        for (unsigned i = 0; i < verify_pairs; ++i) pairs.push_back(random_pair(g, seeder()));
        kl = {{1, 0}, {1, 1}, {2, 1}, {1, 2}, {3, 2}};
      }
      CensusReport rep = verify_identities(g, pairs, kl);
      if (as_json)
        emit(true, g, command, report_json(rep), "");
      else
        print_report(rep);
      return rep.all_equal() ? 0 : 1;
    }

    if (cmd_rel->parsed()) {
      BigRational p = parse_rational(p_str);
      if (rel_method == "exact") {
        BigRational r = reliability_exact(g, p);
        emit(as_json, g, "reliability",
             {{"method", "exact"}, {"p", rational_str(p)}, {"value", rational_str(r)}},
             rational_str(r) + "\n");
        return 0;
      }
      McConfig cfg{.trials = trials, .seed = mc_seed, .p = p};
      McEstimate est;
      if (rel_method == "mc-subgraph")
        est = mc_subgraph(g, cfg);
      else if (rel_method == "mc-cutmin")
        est = mc_cutminimal(g, cfg, default_pair(g));
      else
        throw std::runtime_error("unknown method: " + rel_method);
      std::ostringstream text;
      text << "estimate=" << est.estimate << " std_error=" << est.std_error
           << " successes=" << est.successes << " trials=" << est.trials << " seed=" << est.seed
           << "\n";
      emit(as_json, g, "reliability",
           {{"method", rel_method},
            {"p", rational_str(p)},
            {"estimate", est.estimate},
            {"std_error", est.std_error},
            {"successes", est.successes},
            {"trials", est.trials},
            {"seed", est.seed}},
           text.str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
