// ct — command-line front end for the class transposition toolkit.
//
// Subcommands: apply, order, graph, classify, cycle, survey, witness.
// Exit codes: 0 success, 1 invalid input (message names the violated
// precondition), 2 internal invariant violation or arithmetic overflow.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ct/report.hpp"

namespace {

using namespace ct;

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string verdict_human(const OrderVerdict& v) {
  std::ostringstream out;
  switch (v.kind) {
    case OrderVerdict::Kind::FiniteOrder:
      out << "order: " << v.order;
      if (v.cert_source) out << " (certified: " << cert_source_label(*v.cert_source, true) << ")";
      else out << " (power scan)";
      break;
    case OrderVerdict::Kind::InfiniteCertified:
      out << "order: inf (certified: " << theorem_label(*v.theorem) << ")";
      break;
    case OrderVerdict::Kind::InfiniteHeuristic: {
      std::string ev;
      if (v.blowup)
        ev += "modulus blowup at step " + std::to_string(v.blowup->step) + ", modulus " +
              std::to_string(v.blowup->modulus);
      if (v.escape) {
        if (!ev.empty()) ev += "; ";
        ev += "orbit escape from " + std::to_string(v.escape->start) + " after " +
              std::to_string(v.escape->step) + " steps";
      }
      out << "order: inf (heuristic: " << ev << ")";
      break;
    }
    case OrderVerdict::Kind::Inconclusive:
      out << "order: unknown (inconclusive after " << v.steps_done << " powers)";
      break;
  }
  out << "\nmethod: ";
  for (std::size_t i = 0; i < v.method.size(); ++i) {
    if (i) out << ", ";
    out << v.method[i];
  }
  out << "\nconsistent: " << (v.consistent ? "true" : "false");
  return out.str();
}

bool witness_available_for(const ClassTransposition& t1, const ClassTransposition& t2,
                           CertSource source) {
  try {
    if (source == CertSource::CommonVertex) common_vertex_chain_witness(t1, t2, 1);
    else if (source == CertSource::EqualResidueRatio) equal_residue_chain_witness(t1, t2, 1);
    else return false;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

int run_order(const std::string& s1, const std::string& s2, const OracleConfig& cfg, bool json,
              bool show_map) {
  ClassTransposition t1 = parse_class_transposition(s1);
  ClassTransposition t2 = parse_class_transposition(s2);
  OrderVerdict v = order_of_product(t1, t2, cfg);
  if (show_map) {
    RcwaMap sigma =
        compose(RcwaMap::from_class_transposition(t1), RcwaMap::from_class_transposition(t2));
    std::cout << sigma.piece_table();
  }
  if (json) {
    nlohmann::json j = verdict_to_json(v);
    if (v.cert_source) {
      OrderCertificate cert{v.kind == OrderVerdict::Kind::FiniteOrder
                                ? OrderCertificate::Kind::Finite
                                : OrderCertificate::Kind::Infinite,
                            v.order, {}, false, *v.cert_source};
      j["certificate"] = certificate_to_json(cert, witness_available_for(t1, t2, *v.cert_source));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << verdict_human(v) << "\n";
  }
  return 0;
}

int run_graph(const std::string& s1, const std::string& s2, Int bound, bool dump_edges,
              bool json) {
  ClassTransposition t1 = parse_class_transposition(s1);
  ClassTransposition t2 = parse_class_transposition(s2);
  GammaGraph g(t1, t2, bound);
  auto comps = g.components();
  std::size_t n_type1 = 0, n_type2 = 0, n_trunc = 0, n_boundary = 0;
  for (const auto& vd : g.vertices())
    if (vd.boundary) ++n_boundary;
  for (const auto& c : comps) {
    if (c.kind == ComponentKind::Type1) ++n_type1;
    else if (c.kind == ComponentKind::Type2) ++n_type2;
    else ++n_trunc;
  }
  if (json) {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& c : comps) jc.push_back(component_to_json(g, c));
    nlohmann::json j = {{"tau1", to_string(t1)},       {"tau2", to_string(t2)},
                        {"bound", bound},              {"vertices", g.vertices().size()},
                        {"boundary_vertices", n_boundary}, {"components", jc}};
    if (dump_edges) j["edges"] = g.edge_dump();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "tau1: " << to_string(t1) << "\ntau2: " << to_string(t2) << "\nbound: " << bound
            << "\nvertices: " << g.vertices().size() << " (boundary: " << n_boundary << ")\n"
            << "components: Type1=" << n_type1 << " Type2=" << n_type2
            << " Truncated=" << n_trunc << "\n";
  for (const auto& c : comps) std::cout << component_summary(g, c) << "\n";
  if (dump_edges) std::cout << g.edge_dump();
  return 0;
}

int run_cycle(Int k, Int m, Int t_max, bool json) {
  std::vector<Int> prefix = prop33_cycle_prefix(k, m, t_max);
  // Cross-check against direct iteration of the product from the entry 2.
  ClassTransposition t1(ResidueClass(0, 2), ResidueClass(1, 2));
  ClassTransposition t2(ResidueClass(0, 2), ResidueClass(k, m));
  RcwaMap sigma =
      compose(RcwaMap::from_class_transposition(t1), RcwaMap::from_class_transposition(t2));
  bool match = true;
  Int x = 2;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (x != prefix[i]) { match = false; break; }
    x = sigma(x);
  }
  if (json) {
    std::cout << nlohmann::json{{"k", k}, {"m", m}, {"t_max", t_max}, {"prefix", prefix},
                                {"iteration_check", match ? "ok" : "mismatch"}}
                     .dump(2)
              << "\n";
    return match ? 0 : 2;
  }
  std::cout << "(";
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << prefix[i];
  }
  std::cout << ")\niteration check: " << (match ? "ok" : "mismatch") << "\n";
  return match ? 0 : 2;
}

PairClass parse_filter(const std::string& spec) {
  PairClass mask;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::replace(item.begin(), item.end(), '_', '-');
    if (item == "horizontal") mask.horizontal = true;
    else if (item == "common-vertex") mask.common_vertex = true;
    else if (item == "equal-residue") mask.equal_residue = true;
    else if (item == "equal-modulus") mask.equal_modulus = true;
    else
      throw std::invalid_argument(
          "unknown filter flag '" + item +
          "' (expected horizontal, common-vertex, equal-residue, equal-modulus)");
  }
  return mask;
}

int cmd_survey(Int mod_max, const std::string& filter, unsigned workers,
               const std::string& csv_path, const std::string& json_path,
               const OracleConfig& oracle, bool json_stdout) {
  SurveyConfig cfg;
  cfg.mod_max = mod_max;
  cfg.oracle = oracle;
  cfg.workers = workers;
  if (!filter.empty()) cfg.pair_filter = parse_filter(filter);

  SurveyResult result = run_survey(cfg);
  KohlCheckReport kohl = check_kohl_set(result.histogram);
  std::vector<Discrepancy> discrepancies;
  for (const PairVerdictRow& row : result.rows)
    if (auto d = theorem_discrepancy(row.t1, row.t2, row.verdict))
      discrepancies.push_back(*std::move(d));

  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::invalid_argument("cannot open CSV output path " + csv_path);
    write_survey_csv(result, out);
  }
  nlohmann::json summary = survey_summary_json(result, kohl, discrepancies);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::invalid_argument("cannot open JSON output path " + json_path);
    out << summary.dump(2) << "\n";
  }

  if (json_stdout) {
    std::cout << summary.dump(2) << "\n";
    return 0;
  }
  std::cout << "surveyed pairs: " << result.histogram.total() << " (errors: "
            << result.errors.size() << ")\n";
  std::cout << "finite orders:";
  for (const auto& [order, count] : result.histogram.finite_counts)
    std::cout << " " << order << "x" << count;
  std::cout << "\ninfinite: certified=" << result.histogram.infinite_certified
            << " heuristic=" << result.histogram.infinite_heuristic
            << " inconclusive=" << result.histogram.inconclusive << "\n";
  std::cout << "kohl check: all_in_set=" << yesno(kohl.all_in_kohl_set)
            << " all_divide_840=" << yesno(kohl.all_divide_840)
            << " violations=" << kohl.violations.size() << "\n";
  std::cout << "discrepancies: " << discrepancies.size() << "\n";
  std::cout << "runtime_seconds: " << result.runtime_seconds << "\n";
  return 0;
}

int run_witness(const std::string& kind, const std::string& s1, const std::string& s2, int n,
                Int h, bool json) {
  ClassTransposition t1 = parse_class_transposition(s1);
  ClassTransposition t2 = parse_class_transposition(s2);
  InfiniteWitness w;
  if (kind == "common-vertex") w = common_vertex_chain_witness(t1, t2, n);
  else if (kind == "equal-residue") w = equal_residue_chain_witness(t1, t2, n, h);
  else throw std::invalid_argument("witness kind must be common-vertex or equal-residue");
  if (!verify_witness(w)) throw InternalError("generated witness failed verification");

  if (json) {
    std::cout << witness_to_json(w).dump(2) << "\n";
    return 0;
  }
  std::cout << "kind: " << kind << "\nn: " << w.n << "\nchain:";
  for (std::size_t i = 0; i < w.chain.size(); ++i)
    std::cout << " x" << (i + 1) << "=" << w.chain[i];
  std::cout << "\nsystem:";
  if (w.kind == InfiniteWitness::Kind::CommonVertexChain) {
    std::cout << " " << w.rows[0].p << "*x_i - " << w.rows[0].q << "*x_{i+1} = " << w.rows[0].d
              << "  (i = 1.." << w.rows.size() << ")";
  } else {
    std::cout << " alternating " << w.rows[0].p << "*x_i = " << w.rows[0].q << "*x_{i+1} / "
              << w.rows[1].p << "*x_i = " << w.rows[1].q << "*x_{i+1}";
  }
  std::cout << "\nverified: substitution ok, distinctness ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* bits = std::getenv("CT_MAX_INT_BITS")) {
    try {
      ct::set_int_bits(std::stoi(bits));
    } catch (const std::exception& e) {
      std::cerr << "error: CT_MAX_INT_BITS: " << e.what() << "\n";
      return 1;
    }
  }

  CLI::App app{"class transpositions of Z: orders of products, graphs, surveys"};
  app.require_subcommand(1);
  ct::OracleConfig defaults;

  std::string s1, s2;
  ct::Int x = 0;
  bool json = false;

  auto* apply_cmd = app.add_subcommand("apply", "image of an integer under a transposition");
  apply_cmd->add_option("transposition", s1, "transposition literal, e.g. \"[0(2),3(4)]\"")
      ->required();
  apply_cmd->add_option("x", x, "integer to map")->required();
  apply_cmd->add_flag("--json", json, "JSON output");

  auto* order_cmd = app.add_subcommand("order", "order of the product of two transpositions");
  ct::OracleConfig ocfg;
  order_cmd->add_option("tau1", s1)->required();
  order_cmd->add_option("tau2", s2)->required();
  order_cmd->add_option("--power-max", ocfg.power_n_max, "power scan budget");
  order_cmd->add_option("--mod-max", ocfg.power_mod_max, "power scan modulus threshold");
  order_cmd->add_option("--orbit-steps", ocfg.orbit_step_max, "orbit trace step budget");
  order_cmd->add_option("--orbit-bound", ocfg.orbit_value_bound, "orbit escape magnitude");
  bool show_map = false;
  order_cmd->add_flag("--show-map", show_map, "print the product's piece table");
  order_cmd->add_flag("--json", json, "JSON output");

  auto* graph_cmd = app.add_subcommand("graph", "component structure of the pair graph");
  ct::Int bound = defaults.window_bound;
  bool dump_edges = false;
  graph_cmd->add_option("tau1", s1)->required();
  graph_cmd->add_option("tau2", s2)->required();
  graph_cmd->add_option("--bound", bound, "window bound on |mu|");
  graph_cmd->add_flag("--dump-edges", dump_edges, "print the adjacency list");
  graph_cmd->add_flag("--json", json, "JSON output");

  auto* classify_cmd = app.add_subcommand("classify", "predicate flags for a pair");
  classify_cmd->add_option("tau1", s1)->required();
  classify_cmd->add_option("tau2", s2)->required();
  classify_cmd->add_flag("--json", json, "JSON output");

  auto* cycle_cmd = app.add_subcommand("cycle", "closed-form unbounded cycle prefix");
  ct::Int k = 0, m = 0, t_max = 12;
  cycle_cmd->add_option("--k", k, "odd residue k of the slanted factor")->required();
  cycle_cmd->add_option("--m", m, "even modulus m of the slanted factor")->required();
  cycle_cmd->add_option("--t-max", t_max, "closed-form terms to emit");
  cycle_cmd->add_flag("--json", json, "JSON output");

  auto* survey_cmd = app.add_subcommand("survey", "exhaustive pair survey up to a modulus bound");
  ct::Int mod_max = 8;
  std::string filter, csv_path, json_path;
  unsigned workers = 0;
  ct::OracleConfig scfg;
  survey_cmd->add_option("--mod-max", mod_max, "modulus bound (>= 2)");
  survey_cmd->add_option("--filter", filter, "required flags, comma separated");
  survey_cmd->add_option("--workers", workers, "worker threads (0 = hardware)");
  survey_cmd->add_option("--csv", csv_path, "write per-pair CSV here");
  survey_cmd->add_option("--json", json_path, "write JSON summary here");
  survey_cmd->add_option("--power-max", scfg.power_n_max, "power scan budget");
  survey_cmd->add_option("--mod-scan-max", scfg.power_mod_max, "power scan modulus threshold");
  bool survey_json_stdout = false;
  survey_cmd->add_flag("--json-stdout", survey_json_stdout, "print JSON summary to stdout");

  auto* witness_cmd = app.add_subcommand("witness", "Diophantine chain witness for infinitude");
  std::string kind;
  int n = 1;
  ct::Int h = 1;
  witness_cmd->add_option("kind", kind, "common-vertex or equal-residue")->required();
  witness_cmd->add_option("tau1", s1)->required();
  witness_cmd->add_option("tau2", s2)->required();
  witness_cmd->add_option("--n", n, "chain length parameter")->required();
  witness_cmd->add_option("--scale", h, "scale h of the geometric solution (equal-residue)");
  witness_cmd->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*apply_cmd) {
      ct::ClassTransposition t = ct::parse_class_transposition(s1);
      ct::Int y = t.apply(x);
      if (json) std::cout << nlohmann::json{{"x", x}, {"image", y}}.dump() << "\n";
      else std::cout << y << "\n";
      return 0;
    }
    if (*order_cmd) return run_order(s1, s2, ocfg, json, show_map);
    if (*graph_cmd) return run_graph(s1, s2, bound, dump_edges, json);
    if (*classify_cmd) {
      ct::PairClass flags = ct::classify_pair(ct::parse_class_transposition(s1),
                                              ct::parse_class_transposition(s2));
      if (json) {
        std::cout << ct::pair_class_to_json(flags).dump(2) << "\n";
      } else {
        std::cout << "horizontal: " << yesno(flags.horizontal)
                  << "\ncommon_vertex: " << yesno(flags.common_vertex)
                  << "\nequal_residue: " << yesno(flags.equal_residue)
                  << "\nequal_modulus: " << yesno(flags.equal_modulus) << "\n";
      }
      return 0;
    }
    if (*cycle_cmd) return run_cycle(k, m, t_max, json);
    if (*survey_cmd)
      return cmd_survey(mod_max, filter, workers, csv_path, json_path, scfg, survey_json_stdout);
    if (*witness_cmd) return run_witness(kind, s1, s2, n, h, json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ct::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
