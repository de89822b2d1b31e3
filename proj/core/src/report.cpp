#include "ct/report.hpp"

namespace ct {

using nlohmann::json;

json verdict_to_json(const OrderVerdict& v) {
  json j;
  if (v.kind == OrderVerdict::Kind::FiniteOrder) j["order"] = v.order;
  else if (v.kind == OrderVerdict::Kind::InfiniteCertified ||
           v.kind == OrderVerdict::Kind::InfiniteHeuristic) j["order"] = "inf";
  else j["order"] = "unknown";
  j["certified"] = v.certified();
  j["method"] = v.method;
  j["consistent"] = v.consistent;
  if (v.theorem) j["theorem"] = theorem_label(*v.theorem);
  if (v.blowup) j["modulus_blowup"] = {{"step", v.blowup->step}, {"modulus", v.blowup->modulus}};
  if (v.escape)
    j["orbit_escape"] = {{"start", v.escape->start}, {"step", v.escape->step},
                         {"value", v.escape->value}};
  if (v.kind == OrderVerdict::Kind::Inconclusive) j["steps_done"] = v.steps_done;
  return j;
}

json certificate_to_json(const OrderCertificate& cert, bool witness_available) {
  json j;
  switch (cert.kind) {
    case OrderCertificate::Kind::Finite:
      j["verdict"] = "finite(" + std::to_string(cert.order) + ")";
      break;
    case OrderCertificate::Kind::Infinite:
      j["verdict"] = "infinite";
      break;
    case OrderCertificate::Kind::AllowedSet: {
      std::string s = "allowed{";
      for (std::size_t i = 0; i < cert.allowed_orders.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cert.allowed_orders[i]);
      }
      if (cert.allows_infinite) s += ",inf";
      s += "}";
      j["verdict"] = s;
      break;
    }
  }
  j["source_theorem"] =
      cert_source_label(cert.source, cert.kind != OrderCertificate::Kind::Infinite);
  j["witness_available"] = witness_available;
  return j;
}

json pair_class_to_json(const PairClass& flags) {
  return {{"horizontal", flags.horizontal},
          {"common_vertex", flags.common_vertex},
          {"equal_residue", flags.equal_residue},
          {"equal_modulus", flags.equal_modulus}};
}

json witness_to_json(const InfiniteWitness& w) {
  json rows = json::array();
  for (const DiophantineRow& row : w.rows)
    rows.push_back({{"p", row.p}, {"q", row.q}, {"d", row.d}});
  return {{"kind", w.kind == InfiniteWitness::Kind::CommonVertexChain ? "common-vertex"
                                                                      : "equal-residue"},
          {"n", w.n},
          {"chain", w.chain},
          {"rows", rows},
          {"verified", verify_witness(w)}};
}

json orbit_to_json(const OrbitResult& r) {
  switch (r.kind) {
    case OrbitResult::Kind::Cycle: return {{"outcome", "cycle"}, {"length", r.length}};
    case OrbitResult::Kind::Escaped:
      return {{"outcome", "escaped"}, {"step", r.step}, {"value", r.value}};
    case OrbitResult::Kind::StepBudgetExhausted: return {{"outcome", "step-budget-exhausted"}};
  }
  return {};
}

json oracle_config_to_json(const OracleConfig& cfg) {
  return {{"power_n_max", cfg.power_n_max},
          {"power_mod_max", cfg.power_mod_max},
          {"orbit_step_max", cfg.orbit_step_max},
          {"orbit_value_bound", cfg.orbit_value_bound},
          {"window_bound", cfg.window_bound}};
}

json component_to_json(const GammaGraph& g, const Component& c) {
  std::string kind;
  switch (c.kind) {
    case ComponentKind::Type1: kind = "Type1"; break;
    case ComponentKind::Type2: kind = "Type2"; break;
    case ComponentKind::Truncated: kind = "Truncated"; break;
  }
  std::vector<Int> mus;
  std::vector<std::string> names;
  for (auto id : c.vertex_ids) {
    mus.push_back(g.vertices()[std::size_t(id)].v.mu);
    names.push_back(g.vertex_name(id));
  }
  return {{"kind", kind}, {"length", c.length}, {"vertices", names}, {"mu", mus}};
}

json survey_summary_json(const SurveyResult& result, const KohlCheckReport& kohl,
                         const std::vector<Discrepancy>& discrepancies) {
  json finite = json::object();
  for (const auto& [order, count] : result.histogram.finite_counts)
    finite[std::to_string(order)] = count;

  json realizations = json::object();
  for (const auto& [order, pair] : result.histogram.realizations)
    realizations[std::to_string(order)] = {to_string(pair.first), to_string(pair.second)};

  json violations = json::array();
  for (const auto& v : kohl.violations)
    violations.push_back({{"tau1", to_string(v.t1)}, {"tau2", to_string(v.t2)},
                          {"order", v.order}});

  json disc = json::array();
  for (const Discrepancy& d : discrepancies)
    disc.push_back({{"tau1", to_string(d.t1)}, {"tau2", to_string(d.t2)}, {"check", d.check},
                    {"detail", d.detail}});

  json errors = json::array();
  for (const SurveyError& e : result.errors)
    errors.push_back({{"tau1", to_string(e.t1)}, {"tau2", to_string(e.t2)},
                      {"message", e.message}});

  json filter;
  if (result.config.pair_filter) filter = pair_class_to_json(*result.config.pair_filter);

  return {{"config",
           {{"mod_max", result.config.mod_max},
            {"oracle", oracle_config_to_json(result.config.oracle)},
            {"pair_filter", filter},
            {"workers", result.config.workers}}},
          {"histogram",
           {{"finite_counts", finite},
            {"infinite_certified", result.histogram.infinite_certified},
            {"infinite_heuristic", result.histogram.infinite_heuristic},
            {"inconclusive", result.histogram.inconclusive},
            {"realizations", realizations}}},
          {"kohl_check",
           {{"all_in_kohl_set", kohl.all_in_kohl_set},
            {"all_divide_840", kohl.all_divide_840},
            {"violations", violations}}},
          {"discrepancies", disc},
          {"errors", errors},
          {"runtime_seconds", result.runtime_seconds}};
}

}  // namespace ct
