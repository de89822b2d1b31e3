// JSON report schemas shared by the CLI and the survey writer.
#pragma once

#include <json.hpp>

#include "ct/gamma.hpp"
#include "ct/survey.hpp"

namespace ct {

// {order: integer | "inf" | "unknown", certified: bool, method: [...], ...}
nlohmann::json verdict_to_json(const OrderVerdict& v);

// {verdict, source_theorem, witness_available}
nlohmann::json certificate_to_json(const OrderCertificate& cert, bool witness_available);

nlohmann::json pair_class_to_json(const PairClass& flags);
nlohmann::json witness_to_json(const InfiniteWitness& w);
nlohmann::json orbit_to_json(const OrbitResult& r);
nlohmann::json oracle_config_to_json(const OracleConfig& cfg);
nlohmann::json component_to_json(const GammaGraph& g, const Component& c);

// {config, histogram, kohl_check, discrepancies, runtime_seconds}
nlohmann::json survey_summary_json(const SurveyResult& result, const KohlCheckReport& kohl,
                                   const std::vector<Discrepancy>& discrepancies);

}  // namespace ct
