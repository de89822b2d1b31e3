// Exhaustive enumeration of class transpositions and unordered pairs up to a
// modulus bound, order statistics, and the checks against the nineteen
// observed orders (all dividing 840). Pairs are independent, so the survey
// fans out over worker threads and merges deterministically.
#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ct/oracle.hpp"

namespace ct {

inline constexpr Int kKohlDivisor = 840;
inline constexpr std::array<Int, 19> kKohlOrderSet = {
    1, 2, 3, 4, 6, 8, 10, 12, 15, 20, 24, 30, 40, 42, 60, 84, 120, 168, 420};
bool in_kohl_set(Int order);

struct SurveyConfig {
  Int mod_max = 8;
  OracleConfig oracle{};
  // When set, a pair is surveyed only if every flag set here also holds for it.
  std::optional<PairClass> pair_filter;
  unsigned workers = 0;  // 0 = hardware concurrency
};

struct OrderHistogram {
  std::map<Int, std::size_t> finite_counts;
  std::size_t infinite_certified = 0;
  std::size_t infinite_heuristic = 0;
  std::size_t inconclusive = 0;
  // First pair (in enumeration order) realizing each finite order.
  std::map<Int, std::pair<ClassTransposition, ClassTransposition>> realizations;

  std::size_t total() const {
    std::size_t n = infinite_certified + infinite_heuristic + inconclusive;
    for (const auto& [order, count] : finite_counts) n += count;
    return n;
  }
};

struct PairVerdictRow {
  std::size_t pair_index;
  ClassTransposition t1;
  ClassTransposition t2;
  PairClass flags;
  OrderVerdict verdict;
};

struct SurveyError {
  ClassTransposition t1;
  ClassTransposition t2;
  std::string message;
};

struct SurveyResult {
  SurveyConfig config;
  OrderHistogram histogram;
  std::vector<PairVerdictRow> rows;  // surveyed pairs, enumeration order
  std::vector<SurveyError> errors;   // per-pair failures; never fatal
  double runtime_seconds = 0.0;
};

struct KohlCheckReport {
  bool all_in_kohl_set = true;
  bool all_divide_840 = true;
  struct Violation {
    ClassTransposition t1;
    ClassTransposition t2;
    Int order;
  };
  std::vector<Violation> violations;
};

// All canonical valid transpositions with both moduli in [2, mod_max].
std::vector<ClassTransposition> enumerate_class_transpositions(Int mod_max);

SurveyResult run_survey(const SurveyConfig& cfg);
OrderHistogram survey_orders(const SurveyConfig& cfg);
KohlCheckReport check_kohl_set(const OrderHistogram& h);

struct Discrepancy {
  ClassTransposition t1;
  ClassTransposition t2;
  std::string check;
  std::string detail;
};

// A verdict incompatible with a theorem whose hypothesis the pair satisfies,
// or none. This is the single checker behind the consistency sweep and the
// survey report.
std::optional<Discrepancy> theorem_discrepancy(const ClassTransposition& t1,
                                               const ClassTransposition& t2,
                                               const OrderVerdict& verdict);

// Runs the oracle over every pair matching a theorem hypothesis and returns
// the (expected-empty) list of incompatibilities.
std::vector<Discrepancy> theorem_consistency_sweep(const SurveyConfig& cfg);

// CSV rows: m1,r1,m2,r2,m3,r3,m4,r4,horizontal,common_vertex,equal_residue,
// equal_modulus,order,certified,method.
void write_survey_csv(const SurveyResult& result, std::ostream& out);

}  // namespace ct
