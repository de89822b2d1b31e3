#include "ct/survey.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <thread>

namespace ct {

bool in_kohl_set(Int order) {
  return std::find(kKohlOrderSet.begin(), kKohlOrderSet.end(), order) != kKohlOrderSet.end();
}

std::vector<ClassTransposition> enumerate_class_transpositions(Int mod_max) {
  if (mod_max < 2) throw std::invalid_argument("mod_max must be >= 2");
  std::vector<ClassTransposition> out;
  for (Int m1 = 2; m1 <= mod_max; ++m1) {
    for (Int m2 = m1; m2 <= mod_max; ++m2) {
      for (Int r1 = 0; r1 < m1; ++r1) {
        // Canonical order inside the pair: (m1, r1) < (m2, r2).
        for (Int r2 = (m1 == m2 ? r1 + 1 : 0); r2 < m2; ++r2) {
          ResidueClass c1(r1, m1), c2(r2, m2);
          if (classes_disjoint(c1, c2)) out.emplace_back(c1, c2);
        }
      }
    }
  }
  return out;
}

namespace {

bool passes_filter(const PairClass& flags, const std::optional<PairClass>& filter) {
  if (!filter) return true;
  if (filter->horizontal && !flags.horizontal) return false;
  if (filter->common_vertex && !flags.common_vertex) return false;
  if (filter->equal_residue && !flags.equal_residue) return false;
  if (filter->equal_modulus && !flags.equal_modulus) return false;
  return true;
}

struct WorkerBucket {
  std::vector<PairVerdictRow> rows;
  std::vector<SurveyError> errors;
};

void tally(OrderHistogram& h, const PairVerdictRow& row) {
  switch (row.verdict.kind) {
    case OrderVerdict::Kind::FiniteOrder: {
      ++h.finite_counts[row.verdict.order];
      h.realizations.try_emplace(row.verdict.order, row.t1, row.t2);
      break;
    }
    case OrderVerdict::Kind::InfiniteCertified: ++h.infinite_certified; break;
    case OrderVerdict::Kind::InfiniteHeuristic: ++h.infinite_heuristic; break;
    case OrderVerdict::Kind::Inconclusive: ++h.inconclusive; break;
  }
}

}  // namespace

SurveyResult run_survey(const SurveyConfig& cfg) {
  cfg.oracle.validate();
  const auto t_start = std::chrono::steady_clock::now();

  const std::vector<ClassTransposition> cts = enumerate_class_transpositions(cfg.mod_max);
  const std::size_t n = cts.size();
  const std::size_t total_pairs = n * (n + 1) / 2;

  unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, 64);

  // Row offsets of the linearized upper triangle (i <= j).
  std::vector<std::size_t> row_offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) row_offset[i + 1] = row_offset[i] + (n - i);

  std::vector<WorkerBucket> buckets(workers);
  auto work = [&](unsigned w) {
    WorkerBucket& bucket = buckets[w];
    for (std::size_t idx = w; idx < total_pairs; idx += workers) {
      const std::size_t i =
          std::size_t(std::upper_bound(row_offset.begin(), row_offset.end(), idx) -
                      row_offset.begin()) - 1;
      const std::size_t j = i + (idx - row_offset[i]);
      const ClassTransposition& t1 = cts[i];
      const ClassTransposition& t2 = cts[j];
      const PairClass flags = classify_pair(t1, t2);
      if (!passes_filter(flags, cfg.pair_filter)) continue;
      try {
        OrderVerdict verdict = order_of_product(t1, t2, cfg.oracle);
        bucket.rows.push_back({idx, t1, t2, flags, std::move(verdict)});
      } catch (const std::exception& e) {
        bucket.errors.push_back({t1, t2, e.what()});
      }
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  SurveyResult result;
  result.config = cfg;
  for (auto& bucket : buckets) {
    result.rows.insert(result.rows.end(), std::make_move_iterator(bucket.rows.begin()),
                       std::make_move_iterator(bucket.rows.end()));
    result.errors.insert(result.errors.end(), bucket.errors.begin(), bucket.errors.end());
  }
  // Enumeration order makes the histogram exemplars and the CSV independent
  // of the worker count.
  std::sort(result.rows.begin(), result.rows.end(),
            [](const PairVerdictRow& a, const PairVerdictRow& b) {
              return a.pair_index < b.pair_index;
            });
  for (const PairVerdictRow& row : result.rows) tally(result.histogram, row);

  result.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return result;
}

OrderHistogram survey_orders(const SurveyConfig& cfg) { return run_survey(cfg).histogram; }

KohlCheckReport check_kohl_set(const OrderHistogram& h) {
  KohlCheckReport report;
  for (const auto& [order, count] : h.finite_counts) {
    const bool member = in_kohl_set(order);
    const bool divides = kKohlDivisor % order == 0;
    if (member && divides) continue;
    report.all_in_kohl_set = report.all_in_kohl_set && member;
    report.all_divide_840 = report.all_divide_840 && divides;
    auto it = h.realizations.find(order);
    if (it != h.realizations.end())
      report.violations.push_back({it->second.first, it->second.second, order});
  }
  return report;
}

namespace {

std::string kind_name(OrderVerdict::Kind kind) {
  switch (kind) {
    case OrderVerdict::Kind::FiniteOrder: return "finite";
    case OrderVerdict::Kind::InfiniteCertified: return "infinite-certified";
    case OrderVerdict::Kind::InfiniteHeuristic: return "infinite-heuristic";
    case OrderVerdict::Kind::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string verdict_brief(const OrderVerdict& v) {
  if (v.kind == OrderVerdict::Kind::FiniteOrder)
    return "finite(" + std::to_string(v.order) + ")";
  return kind_name(v.kind);
}

bool is_infinite(const OrderVerdict& v) {
  return v.kind == OrderVerdict::Kind::InfiniteCertified ||
         v.kind == OrderVerdict::Kind::InfiniteHeuristic;
}

}  // namespace

std::optional<Discrepancy> theorem_discrepancy(const ClassTransposition& t1,
                                               const ClassTransposition& t2,
                                               const OrderVerdict& verdict) {
  const PairClass flags = classify_pair(t1, t2);

  if (flags.common_vertex) {
    OrderCertificate cert = common_vertex_order(t1, t2);
    if (cert.kind == OrderCertificate::Kind::Finite) {
      if (verdict.kind != OrderVerdict::Kind::FiniteOrder || verdict.order != cert.order)
        return Discrepancy{t1, t2, "common-vertex",
                           "expected finite(" + std::to_string(cert.order) + "), got " +
                               verdict_brief(verdict)};
    } else if (!is_infinite(verdict)) {
      return Discrepancy{t1, t2, "common-vertex",
                         "expected infinite, got " + verdict_brief(verdict)};
    }
  }

  if (flags.horizontal) {
    static const std::vector<Int> allowed = {1, 2, 3, 4, 6, 12};
    if (verdict.kind != OrderVerdict::Kind::FiniteOrder ||
        !std::binary_search(allowed.begin(), allowed.end(), verdict.order))
      return Discrepancy{t1, t2, "horizontal",
                         "expected finite order in {1,2,3,4,6,12}, got " + verdict_brief(verdict)};
  }

  if (flags.equal_residue) {
    if (auto cert = equal_residue_infinite(t1, t2); cert && !is_infinite(verdict))
      return Discrepancy{t1, t2, "equal-residue",
                         "expected infinite, got " + verdict_brief(verdict)};
  }

  if (flags.equal_modulus) {
    static const std::vector<Int> allowed = {1, 2, 3, 6};
    if (equal_modulus_allowed_set(t1, t2) && verdict.kind == OrderVerdict::Kind::FiniteOrder &&
        !std::binary_search(allowed.begin(), allowed.end(), verdict.order))
      return Discrepancy{t1, t2, "equal-modulus",
                         "expected finite order in {1,2,3,6} or infinite, got " +
                             verdict_brief(verdict)};
  }

  return std::nullopt;
}

std::vector<Discrepancy> theorem_consistency_sweep(const SurveyConfig& cfg) {
  SurveyResult result = run_survey(cfg);
  std::vector<Discrepancy> out;
  for (const PairVerdictRow& row : result.rows) {
    if (auto d = theorem_discrepancy(row.t1, row.t2, row.verdict)) out.push_back(*std::move(d));
  }
  return out;
}

void write_survey_csv(const SurveyResult& result, std::ostream& out) {
  out << "m1,r1,m2,r2,m3,r3,m4,r4,horizontal,common_vertex,equal_residue,equal_modulus,"
         "order,certified,method\n";
  for (const PairVerdictRow& row : result.rows) {
    const auto& v = row.verdict;
    out << row.t1.first().modulus() << ',' << row.t1.first().residue() << ','
        << row.t1.second().modulus() << ',' << row.t1.second().residue() << ','
        << row.t2.first().modulus() << ',' << row.t2.first().residue() << ','
        << row.t2.second().modulus() << ',' << row.t2.second().residue() << ','
        << int(row.flags.horizontal) << ',' << int(row.flags.common_vertex) << ','
        << int(row.flags.equal_residue) << ',' << int(row.flags.equal_modulus) << ',';
    if (v.kind == OrderVerdict::Kind::FiniteOrder) out << v.order;
    else if (is_infinite(v)) out << "inf";
    else out << "unknown";
    out << ',' << int(v.certified()) << ',';
    for (std::size_t i = 0; i < v.method.size(); ++i) {
      if (i) out << ';';
      out << v.method[i];
    }
    out << '\n';
  }
}

}  // namespace ct
