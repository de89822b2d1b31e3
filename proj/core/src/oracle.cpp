#include "ct/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ct {

void OracleConfig::validate() const {
  if (power_n_max < 1 || power_mod_max < 1 || orbit_step_max < 1 || orbit_value_bound < 1 ||
      window_bound < 1)
    throw std::invalid_argument("oracle config fields must all be positive");
}

std::string theorem_label(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::CommonVertex: return "Thm 3.1";
    case TheoremTag::EqualResidueRatio: return "Thm 4.3(1)";
  }
  return "?";
}

OrbitResult orbit_trace(const RcwaMap& sigma, Int x0, const OracleConfig& cfg) {
  cfg.validate();
  Int x = x0;
  for (Int step = 1; step <= cfg.orbit_step_max; ++step) {
    x = sigma(x);
    Int mag = x < 0 ? -x : x;
    if (mag > cfg.orbit_value_bound) return {OrbitResult::Kind::Escaped, 0, step, x};
    if (x == x0) return {OrbitResult::Kind::Cycle, step, 0, 0};
  }
  return {OrbitResult::Kind::StepBudgetExhausted, 0, 0, 0};
}

std::optional<Int> finite_order_via_orbits(const RcwaMap& sigma, const OracleConfig& cfg) {
  cfg.validate();
  Int candidate = 1;
  for (Int x0 = 0; x0 < 3 * sigma.modulus(); ++x0) {
    OrbitResult r = orbit_trace(sigma, x0, cfg);
    if (r.kind != OrbitResult::Kind::Cycle) return std::nullopt;
    try {
      candidate = lcm(candidate, r.length);
    } catch (const OverflowError&) {
      return std::nullopt;
    }
  }
  // Cycle lengths divide the order, so a verified identity pins it exactly.
  if (!power(sigma, candidate).is_identity()) return std::nullopt;
  return candidate;
}

bool verify_finite_order(const RcwaMap& sigma, Int n) {
  if (n < 1) return false;
  // One sequential walk: identity must appear at n and at no proper divisor.
  const RcwaMap base = sigma.canonicalized();
  RcwaMap cur = base;
  for (Int k = 1; k < n; ++k) {
    if (k > 1) cur = compose(cur, base);
    if (n % k == 0 && cur.is_identity()) return false;
  }
  if (n > 1) cur = compose(cur, base);
  return cur.is_identity();
}

namespace {

struct PipelineState {
  OrderVerdict v;
  RcwaMap sigma;

  void stage(const char* name) { v.method.emplace_back(name); }
};

// Accepts a claimed finite order only after checking the n-th power is the
// identity and no proper-divisor power is. A failed check marks the verdict
// inconsistent and sends the pipeline on to the scan.
bool try_finish_finite(PipelineState& st, Int n, std::optional<CertSource> source) {
  st.stage("order-verification");
  if (!verify_finite_order(st.sigma, n)) {
    st.v.consistent = false;
    return false;
  }
  st.v.kind = OrderVerdict::Kind::FiniteOrder;
  st.v.order = n;
  st.v.cert_source = source;
  return true;
}

}  // namespace

OrderVerdict order_of_product(const ClassTransposition& t1, const ClassTransposition& t2,
                              const OracleConfig& cfg) {
  cfg.validate();
  PipelineState st;
  st.sigma = compose(RcwaMap::from_class_transposition(t1), RcwaMap::from_class_transposition(t2));
  const PairClass flags = classify_pair(t1, t2);

  bool decided = false;
  // (1) equality, (2) disjoint supports, (3) common vertex, (4) equal-residue
  // ratio, (5) power scan, (6) heuristics. First decisive stage wins; finite
  // certificates are verified against actual powers before being accepted.
  st.stage("equality");
  if (t1 == t2) decided = try_finish_finite(st, 1, CertSource::Equality);

  if (!decided) {
    st.stage("disjoint-support");
    if (auto cert = disjoint_support_order(t1, t2);
        cert && cert->source == CertSource::DisjointSupport)
      decided = try_finish_finite(st, cert->order, cert->source);
  }

  if (!decided && flags.common_vertex) {
    st.stage("common-vertex-certificate");
    OrderCertificate cert = common_vertex_order(t1, t2);
    if (cert.kind == OrderCertificate::Kind::Infinite) {
      st.v.kind = OrderVerdict::Kind::InfiniteCertified;
      st.v.theorem = TheoremTag::CommonVertex;
      st.v.cert_source = cert.source;
      decided = true;
    } else {
      decided = try_finish_finite(st, cert.order, cert.source);
    }
  }

  if (!decided && flags.equal_residue) {
    st.stage("equal-residue-certificate");
    if (auto cert = equal_residue_infinite(t1, t2)) {
      st.v.kind = OrderVerdict::Kind::InfiniteCertified;
      st.v.theorem = TheoremTag::EqualResidueRatio;
      st.v.cert_source = cert->source;
      decided = true;
    }
  }

  if (!decided) {
    st.stage("power-scan");
    OrderScanResult scan = power_order_scan(st.sigma, cfg.power_n_max, cfg.power_mod_max);
    if (scan.kind == OrderScanResult::Kind::Finite) {
      // The stepwise scan is itself the verification: it saw a non-identity
      // at every power below scan.order and the identity exactly there.
      st.v.kind = OrderVerdict::Kind::FiniteOrder;
      st.v.order = scan.order;
      decided = true;
    } else {
      if (scan.kind == OrderScanResult::Kind::ModulusBlowup)
        st.v.blowup = BlowupEvidence{scan.step, scan.modulus_reached};
      st.stage("orbit-trace");
      for (Int r = 0; r < st.sigma.modulus() && !st.v.escape; ++r) {
        if (st.sigma.pieces()[std::size_t(r)].is_identity()) continue;
        OrbitResult orbit = orbit_trace(st.sigma, r, cfg);
        if (orbit.kind == OrbitResult::Kind::Escaped)
          st.v.escape = EscapeEvidence{r, orbit.step, orbit.value};
      }
      if (st.v.blowup || st.v.escape) {
        st.v.kind = OrderVerdict::Kind::InfiniteHeuristic;
      } else {
        st.v.kind = OrderVerdict::Kind::Inconclusive;
        st.v.steps_done = scan.steps_done;
      }
      decided = true;
    }
  }

  // Allowed-set certificates never short-circuit; they audit the verdict.
  if (flags.horizontal) {
    st.stage("allowed-set-horizontal");
    OrderCertificate cert = horizontal_order_set(t1, t2);
    if (st.v.kind == OrderVerdict::Kind::FiniteOrder) {
      if (!std::binary_search(cert.allowed_orders.begin(), cert.allowed_orders.end(), st.v.order))
        st.v.consistent = false;
    } else if (st.v.kind != OrderVerdict::Kind::Inconclusive && !cert.allows_infinite) {
      st.v.consistent = false;
    }
  }
  if (flags.equal_modulus) {
    if (auto cert = equal_modulus_allowed_set(t1, t2)) {
      st.stage("allowed-set-equal-modulus");
      if (st.v.kind == OrderVerdict::Kind::FiniteOrder &&
          !std::binary_search(cert->allowed_orders.begin(), cert->allowed_orders.end(),
                              st.v.order))
        st.v.consistent = false;
    }
  }
  return st.v;
}

}  // namespace ct
