#include <doctest.h>

#include <algorithm>

#include "ct/oracle.hpp"
#include "helpers.hpp"

using namespace ct;
using namespace ct::testing;

namespace {

bool method_includes(const OrderVerdict& v, const std::string& stage) {
  return std::find(v.method.begin(), v.method.end(), stage) != v.method.end();
}

RcwaMap product_of(const ClassTransposition& a, const ClassTransposition& b) {
  return compose(RcwaMap::from_class_transposition(a), RcwaMap::from_class_transposition(b));
}

}  // namespace

TEST_CASE("pipeline worked examples") {
  OrderVerdict v = order_of_product(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4));
  CHECK(v.kind == OrderVerdict::Kind::FiniteOrder);
  CHECK(v.order == 3);
  CHECK(method_includes(v, "common-vertex-certificate"));
  CHECK(v.consistent);

  v = order_of_product(ctp(0, 2, 1, 2), ctp(0, 2, 3, 4));
  CHECK(v.kind == OrderVerdict::Kind::InfiniteCertified);
  REQUIRE(v.theorem.has_value());
  CHECK(*v.theorem == TheoremTag::CommonVertex);
  CHECK(theorem_label(*v.theorem) == "Thm 3.1");

  v = order_of_product(ctp(0, 4, 1, 4), ctp(2, 4, 3, 4));
  CHECK(v.kind == OrderVerdict::Kind::FiniteOrder);
  CHECK(v.order == 2);
  CHECK(method_includes(v, "disjoint-support"));

  v = order_of_product(ctp(0, 2, 1, 2), ctp(0, 2, 1, 2));
  CHECK(v.kind == OrderVerdict::Kind::FiniteOrder);
  CHECK(v.order == 1);
}

TEST_CASE("equal-residue certified infinite verdict") {
  OrderVerdict v = order_of_product(ctp(1, 4, 2, 6), ctp(1, 6, 2, 4));
  CHECK(v.kind == OrderVerdict::Kind::InfiniteCertified);
  REQUIRE(v.theorem.has_value());
  CHECK(*v.theorem == TheoremTag::EqualResidueRatio);
  CHECK(theorem_label(*v.theorem) == "Thm 4.3(1)");
}

TEST_CASE("heuristic infinite verdicts carry evidence") {
  // Generic slanted pair; no certificate applies.
  OrderVerdict v = order_of_product(ctp(0, 2, 3, 8), ctp(2, 7, 5, 7));
  CHECK(v.kind == OrderVerdict::Kind::InfiniteHeuristic);
  CHECK(v.blowup.has_value());
  CHECK(method_includes(v, "power-scan"));
  CHECK(method_includes(v, "orbit-trace"));
  CHECK_FALSE(v.certified());
}

TEST_CASE("orbit tracing") {
  OracleConfig cfg;

  RcwaMap escaping = product_of(ctp(0, 2, 1, 2), ctp(0, 2, 3, 4));
  OrbitResult r = orbit_trace(escaping, 3, cfg);
  CHECK(r.kind == OrbitResult::Kind::Escaped);
  CHECK(r.value > cfg.orbit_value_bound);

  RcwaMap order3 = product_of(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4));
  r = orbit_trace(order3, 0, cfg);
  CHECK(r.kind == OrbitResult::Kind::Cycle);
  CHECK(r.length == 3);

  r = orbit_trace(RcwaMap::identity(), 5, cfg);
  CHECK(r.kind == OrbitResult::Kind::Cycle);
  CHECK(r.length == 1);
}

TEST_CASE("orbit lcm complements the power scan") {
  OracleConfig cfg;
  auto n = finite_order_via_orbits(product_of(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4)), cfg);
  REQUIRE(n.has_value());
  CHECK(*n == 3);

  n = finite_order_via_orbits(RcwaMap::from_class_transposition(ctp(0, 2, 3, 4)), cfg);
  REQUIRE(n.has_value());
  CHECK(*n == 2);

  CHECK_FALSE(
      finite_order_via_orbits(product_of(ctp(0, 2, 1, 2), ctp(0, 2, 3, 4)), cfg).has_value());
}

TEST_CASE("orbit lcm equals the scan order on sampled finite pairs") {
  auto cts = brute_enumerate(6);
  Rng rng;
  OracleConfig cfg;
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    const ClassTransposition& a = rng.pick(cts);
    const ClassTransposition& b = rng.pick(cts);
    RcwaMap sigma = product_of(a, b);
    OrderScanResult scan = power_order_scan(sigma, cfg.power_n_max, cfg.power_mod_max);
    if (scan.kind != OrderScanResult::Kind::Finite) continue;
    auto n = finite_order_via_orbits(sigma, cfg);
    if (n) {
      CHECK(*n == scan.order);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("finite order verification uses proper divisors") {
  RcwaMap order3 = product_of(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4));
  CHECK(verify_finite_order(order3, 3));
  CHECK_FALSE(verify_finite_order(order3, 6));  // identity, but not minimal
  CHECK_FALSE(verify_finite_order(order3, 2));
  CHECK(verify_finite_order(RcwaMap::identity(), 1));
}

TEST_CASE("verdicts are deterministic and symmetric in the arguments") {
  auto cts = brute_enumerate(7);
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    const ClassTransposition& a = rng.pick(cts);
    const ClassTransposition& b = rng.pick(cts);
    OrderVerdict v1 = order_of_product(a, b);
    OrderVerdict v2 = order_of_product(a, b);
    CHECK(v1.kind == v2.kind);
    CHECK(v1.order == v2.order);
    CHECK(v1.method == v2.method);

    OrderVerdict swapped = order_of_product(b, a);
    CHECK(v1.kind == swapped.kind);
    CHECK(v1.order == swapped.order);
    CHECK(v1.consistent == swapped.consistent);
  }
}

TEST_CASE("certificates and the scan agree whenever both decide") {
  auto cts = brute_enumerate(6);
  Rng rng;
  OracleConfig cfg;
  for (int trial = 0; trial < 50; ++trial) {
    const ClassTransposition& a = rng.pick(cts);
    const ClassTransposition& b = rng.pick(cts);
    OrderVerdict v = order_of_product(a, b, cfg);
    CHECK(v.consistent);
    if (v.kind == OrderVerdict::Kind::FiniteOrder && v.cert_source) {
      OrderScanResult scan =
          power_order_scan(product_of(a, b), cfg.power_n_max, cfg.power_mod_max);
      CHECK(scan.kind == OrderScanResult::Kind::Finite);
      CHECK(scan.order == v.order);
    }
  }
}

TEST_CASE("allowed-set postconditions are recorded for horizontal pairs") {
  OrderVerdict v = order_of_product(ctp(0, 2, 1, 2), ctp(0, 3, 1, 3));
  CHECK(v.kind == OrderVerdict::Kind::FiniteOrder);
  CHECK(method_includes(v, "allowed-set-horizontal"));
  CHECK(v.consistent);
  static const Int allowed[] = {1, 2, 3, 4, 6, 12};
  CHECK(std::find(std::begin(allowed), std::end(allowed), v.order) != std::end(allowed));
}

TEST_CASE("oracle config is validated") {
  OracleConfig cfg;
  cfg.power_n_max = 0;
  CHECK_THROWS_AS(order_of_product(ctp(0, 2, 1, 2), ctp(0, 3, 1, 3), cfg), std::invalid_argument);
}

TEST_CASE("escape evidence alone supports a heuristic verdict") {
  // Budget too small for modulus blowup, but the orbits escape immediately.
  OracleConfig cfg;
  cfg.power_n_max = 2;
  OrderVerdict v = order_of_product(ctp(0, 2, 3, 8), ctp(2, 7, 5, 7), cfg);
  CHECK(v.kind == OrderVerdict::Kind::InfiniteHeuristic);
  CHECK_FALSE(v.blowup.has_value());
  CHECK(v.escape.has_value());
}

TEST_CASE("an inconclusive verdict resolves under a larger budget") {
  // Generic pair of order 12; a two-power budget cannot see it.
  ClassTransposition a = ctp(0, 2, 1, 4), b = ctp(1, 3, 2, 6);
  OracleConfig tiny;
  tiny.power_n_max = 2;
  OrderVerdict v = order_of_product(a, b, tiny);
  CHECK(v.kind == OrderVerdict::Kind::Inconclusive);
  CHECK(v.steps_done == 2);

  OrderVerdict full = order_of_product(a, b);
  CHECK(full.kind == OrderVerdict::Kind::FiniteOrder);
  CHECK(full.order == 12);
}
