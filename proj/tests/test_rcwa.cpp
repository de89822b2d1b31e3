#include <doctest.h>

#include "ct/rcwa.hpp"
#include "helpers.hpp"

using namespace ct;
using namespace ct::testing;

TEST_CASE("a transposition's map reads off the swap rule") {
  RcwaMap f = RcwaMap::from_class_transposition(ctp(0, 2, 1, 2));
  CHECK(f.modulus() == 2);
  CHECK(f.pieces()[0] == AffinePiece{1, 1, 1});   // x + 1 on 0(2)
  CHECK(f.pieces()[1] == AffinePiece{1, -1, 1});  // x - 1 on 1(2)

  RcwaMap g = RcwaMap::from_class_transposition(ctp(0, 2, 3, 4));
  CHECK(g.modulus() == 4);
  CHECK(g.pieces()[0] == AffinePiece{2, 3, 1});   // (4x+6)/2 normalized
  CHECK(g.pieces()[2] == AffinePiece{2, 3, 1});
  CHECK(g.pieces()[3] == AffinePiece{1, -3, 2});  // (x-3)/2 on 3(4)
  CHECK(g.pieces()[1].is_identity());
}

TEST_CASE("maps agree pointwise with apply for every small transposition") {
  for (const ClassTransposition& t : brute_enumerate(10)) {
    RcwaMap f = RcwaMap::from_class_transposition(t);
    for (Int x = -200; x <= 200; ++x) CHECK(f(x) == t.apply(x));
  }
}

TEST_CASE("the square of a transposition's map is the identity") {
  for (const ClassTransposition& t : brute_enumerate(8)) {
    RcwaMap f = RcwaMap::from_class_transposition(t);
    CHECK_FALSE(f.is_identity());
    CHECK(compose(f, f).is_identity());
  }
}

TEST_CASE("composition applies left factor first") {
  RcwaMap f = RcwaMap::from_class_transposition(ctp(0, 2, 1, 2));
  RcwaMap g = RcwaMap::from_class_transposition(ctp(0, 2, 3, 4));
  RcwaMap sigma = compose(f, g);
  // Entries of the unbounded cycle (..., 2, 0, 1, 3, 7, 15, ...).
  CHECK(sigma(1) == 3);
  CHECK(sigma(3) == 7);
  CHECK(sigma(7) == 15);
  CHECK(sigma(2) == 0);

  CHECK(compose(f, RcwaMap::identity()) == f);
  CHECK(compose(RcwaMap::identity(), f) == f);
}

TEST_CASE("composition is pointwise sound") {
  auto cts = brute_enumerate(8);
  Rng rng;
  for (int trial = 0; trial < 60; ++trial) {
    RcwaMap f = RcwaMap::from_class_transposition(rng.pick(cts));
    RcwaMap g = RcwaMap::from_class_transposition(rng.pick(cts));
    RcwaMap fg = compose(f, g);
    for (Int x = -300; x <= 300; ++x) CHECK(fg(x) == g(f(x)));
  }
}

TEST_CASE("canonicalization merges congruent pieces and is idempotent") {
  std::vector<AffinePiece> shift{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  RcwaMap m4(4, shift);
  RcwaMap canon = m4.canonicalized();
  CHECK(canon.modulus() == 1);
  CHECK(canon.pieces()[0] == AffinePiece{1, 1, 1});
  CHECK(canon.canonicalized() == canon);

  auto cts = brute_enumerate(7);
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    RcwaMap f = compose(RcwaMap::from_class_transposition(rng.pick(cts)),
                        RcwaMap::from_class_transposition(rng.pick(cts)));
    CHECK(f.canonicalized() == f.canonicalized().canonicalized());
  }
}

TEST_CASE("a transposition's canonical modulus is exactly the lcm") {
  for (const ClassTransposition& t : brute_enumerate(8)) {
    RcwaMap f = RcwaMap::from_class_transposition(t);
    Int l = lcm(t.first().modulus(), t.second().modulus());
    CHECK(f.modulus() == l);
    CHECK(f.canonicalized().modulus() == l);
  }
  // Independent check: no smaller modulus carries the same function.
  for (const ClassTransposition& t : brute_enumerate(6)) {
    RcwaMap f = RcwaMap::from_class_transposition(t);
    CHECK(minimal_modulus_by_affine_fit(f) == f.modulus());
  }
}

TEST_CASE("canonical forms decide functional equality") {
  auto cts = brute_enumerate(6);
  Rng rng;
  for (int trial = 0; trial < 80; ++trial) {
    RcwaMap f = compose(RcwaMap::from_class_transposition(rng.pick(cts)),
                        RcwaMap::from_class_transposition(rng.pick(cts)));
    RcwaMap g = compose(RcwaMap::from_class_transposition(rng.pick(cts)),
                        RcwaMap::from_class_transposition(rng.pick(cts)));
    Int window = 2 * lcm(f.modulus(), g.modulus());
    bool same_fn = pointwise_equal(f, g, -window, window);
    CHECK(same_fn == (f.canonicalized() == g.canonicalized()));
  }
}

TEST_CASE("identity detection") {
  CHECK(RcwaMap::identity().is_identity());
  CHECK_FALSE(RcwaMap::from_class_transposition(ctp(0, 2, 1, 2)).is_identity());
}

TEST_CASE("maps from transpositions are injective on the surrogate window") {
  for (const ClassTransposition& t : brute_enumerate(6)) {
    RcwaMap f = RcwaMap::from_class_transposition(t);
    Int coeff = 1;
    for (const AffinePiece& p : f.pieces())
      coeff = std::max(coeff, std::max(p.a < 0 ? -p.a : p.a, p.c));
    Int w = 3 * f.modulus() * coeff;
    CHECK(injective_on(f, -w, w));
  }
}

TEST_CASE("power scan finds exact small orders") {
  RcwaMap invol = RcwaMap::from_class_transposition(ctp(0, 2, 1, 2));
  OrderScanResult r = power_order_scan(invol, 4, 1000);
  CHECK(r.kind == OrderScanResult::Kind::Finite);
  CHECK(r.order == 2);

  // Shared vertex 0(2), non-shared classes 1(4) and 3(4) disjoint: order 3.
  RcwaMap sigma = compose(RcwaMap::from_class_transposition(ctp(0, 2, 1, 4)),
                          RcwaMap::from_class_transposition(ctp(0, 2, 3, 4)));
  r = power_order_scan(sigma, 512, 1'000'000);
  CHECK(r.kind == OrderScanResult::Kind::Finite);
  CHECK(r.order == 3);
}

TEST_CASE("power scan reports modulus blowup for the unbounded product") {
  RcwaMap sigma = compose(RcwaMap::from_class_transposition(ctp(0, 2, 1, 2)),
                          RcwaMap::from_class_transposition(ctp(0, 2, 3, 4)));
  OrderScanResult r = power_order_scan(sigma, 512, 1'000'000);
  CHECK(r.kind == OrderScanResult::Kind::ModulusBlowup);
  CHECK(r.modulus_reached > 1'000'000);
}

TEST_CASE("power scan budget and preconditions") {
  RcwaMap sigma = compose(RcwaMap::from_class_transposition(ctp(0, 2, 1, 4)),
                          RcwaMap::from_class_transposition(ctp(0, 2, 3, 4)));
  OrderScanResult r = power_order_scan(sigma, 2, 1'000'000);
  CHECK(r.kind == OrderScanResult::Kind::Inconclusive);
  CHECK(r.steps_done == 2);

  CHECK_THROWS_AS(power_order_scan(sigma, 0, 1'000'000), std::invalid_argument);
  CHECK_THROWS_AS(power_order_scan(sigma, 10, 1), std::invalid_argument);
}

TEST_CASE("every transposition map scans as a nontrivial involution") {
  for (const ClassTransposition& t : brute_enumerate(8)) {
    OrderScanResult r = power_order_scan(RcwaMap::from_class_transposition(t), 4, 1'000'000);
    CHECK(r.kind == OrderScanResult::Kind::Finite);
    CHECK(r.order == 2);
  }
}

TEST_CASE("evaluate examples") {
  CHECK(RcwaMap::identity()(17) == 17);
  CHECK(RcwaMap::from_class_transposition(ctp(0, 2, 3, 4))(2) == 7);
}

TEST_CASE("piece integrality is validated at construction") {
  // x -> x/2 on all of Z mod 2 fails on odd inputs.
  CHECK_THROWS_AS(RcwaMap(2, {AffinePiece{1, 0, 2}, AffinePiece{1, 0, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RcwaMap(2, {AffinePiece{1, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(RcwaMap(0, {}), std::invalid_argument);
}

TEST_CASE("overflow in composition is an error, never silent") {
  set_int_bits(24);
  RcwaMap f = RcwaMap::from_class_transposition(ctp(0, 2, 1, 2));
  RcwaMap g = RcwaMap::from_class_transposition(ctp(0, 2, 3, 4));
  RcwaMap sigma = compose(f, g);
  CHECK_THROWS_AS(
      [&] {
        RcwaMap cur = sigma;
        for (int i = 0; i < 40; ++i) cur = compose(cur, sigma);
      }(),
      OverflowError);
  set_int_bits(64);
}

TEST_CASE("piece table lists one line per class") {
  RcwaMap g = RcwaMap::from_class_transposition(ctp(0, 2, 3, 4));
  std::string table = g.piece_table();
  CHECK(table.find("0(4): (2*x+3)/1") != std::string::npos);
  CHECK(table.find("3(4): (1*x-3)/2") != std::string::npos);
}
