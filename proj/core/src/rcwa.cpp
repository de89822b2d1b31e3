#include "ct/rcwa.hpp"

#include <cstdint>
#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace ct {

namespace {

// Materialization guard for composites; the canonical modulus of anything the
// engine is asked to hold as a piece table must stay below this.
constexpr Int kEngineModulusCap = Int{1} << 26;

std::vector<Int> distinct_prime_factors(Int n) {
  std::vector<Int> primes;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// Minimal period P | start of a sequence of length `length`, where `start`
// is already a valid period dividing `length`. `same(i, j)` compares entries.
// Valid periods are exactly the multiples of the minimal one, so dividing out
// each prime to exhaustion visits the minimum in one sweep.
template <typename Same>
Int minimal_period(Int length, Int start, const Same& same) {
  Int period = start;
  if (period <= 1) return 1;
  for (Int p : distinct_prime_factors(period)) {
    while (period % p == 0) {
      const Int candidate = period / p;
      const Int range = std::min(period, length - candidate);
      bool ok = true;
      for (Int i = 0; i < range; ++i) {
        if (!same(i, i + candidate)) { ok = false; break; }
      }
      if (!ok) break;
      period = candidate;
    }
  }
  return period;
}

struct ComposePlan {
  const RcwaMap& f;
  const RcwaMap& g;
  Int refined;  // common refinement modulus; every class maps into one g-class

  // Which (f-piece, g-piece) pair acts on the class rho mod refined.
  std::pair<Int, Int> piece_pair(Int rho) const {
    const AffinePiece& p1 = f.pieces()[rho % f.modulus()];
    Int y = p1.apply(rho);
    return {rho % f.modulus(), mod_floor(y, g.modulus())};
  }

  AffinePiece triple(Int rho) const {
    const AffinePiece& p1 = f.pieces()[rho % f.modulus()];
    Int y = p1.apply(rho);
    const AffinePiece& p2 = g.pieces()[mod_floor(y, g.modulus())];
    AffinePiece out{mul(p1.a, p2.a), add(mul(p2.a, p1.b), mul(p2.b, p1.c)), mul(p1.c, p2.c)};
    out.normalize();
    return out;
  }
};

}  // namespace

void AffinePiece::normalize() {
  if (c < 1) throw std::invalid_argument("affine piece divisor must be >= 1");
  if (c == 1) return;  // gcd(a, b, 1) = 1 already
  Int g = gcd(gcd(std::abs(a), std::abs(b)), c);
  if (g > 1) { a /= g; b /= g; c /= g; }
}

RcwaMap::RcwaMap(Int modulus, std::vector<AffinePiece> pieces)
    : modulus_(modulus), pieces_(std::move(pieces)) {
  if (modulus_ < 1) throw std::invalid_argument("rcwa modulus must be >= 1");
  if (static_cast<Int>(pieces_.size()) != modulus_)
    throw std::invalid_argument("rcwa map needs one piece per residue class");
  for (Int r = 0; r < modulus_; ++r) {
    AffinePiece& p = pieces_[r];
    p.normalize();
    // Integral on the whole class: c | a*r+b together with c | a*M.
    if (add(mul(p.a, r), p.b) % p.c != 0 || mul(p.a, modulus_) % p.c != 0)
      throw std::invalid_argument("affine piece is not integral on its residue class");
  }
}

RcwaMap RcwaMap::from_class_transposition(const ClassTransposition& t) {
  const Int r1 = t.first().residue(), m1 = t.first().modulus();
  const Int r2 = t.second().residue(), m2 = t.second().modulus();
  const Int m = lcm(m1, m2);
  std::vector<AffinePiece> pieces(m);
  for (Int r = 0; r < m; ++r) {
    if (t.first().contains(r)) {
      pieces[r] = {m2, sub(mul(r2, m1), mul(r1, m2)), m1};
    } else if (t.second().contains(r)) {
      pieces[r] = {m1, sub(mul(r1, m2), mul(r2, m1)), m2};
    }
  }
  return RcwaMap(m, std::move(pieces));
}

bool RcwaMap::is_identity() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const AffinePiece& p) { return p.is_identity(); });
}

RcwaMap RcwaMap::canonicalized() const {
  Int period = minimal_period(modulus_, modulus_, [this](Int i, Int j) {
    return pieces_[i] == pieces_[j];
  });
  if (period == modulus_) return *this;
  return RcwaMap(period, std::vector<AffinePiece>(pieces_.begin(), pieces_.begin() + period));
}

std::string RcwaMap::piece_table() const {
  std::string out;
  for (Int r = 0; r < modulus_; ++r) {
    const AffinePiece& p = pieces_[r];
    out += to_string(ResidueClass(r, modulus_)) + ": (" + std::to_string(p.a) + "*x";
    out += (p.b < 0 ? std::to_string(p.b) : "+" + std::to_string(p.b));
    out += ")/" + std::to_string(p.c) + "\n";
  }
  return out;
}

namespace {

// Transient cache ceilings for the two descent phases (128MB / 96MB).
constexpr Int kKeyCacheLimit = Int{1} << 24;
constexpr Int kTripleCacheLimit = Int{1} << 22;

}  // namespace

ComposeOutcome compose_with_cap(const RcwaMap& f, const RcwaMap& g, Int cap) {
  const Int mf = f.modulus(), mg = g.modulus();
  // Refine each f-class so its image progression stays inside one g-class.
  Int mult = 1;
  for (Int r = 0; r < mf; ++r) {
    const AffinePiece& p = f.pieces()[r];
    Int k = 1;
    if (p.a != 0) {
      Int step = exact_div(mul(p.a, mf), p.c);
      k = mg / gcd(std::abs(step), mg);
    }
    mult = lcm(mult, k);
  }
  const Int refined = mul(mf, mult);
  ComposePlan plan{f, g, refined};

  // Phase 1: minimal period of the (f-piece, g-piece) key sequence. Along a
  // fixed f-class the image class is an arithmetic progression mod mg, so the
  // key array fills with additions only; the descent then compares plain
  // 64-bit entries. The true period divides this one.
  Int coarse;
  if (refined <= kKeyCacheLimit && mf <= (Int{1} << 62) / mg) {
    std::vector<std::uint64_t> keys(static_cast<std::size_t>(refined));
    const Int cols = refined / mf;
    std::vector<std::int64_t> y(static_cast<std::size_t>(mf));
    std::vector<std::int64_t> step(static_cast<std::size_t>(mf));
    for (Int r = 0; r < mf; ++r) {
      const AffinePiece& p = f.pieces()[std::size_t(r)];
      step[std::size_t(r)] = (p.a == 0) ? 0 : mod_floor(exact_div(mul(p.a, mf), p.c), mg);
      y[std::size_t(r)] = mod_floor(p.apply(r), mg);
    }
    for (Int j = 0; j < cols; ++j) {
      std::uint64_t* out = keys.data() + std::size_t(j * mf);
      for (Int r = 0; r < mf; ++r) {
        out[r] = std::uint64_t(r) * std::uint64_t(mg) + std::uint64_t(y[std::size_t(r)]);
        y[std::size_t(r)] += step[std::size_t(r)];
        if (y[std::size_t(r)] >= mg) y[std::size_t(r)] -= mg;
      }
    }
    coarse = minimal_period(refined, refined, [&keys](Int i, Int j) {
      return keys[std::size_t(i)] == keys[std::size_t(j)];
    });
  } else {
    coarse = minimal_period(refined, refined, [&plan](Int i, Int j) {
      return plan.piece_pair(i) == plan.piece_pair(j);
    });
  }

  // Phase 2: exact normalized triples catch cross-pair merges such as s*s = id.
  // Materializing pays off only when the result can fit under the cap;
  // otherwise the descent runs on demand and usually fails within a few
  // entries, leaving nothing to throw away.
  if (coarse <= cap && coarse <= kTripleCacheLimit) {
    std::vector<AffinePiece> triples(static_cast<std::size_t>(coarse));
    for (Int rho = 0; rho < coarse; ++rho) triples[std::size_t(rho)] = plan.triple(rho);
    Int period = minimal_period(refined, coarse, [&triples, coarse](Int i, Int j) {
      return triples[std::size_t(i % coarse)] == triples[std::size_t(j % coarse)];
    });
    triples.resize(std::size_t(period));
    return {RcwaMap(period, std::move(triples), RcwaMap::Trusted{}), period};
  }
  Int period = minimal_period(refined, coarse, [&plan](Int i, Int j) {
    return plan.triple(i) == plan.triple(j);
  });
  if (period > cap) return {std::nullopt, period};
  std::vector<AffinePiece> pieces(static_cast<std::size_t>(period));
  for (Int rho = 0; rho < period; ++rho) pieces[std::size_t(rho)] = plan.triple(rho);
  return {RcwaMap(period, std::move(pieces), RcwaMap::Trusted{}), period};
}

RcwaMap compose(const RcwaMap& f, const RcwaMap& g) {
  ComposeOutcome out = compose_with_cap(f, g, kEngineModulusCap);
  if (!out.map)
    throw OverflowError("composite modulus " + std::to_string(out.canonical_modulus) +
                        " exceeds engine capacity");
  return *std::move(out.map);
}

OrderScanResult power_order_scan(const RcwaMap& f, Int n_max, Int mod_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (mod_max < f.modulus())
    throw std::invalid_argument("mod_max must be >= the modulus of the map");
  const RcwaMap base = f.canonicalized();
  RcwaMap current = base;
  for (Int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      ComposeOutcome out = compose_with_cap(current, base, mod_max);
      if (!out.map)
        return {OrderScanResult::Kind::ModulusBlowup, 0, n, out.canonical_modulus, 0};
      current = *std::move(out.map);
    }
    if (current.is_identity()) return {OrderScanResult::Kind::Finite, n, 0, 0, 0};
  }
  return {OrderScanResult::Kind::Inconclusive, 0, 0, 0, n_max};
}

RcwaMap power(const RcwaMap& f, Int n) {
  if (n < 0) throw std::invalid_argument("negative power");
  // Sequential, not repeated squaring: composing against the small base keeps
  // the refinement bounded by modulus(acc) * modulus(f), while squaring large
  // intermediate maps multiplies two large moduli.
  const RcwaMap base = f.canonicalized();
  RcwaMap acc = RcwaMap::identity();
  for (Int k = 0; k < n; ++k) acc = compose(acc, base);
  return acc;
}

}  // namespace ct
