// Shared test utilities: independent brute-force oracles and generators.
// Everything here stays independent of the implementation paths it checks.
#pragma once

#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "ct/rcwa.hpp"

namespace ct::testing {

inline ClassTransposition ctp(Int r1, Int m1, Int r2, Int m2) {
  return ClassTransposition(ResidueClass(r1, m1), ResidueClass(r2, m2));
}

// Disjointness by scanning one full period.
inline bool brute_disjoint(const ResidueClass& a, const ResidueClass& b) {
  Int l = lcm(a.modulus(), b.modulus());
  for (Int x = 0; x < l; ++x)
    if (a.contains(x) && b.contains(x)) return false;
  return true;
}

// Smallest member of the intersection in [0, lcm), if any.
inline std::optional<Int> brute_intersection_rep(const ResidueClass& a, const ResidueClass& b) {
  Int l = lcm(a.modulus(), b.modulus());
  for (Int x = 0; x < l; ++x)
    if (a.contains(x) && b.contains(x)) return x;
  return std::nullopt;
}

// Every valid transposition with moduli in [2, mod_max], by double loop over
// all class pairs and the brute-force disjointness scan.
inline std::vector<ClassTransposition> brute_enumerate(Int mod_max) {
  std::vector<ClassTransposition> out;
  for (Int m1 = 2; m1 <= mod_max; ++m1)
    for (Int r1 = 0; r1 < m1; ++r1)
      for (Int m2 = m1; m2 <= mod_max; ++m2)
        for (Int r2 = 0; r2 < m2; ++r2) {
          if (m1 == m2 && r2 <= r1) continue;
          ResidueClass a(r1, m1), b(r2, m2);
          if (brute_disjoint(a, b)) out.emplace_back(a, b);
        }
  return out;
}

inline bool pointwise_equal(const RcwaMap& f, const RcwaMap& g, Int lo, Int hi) {
  for (Int x = lo; x <= hi; ++x)
    if (f(x) != g(x)) return false;
  return true;
}

// Injectivity of f on [lo, hi].
inline bool injective_on(const RcwaMap& f, Int lo, Int hi) {
  std::unordered_set<Int> seen;
  for (Int x = lo; x <= hi; ++x)
    if (!seen.insert(f(x)).second) return false;
  return true;
}

// Independent minimal-modulus oracle: the smallest divisor d of f's modulus
// such that f is a single affine map on every class mod d, decided by fitting
// a line through two points of the class and checking the rest of a window.
inline Int minimal_modulus_by_affine_fit(const RcwaMap& f) {
  const Int m = f.modulus();
  for (Int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    bool fits = true;
    const Int span = m / d + 2;  // probe beyond one full period of f
    for (Int r = 0; r < d && fits; ++r) {
      // Line through (r, f(r)) and (r+d, f(r+d)), evaluated at r + t*d.
      Int y0 = f(r);
      Int num = f(r + d) - y0;
      for (Int t = -span; t <= span && fits; ++t) {
        if (f(r + t * d) != y0 + num * t) fits = false;
      }
    }
    if (fits) return d;
  }
  return m;
}

struct Rng {
  std::mt19937 gen{0xC0FFEE};
  Int below(Int n) { return Int(gen() % std::uint64_t(n)); }
  const ClassTransposition& pick(const std::vector<ClassTransposition>& v) {
    return v[std::size_t(below(Int(v.size())))];
  }
};

}  // namespace ct::testing
