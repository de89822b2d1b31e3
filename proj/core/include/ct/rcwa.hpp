// Exact symbolic permutations of Z that are affine on residue classes modulo a
// common modulus. Products of class transpositions live here; composition,
// canonicalization and the finite-order power scan are all exact integer
// computations, never floating point and never silently wrapping.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct/residue.hpp"

namespace ct {

// x -> (a*x + b) / c on one residue class of the map's modulus.
// Invariants: c >= 1; c divides a*x + b for every x in the class (equivalently
// c | a*r + b and c | a*M); gcd(|a|, |b|, c) = 1 after normalization.
struct AffinePiece {
  Int a = 1;
  Int b = 0;
  Int c = 1;

  Int apply(Int x) const {
    Int num = add(mul(a, x), b);
    return exact_div(num, c);
  }
  bool is_identity() const { return a == 1 && b == 0 && c == 1; }
  void normalize();

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

class RcwaMap;
struct ComposeOutcome;
ComposeOutcome compose_with_cap(const RcwaMap& f, const RcwaMap& g, Int cap);

class RcwaMap {
 public:
  RcwaMap() : modulus_(1), pieces_(1) {}  // identity
  // One piece per residue class mod `modulus`, index = residue. Pieces are
  // normalized; integrality on each class is validated.
  RcwaMap(Int modulus, std::vector<AffinePiece> pieces);

  static RcwaMap identity() { return RcwaMap(); }
  static RcwaMap from_class_transposition(const ClassTransposition& t);

  Int modulus() const { return modulus_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const AffinePiece& piece_for(Int x) const { return pieces_[mod_floor(x, modulus_)]; }

  Int operator()(Int x) const { return piece_for(x).apply(x); }

  bool is_identity() const;

  // Smallest modulus representing the same function; idempotent.
  RcwaMap canonicalized() const;

  friend bool operator==(const RcwaMap&, const RcwaMap&) = default;

  // One "class: (a*x+b)/c" line per residue class (CLI --show-map).
  std::string piece_table() const;

 private:
  struct Trusted {};  // pieces already normalized and class-integral
  RcwaMap(Int modulus, std::vector<AffinePiece> pieces, Trusted)
      : modulus_(modulus), pieces_(std::move(pieces)) {}
  friend ComposeOutcome compose_with_cap(const RcwaMap& f, const RcwaMap& g, Int cap);

  Int modulus_;
  std::vector<AffinePiece> pieces_;
};

// x -> g(f(x)): f applied first. The domain of f is split until the image of
// each piece lands in a single class of g, then the result is canonicalized.
RcwaMap compose(const RcwaMap& f, const RcwaMap& g);

// As compose, but when the canonical modulus of the composite exceeds `cap`
// the map is not materialized and only the modulus is reported.
struct ComposeOutcome {
  std::optional<RcwaMap> map;
  Int canonical_modulus = 0;
};

struct OrderScanResult {
  enum class Kind { Finite, ModulusBlowup, Inconclusive };
  Kind kind;
  Int order = 0;            // Finite: least n >= 1 with f^n = identity
  Int step = 0;             // ModulusBlowup: the power whose modulus overflowed
  Int modulus_reached = 0;  // ModulusBlowup: its canonical modulus
  Int steps_done = 0;       // Inconclusive
};

// Computes f, f^2, ... and stops at the first identity (Finite), the first
// power whose canonical modulus exceeds mod_max (ModulusBlowup; heuristic
// evidence of infinite order, never a proof), or after n_max powers.
OrderScanResult power_order_scan(const RcwaMap& f, Int n_max, Int mod_max);

// f^n by repeated squaring (n >= 0).
RcwaMap power(const RcwaMap& f, Int n);

}  // namespace ct
