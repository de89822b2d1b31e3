// Residue classes r(m) of the integers and class transpositions, the
// involutions swapping two disjoint residue classes pointwise.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "ct/checked.hpp"

namespace ct {

// r + mZ with canonical representative 0 <= r < m, m >= 1.
// m = 1 (all of Z) is allowed for intersection computations, although no
// valid class transposition can use it.
class ResidueClass {
 public:
  ResidueClass(Int r, Int m);

  Int residue() const { return r_; }
  Int modulus() const { return m_; }

  bool contains(Int x) const { return mod_floor(x, m_) == r_; }

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
  // (m, r) lexicographic; defines the canonical order inside a transposition.
  friend std::strong_ordering operator<=>(const ResidueClass& a, const ResidueClass& b) {
    if (auto c = a.m_ <=> b.m_; c != 0) return c;
    return a.r_ <=> b.r_;
  }

 private:
  Int r_;
  Int m_;
};

// r1(m1) and r2(m2) are disjoint iff gcd(m1, m2) does not divide |r1 - r2|.
bool classes_disjoint(const ResidueClass& c1, const ResidueClass& c2);

// CRT: the intersection as a class mod lcm(m1, m2), or empty when disjoint.
std::optional<ResidueClass> class_intersection(const ResidueClass& c1, const ResidueClass& c2);

// The involution of Z interchanging r1 + k*m1 and r2 + k*m2 for every k.
// Stored canonically with (m1, r1) <= (m2, r2), so equal transpositions are
// structurally equal regardless of construction order.
class ClassTransposition {
 public:
  // Rejects non-disjoint classes ("not a class transposition").
  ClassTransposition(const ResidueClass& c1, const ResidueClass& c2);

  const ResidueClass& first() const { return c1_; }
  const ResidueClass& second() const { return c2_; }

  Int apply(Int x) const;
  bool in_support(Int x) const { return c1_.contains(x) || c2_.contains(x); }
  bool horizontal() const { return c1_.modulus() == c2_.modulus(); }

  friend bool operator==(const ClassTransposition&, const ClassTransposition&) = default;
  friend std::strong_ordering operator<=>(const ClassTransposition& a, const ClassTransposition& b) {
    if (auto c = a.c1_ <=> b.c1_; c != 0) return c;
    return a.c2_ <=> b.c2_;
  }

 private:
  ResidueClass c1_;
  ResidueClass c2_;
};

// Textual forms used by the CLI and report files: "r(m)" and "[r1(m1),r2(m2)]".
// Parsing accepts optional whitespace and non-canonical residues; formatting
// always emits the canonical form, and the two round-trip.
std::string to_string(const ResidueClass& c);
std::string to_string(const ClassTransposition& t);
ResidueClass parse_residue_class(std::string_view text);
ClassTransposition parse_class_transposition(std::string_view text);

}  // namespace ct
