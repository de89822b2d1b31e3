// Exact, theorem-backed order determinations for products of two class
// transpositions, plus the constructive Diophantine witness chains behind the
// infinite-order verdicts. Certificates either pin the order exactly, prove it
// infinite, or constrain it to an allowed set; they never guess.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct/residue.hpp"

namespace ct {

// The four predicates on pairs: both horizontal, sharing a vertex (class),
// equal residue multisets, equal modulus multisets. Independent; any subset
// may hold at once.
struct PairClass {
  bool horizontal = false;
  bool common_vertex = false;
  bool equal_residue = false;
  bool equal_modulus = false;

  friend bool operator==(const PairClass&, const PairClass&) = default;
};

PairClass classify_pair(const ClassTransposition& t1, const ClassTransposition& t2);

enum class CertSource {
  CommonVertex,       // ord in {1,3,inf}; branch decided by the non-shared classes
  EqualResidueRatio,  // infinite when the aligned modulus ratios differ
  EqualModulusSet,    // ord in {1,2,3,6,inf} under the residue-order hypothesis
  HorizontalSet,      // ord in {1,2,3,4,6,12}
  DisjointSupport,    // commuting distinct involutions: ord = 2
  Equality,           // ord = 1
};

// Label used in reports and CLI output, e.g. "Thm 3.1".
std::string cert_source_label(CertSource source, bool finite_branch);

struct OrderCertificate {
  enum class Kind { Finite, Infinite, AllowedSet };
  Kind kind;
  Int order = 0;                     // Finite
  std::vector<Int> allowed_orders;   // AllowedSet, finite members sorted
  bool allows_infinite = false;      // AllowedSet
  CertSource source;
};

// Shared-vertex pairs: order 1 when the transpositions are equal, 3 when the
// non-shared classes are disjoint, infinite when they intersect but differ.
// Rejects pairs without a common vertex.
OrderCertificate common_vertex_order(const ClassTransposition& t1, const ClassTransposition& t2);

// Equal-residue pairs aligned as tau_{l(m1),r(m2)}, tau_{l(m3),r(m4)}:
// infinite when m1*m4 != m2*m3; absent when the ratios agree.
// Rejects pairs that are not equal-residue.
std::optional<OrderCertificate> equal_residue_infinite(const ClassTransposition& t1,
                                                       const ClassTransposition& t2);

// Equal-modulus pairs aligned as tau_{r1(m),r2(n)}, tau_{r3(m),r4(n)}: allowed
// set {1,2,3,6,inf} when some alignment satisfies r1 <= r4 and r3 <= r2;
// absent otherwise. Rejects pairs that are not equal-modulus.
std::optional<OrderCertificate> equal_modulus_allowed_set(const ClassTransposition& t1,
                                                          const ClassTransposition& t2);

// Both horizontal: allowed set {1,2,3,4,6,12} (always finite).
OrderCertificate horizontal_order_set(const ClassTransposition& t1, const ClassTransposition& t2);

// Equal transpositions: order 1. Disjoint supports: order 2. Absent otherwise.
std::optional<OrderCertificate> disjoint_support_order(const ClassTransposition& t1,
                                                       const ClassTransposition& t2);

// One linear Diophantine constraint p*x_i - q*x_{i+1} = d between consecutive
// chain entries.
struct DiophantineRow {
  Int p;
  Int q;
  Int d;

  friend bool operator==(const DiophantineRow&, const DiophantineRow&) = default;
};

// A solved chain witnessing arbitrarily long components, hence infinite order.
// chain[i], chain[i+1] satisfy rows[i]; the required distinctness depends on
// the kind: all entries for common-vertex chains, entries of equal parity
// position for equal-residue chains.
struct InfiniteWitness {
  enum class Kind { CommonVertexChain, EqualResidueChain };
  Kind kind;
  int n = 0;
  std::vector<Int> chain;
  std::vector<DiophantineRow> rows;
};

// Re-substitutes the chain into its rows and checks the distinctness rule.
bool verify_witness(const InfiniteWitness& w);

// Solves the n-equation chain m2*x_i - m4*x_{i+1} = r4 - r2 for a shared-vertex
// pair whose non-shared classes r2(m2), r4(m4) intersect and differ. Only the
// coprime case gcd(m2, m4) = 1 is constructed; the general reduction is not
// available, so other inputs are rejected.
InfiniteWitness common_vertex_chain_witness(const ClassTransposition& t1,
                                            const ClassTransposition& t2, int n);

// The explicit geometric-progression solution of the alternating 2n-equation
// system for an equal-residue pair with m1*m4 != m2*m3, scaled from
// x_1 = (m2*m3)^n * h. h = 0 is degenerate and rejected.
InfiniteWitness equal_residue_chain_witness(const ClassTransposition& t1,
                                            const ClassTransposition& t2, int n, Int h = 1);

// The forward ray, starting at the entry 2, of the unbounded cycle of
// tau_{0(2),1(2)} * tau_{0(2),k(m)} for odd k and even m >= 4 (k < m):
// (2, 3, ...) in closed form, or (2, 0, 1, 3, ...) when k = 3. t_max controls
// how many closed-form terms are emitted.
std::vector<Int> prop33_cycle_prefix(Int k, Int m, Int t_max);

}  // namespace ct
