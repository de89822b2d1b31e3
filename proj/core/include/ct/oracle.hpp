// The decision pipeline for ord(tau1 * tau2): exact certificates first, then
// the symbolic power scan, then orbit heuristics. Verdicts carry provenance
// (which stages ran) and a cross-check flag; heuristic evidence is never
// presented as proof.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ct/certificates.hpp"
#include "ct/rcwa.hpp"

namespace ct {

struct OracleConfig {
  Int power_n_max = 512;
  Int power_mod_max = 1'000'000;
  Int orbit_step_max = 10'000;
  Int orbit_value_bound = 1'000'000'000;
  Int window_bound = 1'000;

  void validate() const;
};

// Which theorem certified an infinite verdict.
enum class TheoremTag { CommonVertex, EqualResidueRatio };
std::string theorem_label(TheoremTag tag);  // "Thm 3.1" / "Thm 4.3(1)"

struct BlowupEvidence {
  Int step;
  Int modulus;
};
struct EscapeEvidence {
  Int start;
  Int step;
  Int value;
};

struct OrderVerdict {
  enum class Kind { FiniteOrder, InfiniteCertified, InfiniteHeuristic, Inconclusive };
  Kind kind = Kind::Inconclusive;
  Int order = 0;                           // FiniteOrder: verified minimal n
  std::optional<TheoremTag> theorem;       // InfiniteCertified
  std::optional<CertSource> cert_source;   // certificate that decided, if any
  std::optional<BlowupEvidence> blowup;    // InfiniteHeuristic evidence
  std::optional<EscapeEvidence> escape;    // InfiniteHeuristic evidence
  Int steps_done = 0;                      // Inconclusive: scan budget spent
  std::vector<std::string> method;         // stages consulted, in order
  bool consistent = true;                  // certificate/scan cross-checks

  bool certified() const {
    return kind == Kind::FiniteOrder || kind == Kind::InfiniteCertified;
  }
};

struct OrbitResult {
  enum class Kind { Cycle, Escaped, StepBudgetExhausted };
  Kind kind;
  Int length = 0;  // Cycle: steps until first return to the start
  Int step = 0;    // Escaped
  Int value = 0;   // Escaped: the value that crossed the bound
};

// Iterates sigma from x0 until it returns to x0, a value exceeds
// orbit_value_bound in magnitude, or the step budget runs out.
OrbitResult orbit_trace(const RcwaMap& sigma, Int x0, const OracleConfig& cfg);

// lcm of the cycle lengths over the orbits of 0 .. 3*modulus - 1, when they
// all close and the lcm-th power is verified to be the identity; absent
// otherwise. Complements the power scan.
std::optional<Int> finite_order_via_orbits(const RcwaMap& sigma, const OracleConfig& cfg);

OrderVerdict order_of_product(const ClassTransposition& t1, const ClassTransposition& t2,
                              const OracleConfig& cfg = {});

// n-th power is the identity and no proper divisor power is.
bool verify_finite_order(const RcwaMap& sigma, Int n);

}  // namespace ct
