#include "ct/certificates.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace ct {

namespace {

std::array<ResidueClass, 2> classes_of(const ClassTransposition& t) {
  return {t.first(), t.second()};
}

bool multiset_equal(Int a1, Int a2, Int b1, Int b2) {
  return (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
}

// tau1 = [a1, b1], tau2 = [a2, b2] read positionally.
struct AlignedPair {
  ResidueClass a1, b1, a2, b2;
};

// Alignment matching residues positionally: r(a1)=r(a2), r(b1)=r(b2).
// Residues inside a valid transposition are distinct (equal residues would
// intersect), so at most one alignment survives.
std::optional<AlignedPair> residue_alignment(const ClassTransposition& t1,
                                             const ClassTransposition& t2) {
  auto [x1, y1] = classes_of(t1);
  for (auto [x2, y2] : {std::pair{t2.first(), t2.second()}, std::pair{t2.second(), t2.first()}}) {
    if (x1.residue() == x2.residue() && y1.residue() == y2.residue())
      return AlignedPair{x1, y1, x2, y2};
  }
  return std::nullopt;
}

std::vector<AlignedPair> modulus_alignments(const ClassTransposition& t1,
                                            const ClassTransposition& t2) {
  std::vector<AlignedPair> out;
  for (auto [x1, y1] : {std::pair{t1.first(), t1.second()}, std::pair{t1.second(), t1.first()}}) {
    for (auto [x2, y2] : {std::pair{t2.first(), t2.second()}, std::pair{t2.second(), t2.first()}}) {
      if (x1.modulus() == x2.modulus() && y1.modulus() == y2.modulus())
        out.push_back(AlignedPair{x1, y1, x2, y2});
    }
  }
  return out;
}

// The shared class and the two non-shared classes (tau1's first, tau2's
// second), for any of the four vertex matchings.
std::optional<std::array<ResidueClass, 3>> common_vertex_split(const ClassTransposition& t1,
                                                               const ClassTransposition& t2) {
  for (const ResidueClass& c : classes_of(t1)) {
    for (const ResidueClass& d : classes_of(t2)) {
      if (c == d) {
        ResidueClass other1 = (c == t1.first()) ? t1.second() : t1.first();
        ResidueClass other2 = (d == t2.first()) ? t2.second() : t2.first();
        return std::array<ResidueClass, 3>{c, other1, other2};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PairClass classify_pair(const ClassTransposition& t1, const ClassTransposition& t2) {
  PairClass pc;
  pc.horizontal = t1.horizontal() && t2.horizontal();
  pc.common_vertex = common_vertex_split(t1, t2).has_value();
  pc.equal_residue = multiset_equal(t1.first().residue(), t1.second().residue(),
                                    t2.first().residue(), t2.second().residue());
  pc.equal_modulus = multiset_equal(t1.first().modulus(), t1.second().modulus(),
                                    t2.first().modulus(), t2.second().modulus());
  return pc;
}

std::string cert_source_label(CertSource source, bool finite_branch) {
  switch (source) {
    case CertSource::CommonVertex: return finite_branch ? "Thm 3.1/Cor 3.2" : "Thm 3.1";
    case CertSource::EqualResidueRatio: return "Thm 4.3(1)";
    case CertSource::EqualModulusSet: return "Thm 4.3(2)";
    case CertSource::HorizontalSet: return "horizontal order set";
    case CertSource::DisjointSupport: return "disjoint supports";
    case CertSource::Equality: return "equal transpositions";
  }
  return "?";
}

OrderCertificate common_vertex_order(const ClassTransposition& t1, const ClassTransposition& t2) {
  auto split = common_vertex_split(t1, t2);
  if (!split) throw std::invalid_argument("pair has no common vertex");
  const ResidueClass& u = (*split)[1];
  const ResidueClass& v = (*split)[2];
  if (u == v) return {OrderCertificate::Kind::Finite, 1, {}, false, CertSource::CommonVertex};
  if (classes_disjoint(u, v))
    return {OrderCertificate::Kind::Finite, 3, {}, false, CertSource::CommonVertex};
  return {OrderCertificate::Kind::Infinite, 0, {}, false, CertSource::CommonVertex};
}

std::optional<OrderCertificate> equal_residue_infinite(const ClassTransposition& t1,
                                                       const ClassTransposition& t2) {
  auto aligned = residue_alignment(t1, t2);
  if (!aligned) throw std::invalid_argument("pair is not equal-residue");
  Int lhs = mul(aligned->a1.modulus(), aligned->b2.modulus());  // m1*m4
  Int rhs = mul(aligned->b1.modulus(), aligned->a2.modulus());  // m2*m3
  if (lhs == rhs) return std::nullopt;
  return OrderCertificate{OrderCertificate::Kind::Infinite, 0, {}, false,
                          CertSource::EqualResidueRatio};
}

std::optional<OrderCertificate> equal_modulus_allowed_set(const ClassTransposition& t1,
                                                          const ClassTransposition& t2) {
  auto alignments = modulus_alignments(t1, t2);
  if (alignments.empty()) throw std::invalid_argument("pair is not equal-modulus");
  for (const AlignedPair& al : alignments) {
    // tau1 = tau_{r1(m),r2(n)}, tau2 = tau_{r3(m),r4(n)}: need r1 <= r4, r3 <= r2.
    if (al.a1.residue() <= al.b2.residue() && al.a2.residue() <= al.b1.residue())
      return OrderCertificate{OrderCertificate::Kind::AllowedSet, 0, {1, 2, 3, 6}, true,
                              CertSource::EqualModulusSet};
  }
  return std::nullopt;
}

OrderCertificate horizontal_order_set(const ClassTransposition& t1, const ClassTransposition& t2) {
  if (!t1.horizontal() || !t2.horizontal())
    throw std::invalid_argument("pair is not horizontal");
  return {OrderCertificate::Kind::AllowedSet, 0, {1, 2, 3, 4, 6, 12}, false,
          CertSource::HorizontalSet};
}

std::optional<OrderCertificate> disjoint_support_order(const ClassTransposition& t1,
                                                       const ClassTransposition& t2) {
  if (t1 == t2) return OrderCertificate{OrderCertificate::Kind::Finite, 1, {}, false,
                                        CertSource::Equality};
  for (const ResidueClass& c : classes_of(t1))
    for (const ResidueClass& d : classes_of(t2))
      if (!classes_disjoint(c, d)) return std::nullopt;
  return OrderCertificate{OrderCertificate::Kind::Finite, 2, {}, false,
                          CertSource::DisjointSupport};
}

bool verify_witness(const InfiniteWitness& w) {
  if (w.chain.size() != w.rows.size() + 1 || w.rows.empty()) return false;
  for (std::size_t i = 0; i < w.rows.size(); ++i) {
    const DiophantineRow& row = w.rows[i];
    if (sub(mul(row.p, w.chain[i]), mul(row.q, w.chain[i + 1])) != row.d) return false;
  }
  if (w.kind == InfiniteWitness::Kind::CommonVertexChain) {
    for (std::size_t i = 0; i < w.chain.size(); ++i)
      for (std::size_t j = i + 1; j < w.chain.size(); ++j)
        if (w.chain[i] == w.chain[j]) return false;
  } else {
    // Entries of equal parity position must be pairwise distinct.
    for (std::size_t i = 0; i < w.chain.size(); ++i)
      for (std::size_t j = i + 2; j < w.chain.size(); j += 2)
        if (w.chain[i] == w.chain[j]) return false;
  }
  return true;
}

InfiniteWitness common_vertex_chain_witness(const ClassTransposition& t1,
                                            const ClassTransposition& t2, int n) {
  if (n < 1) throw std::invalid_argument("chain length must be >= 1");
  auto split = common_vertex_split(t1, t2);
  if (!split) throw std::invalid_argument("pair has no common vertex");
  const ResidueClass& u = (*split)[1];  // r2(m2)
  const ResidueClass& v = (*split)[2];  // r4(m4)
  if (u == v || classes_disjoint(u, v))
    throw std::invalid_argument("non-shared classes must intersect and differ");
  const Int m2 = u.modulus(), r2 = u.residue();
  const Int m4 = v.modulus(), r4 = v.residue();
  if (gcd(m2, m4) != 1)
    throw std::invalid_argument("chain construction requires coprime non-shared moduli");
  const Int d = sub(r4, r2);

  // Chain entries as linear functions base_i + coef_i * t, extended one
  // equation at a time. Adding equation j fixes the old parameter up to a
  // multiple of m4 and introduces x_{j+1} with coefficient m2^j.
  std::vector<Int> base(1, 0), coef(1, 1);
  {
    auto e = egcd(m2, m4);  // m2*x + m4*y = 1
    base[0] = mul(e.x, d);
    coef[0] = m4;
  }
  base.push_back(exact_div(sub(mul(m2, base[0]), d), m4));
  coef.push_back(m2);
  for (int j = 2; j <= n; ++j) {
    // Solve m2*(base_j + coef_j*t) - m4*x_{j+1} = d for t, x_{j+1}:
    // coef is +-m2^{j-1}, coprime to m4, so t = t0 + m4*s works.
    Int a = mul(m2, coef.back());
    Int c = sub(d, mul(m2, base.back()));  // a*t - m4*x = c
    auto e = egcd(a, m4);
    if (e.g != 1) throw InternalError("lost coprimality while lifting the chain");
    Int t0 = mul(e.x, c);
    for (std::size_t i = 0; i < base.size(); ++i) {
      base[i] = add(base[i], mul(coef[i], t0));
      coef[i] = mul(coef[i], m4);
    }
    base.push_back(exact_div(sub(mul(a, t0), c), m4));
    coef.push_back(a);
  }

  InfiniteWitness w;
  w.kind = InfiniteWitness::Kind::CommonVertexChain;
  w.n = n;
  w.rows.assign(std::size_t(n), DiophantineRow{m2, m4, d});
  // All but at most one parameter value give pairwise distinct entries.
  for (Int t = 0; t <= 4; ++t) {
    w.chain.clear();
    for (std::size_t i = 0; i < base.size(); ++i) w.chain.push_back(add(base[i], mul(coef[i], t)));
    if (verify_witness(w)) return w;
  }
  throw InternalError("no distinct chain within the expected parameter range");
}

InfiniteWitness equal_residue_chain_witness(const ClassTransposition& t1,
                                            const ClassTransposition& t2, int n, Int h) {
  if (n < 1) throw std::invalid_argument("chain length must be >= 1");
  if (h == 0) throw std::invalid_argument("h = 0 gives the degenerate all-zero solution");
  auto cert = equal_residue_infinite(t1, t2);  // also validates equal-residue
  if (!cert) throw std::invalid_argument("aligned modulus ratios are equal");
  auto aligned = residue_alignment(t1, t2);
  const Int m1 = aligned->a1.modulus(), m2 = aligned->b1.modulus();
  const Int m3 = aligned->a2.modulus(), m4 = aligned->b2.modulus();

  InfiniteWitness w;
  w.kind = InfiniteWitness::Kind::EqualResidueChain;
  w.n = n;
  w.chain.push_back(mul(pow_checked(mul(m2, m3), n), h));
  for (int j = 1; j <= 2 * n; ++j) {
    if (j % 2 == 1) {
      w.rows.push_back({m1, m3, 0});
      w.chain.push_back(exact_div(mul(m1, w.chain.back()), m3));
    } else {
      w.rows.push_back({m4, m2, 0});
      w.chain.push_back(exact_div(mul(m4, w.chain.back()), m2));
    }
  }
  if (!verify_witness(w)) throw InternalError("geometric chain failed verification");
  return w;
}

std::vector<Int> prop33_cycle_prefix(Int k, Int m, Int t_max) {
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("k must be odd and >= 1");
  if (m < 4 || m % 2 != 0) throw std::invalid_argument("m must be even and >= 4");
  if (k >= m) throw std::invalid_argument("k must be < m");
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
  const Int m1 = m / 2;

  std::vector<Int> out;
  Int geom = 0;   // m1 + m1^2 + ... + m1^{t-1} = ((m1^{t-1} - 1)/(m1 - 1)) * m1
  Int mpow = m1;  // m1^t
  if (k == 3) {
    out = {2, 0, 1};
    for (Int t = 1; t <= t_max; ++t) {
      out.push_back(add(3, mul(2, geom)));
      geom = add(geom, mpow);
      mpow = mul(mpow, m1);
    }
  } else {
    out = {2, 3};
    for (Int t = 1; t <= t_max; ++t) {
      out.push_back(add(add(k, mul(sub(k, 1), geom)), mul(2, mpow)));
      geom = add(geom, mpow);
      mpow = mul(mpow, m1);
    }
  }
  return out;
}

}  // namespace ct
