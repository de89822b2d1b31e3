// Windowed realization of the graph carrying the cycle structure of a product
// of two class transpositions. Vertex families a_k, b_k track the first
// transposition, c_l, d_l the second; first-type edges join equal values
// across the two sides, second-type edges join the swapped pair inside each.
// Finite components map to cycles of the product.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ct/residue.hpp"

namespace ct {

enum class VertexFamily : std::uint8_t { A, B, C, D };

char family_letter(VertexFamily f);

struct GammaVertex {
  VertexFamily family;
  Int index;  // the k (families A, B) or l (families C, D)
  Int mu;     // the integer this vertex represents
};

enum class ComponentKind {
  Type1,      // finite cycle; length divisible by 4
  Type2,      // finite path; odd length, endpoints of degree 1
  Truncated,  // touches the window boundary, type undetermined
};

struct Component {
  ComponentKind kind;
  std::vector<std::int32_t> vertex_ids;  // consecutive vertices are adjacent
  Int length = 0;                        // edge count
};

struct CycleFragment {
  std::vector<Int> entries;  // pairwise distinct mu-values, in cycle order
  bool closed = true;
};

class GammaGraph {
 public:
  // Includes every vertex with |mu| <= bound. First-type partners always have
  // equal mu and are never lost to the window; second-type partners can lie
  // far away when the moduli differ, so a vertex is flagged boundary when its
  // partner is missing or when |mu| > bound - max(moduli).
  GammaGraph(const ClassTransposition& t1, const ClassTransposition& t2, Int bound);

  struct VertexData {
    GammaVertex v;
    std::int32_t second_partner = -1;
    std::int32_t first_partner = -1;
    bool boundary = false;

    int degree() const { return (second_partner >= 0 ? 1 : 0) + (first_partner >= 0 ? 1 : 0); }
  };

  const std::vector<VertexData>& vertices() const { return vertices_; }
  const ClassTransposition& tau1() const { return t1_; }
  const ClassTransposition& tau2() const { return t2_; }
  Int bound() const { return bound_; }

  // Partition into connected components. Components containing a boundary
  // vertex are Truncated; the rest are classified by degree profile. Paths
  // are oriented so mu(first) < mu(last).
  std::vector<Component> components() const;

  // One edge per line, "a_3 -- c_5 [first]".
  std::string edge_dump() const;
  std::string vertex_name(std::int32_t id) const;

 private:
  ClassTransposition t1_;
  ClassTransposition t2_;
  Int bound_;
  std::vector<VertexData> vertices_;
};

// The cycles a complete component contributes to the product: a Type1 cycle of
// length n yields two cycles of length n/4 (walked in opposite directions); a
// Type2 path of length n yields one cycle of length (n+3)/2. Fixed points are
// length-1 fragments. Rejects Truncated components.
std::vector<CycleFragment> component_to_cycles(const GammaGraph& g, const Component& c);

// Union of the cycles of all complete components, as a successor table on the
// covered mu-values (fixed points recorded as identity entries).
std::map<Int, Int> reconstruct_product(const GammaGraph& g);

// "Type2 len=3 mu={0,1,3}" summary line.
std::string component_summary(const GammaGraph& g, const Component& c);

}  // namespace ct
