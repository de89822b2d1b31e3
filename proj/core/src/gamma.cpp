#include "ct/gamma.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ct {

namespace {

Int floor_div(Int a, Int b) {  // b > 0
  return (a >= 0) ? a / b : -((-a + b - 1) / b);
}
Int ceil_div(Int a, Int b) {  // b > 0
  return -floor_div(-a, b);
}

struct FamilySpec {
  VertexFamily family;
  Int r, m;
  Int k_min = 0, k_max = -1;  // empty when k_min > k_max
  std::int32_t offset = 0;

  Int count() const { return k_max >= k_min ? k_max - k_min + 1 : 0; }
  std::int32_t id_for(Int k) const { return offset + std::int32_t(k - k_min); }
  bool in_range(Int k) const { return k >= k_min && k <= k_max; }
};

}  // namespace

char family_letter(VertexFamily f) {
  switch (f) {
    case VertexFamily::A: return 'a';
    case VertexFamily::B: return 'b';
    case VertexFamily::C: return 'c';
    case VertexFamily::D: return 'd';
  }
  return '?';
}

GammaGraph::GammaGraph(const ClassTransposition& t1, const ClassTransposition& t2, Int bound)
    : t1_(t1), t2_(t2), bound_(bound) {
  const Int max_m = std::max(
      std::max(t1.first().modulus(), t1.second().modulus()),
      std::max(t2.first().modulus(), t2.second().modulus()));
  if (bound < max_m) throw std::invalid_argument("window bound must be >= every modulus");

  FamilySpec specs[4] = {
      {VertexFamily::A, t1.first().residue(), t1.first().modulus()},
      {VertexFamily::B, t1.second().residue(), t1.second().modulus()},
      {VertexFamily::C, t2.first().residue(), t2.first().modulus()},
      {VertexFamily::D, t2.second().residue(), t2.second().modulus()},
  };
  std::int32_t total = 0;
  for (auto& s : specs) {
    s.k_min = ceil_div(-bound - s.r, s.m);
    s.k_max = floor_div(bound - s.r, s.m);
    s.offset = total;
    total += std::int32_t(s.count());
  }

  vertices_.resize(total);
  for (const auto& s : specs) {
    for (Int k = s.k_min; k <= s.k_max; ++k) {
      vertices_[s.id_for(k)].v = {s.family, k, s.r + s.m * k};
    }
  }

  // Second-type edges pair a_k with b_k and c_l with d_l.
  for (int side = 0; side < 2; ++side) {
    const FamilySpec& x = specs[2 * side];
    const FamilySpec& y = specs[2 * side + 1];
    for (Int k = x.k_min; k <= x.k_max; ++k)
      if (y.in_range(k)) {
        vertices_[x.id_for(k)].second_partner = y.id_for(k);
        vertices_[y.id_for(k)].second_partner = x.id_for(k);
      }
  }

  // First-type edges join equal mu across the sides. mu is injective on each
  // side (the classes inside a transposition are disjoint), so a hash of the
  // second side decides every edge.
  std::unordered_map<Int, std::int32_t> side2;
  side2.reserve(std::size_t(specs[2].count() + specs[3].count()));
  for (int fi = 2; fi < 4; ++fi) {
    const FamilySpec& s = specs[fi];
    for (Int k = s.k_min; k <= s.k_max; ++k) side2.emplace(vertices_[s.id_for(k)].v.mu, s.id_for(k));
  }
  for (int fi = 0; fi < 2; ++fi) {
    const FamilySpec& s = specs[fi];
    for (Int k = s.k_min; k <= s.k_max; ++k) {
      auto it = side2.find(vertices_[s.id_for(k)].v.mu);
      if (it != side2.end()) {
        vertices_[s.id_for(k)].first_partner = it->second;
        vertices_[it->second].first_partner = s.id_for(k);
      }
    }
  }

  const Int margin = bound - max_m;
  for (auto& vd : vertices_) {
    Int abs_mu = vd.v.mu < 0 ? -vd.v.mu : vd.v.mu;
    vd.boundary = abs_mu > margin || vd.second_partner < 0;
  }
}

std::string GammaGraph::vertex_name(std::int32_t id) const {
  const GammaVertex& v = vertices_[std::size_t(id)].v;
  return std::string(1, family_letter(v.family)) + "_" + std::to_string(v.index);
}

std::vector<Component> GammaGraph::components() const {
  const std::int32_t n = std::int32_t(vertices_.size());
  std::vector<bool> seen(std::size_t(n), false);
  std::vector<Component> out;

  for (std::int32_t start = 0; start < n; ++start) {
    if (seen[std::size_t(start)]) continue;
    // Gather the component.
    std::vector<std::int32_t> stack{start};
    std::vector<std::int32_t> members;
    seen[std::size_t(start)] = true;
    bool truncated = false;
    while (!stack.empty()) {
      std::int32_t id = stack.back();
      stack.pop_back();
      members.push_back(id);
      const VertexData& vd = vertices_[std::size_t(id)];
      if (vd.boundary) truncated = true;
      for (std::int32_t nb : {vd.second_partner, vd.first_partner}) {
        if (nb >= 0 && !seen[std::size_t(nb)]) {
          seen[std::size_t(nb)] = true;
          stack.push_back(nb);
        }
      }
    }
    Int edges = 0;
    std::int32_t deg1 = 0;
    for (std::int32_t id : members) {
      edges += vertices_[std::size_t(id)].degree();
      if (vertices_[std::size_t(id)].degree() == 1) ++deg1;
    }
    edges /= 2;

    Component comp;
    comp.length = edges;
    if (truncated) {
      comp.kind = ComponentKind::Truncated;
      std::sort(members.begin(), members.end());
      comp.vertex_ids = std::move(members);
      out.push_back(std::move(comp));
      continue;
    }

    auto walk = [&](std::int32_t from, std::int32_t prev) {
      const VertexData& vd = vertices_[std::size_t(from)];
      if (vd.second_partner != prev) return vd.second_partner;
      return vd.first_partner;
    };

    if (deg1 == 2) {
      comp.kind = ComponentKind::Type2;
      // Orient the path from the smaller-mu endpoint.
      std::int32_t e1 = -1, e2 = -1;
      for (std::int32_t id : members) {
        if (vertices_[std::size_t(id)].degree() == 1) (e1 < 0 ? e1 : e2) = id;
      }
      if (vertices_[std::size_t(e1)].v.mu > vertices_[std::size_t(e2)].v.mu) std::swap(e1, e2);
      std::int32_t prev = -1, cur = e1;
      while (cur >= 0) {
        comp.vertex_ids.push_back(cur);
        std::int32_t next = walk(cur, prev);
        prev = cur;
        cur = next;
      }
    } else if (deg1 == 0) {
      comp.kind = ComponentKind::Type1;
      std::int32_t first = *std::min_element(members.begin(), members.end());
      std::int32_t prev = -1, cur = first;
      do {
        comp.vertex_ids.push_back(cur);
        std::int32_t next = walk(cur, prev);
        prev = cur;
        cur = next;
      } while (cur != first);
    } else {
      throw InternalError("complete component with unexpected degree profile");
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::string GammaGraph::edge_dump() const {
  std::string out;
  for (std::int32_t id = 0; id < std::int32_t(vertices_.size()); ++id) {
    const VertexData& vd = vertices_[std::size_t(id)];
    if (vd.second_partner > id)
      out += vertex_name(id) + " -- " + vertex_name(vd.second_partner) + " [second]\n";
    if (vd.first_partner > id)
      out += vertex_name(id) + " -- " + vertex_name(vd.first_partner) + " [first]\n";
  }
  return out;
}

namespace {

bool first_side(VertexFamily f) { return f == VertexFamily::A || f == VertexFamily::B; }

}  // namespace

std::vector<CycleFragment> component_to_cycles(const GammaGraph& g, const Component& c) {
  if (c.kind == ComponentKind::Truncated)
    throw std::invalid_argument("cannot read cycles off a truncated component");

  const auto& verts = g.vertices();
  // mu -> (side-1 vertex, side-2 vertex) within this component.
  std::map<Int, std::pair<std::int32_t, std::int32_t>> by_mu;
  for (std::int32_t id : c.vertex_ids)
    by_mu.emplace(verts[std::size_t(id)].v.mu, std::pair<std::int32_t, std::int32_t>{-1, -1});
  for (std::int32_t id : c.vertex_ids) {
    auto& slot = by_mu[verts[std::size_t(id)].v.mu];
    (first_side(verts[std::size_t(id)].v.family) ? slot.first : slot.second) = id;
  }

  // One product step: apply the first transposition (second-type edge on side
  // 1) when x lies in its support, then the second transposition likewise.
  auto step = [&](Int x) -> Int {
    auto it = by_mu.find(x);
    if (it == by_mu.end()) throw InternalError("product step left the component");
    auto [v1, v2] = it->second;
    if (v1 >= 0) {
      std::int32_t after = verts[std::size_t(v1)].second_partner;
      std::int32_t cross = verts[std::size_t(after)].first_partner;
      if (cross >= 0) return verts[std::size_t(verts[std::size_t(cross)].second_partner)].v.mu;
      return verts[std::size_t(after)].v.mu;
    }
    return verts[std::size_t(verts[std::size_t(v2)].second_partner)].v.mu;
  };

  std::vector<CycleFragment> fragments;
  std::map<Int, bool> covered;
  for (const auto& [mu, slot] : by_mu) covered[mu] = false;
  for (const auto& [start, slot] : by_mu) {
    if (covered[start]) continue;
    CycleFragment frag;
    Int x = start;
    do {
      frag.entries.push_back(x);
      covered[x] = true;
      x = step(x);
    } while (x != start);
    fragments.push_back(std::move(frag));
  }

  // The component-type laws are theorems; violating them means the build or
  // the walk is wrong.
  if (c.kind == ComponentKind::Type1) {
    if (c.length % 4 != 0 || fragments.size() != 2 ||
        Int(fragments[0].entries.size()) != c.length / 4 ||
        Int(fragments[1].entries.size()) != c.length / 4)
      throw InternalError("cycle-type component does not split into two n/4 cycles");
  } else {
    if (c.length % 2 != 1 || fragments.size() != 1 ||
        Int(fragments[0].entries.size()) != (c.length + 3) / 2)
      throw InternalError("path-type component does not give one (n+3)/2 cycle");
  }
  return fragments;
}

std::map<Int, Int> reconstruct_product(const GammaGraph& g) {
  std::map<Int, Int> table;
  for (const Component& c : g.components()) {
    if (c.kind == ComponentKind::Truncated) continue;
    for (const CycleFragment& frag : component_to_cycles(g, c)) {
      const auto& e = frag.entries;
      for (std::size_t i = 0; i < e.size(); ++i) {
        Int from = e[i], to = e[(i + 1) % e.size()];
        if (!table.emplace(from, to).second)
          throw InternalError("components overlap on a mu-value");
      }
    }
  }
  return table;
}

std::string component_summary(const GammaGraph& g, const Component& c) {
  std::string kind;
  switch (c.kind) {
    case ComponentKind::Type1: kind = "Type1"; break;
    case ComponentKind::Type2: kind = "Type2"; break;
    case ComponentKind::Truncated: kind = "Truncated"; break;
  }
  std::vector<Int> mus;
  for (std::int32_t id : c.vertex_ids) mus.push_back(g.vertices()[std::size_t(id)].v.mu);
  std::sort(mus.begin(), mus.end());
  mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
  std::string out = kind + " len=" + std::to_string(c.length) + " mu={";
  for (std::size_t i = 0; i < mus.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(mus[i]);
  }
  out += "}";
  return out;
}

}  // namespace ct
