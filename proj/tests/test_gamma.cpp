#include <doctest.h>

#include <algorithm>
#include <set>

#include "ct/gamma.hpp"
#include "ct/rcwa.hpp"
#include "helpers.hpp"

using namespace ct;
using namespace ct::testing;

namespace {

int second_type_degree(const GammaGraph::VertexData& vd) {
  return vd.second_partner >= 0 ? 1 : 0;
}

}  // namespace

TEST_CASE("interior vertices obey the degree law") {
  GammaGraph g(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4), 20);
  int interior = 0;
  for (const auto& vd : g.vertices()) {
    if (vd.boundary) continue;
    ++interior;
    CHECK(second_type_degree(vd) == 1);
    CHECK((vd.degree() == 1 || vd.degree() == 2));
  }
  CHECK(interior > 0);
}

TEST_CASE("degree law holds for random pairs") {
  auto cts = brute_enumerate(8);
  Rng rng;
  for (int trial = 0; trial < 50; ++trial) {
    GammaGraph g(rng.pick(cts), rng.pick(cts), 100);
    for (const auto& vd : g.vertices()) {
      if (vd.boundary) continue;
      CHECK(second_type_degree(vd) == 1);
      CHECK((vd.degree() == 1 || vd.degree() == 2));
    }
  }
}

TEST_CASE("disjoint-support pair has no first-type edges") {
  GammaGraph g(ctp(0, 4, 1, 4), ctp(2, 4, 3, 4), 20);
  for (const auto& vd : g.vertices()) CHECK(vd.first_partner < 0);
}

TEST_CASE("shared-vertex pair with disjoint other classes: interior paths of length 3") {
  GammaGraph g(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4), 40);
  bool saw_one = false;
  for (const Component& c : g.components()) {
    if (c.kind == ComponentKind::Truncated) continue;
    saw_one = true;
    CHECK(c.kind == ComponentKind::Type2);
    CHECK(c.length == 3);
    const auto& v = g.vertices();
    // Path orientation: mu increases from the first to the last vertex.
    CHECK(v[std::size_t(c.vertex_ids.front())].v.mu < v[std::size_t(c.vertex_ids.back())].v.mu);
    // The component is the four-vertex path pairing both swaps through the
    // shared class: families read d c a b (or reversed).
    REQUIRE(c.vertex_ids.size() == 4);
    std::string fams;
    for (auto id : c.vertex_ids) fams += family_letter(v[std::size_t(id)].v.family);
    CHECK((fams == "dcab" || fams == "bacd"));
  }
  CHECK(saw_one);
}

TEST_CASE("equal transpositions give interior 4-cycles") {
  ClassTransposition t = ctp(0, 2, 1, 2);
  GammaGraph g(t, t, 30);
  bool saw_one = false;
  for (const Component& c : g.components()) {
    if (c.kind == ComponentKind::Truncated) continue;
    saw_one = true;
    CHECK(c.kind == ComponentKind::Type1);
    CHECK(c.length == 4);
  }
  CHECK(saw_one);
}

TEST_CASE("component counts grow linearly with the window bound") {
  auto count_complete = [](Int bound) {
    GammaGraph g(ctp(0, 2, 1, 2), ctp(0, 2, 1, 2), bound);
    Int n = 0;
    for (const Component& c : g.components())
      if (c.kind == ComponentKind::Type1) ++n;
    return n;
  };
  Int c50 = count_complete(50), c100 = count_complete(100), c200 = count_complete(200);
  CHECK(c50 > 0);
  CHECK(c100 > c50);
  // Linear growth: equal slope across the two doublings.
  CHECK(c200 - c100 == 2 * (c100 - c50));
}

TEST_CASE("length laws for complete components") {
  auto cts = brute_enumerate(8);
  Rng rng;
  for (int trial = 0; trial < 60; ++trial) {
    GammaGraph g(rng.pick(cts), rng.pick(cts), 120);
    for (const Component& c : g.components()) {
      if (c.kind == ComponentKind::Type1) CHECK(c.length % 4 == 0);
      if (c.kind == ComponentKind::Type2) CHECK(c.length % 2 == 1);
    }
  }
}

TEST_CASE("cycles read off components have the theorem lengths") {
  GammaGraph g(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4), 40);
  for (const Component& c : g.components()) {
    if (c.kind != ComponentKind::Type2) continue;
    auto frags = component_to_cycles(g, c);
    REQUIRE(frags.size() == 1);
    CHECK(Int(frags[0].entries.size()) == (c.length + 3) / 2);
    CHECK(frags[0].closed);
    std::set<Int> uniq(frags[0].entries.begin(), frags[0].entries.end());
    CHECK(uniq.size() == frags[0].entries.size());
  }

  // Length-4 cycles carry two fixed points.
  ClassTransposition t = ctp(0, 2, 1, 2);
  GammaGraph gg(t, t, 30);
  for (const Component& c : gg.components()) {
    if (c.kind != ComponentKind::Type1) continue;
    auto frags = component_to_cycles(gg, c);
    REQUIRE(frags.size() == 2);
    CHECK(frags[0].entries.size() == 1);
    CHECK(frags[1].entries.size() == 1);
  }

  // A single second-type edge is a path of length 1 carrying one 2-cycle.
  GammaGraph gd(ctp(0, 4, 1, 4), ctp(2, 4, 3, 4), 30);
  bool saw_len1 = false;
  for (const Component& c : gd.components()) {
    if (c.kind != ComponentKind::Type2 || c.length != 1) continue;
    saw_len1 = true;
    auto frags = component_to_cycles(gd, c);
    REQUIRE(frags.size() == 1);
    CHECK(frags[0].entries.size() == 2);
  }
  CHECK(saw_len1);
}

TEST_CASE("truncated components are rejected by the cycle reader") {
  GammaGraph g(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4), 20);
  for (const Component& c : g.components()) {
    if (c.kind != ComponentKind::Truncated) continue;
    CHECK_THROWS_AS(component_to_cycles(g, c), std::invalid_argument);
    break;
  }
}

TEST_CASE("reconstruction agrees with the symbolic composite on covered points") {
  auto cts = brute_enumerate(6);
  for (std::size_t i = 0; i < cts.size(); ++i) {
    for (std::size_t j = i; j < cts.size(); ++j) {
      GammaGraph g(cts[i], cts[j], 60);
      RcwaMap sigma = compose(RcwaMap::from_class_transposition(cts[i]),
                              RcwaMap::from_class_transposition(cts[j]));
      for (const auto& [x, y] : reconstruct_product(g)) CHECK(sigma(x) == y);
    }
  }
}

TEST_CASE("disjoint-support reconstruction is the union of both swaps") {
  ClassTransposition t1 = ctp(0, 4, 1, 4), t2 = ctp(2, 4, 3, 4);
  GammaGraph g(t1, t2, 40);
  auto table = reconstruct_product(g);
  CHECK(!table.empty());
  for (const auto& [x, y] : table) {
    if (t1.in_support(x)) CHECK(y == t1.apply(x));
    else CHECK(y == t2.apply(x));
  }
}

TEST_CASE("shared-vertex disjoint case reconstructs pure 3-cycles") {
  GammaGraph g(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4), 60);
  for (const Component& c : g.components()) {
    if (c.kind == ComponentKind::Truncated) continue;
    for (const CycleFragment& f : component_to_cycles(g, c)) CHECK(f.entries.size() == 3);
  }
}

TEST_CASE("window enlargement never reclassifies a complete component") {
  auto cts = brute_enumerate(7);
  Rng rng;
  auto key = [](const GammaGraph& g, const Component& c) {
    std::vector<Int> mus;
    for (auto id : c.vertex_ids) mus.push_back(g.vertices()[std::size_t(id)].v.mu);
    std::sort(mus.begin(), mus.end());
    return mus;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const ClassTransposition& t1 = rng.pick(cts);
    const ClassTransposition& t2 = rng.pick(cts);
    GammaGraph small(t1, t2, 60), large(t1, t2, 120);
    std::map<std::vector<Int>, ComponentKind> large_kinds;
    for (const Component& c : large.components())
      if (c.kind != ComponentKind::Truncated) large_kinds.emplace(key(large, c), c.kind);
    for (const Component& c : small.components()) {
      if (c.kind == ComponentKind::Truncated) continue;
      auto it = large_kinds.find(key(small, c));
      REQUIRE(it != large_kinds.end());
      CHECK(it->second == c.kind);
    }
  }
}

TEST_CASE("edge dump and summaries") {
  GammaGraph g(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4), 12);
  std::string edges = g.edge_dump();
  CHECK(edges.find("[first]") != std::string::npos);
  CHECK(edges.find("[second]") != std::string::npos);
  CHECK(edges.find(" -- ") != std::string::npos);

  bool saw_summary = false;
  for (const Component& c : g.components()) {
    std::string s = component_summary(g, c);
    if (s.rfind("Type2 len=3 mu={", 0) == 0) saw_summary = true;
  }
  CHECK(saw_summary);
}

TEST_CASE("window bound must cover the moduli") {
  CHECK_THROWS_AS(GammaGraph(ctp(0, 2, 1, 4), ctp(0, 2, 3, 4), 2), std::invalid_argument);
}
