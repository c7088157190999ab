#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "vg/omatroid.hpp"

using namespace vg;

static Arrangement make(size_t ell, std::vector<std::vector<long>> rows) {
  std::vector<la::Vec> normals;
  for (auto& r : rows) {
    la::Vec v;
    for (long x : r) v.emplace_back(x);
    normals.push_back(std::move(v));
  }
  return Arrangement(ell, std::move(normals));
}

static Arrangement braid3() {
  return make(3, {{1, 0, 0}, {0, 1, 0}, {-1, 1, 0}, {0, 1, -1}, {1, 0, -1}, {0, 0, -1}});
}

TEST_CASE("signed circuits on the stated examples") {
  SignedCircuitSet c = signed_circuits(make(2, {{1, 0}, {0, 1}, {1, 1}}));
  REQUIRE(c.circuits.size() == 2);
  CHECK(std::find(c.circuits.begin(), c.circuits.end(), SignVector{1, 1, -1}) !=
        c.circuits.end());
  CHECK(std::find(c.circuits.begin(), c.circuits.end(), SignVector{-1, -1, 1}) !=
        c.circuits.end());

  CHECK(signed_circuits(make(2, {{1, 0}, {0, 1}})).circuits.empty());

  SignedCircuitSet cb = signed_circuits(braid3());
  std::set<std::vector<size_t>> supports;
  for (const auto& sv : cb.circuits) {
    std::vector<size_t> sup;
    for (size_t i = 0; i < sv.size(); ++i)
      if (sv[i] != 0) sup.push_back(i);
    supports.insert(sup);
  }
  CHECK(supports.size() == 7);
  size_t size3 = 0, size4 = 0;
  for (const auto& s : supports) {
    if (s.size() == 3) ++size3;
    if (s.size() == 4) ++size4;
  }
  CHECK(size3 == 4);
  CHECK(size4 == 3);
  // supports are pairwise incomparable and the set is negation closed
  for (const auto& s1 : supports)
    for (const auto& s2 : supports)
      if (s1 != s2)
        CHECK_FALSE(std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()));
}

TEST_CASE("circuit cones are infeasible") {
  Arrangement a = braid3();
  for (const auto& sv : signed_circuits(a).circuits) {
    std::vector<la::Vec> rows;
    for (size_t i = 0; i < sv.size(); ++i) {
      if (sv[i] == 0) continue;
      la::Vec r = a.normal(i);
      if (sv[i] < 0)
        for (auto& x : r) x = -x;
      rows.push_back(std::move(r));
    }
    Arrangement cone(a.ell(), rows);
    CHECK_FALSE(feasible(cone, SignVector(rows.size(), 1)).has_value());
  }
}

TEST_CASE("circuit equivalence") {
  SignedCircuitSet c = signed_circuits(braid3());
  auto self = circuits_equivalent(c, c);
  REQUIRE(self.has_value());

  std::vector<int> eps{-1, 1, 1, -1, 1, 1};
  SignedCircuitSet cr = reorient(c, eps);
  auto r = circuits_equivalent(c, cr);
  REQUIRE(r.has_value());
  auto ro = reorientation_only(c, cr);
  REQUIRE(ro.has_value());
  CHECK(reorient(c, *ro) == cr);

  // permuted ground set is also recognized
  std::vector<SignVector> permuted;
  for (const auto& sv : c.circuits) {
    SignVector t(sv.size());
    for (size_t i = 0; i < sv.size(); ++i) t[(i + 1) % sv.size()] = sv[i];
    permuted.push_back(t);
  }
  SignedCircuitSet cp = make_circuit_set(c.n, permuted);
  CHECK(circuits_equivalent(c, cp).has_value());

  // different matroids are never equivalent
  SignedCircuitSet other =
      signed_circuits(make(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                               {2, 0, 1}, {1, 0, 1}, {0, 0, 1}}));
  CHECK_FALSE(circuits_equivalent(c, other).has_value());
}

TEST_CASE("graph isomorphism and automorphism order") {
  Graph c6(6), c6p(6), k2(2), k3(3);
  for (size_t i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  size_t relab[6] = {3, 0, 4, 1, 5, 2};
  for (size_t i = 0; i < 6; ++i) c6p.add_edge(relab[i], relab[(i + 1) % 6]);
  k2.add_edge(0, 1);
  for (size_t i = 0; i < 3; ++i) k3.add_edge(i, (i + 1) % 3);

  auto iso = graph_isomorphic(c6, c6p);
  REQUIRE(iso.has_value());
  for (size_t u = 0; u < 6; ++u)
    for (size_t v = 0; v < 6; ++v)
      CHECK(c6.has_edge(u, v) == c6p.has_edge((*iso)[u], (*iso)[v]));
  CHECK(graph_isomorphic(c6p, c6).has_value());  // symmetric
  CHECK(graph_automorphism_order(c6) == 12);
  CHECK(graph_automorphism_order(k2) == 2);
  CHECK(graph_automorphisms(c6).size() == 12);
  CHECK_FALSE(graph_isomorphic(c6, k3).has_value());

  Graph path3(3);
  path3.add_edge(0, 1);
  path3.add_edge(1, 2);
  CHECK_FALSE(graph_isomorphic(path3, k3).has_value());
}

TEST_CASE("partial cube recognition") {
  Graph c6(6), k3(3), q3(8);
  for (size_t i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  for (size_t i = 0; i < 3; ++i) k3.add_edge(i, (i + 1) % 3);
  for (size_t u = 0; u < 8; ++u)
    for (size_t b = 0; b < 3; ++b) {
      size_t v = u ^ (1u << b);
      if (u < v) q3.add_edge(u, v);
    }

  auto e6 = partial_cube_check(c6);
  REQUIRE(e6.has_value());
  CHECK(e6->num_classes == 3);
  CHECK_FALSE(partial_cube_check(k3).has_value());
  auto eq3 = partial_cube_check(q3);
  REQUIRE(eq3.has_value());
  CHECK(eq3->num_classes == 3);

  Graph tope = tope_graph(ChamberSet::enumerate(braid3()));
  auto et = partial_cube_check(tope);
  REQUIRE(et.has_value());
  CHECK(et->num_classes == 6);
}

TEST_CASE("necessary tope-graph conditions") {
  Graph c6(6);
  for (size_t i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  CHECK(tope_graph_necessary_check(c6, 3, 2).pass);
  CHECK_FALSE(tope_graph_necessary_check(c6, 4, 2).pass);  // wrong class count

  Graph tope = tope_graph(ChamberSet::enumerate(braid3()));
  CHECK(tope_graph_necessary_check(tope, 6, 3).pass);

  Graph k3(3);
  for (size_t i = 0; i < 3; ++i) k3.add_edge(i, (i + 1) % 3);
  auto bad = tope_graph_necessary_check(k3, 3, 2);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.failures.empty());

  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  CHECK_FALSE(tope_graph_necessary_check(disconnected, 1, 1).pass);
}

TEST_CASE("lattice isomorphism comparison") {
  Arrangement a = braid3();
  CHECK(lattice_isomorphic(a, a).has_value());
  // relabeled braid
  Arrangement b = make(3, {{0, 0, -1}, {1, 0, -1}, {0, 1, -1},
                           {-1, 1, 0}, {0, 1, 0}, {1, 0, 0}});
  CHECK(lattice_isomorphic(a, b).has_value());
  Arrangement falka = make(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                               {2, 0, 1}, {1, 0, 1}, {0, 0, 1}});
  CHECK_FALSE(lattice_isomorphic(a, falka).has_value());
}

TEST_CASE("graph DOT export is canonical") {
  Graph g(3);
  g.add_edge(2, 0);
  g.add_edge(1, 0);
  std::string dot = g.to_dot();
  CHECK(dot.find("v0 -- v1") != std::string::npos);
  CHECK(dot.find("v0 -- v2") != std::string::npos);
  CHECK(dot.find("v2 -- v0") == std::string::npos);
}
