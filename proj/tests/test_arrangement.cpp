#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "vg/arrangement.hpp"

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

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(make(2, {{0, 0}}), UsageError);
  CHECK_THROWS_AS(make(2, {{1, 0}, {2, 0}}), UsageError);          // parallel
  CHECK_THROWS_AS(make(2, {{1, 0}, {-1, 0}}), UsageError);         // same hyperplane
  CHECK_THROWS_AS(make(6, {{1, 0, 0, 0, 0, 0}}), UsageError);      // ell > 5
  CHECK_NOTHROW(make(2, {{1, 0}, {1, 1}}));
}

TEST_CASE("feasibility oracle") {
  Arrangement line = make(1, {{1}});
  auto w = feasible(line, {1});
  REQUIRE(w.has_value());
  CHECK((*w)[0] > 0);
  auto wm = feasible(line, {-1});
  REQUIRE(wm.has_value());
  CHECK((*wm)[0] < 0);

  Arrangement pencil = make(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK_FALSE(feasible(pencil, {1, 1, -1}).has_value());
  CHECK(feasible(pencil, {1, -1, 1}).has_value());

  Arrangement b2 = make(2, {{1, 0}, {0, 1}});
  auto wb = feasible(b2, {1, -1});
  REQUIRE(wb.has_value());
  CHECK((*wb)[0] > 0);
  CHECK((*wb)[1] < 0);
  CHECK_THROWS_AS(feasible(b2, {1, 0}), UsageError);
}

TEST_CASE("chamber enumeration counts and determinism") {
  CHECK(ChamberSet::enumerate(make(1, {{1}})).size() == 2);
  CHECK(ChamberSet::enumerate(make(2, {{1, 0}, {0, 1}})).size() == 4);
  CHECK(ChamberSet::enumerate(make(2, {{1, 0}, {0, 1}, {-1, -1}})).size() == 6);
  ChamberSet cs = ChamberSet::enumerate(braid3());
  CHECK(cs.size() == 24);
  for (size_t c = 0; c + 1 < cs.size(); ++c)
    CHECK(sign_vector_less(cs.chamber(c), cs.chamber(c + 1)));
  // every witness realizes its sign vector
  for (size_t c = 0; c < cs.size(); ++c) {
    for (size_t i = 0; i < braid3().n(); ++i) {
      Scalar v(0);
      for (size_t j = 0; j < 3; ++j) v += braid3().normal(i)[j] * cs.witness(c)[j];
      CHECK((v > 0 ? 1 : -1) == cs.chamber(c)[i]);
    }
  }
}

TEST_CASE("sep and tope graph") {
  Arrangement pencil = make(2, {{1, 0}, {0, 1}, {-1, -1}});
  ChamberSet cs = ChamberSet::enumerate(pencil);
  Graph g = tope_graph(cs);
  CHECK(g.num_vertices() == 6);
  for (size_t v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);
  CHECK(g.connected());
  for (size_t c = 0; c < cs.size(); ++c) {
    CHECK(sep(cs, c, c).empty());
    CHECK(sep_size(cs, c, cs.opposite(c)) == 3);
  }

  Graph gb = tope_graph(ChamberSet::enumerate(braid3()));
  CHECK(gb.num_vertices() == 24);
  CHECK(gb.degree_profile().front() == 3);  // min degree = rank
}

TEST_CASE("restriction with merged normals and lift map") {
  Arrangement b2 = make(2, {{1, 0}, {0, 1}});
  ChamberSet cs2 = ChamberSet::enumerate(b2);
  Restriction r = restriction(b2, cs2, 0);
  CHECK(r.sub.ell() == 1);
  CHECK(r.sub.n() == 1);
  CHECK(r.sub_chambers.size() == 2);
  for (auto [cp, cm] : r.lifts) {
    CHECK(cs2.chamber(cp)[0] == 1);
    CHECK(cs2.chamber(cm)[0] == -1);
    CHECK(sep_size(cs2, cp, cm) == 1);
  }

  // pencil: the other two lines merge on the restriction
  Arrangement pencil = make(2, {{1, 0}, {0, 1}, {-1, -1}});
  ChamberSet pcs = ChamberSet::enumerate(pencil);
  Restriction rp = restriction(pencil, pcs, 0);
  CHECK(rp.sub.n() == 1);
  CHECK(rp.sub_chambers.size() == 2);
  CHECK(rp.back_map[1].first == rp.back_map[2].first);

  // braid: lifts biject onto Sep={i} pairs
  Arrangement a3 = braid3();
  ChamberSet acs = ChamberSet::enumerate(a3);
  for (size_t i = 0; i < a3.n(); ++i) {
    Restriction ri = restriction(a3, acs, i);
    std::set<std::pair<size_t, size_t>> got;
    for (auto [cp, cm] : ri.lifts) {
      auto s = sep(acs, cp, cm);
      REQUIRE(s.size() == 1);
      CHECK(s[0] == i);
      got.insert({std::min(cp, cm), std::max(cp, cm)});
    }
    size_t expect = 0;
    for (size_t c1 = 0; c1 < acs.size(); ++c1)
      for (size_t c2 = c1 + 1; c2 < acs.size(); ++c2)
        if (sep_size(acs, c1, c2) == 1 && sep(acs, c1, c2)[0] == i) ++expect;
    CHECK(got.size() == ri.lifts.size());
    CHECK(got.size() == expect);
  }
}

TEST_CASE("lattice, characteristic polynomial, Betti numbers") {
  Arrangement a3 = braid3();
  std::vector<mpz_class> chi = char_poly(a3);  // ascending powers
  CHECK(chi == std::vector<mpz_class>{-6, 11, -6, 1});
  CHECK(betti(a3) == std::vector<mpz_class>{1, 6, 11, 6});
  CHECK(zaslavsky_count(a3) == 24);

  Arrangement empty(2, {});
  CHECK(char_poly(empty) == std::vector<mpz_class>{0, 0, 1});
  CHECK(zaslavsky_count(empty) == 1);
  CHECK(ChamberSet::enumerate(empty).size() == 1);

  Lattice lat = lattice(a3);
  CHECK(lat.arrangement_rank == 3);
  mpz_class mu_sum = 0;
  for (const auto& f : lat.flats)
    if (f.rank == lat.arrangement_rank) mu_sum += f.moebius;
  CHECK(mu_sum == chi[0]);
}

TEST_CASE("codimension-2 flats and genericity") {
  Arrangement a3 = braid3();
  auto flats = codim2_flats(a3);
  size_t triples = 0, doubles = 0;
  for (const auto& f : flats) {
    if (f.size() == 3) ++triples;
    if (f.size() == 2) ++doubles;
  }
  CHECK(triples == 4);
  CHECK(doubles == 3);
  CHECK_FALSE(is_generic_codim2(a3));
  CHECK(is_generic_codim2(make(2, {{1, 0}, {0, 1}})));
  CHECK_FALSE(is_generic_codim2(make(2, {{1, 0}, {0, 1}, {-1, -1}})));
  // rank < 2 is vacuously generic
  CHECK(is_generic_codim2(make(1, {{1}})));
}

TEST_CASE("global invariants on random arrangements") {
  for (uint64_t seed = 50; seed < 58; ++seed) {
    Arrangement a = random_arrangement(seed, 4 + seed % 4, 3, seed % 2 == 0);
    ChamberSet cs = ChamberSet::enumerate(a);
    CHECK(mpz_class(static_cast<unsigned long>(cs.size())) == zaslavsky_count(a));
    Graph g = tope_graph(cs);
    auto dist = g.all_distances();
    for (size_t c1 = 0; c1 < cs.size(); ++c1)
      for (size_t c2 = 0; c2 < cs.size(); ++c2)
        CHECK(dist[c1][c2] == sep_size(cs, c1, c2));
    for (size_t i = 0; i < a.n(); ++i) {
      size_t del = ChamberSet::enumerate(a.deletion(i)).size();
      size_t res = restriction(a, cs, i).sub_chambers.size();
      CHECK(del + res == cs.size());
    }
    // antipodal involution is a graph automorphism
    for (size_t c1 = 0; c1 < cs.size(); ++c1) {
      CHECK(cs.opposite(cs.opposite(c1)) == c1);
      for (size_t c2 = c1 + 1; c2 < cs.size(); ++c2)
        CHECK(g.has_edge(c1, c2) == g.has_edge(cs.opposite(c1), cs.opposite(c2)));
    }
  }
}

TEST_CASE("arrangement JSON round trip and errors") {
  Arrangement a3 = braid3();
  Arrangement back = Arrangement::from_json_text(a3.to_json_text());
  CHECK(back.n() == a3.n());
  CHECK(back.hash() == a3.hash());
  for (size_t i = 0; i < a3.n(); ++i)
    CHECK(back.normal(i) == a3.normal(i));

  CHECK_THROWS_AS(Arrangement::from_json_text("{"), UsageError);
  CHECK_THROWS_AS(Arrangement::from_json_text("{\"ell\": 2}"), UsageError);
  CHECK_THROWS_AS(
      Arrangement::from_json_text("{\"ell\": 2, \"normals\": [[\"x\", \"1\"]]}"),
      UsageError);
  Arrangement mixed = Arrangement::from_json_text(
      "{\"ell\": 2, \"normals\": [[1, \"1/2\"], [\"-1\", 3]]}");
  CHECK(mixed.normal(0)[1] == Scalar(1, 2));
}
