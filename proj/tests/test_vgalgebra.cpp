#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "vg/omatroid.hpp"
#include "vg/vgalgebra.hpp"

using namespace vg;

static const FieldSpec Q = FieldSpec::rationals();

static Arrangement make(size_t ell, std::vector<std::vector<long>> rows) {
  std::vector<la::Vec> normals;
  for (auto& r : rows) {
    la::Vec v;
    for (long x : r) v.emplace_back(x);
    normals.push_back(std::move(v));
  }
  return Arrangement(ell, std::move(normals));
}

// pencil with all-positive dependency, so x1+x2+x3-1 is idempotent
static Arrangement pencil() { return make(2, {{1, 0}, {0, 1}, {-1, -1}}); }

static Arrangement braid3() {
  return make(3, {{1, 0, 0}, {0, 1, 0}, {-1, 1, 0}, {0, 1, -1}, {1, 0, -1}, {0, 0, -1}});
}

static VGElement pencil_alt(const VGSpace& s) {
  VGElement y = s.constant(Scalar(-1));
  for (size_t i = 0; i < 3; ++i) y = s.add(y, s.heaviside(i, 1));
  return y;
}

TEST_CASE("Heaviside functions and identities") {
  VGSpace one(make(1, {{1}}), Q);
  VGElement xp = one.heaviside(0, 1);
  CHECK(xp.values == std::vector<Scalar>{Scalar(1), Scalar(0)});
  VGSpace s(braid3(), Q);
  for (size_t i = 0; i < s.n(); ++i) {
    VGElement p = s.heaviside(i, 1), m = s.heaviside(i, -1);
    CHECK(s.add(p, m) == s.constant(Scalar(1)));
    CHECK(s.mul(p, m) == s.constant(Scalar(0)));
    CHECK(s.mul(p, p) == p);
    CHECK(s.is_idempotent(p));
  }
  CHECK_THROWS_AS(s.heaviside(6, 1), UsageError);
  CHECK_THROWS_AS(s.heaviside(0, 2), UsageError);
}

TEST_CASE("filtration dimensions match Betti numbers") {
  VGSpace p(pencil(), Q);
  FilChain fp(p);
  CHECK(fp.dim(0) == 1);
  CHECK(fp.dim(1) == 4);
  CHECK(fp.dim(2) == 6);
  CHECK(fp.graded_dim(0) == 1);
  CHECK(fp.graded_dim(1) == 3);
  CHECK(fp.graded_dim(2) == 2);

  VGSpace a(braid3(), Q);
  FilChain fa(a);
  CHECK(fa.dim(0) == 1);
  CHECK(fa.dim(1) == 7);
  CHECK(fa.dim(2) == 18);
  CHECK(fa.dim(3) == 24);

  VGSpace one(make(1, {{1}}), Q);
  FilChain fone(one);
  CHECK(fone.dim(0) == 1);
  CHECK(fone.dim(1) == 2);

  for (uint32_t prime : {3u, 5u}) {
    VGSpace ap(braid3(), FieldSpec::prime(prime));
    FilChain fap(ap);
    CHECK(fap.graded_dim(1) == 6);
    CHECK(fap.graded_dim(2) == 11);
    CHECK(fap.graded_dim(3) == 6);
  }
}

TEST_CASE("rho maps and supports") {
  VGSpace s(braid3(), Q);
  for (size_t i = 0; i < s.n(); ++i) {
    VGElement xi = s.heaviside(i, 1);
    auto ci = s.rho_constant(i, xi);
    REQUIRE(ci.has_value());
    CHECK(Q.eq(*ci, Scalar(1)));
    for (size_t j = 0; j < s.n(); ++j) {
      if (j == i) continue;
      auto cj = s.rho_constant(j, xi);
      REQUIRE(cj.has_value());
      CHECK(Q.is_zero(*cj));
    }
    auto sup = s.support(xi);
    REQUIRE(sup.size() == 1);
    CHECK(sup[0] == i);
  }

  VGSpace p(pencil(), Q);
  VGElement y = pencil_alt(p);
  for (size_t i = 0; i < 3; ++i) CHECK(p.rho_constant(i, y).has_value());
  CHECK(p.support(y) == std::vector<size_t>{0, 1, 2});
  CHECK(p.support(p.constant(Scalar(3))).empty());

  VGElement ind = s.indicator(0);
  CHECK_FALSE(s.in_fil1(ind));
  CHECK_THROWS_AS(s.support(ind), DomainError);
}

TEST_CASE("Fil^1 membership criterion agrees with the subspace") {
  VGSpace p(pencil(), Q);
  FilChain fc(p);
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 30; ++t) {
    VGElement f{Q, {}};
    for (size_t c = 0; c < p.dim(); ++c)
      f.values.emplace_back(static_cast<long>(rng() % 7) - 3);
    CHECK(p.in_fil1(f) == fc.in_fil(1, f));
  }
}

TEST_CASE("generalized Heaviside enumeration") {
  VGSpace p(pencil(), Q);
  std::vector<VGElement> gh = p.gheav_bruteforce();
  CHECK(gh.size() == 8);
  VGElement y = pencil_alt(p);
  CHECK(std::find(gh.begin(), gh.end(), y) != gh.end());
  CHECK(std::find(gh.begin(), gh.end(), p.complement(y)) != gh.end());
  for (size_t i = 0; i < 3; ++i) {
    CHECK(std::find(gh.begin(), gh.end(), p.heaviside(i, 1)) != gh.end());
    CHECK(std::find(gh.begin(), gh.end(), p.heaviside(i, -1)) != gh.end());
  }
  CHECK(gh == p.gheav_structural());

  VGSpace b2(make(2, {{1, 0}, {0, 1}}), Q);
  std::vector<VGElement> ghb = b2.gheav_bruteforce();
  CHECK(ghb.size() == 4);
  CHECK(ghb == b2.gheav_structural());

  VGSpace a(braid3(), Q);
  std::vector<VGElement> gha = a.gheav_bruteforce();
  CHECK(gha.size() == 20);
  CHECK(gha == a.gheav_structural());
  for (const auto& g : gha) {
    CHECK(a.is_idempotent(g));
    CHECK(a.in_fil1(g));
    CHECK(std::find(gha.begin(), gha.end(), a.complement(g)) != gha.end());
  }
}

TEST_CASE("alternating functions") {
  VGSpace p(pencil(), Q);
  auto pair = p.alt_function({0, 1, 2});
  REQUIRE(pair.has_value());
  VGElement y = pencil_alt(p);
  CHECK((pair->plus == y || pair->minus == y));
  CHECK(p.add(pair->plus, pair->minus) == p.constant(Scalar(1)));

  auto single = p.alt_function({2});
  REQUIRE(single.has_value());
  CHECK(single->plus == p.heaviside(2, 1));

  // even subsets have no alternating function
  CHECK_FALSE(p.alt_function({0, 1}).has_value());
  // independent triples are not rank-2 flats
  VGSpace a(braid3(), Q);
  CHECK_THROWS_AS(a.alt_function({0, 1, 5}), DomainError);

  // quadruple flat: all four odd 3-subsets admit alternating functions
  Arrangement falka = make(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0},
                               {2, 0, 1}, {1, 0, 1}, {0, 0, 1}});
  VGSpace fs(falka, Q);
  size_t found = 0;
  for (auto subset : std::vector<std::vector<size_t>>{
           {0, 3, 4}, {0, 3, 5}, {0, 4, 5}, {3, 4, 5}})
    if (fs.alt_function(subset)) ++found;
  CHECK(found == 4);
  CHECK(fs.gheav_bruteforce().size() == 22);
}

TEST_CASE("graded classes and multiplication") {
  VGSpace p(pencil(), Q);
  FilChain fc(p);
  GradedClass x0 = fc.graded_class(p.heaviside(0, 1), 1);
  CHECK(fc.is_zero(fc.graded_mult(x0, x0)));

  // graded product is independent of the chosen lift
  GradedClass x1 = fc.graded_class(p.heaviside(1, 1), 1);
  VGElement lift = fc.lift(x0);
  VGElement bumped = p.add(lift, p.constant(Scalar(7)));
  GradedClass x0b = fc.graded_class(bumped, 1);
  CHECK(fc.lift(fc.graded_mult(x0, x1)) == fc.lift(fc.graded_mult(x0b, x1)));

  // degree beyond the rank vanishes
  GradedClass top = fc.graded_mult(fc.graded_mult(x0, x1),
                                   fc.graded_class(p.heaviside(2, 1), 1));
  CHECK(fc.is_zero(top));

  // the circuit relation in degree 2 with kernel signs
  SignedCircuitSet c = signed_circuits(p.arrangement());
  const SignVector& sv = c.circuits[0];
  GradedClass rel = fc.zero_class(2);
  for (size_t del = 0; del < 3; ++del) {
    std::vector<size_t> sub;
    for (size_t q = 0; q < 3; ++q)
      if (q != del) sub.push_back(q);
    GradedClass mono = fc.graded_class(fc.monomial(sub), 2);
    for (size_t t = 0; t < rel.coords.size(); ++t)
      rel.coords[t] = Q.add(rel.coords[t], Q.mul(Q.from_long(sv[del]), mono.coords[t]));
  }
  CHECK(fc.is_zero(rel));

  CHECK_THROWS_AS(fc.graded_class(p.indicator(0), 1), DomainError);
}

TEST_CASE("square-zero lines") {
  VGSpace one(make(1, {{1}}), Q);
  FilChain fone(one);
  CHECK(sqzero(one, fone).size() == 1);

  VGSpace b2(make(2, {{1, 0}, {0, 1}}), Q);
  FilChain fb2(b2);
  std::vector<la::Vec> lines = sqzero(b2, fb2);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == la::Vec{Scalar(0), Scalar(1)});
  CHECK(lines[1] == la::Vec{Scalar(1), Scalar(0)});

  VGSpace p(pencil(), Q);
  FilChain fp(p);
  CHECK(sqzero(p, fp).size() == 4);
}

TEST_CASE("presentation relations vanish") {
  for (uint32_t prime : {0u, 3u}) {
    FieldSpec F = prime == 0 ? Q : FieldSpec::prime(prime);
    VGSpace p(pencil(), F);
    FilChain fp(p);
    PresentationReport rp = verify_presentations(p, fp);
    CHECK(rp.ok);
    CHECK(rp.circuits_checked == 1);

    VGSpace a(braid3(), F);
    FilChain fa(a);
    PresentationReport ra = verify_presentations(a, fa);
    CHECK(ra.ok);
    CHECK(ra.circuits_checked == 7);
  }
  // independent arrangement: vacuous pass
  VGSpace b2(make(2, {{1, 0}, {0, 1}}), Q);
  FilChain fb2(b2);
  PresentationReport rb = verify_presentations(b2, fb2);
  CHECK(rb.ok);
  CHECK(rb.circuits_checked == 0);
}

TEST_CASE("characteristic 2 override") {
  FieldSpec f2 = FieldSpec::prime(2, true);
  VGSpace p(pencil(), f2);
  CHECK_THROWS_AS(p.gheav_structural(), DomainError);
  std::vector<VGElement> gh = p.gheav_bruteforce();
  // over F_2 every nonconstant element of Fil^1 is idempotent
  CHECK(gh.size() == 14);
  FilChain fc(p);
  CHECK(fc.graded_dim(1) == 3);
  CHECK(fc.graded_dim(2) == 2);
  PresentationReport rep = verify_presentations(p, fc);
  CHECK(rep.ok);
}

TEST_CASE("element and graded-class JSON round trips") {
  VGSpace p(pencil(), Q);
  VGElement y = pencil_alt(p);
  std::string text = p.element_json(y);
  VGElement back = p.element_from_json(text);
  CHECK(back == y);
  VGSpace other(braid3(), Q);
  CHECK_THROWS_AS(other.element_from_json(text), UsageError);

  FilChain fc(p);
  GradedClass u = fc.graded_class(y, 1);
  GradedClass u2 = fc.class_from_json(fc.class_json(u));
  CHECK(u2.degree == u.degree);
  CHECK(fc.lift(u2) == fc.lift(u));
  VGSpace braid_space(braid3(), Q);
  FilChain fother(braid_space);
  CHECK_THROWS_AS(fother.class_from_json(fc.class_json(u)), UsageError);
}

TEST_CASE("a flipped relation sign is detected") {
  // the graded circuit relation vanishes only with the kernel signs; any
  // single sign flip must leave a nonzero class
  VGSpace p(pencil(), Q);
  FilChain fc(p);
  SignedCircuitSet c = signed_circuits(p.arrangement());
  SignVector sv = c.circuits[0];
  sv[1] = static_cast<int8_t>(-sv[1]);
  GradedClass rel = fc.zero_class(2);
  for (size_t del = 0; del < 3; ++del) {
    std::vector<size_t> sub;
    for (size_t q = 0; q < 3; ++q)
      if (q != del) sub.push_back(q);
    GradedClass mono = fc.graded_class(fc.monomial(sub), 2);
    for (size_t t = 0; t < rel.coords.size(); ++t)
      rel.coords[t] = Q.add(rel.coords[t], Q.mul(Q.from_long(sv[del]), mono.coords[t]));
  }
  CHECK_FALSE(fc.is_zero(rel));
}

TEST_CASE("deletion-restriction dimension identity") {
  Arrangement a = braid3();
  VGSpace s(a, Q);
  FilChain fc(s);
  for (size_t i = 0; i < a.n(); ++i) {
    VGSpace del(a.deletion(i), Q);
    FilChain fdel(del);
    VGSpace res(s.restr(i).sub, Q);
    FilChain fres(res);
    for (size_t k = 0; k < fc.levels(); ++k) {
      size_t d1 = k < fdel.levels() ? fdel.dim(k) : fdel.dim(fdel.levels() - 1);
      size_t d2 = k == 0 ? 0 : fres.dim(std::min(k - 1, fres.levels() - 1));
      CHECK(fc.dim(k) == d1 + d2);
    }
  }
}
