#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "vg/reconstruct.hpp"

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

static Arrangement b2() { return make(2, {{1, 0}, {0, 1}}); }
static Arrangement pencil() { return make(2, {{1, 0}, {0, 1}, {-1, -1}}); }
static Arrangement braid3() {
  return make(3, {{1, 0, 0}, {0, 1, 0}, {-1, 1, 0}, {0, 1, -1}, {1, 0, -1}, {0, 0, -1}});
}

TEST_CASE("tope graph recovery from the algebra") {
  VGSpace s(b2(), Q);
  Graph rec = recover_tope_graph_from_heav(s);
  Graph tope = tope_graph(s.chambers());
  CHECK(rec.edges() == tope.edges());
  CHECK(rec.num_edges() == 4);

  VGSpace p(pencil(), Q);
  CHECK_THROWS_AS(recover_tope_graph_from_heav(p), DomainError);
}

TEST_CASE("generalized tope graphs") {
  VGSpace p(pencil(), Q);
  Graph tope = tope_graph(p.chambers());
  std::vector<VGElement> heav;
  for (size_t i = 0; i < 3; ++i) heav.push_back(p.heaviside(i, 1));
  Graph g = generalized_tope_graph(p, heav);
  CHECK(g.edges() == tope.edges());

  // replacing one Heaviside by the alternating function degrades the graph
  VGElement y = p.constant(Scalar(-1));
  for (size_t i = 0; i < 3; ++i) y = p.add(y, p.heaviside(i, 1));
  std::vector<VGElement> mixed{y, p.heaviside(1, 1), p.heaviside(2, 1)};
  Graph gm = generalized_tope_graph(p, mixed);
  CHECK_FALSE(gm.edges() == tope.edges());

  std::vector<VGElement> bad{p.indicator(0)};
  CHECK_THROWS_AS(generalized_tope_graph(p, bad), DomainError);
  std::vector<VGElement> notidem{p.constant(Scalar(2))};
  CHECK_THROWS_AS(generalized_tope_graph(p, notidem), DomainError);
}

TEST_CASE("filtered conjecture harness") {
  VGSpace s(b2(), Q);
  FilChain fc(s);
  HarnessReport r = conjecture_harness_filtered(s, HarnessMode::exhaustive());
  CHECK(r.examined == 6);  // C(4,2)
  CHECK(r.counterexamples.empty());
  CHECK(r.necessary_pass == r.matching);
  CHECK(r.basis_valid > 0);

  VGSpace p(pencil(), Q);
  FilChain fp(p);
  HarnessReport rp = conjecture_harness_filtered(p, HarnessMode::exhaustive());
  CHECK(rp.examined == 56);  // C(8,3)
  CHECK(rp.counterexamples.empty());
  CHECK(rp.matching == rp.necessary_pass);
  CHECK(rp.matching > 0);

  HarnessReport rr = conjecture_harness_filtered(p, HarnessMode::random(42, 20));
  CHECK(rr.examined == 20);
  CHECK(rr.counterexamples.empty());
  HarnessReport rr2 = conjecture_harness_filtered(p, HarnessMode::random(42, 20));
  CHECK(rr.to_json() == rr2.to_json());
}

TEST_CASE("automorphism groups") {
  AutGroups ap = aut_groups(VGSpace(pencil(), Q));
  CHECK(ap.graph_order == 12);
  CHECK(ap.filt_order == 48);
  CHECK(ap.graph_inside_filt);
  CHECK(ap.filt_order % ap.graph_order == 0);
  CHECK(ap.set_order == mpz_class("720"));  // 6!

  AutGroups ab = aut_groups(VGSpace(b2(), Q));
  CHECK(ab.graph_order == 8);
  CHECK(ab.filt_order == 8);
  CHECK(ab.graph_inside_filt);
}

TEST_CASE("circuit detection from products") {
  VGSpace s(braid3(), Q);
  FilChain fc(s);
  std::vector<GradedClass> xs;
  for (size_t i = 0; i < s.n(); ++i)
    xs.push_back(fc.graded_class(s.heaviside(i, 1), 1));
  auto circuits = detect_circuits_from_products(fc, xs);
  CHECK(circuits.size() == 7);

  SignedCircuitSet truth = signed_circuits(s.arrangement());
  RecoveredCircuits rc = check_circuits(fc, xs);
  CHECK(rc.circuits == truth);

  // unit rescalings keep the supports and reorient the signs
  std::vector<int> eps{1, -1, 1, 1, -1, 1};
  std::vector<GradedClass> xe = xs;
  for (size_t i = 0; i < xs.size(); ++i)
    if (eps[i] < 0)
      for (auto& x : xe[i].coords) x = Q.neg(x);
  RecoveredCircuits rce = check_circuits(fc, xe);
  CHECK(rce.circuits == reorient(truth, eps));

  // a non-unit scalar breaks goodness
  std::vector<GradedClass> bad = xs;
  for (auto& x : bad[2].coords) x = Q.mul(Scalar(3), x);
  CheckCircuitsResult r = try_check_circuits(fc, bad);
  CHECK_FALSE(r.good);
  CHECK(r.reason.find("not good") != std::string::npos);
  CHECK_THROWS_AS(check_circuits(fc, bad), DomainError);

  // generators must span
  std::vector<GradedClass> degen = xs;
  degen[1] = degen[0];
  CHECK_THROWS_AS(detect_circuits_from_products(fc, degen), DomainError);

  // B2 has no circuits at all
  VGSpace sb(b2(), Q);
  FilChain fb(sb);
  std::vector<GradedClass> xb;
  for (size_t i = 0; i < 2; ++i) xb.push_back(fb.graded_class(sb.heaviside(i, 1), 1));
  CHECK(detect_circuits_from_products(fb, xb).empty());
  CHECK(check_circuits(fb, xb).circuits.circuits.empty());
}

TEST_CASE("circuit relations") {
  VGSpace p(pencil(), Q);
  FilChain fc(p);
  std::vector<GradedClass> xs;
  for (size_t i = 0; i < 3; ++i) xs.push_back(fc.graded_class(p.heaviside(i, 1), 1));
  la::Vec lam = circuit_relation(fc, xs, {0, 1, 2});
  REQUIRE(lam.size() == 3);
  CHECK(Q.eq(lam[0], Scalar(1)));
  // pencil dependency has all-positive kernel: relation signs all equal
  CHECK(Q.eq(lam[1], lam[0]));
  CHECK(Q.eq(lam[2], lam[0]));
}

TEST_CASE("recover_and_compare") {
  VGSpace s(b2(), Q);
  FilChain fc(s);
  RecoverVerdict v = recover_and_compare(s, fc, {Scalar(1), Scalar(1)});
  CHECK(v.good);
  CHECK(v.equivalent);
  CHECK(v.pure_reorientation);

  RecoverVerdict v2 = recover_and_compare(s, fc, {Scalar(-1), Scalar(1)});
  CHECK(v2.good);
  CHECK(v2.equivalent);

  CHECK_THROWS_AS(recover_and_compare(s, fc, {Scalar(0), Scalar(1)}), UsageError);

  // non-generic input refuses
  VGSpace p(pencil(), Q);
  FilChain fp(p);
  CHECK_THROWS_AS(recover_and_compare(p, fp, {Scalar(1), Scalar(1), Scalar(1)}),
                  DomainError);
}

TEST_CASE("graded conjecture harness") {
  VGSpace s(b2(), Q);
  FilChain fc(s);
  HarnessReport r = conjecture_harness_graded(s, fc, HarnessMode::exhaustive());
  CHECK(r.examined == 4);  // one line subset, 2^2 sign patterns
  CHECK(r.counterexamples.empty());
  CHECK(r.matching == r.basis_valid);
  CHECK(r.not_good == 0);

  VGSpace p(pencil(), Q);
  FilChain fp(p);
  HarnessReport rp = conjecture_harness_graded(p, fp, HarnessMode::exhaustive());
  // 4 lines, so C(4,3)=4 subsets times 8 sign patterns
  CHECK(rp.examined == 32);
  CHECK(rp.counterexamples.empty());
  CHECK(rp.basis_valid == rp.matching + rp.not_good);
  CHECK(rp.matching > 0);
  HarnessReport rp2 = conjecture_harness_graded(p, fp, HarnessMode::exhaustive());
  CHECK(rp.to_json() == rp2.to_json());
}
