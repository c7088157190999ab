#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "vg/matrix.hpp"

using namespace vg;
using la::Matrix;

static const FieldSpec Q = FieldSpec::rationals();

TEST_CASE("field parsing and characteristic gate") {
  CHECK(FieldSpec::parse("Q").kind() == FieldSpec::Kind::rationals);
  CHECK(FieldSpec::parse("Fp:5").p() == 5);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:4"), UsageError);
  CHECK_THROWS_AS(FieldSpec::parse("R"), UsageError);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:2"), DomainError);
  FieldSpec f2 = FieldSpec::parse("Fp:2", /*allow_char2=*/true);
  CHECK(f2.is_char2());
  CHECK_THROWS_AS(f2.require_odd_char("test"), DomainError);

  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(f5.eq(f5.add(Scalar(3), Scalar(4)), Scalar(2)));
  CHECK(f5.eq(f5.inv(Scalar(2)), Scalar(3)));
  CHECK(f5.eq(f5.normalize(Scalar(-1)), Scalar(4)));
  CHECK(f5.eq(f5.normalize(Scalar("1/2")), Scalar(3)));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Scalar(3, 4));
  CHECK(parse_rational("-7") == Scalar(-7));
  CHECK(rational_str(Scalar(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_rational("1.5"), UsageError);
  CHECK_THROWS_AS(parse_rational(""), UsageError);
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
}

TEST_CASE("rref on the stated examples") {
  auto id = Matrix::identity(Q, 3);
  auto r = la::rref(id);
  CHECK(r.rank == 3);
  CHECK(Matrix::from_rows(Q, r.basis.basis) == id);

  Matrix zero(Q, 2, 4);
  CHECK(la::rref(zero).rank == 0);
  CHECK(la::rref(zero).basis.basis.empty());

  auto dep = la::rref(Matrix::from_rows(Q, {{1, 2}, {2, 4}}));
  CHECK(dep.rank == 1);
  CHECK(dep.basis.basis[0] == la::Vec{Scalar(1), Scalar(2)});
}

TEST_CASE("kernel on the stated examples") {
  // columns (1,0),(0,1),(1,1): kernel spanned by (1,1,-1)
  auto k = la::kernel(Matrix::from_rows(Q, {{1, 0, 1}, {0, 1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(la::contains(k, {Scalar(1), Scalar(1), Scalar(-1)}));

  CHECK(la::kernel(Matrix::from_rows(Q, {{2, 1}, {1, 1}})).dim() == 0);
  CHECK(la::kernel(Matrix::from_rows(Q, {{0}, {0}, {0}})).dim() == 1);
}

TEST_CASE("membership, equality, sum, intersection") {
  auto s1 = la::rref(Matrix::from_rows(Q, {{1, 0, 0}, {0, 1, 0}})).basis;
  auto s2 = la::rref(Matrix::from_rows(Q, {{0, 1, 0}, {0, 0, 1}})).basis;
  la::Vec v{Scalar(2), Scalar(-3), Scalar(0)};
  CHECK(la::contains(s1, v));
  CHECK_FALSE(la::contains(s2, {Scalar(1), Scalar(0), Scalar(0)}));
  CHECK_THROWS_AS(la::contains(s1, {Scalar(1)}), UsageError);

  auto inter = la::intersection(s1, s2);
  auto e2 = la::rref(Matrix::from_rows(Q, {{0, 1, 0}})).basis;
  CHECK(la::equal(inter, e2));
  CHECK(la::sum(s1, s2).dim() == 3);
}

TEST_CASE("rank-nullity and projection over Q and F_p") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    FieldSpec F = trial % 2 ? Q : FieldSpec::prime(trial % 4 ? 5 : 3);
    size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    Matrix m(F, rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j)
        m.at(i, j) = F.from_long(static_cast<long>(rng() % 9) - 4);
    auto r = la::rref(m);
    CHECK(r.rank + la::kernel(m).dim() == cols);
    CHECK(la::equal(la::rref(Matrix::from_rows(F, r.basis.basis)).basis, r.basis));
    // membership is consistent with recovered coordinates
    la::Vec probe(cols, F.zero());
    for (size_t i = 0; i < r.rank; ++i)
      for (size_t j = 0; j < cols; ++j)
        probe[j] = F.add(probe[j], F.mul(F.from_long(static_cast<long>(i) + 2),
                                         r.basis.basis[i][j]));
    la::Vec coeffs;
    la::Vec rem = la::reduce(r.basis, probe, &coeffs);
    for (const auto& x : rem) CHECK(F.is_zero(x));
    la::Vec rebuilt(cols, F.zero());
    for (size_t i = 0; i < coeffs.size(); ++i)
      for (size_t j = 0; j < cols; ++j)
        rebuilt[j] = F.add(rebuilt[j], F.mul(coeffs[i], r.basis.basis[i][j]));
    for (size_t j = 0; j < cols; ++j) CHECK(F.eq(rebuilt[j], probe[j]));
  }
}

TEST_CASE("span solver matches the one-shot solver") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    FieldSpec F = trial % 2 ? Q : FieldSpec::prime(7);
    std::vector<la::Vec> rows;
    size_t n = 4;
    for (size_t i = 0; i < 3; ++i) {
      la::Vec r(n);
      for (size_t j = 0; j < n; ++j) r[j] = F.from_long(static_cast<long>(rng() % 7) - 3);
      rows.push_back(r);
    }
    if (la::rref(Matrix::from_rows(F, rows)).rank != rows.size()) continue;
    la::SpanSolver solver(F, rows);
    la::Vec target(n, F.zero());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < n; ++j)
        target[j] = F.add(target[j], F.mul(F.from_long(static_cast<long>(i) - 1), rows[i][j]));
    auto x1 = solver.solve(target);
    auto x2 = la::solve_in_span(F, rows, target);
    REQUIRE(x1.has_value());
    REQUIRE(x2.has_value());
    for (size_t i = 0; i < rows.size(); ++i) CHECK(F.eq((*x1)[i], (*x2)[i]));
    la::Vec off = target;
    off.back() = F.add(off.back(), F.one());
    la::Vec probe = off;
    bool in1 = solver.solve(probe).has_value();
    bool in2 = la::solve_in_span(F, rows, probe).has_value();
    CHECK(in1 == in2);
  }
}
