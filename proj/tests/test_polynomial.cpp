#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace hermgt;
using hermgt::testutil::poly;
using hermgt::testutil::random_poly;

TEST_CASE("bidegree and grade classification") {
  const SpinorPolynomial p = poly(2, {{{1, 0}, {0, 1}, {1}}});
  const auto bd = bidegree(p);
  CHECK(bd.kind == Homogeneity::kHomogeneous);
  CHECK(bd.a == 1);
  CHECK(bd.b == 1);
  const auto gr = grade(p);
  CHECK(gr.kind == Homogeneity::kHomogeneous);
  CHECK(gr.r == 1);

  const SpinorPolynomial mixed = poly(2, {{{1, 0}, {0, 0}, {1}}, {{0, 0}, {1, 0}, {1}}});
  CHECK(bidegree(mixed).kind == Homogeneity::kMixed);

  CHECK(bidegree(SpinorPolynomial(2)).kind == Homogeneity::kZero);
  CHECK(grade(SpinorPolynomial(2)).kind == Homogeneity::kZero);
  CHECK(is_homogeneous(SpinorPolynomial(2), 7, 7, 1));
}

TEST_CASE("partial derivatives on pinned inputs") {
  // d/dzbar_1 (zbar_1^2/2 I) = zbar_1 I
  const SpinorPolynomial sq = poly(1, {{{0}, {2}, {}, GaussianRational(make_rational(1, 2))}});
  CHECK(partial(sq, 1, true) == poly(1, {{{0}, {1}, {}}}));
  // no z-dependence
  const SpinorPolynomial anti = poly(1, {{{0}, {3}, {}}});
  CHECK(partial(anti, 1, false).is_zero());
  // termwise differentiation of the grade-1 hand-checked element
  const SpinorPolynomial p = poly(2, {{{0, 1}, {0, 1}, {1}},
                                      {{1, 0}, {1, 0}, {1}, GaussianRational(-1)},
                                      {{1, 0}, {0, 1}, {2}}});
  const SpinorPolynomial expect = poly(2, {{{0, 1}, {0, 0}, {1}}, {{1, 0}, {0, 0}, {2}}});
  CHECK(partial(p, 2, true) == expect);
}

TEST_CASE("partials in distinct variables commute") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const SpinorPolynomial p = random_poly(rng, 3, 3);
    for (int j = 1; j <= 3; ++j) {
      for (int l = 1; l <= 3; ++l) {
        CHECK(partial(partial(p, j, false), l, true) == partial(partial(p, l, true), j, false));
        CHECK(partial(partial(p, j, false), l, false) == partial(partial(p, l, false), j, false));
      }
    }
  }
}

TEST_CASE("homogeneity bookkeeping under multiplication and create") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    SpinorPolynomial p = random_poly(rng, 2, 2);
    const auto bd = bidegree(p);
    if (bd.kind != Homogeneity::kHomogeneous) continue;
    const auto bz = bidegree(mul_var(p, 1, false));
    CHECK(bz.a == bd.a + 1);
    CHECK(bz.b == bd.b);
    const auto bzb = bidegree(mul_var(p, 2, true));
    CHECK(bzb.a == bd.a);
    CHECK(bzb.b == bd.b + 1);
    const auto gr = grade(p);
    const SpinorPolynomial up = create(1, p);
    if (gr.kind == Homogeneity::kHomogeneous && !up.is_zero()) {
      CHECK(grade(up).r == gr.r + 1);
    }
  }
}

TEST_CASE("restriction to the hyperplane and the spinor split") {
  // (z1 zb1 - z2 zb2) {1} - z1 zb2 {2} -> (z1 zb1 {1}, 0)
  const SpinorPolynomial p = poly(2, {{{1, 0}, {1, 0}, {1}},
                                      {{0, 1}, {0, 1}, {1}, GaussianRational(-1)},
                                      {{1, 0}, {0, 1}, {2}, GaussianRational(-1)}});
  const auto [p0, p1] = restrict_last(p);
  CHECK(p0 == poly(1, {{{1}, {1}, {1}}}));
  CHECK(p1.is_zero());

  const SpinorPolynomial anti = poly(2, {{{0, 0}, {3, 0}, {}}});
  const auto [q0, q1] = restrict_last(anti);
  CHECK(q0 == poly(1, {{{0}, {3}, {}}}));
  CHECK(q1.is_zero());

  const SpinorPolynomial s = poly(2, {{{1, 0}, {0, 0}, {2}}});
  const auto [s0, s1] = restrict_last(s);
  CHECK(s0.is_zero());
  CHECK(s1 == poly(1, {{{1}, {0}, {}}}));
}

TEST_CASE("embedding round trip") {
  CHECK(embed_lower(poly(1, {{{0}, {1}, {}}}), 2) == poly(2, {{{0, 0}, {1, 0}, {}}}));
  CHECK(embed_lower(poly(2, {{{0, 0}, {0, 0}, {1}}}), 3) == poly(3, {{{0, 0, 0}, {0, 0, 0}, {1}}}));
  std::mt19937 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const SpinorPolynomial p = random_poly(rng, 2, 3);
    const auto [back, extra] = restrict_last(embed_lower(p, 3));
    CHECK(back == p);
    CHECK(extra.is_zero());
  }
}

TEST_CASE("term validation") {
  SpinorPolynomial p(2);
  CHECK_THROWS_AS(p.add_term(Monomial{{1}, {0, 0}, {}}, GaussianRational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(p.add_term(Monomial{{1, 0}, {0, 0}, {3}}, GaussianRational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(p.add_term(Monomial{{-1, 0}, {0, 0}, {}}, GaussianRational(1)),
                  std::invalid_argument);
  // adding and cancelling leaves no stored zero
  p.add_term(Monomial{{1, 0}, {0, 0}, {1}}, GaussianRational(2));
  p.add_term(Monomial{{1, 0}, {0, 0}, {1}}, GaussianRational(-2));
  CHECK(p.is_zero());
}
