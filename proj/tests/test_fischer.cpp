#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermgt/fischer.hpp"
#include "test_util.hpp"

using namespace hermgt;
using hermgt::testutil::poly;
using hermgt::testutil::random_poly;

TEST_CASE("monomial pairing rule") {
  const SpinorPolynomial zb1 = poly(1, {{{0}, {1}, {}}});
  CHECK(fischer(zb1, zb1) == GaussianRational(1));
  const SpinorPolynomial z1sq = poly(1, {{{2}, {0}, {1}}});
  CHECK(fischer(z1sq, z1sq) == GaussianRational(2));
  // different bidegrees and different states are orthogonal
  CHECK(fischer(zb1, poly(1, {{{1}, {0}, {}}})).is_zero());
  CHECK(fischer(poly(1, {{{1}, {0}, {1}}}), poly(1, {{{1}, {0}, {}}})).is_zero());
  CHECK_THROWS_AS(fischer(zb1, SpinorPolynomial(2)), std::invalid_argument);
}

TEST_CASE("norms of the antiholomorphic n=2 family") {
  // <P, P> = 1/(j! (b-j)!) for P = zbar_2^j/j! zbar_1^{b-j}/(b-j)! I
  for (int b = 0; b <= 4; ++b) {
    for (int j = 0; j <= b; ++j) {
      const Integer den = factorial(j) * factorial(b - j);
      const SpinorPolynomial p =
          poly(2, {{{0, 0}, {b - j, j}, {}, GaussianRational(make_rational(Integer(1), den))}});
      CHECK(fischer(p, p) == GaussianRational(make_rational(Integer(1), den)));
    }
  }
}

TEST_CASE("conjugate symmetry and positivity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const SpinorPolynomial p = random_poly(rng, 2, 3);
    const SpinorPolynomial q = random_poly(rng, 2, 3);
    CHECK(fischer(p, q) == fischer(q, p).conj());
    const GaussianRational norm = fischer(p, p);
    CHECK(norm.im == 0);
    CHECK(norm.re >= 0);
    CHECK((norm.is_zero() == p.is_zero()));
    // conjugate-linearity in the first slot
    const GaussianRational c(make_rational(2, 3), make_rational(-1, 2));
    CHECK(fischer(c * p, q) == c.conj() * fischer(p, q));
    CHECK(fischer(p, c * q) == c * fischer(p, q));
  }
}

TEST_CASE("diagonal U(1) substitution invariance") {
  std::mt19937 rng(23);
  const GaussianRational u = GaussianRational::i();
  for (int trial = 0; trial < 60; ++trial) {
    const SpinorPolynomial p = random_poly(rng, 2, 3);
    const SpinorPolynomial q = random_poly(rng, 2, 3);
    CHECK(fischer(scale_variables(p, u), scale_variables(p, u)) == fischer(p, p));
    const GaussianRational before = fischer(p, q);
    const GaussianRational after = fischer(scale_variables(p, u), scale_variables(q, u));
    CHECK(after.is_zero() == before.is_zero());
    if (!before.is_zero()) {
      const GaussianRational unit = after / before;
      CHECK(unit.norm_sq() == 1);
    }
  }
}

TEST_CASE("gram matrices of pinned families") {
  const SpinorPolynomial e1 = poly(2, {{{0, 0}, {0, 0}, {1}}});
  const SpinorPolynomial e2 = poly(2, {{{0, 0}, {0, 0}, {2}}});
  const GramMatrix g = gram({e1, e2});
  CHECK(g.entries[0][0] == GaussianRational(1));
  CHECK(g.entries[1][1] == GaussianRational(1));
  CHECK(g.entries[0][1].is_zero());
  CHECK(g.entries[1][0].is_zero());
  CHECK(g.is_diagonal());
  CHECK(g.is_hermitean());
  CHECK(g.diagonal_real_positive());
  CHECK(is_orthogonal({e1, e2}));

  const GramMatrix single = gram({poly(1, {{{1}, {0}, {1}}})});
  CHECK(single.entries.size() == 1);
  CHECK(single.entries[0][0] == GaussianRational(1));

  // Eq-(7)-type family at b = 1 has Gram diag(1, 1)
  const SpinorPolynomial p0 = poly(2, {{{0, 0}, {1, 0}, {}}});
  const SpinorPolynomial p1 = poly(2, {{{0, 0}, {0, 1}, {}}});
  const GramMatrix g7 = gram({p0, p1});
  CHECK(g7.is_diagonal());
  CHECK(g7.entries[0][0] == GaussianRational(1));
  CHECK(g7.entries[1][1] == GaussianRational(1));
}

TEST_CASE("gram hermitean property on random families") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SpinorPolynomial> family;
    for (int i = 0; i < 4; ++i) family.push_back(random_poly(rng, 2, 2));
    CHECK(gram(family).is_hermitean());
  }
}
