#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermgt/operators.hpp"
#include "test_util.hpp"

using namespace hermgt;
using hermgt::testutil::poly;
using hermgt::testutil::random_poly;

TEST_CASE("hermitean dirac operators on pinned inputs") {
  // upz kills pure zbar polynomials
  CHECK(apply_upz(poly(2, {{{0, 0}, {3, 0}, {}}})).is_zero());
  // upzd(zbar_1^b/b! I) = f_1 (...) I = 0
  CHECK(apply_upzd(poly(1, {{{0}, {4}, {}, GaussianRational(make_rational(1, 24))}})).is_zero());
  // the Eq-(9)-type element is h-monogenic
  const SpinorPolynomial p = poly(2, {{{0, 1}, {0, 1}, {1}},
                                      {{1, 0}, {1, 0}, {1}, GaussianRational(-1)},
                                      {{1, 0}, {0, 1}, {2}}});
  CHECK(apply_upz(p).is_zero());
  CHECK(apply_upzd(p).is_zero());
  CHECK(is_hermitean_monogenic(p));
  // z_1 I is not h-monogenic: upz = {1}
  const SpinorPolynomial z1 = poly(2, {{{1, 0}, {0, 0}, {}}});
  CHECK(apply_upz(z1) == poly(2, {{{0, 0}, {0, 0}, {1}}}));
  CHECK_FALSE(is_hermitean_monogenic(z1));
}

TEST_CASE("hermitean vector variables on pinned inputs") {
  const SpinorPolynomial vac = poly(2, {{{0, 0}, {0, 0}, {}}});
  CHECK(mul_zvec(vac).is_zero());
  CHECK(mul_zdvec(vac) == poly(2, {{{0, 0}, {1, 0}, {1}}, {{0, 0}, {0, 1}, {2}}}));
}

TEST_CASE("monogenic but not h-monogenic embedded element") {
  // (z + zd)(state{1}) = z_1 I - zbar_2 {1,2}
  const SpinorPolynomial s1 = poly(2, {{{0, 0}, {0, 0}, {1}}});
  const SpinorPolynomial emb = mul_zvec(s1) + mul_zdvec(s1);
  CHECK(emb == poly(2, {{{1, 0}, {0, 0}, {}}, {{0, 0}, {0, 1}, {1, 2}, GaussianRational(-1)}}));
  CHECK(apply_dirac(emb).is_zero());
  CHECK(apply_upz(emb) == poly(2, {{{0, 0}, {0, 0}, {1}}}));
  CHECK_FALSE(is_hermitean_monogenic(emb));
  CHECK(is_monogenic(emb));
}

TEST_CASE("operator identities on seeded random polynomials") {
  std::mt19937 rng(20110811);
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const SpinorPolynomial p = random_poly(rng, n, 3);
      // isotropy
      CHECK(apply_upz(apply_upz(p)).is_zero());
      CHECK(apply_upzd(apply_upzd(p)).is_zero());
      CHECK(mul_zvec(mul_zvec(p)).is_zero());
      CHECK(mul_zdvec(mul_zdvec(p)).is_zero());
      // Laplacian factorization 4(upz upzd + upzd upz) = Delta
      const SpinorPolynomial lap =
          GaussianRational(4) * (apply_upz(apply_upzd(p)) + apply_upzd(apply_upz(p)));
      CHECK(lap == laplacian(p));
      // dirac^2 = -Delta
      CHECK(apply_dirac(apply_dirac(p)) == GaussianRational(-1) * laplacian(p));
      // dual identity z zd + zd z = |z|^2
      const SpinorPolynomial dual = mul_zvec(mul_zdvec(p)) + mul_zdvec(mul_zvec(p));
      CHECK(dual == ops::norm_sq_pow(n, 1)(p));
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("h-monogenic implies monogenic") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const SpinorPolynomial p = random_poly(rng, 2, 3);
    if (is_hermitean_monogenic(p)) CHECK(is_monogenic(p));
    // dirac is the difference of the two operators, so h-monogenic => dirac = 0
    const SpinorPolynomial d =
        GaussianRational(2) * (apply_upzd(p) - apply_upz(p));
    CHECK(d == apply_dirac(p));
  }
}

TEST_CASE("composable operator values") {
  const PolyOp t = ops::mul_z(1) * ops::d_z(1);  // Euler-type operator in z_1
  const SpinorPolynomial p = poly(1, {{{3}, {0}, {}}});
  CHECK(t(p) == GaussianRational(3) * p);
  const PolyOp sum = ops::d_z(1) + ops::d_zbar(1);
  CHECK(sum(poly(1, {{{1}, {1}, {}}})) == poly(1, {{{0}, {1}, {}}}) + poly(1, {{{1}, {0}, {}}}));
  const PolyOp scaled = GaussianRational(make_rational(1, 2)) * ops::identity();
  CHECK(scaled(p) == GaussianRational(make_rational(1, 2)) * p);
  CHECK(ops::scalar(GaussianRational::i())(p) == GaussianRational::i() * p);
  // composition associativity on a sample
  const PolyOp l = ops::mul_zbar(1), m = ops::d_z(1), r = ops::create(1);
  CHECK(((l * m) * r)(p) == (l * (m * r))(p));
}
