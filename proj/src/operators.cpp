#include "hermgt/operators.hpp"

namespace hermgt {
namespace ops {

PolyOp identity() { return PolyOp(); }

PolyOp scalar(GaussianRational c) {
  return PolyOp([c = std::move(c)](const SpinorPolynomial& p) { return c * p; });
}

PolyOp d_z(int j) {
  return PolyOp([j](const SpinorPolynomial& p) { return partial(p, j, false); });
}

PolyOp d_zbar(int j) {
  return PolyOp([j](const SpinorPolynomial& p) { return partial(p, j, true); });
}

PolyOp mul_z(int j) {
  return PolyOp([j](const SpinorPolynomial& p) { return mul_var(p, j, false); });
}

PolyOp mul_zbar(int j) {
  return PolyOp([j](const SpinorPolynomial& p) { return mul_var(p, j, true); });
}

PolyOp create(int j) {
  return PolyOp([j](const SpinorPolynomial& p) { return hermgt::create(j, p); });
}

PolyOp annihilate(int j) {
  return PolyOp([j](const SpinorPolynomial& p) { return hermgt::annihilate(j, p); });
}

PolyOp upz(int m) {
  return PolyOp([m](const SpinorPolynomial& p) {
    SpinorPolynomial out(p.n());
    for (int j = 1; j <= m; ++j) out += hermgt::create(j, partial(p, j, false));
    return out;
  });
}

PolyOp upzd(int m) {
  return PolyOp([m](const SpinorPolynomial& p) {
    SpinorPolynomial out(p.n());
    for (int j = 1; j <= m; ++j) out += hermgt::annihilate(j, partial(p, j, true));
    return out;
  });
}

PolyOp zvec(int m) {
  return PolyOp([m](const SpinorPolynomial& p) {
    SpinorPolynomial out(p.n());
    for (int j = 1; j <= m; ++j) out += mul_var(hermgt::annihilate(j, p), j, false);
    return out;
  });
}

PolyOp zdvec(int m) {
  return PolyOp([m](const SpinorPolynomial& p) {
    SpinorPolynomial out(p.n());
    for (int j = 1; j <= m; ++j) out += mul_var(hermgt::create(j, p), j, true);
    return out;
  });
}

PolyOp norm_sq_pow(int m, int k) {
  return PolyOp([m, k](const SpinorPolynomial& p) {
    SpinorPolynomial out = p;
    for (int rep = 0; rep < k; ++rep) {
      SpinorPolynomial next(out.n());
      for (int j = 1; j <= m; ++j) next += mul_var(mul_var(out, j, false), j, true);
      out = std::move(next);
    }
    return out;
  });
}

PolyOp dirac(int n) {
  return PolyOp([n](const SpinorPolynomial& p) {
    SpinorPolynomial out = upzd(n)(p);
    out -= upz(n)(p);
    return GaussianRational(2) * out;
  });
}

}  // namespace ops

SpinorPolynomial apply_upz(const SpinorPolynomial& p) { return ops::upz(p.n())(p); }
SpinorPolynomial apply_upzd(const SpinorPolynomial& p) { return ops::upzd(p.n())(p); }
SpinorPolynomial mul_zvec(const SpinorPolynomial& p) { return ops::zvec(p.n())(p); }
SpinorPolynomial mul_zdvec(const SpinorPolynomial& p) { return ops::zdvec(p.n())(p); }
SpinorPolynomial apply_dirac(const SpinorPolynomial& p) { return ops::dirac(p.n())(p); }

SpinorPolynomial laplacian(const SpinorPolynomial& p) {
  SpinorPolynomial out(p.n());
  for (int j = 1; j <= p.n(); ++j) out += partial(partial(p, j, false), j, true);
  return GaussianRational(4) * out;
}

bool is_hermitean_monogenic(const SpinorPolynomial& p) {
  return apply_upz(p).is_zero() && apply_upzd(p).is_zero();
}

bool is_monogenic(const SpinorPolynomial& p) { return apply_dirac(p).is_zero(); }

}  // namespace hermgt
