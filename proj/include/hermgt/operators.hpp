#ifndef HERMGT_OPERATORS_HPP
#define HERMGT_OPERATORS_HPP

#include <functional>
#include <utility>

#include "hermgt/polynomial.hpp"

namespace hermgt {

/// First-class linear operator on spinor-valued polynomials. Composition is
/// written multiplicatively and acts right-to-left: (A * B)(p) = A(B(p)).
class PolyOp {
 public:
  using Fn = std::function<SpinorPolynomial(const SpinorPolynomial&)>;

  PolyOp() : fn_([](const SpinorPolynomial& p) { return p; }) {}
  explicit PolyOp(Fn fn) : fn_(std::move(fn)) {}

  SpinorPolynomial operator()(const SpinorPolynomial& p) const { return fn_(p); }

  friend PolyOp operator*(PolyOp lhs, PolyOp rhs) {
    return PolyOp([lhs = std::move(lhs), rhs = std::move(rhs)](const SpinorPolynomial& p) {
      return lhs(rhs(p));
    });
  }
  friend PolyOp operator+(PolyOp lhs, PolyOp rhs) {
    return PolyOp([lhs = std::move(lhs), rhs = std::move(rhs)](const SpinorPolynomial& p) {
      return lhs(p) + rhs(p);
    });
  }
  friend PolyOp operator*(GaussianRational c, PolyOp op) {
    return PolyOp([c = std::move(c), op = std::move(op)](const SpinorPolynomial& p) {
      return c * op(p);
    });
  }

 private:
  Fn fn_;
};

namespace ops {

PolyOp identity();
PolyOp scalar(GaussianRational c);
PolyOp d_z(int j);
PolyOp d_zbar(int j);
PolyOp mul_z(int j);
PolyOp mul_zbar(int j);
PolyOp create(int j);
PolyOp annihilate(int j);

// Hermitean Dirac operators and vector variables over variables 1..m; with
// m < p.n() these are the tilde operators of the CK induction step.
PolyOp upz(int m);    // sum_j f+_j d/dz_j
PolyOp upzd(int m);   // sum_j f_j d/dzbar_j
PolyOp zvec(int m);   // sum_j z_j f_j
PolyOp zdvec(int m);  // sum_j zbar_j f+_j

// Multiplication by |z|^{2k} = (sum_{j<=m} z_j zbar_j)^k.
PolyOp norm_sq_pow(int m, int k);

// 2(upzd - upz); its kernel is the space of monogenic polynomials.
PolyOp dirac(int n);

}  // namespace ops

// Convenience forms using the polynomial's own ambient dimension.
SpinorPolynomial apply_upz(const SpinorPolynomial& p);
SpinorPolynomial apply_upzd(const SpinorPolynomial& p);
SpinorPolynomial mul_zvec(const SpinorPolynomial& p);
SpinorPolynomial mul_zdvec(const SpinorPolynomial& p);
SpinorPolynomial apply_dirac(const SpinorPolynomial& p);

// Componentwise Laplacian 4 sum_j d/dz_j d/dzbar_j.
SpinorPolynomial laplacian(const SpinorPolynomial& p);

bool is_hermitean_monogenic(const SpinorPolynomial& p);
bool is_monogenic(const SpinorPolynomial& p);

}  // namespace hermgt

#endif  // HERMGT_OPERATORS_HPP
