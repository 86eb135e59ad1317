#ifndef HERMGT_FISCHER_HPP
#define HERMGT_FISCHER_HPP

#include <string>
#include <vector>

#include "hermgt/polynomial.hpp"

namespace hermgt {

// Fischer inner product, conjugate-linear in the first slot, realized by the
// monomial rule <z^a zbar^b v, z^c zbar^d w> = a! b! [a=c][b=d] (v,w) with the
// Fock states orthonormal.
GaussianRational fischer(const SpinorPolynomial& p, const SpinorPolynomial& q);

/// Gram matrix of a labeled family; Hermitean with real positive diagonal for
/// families of nonzero polynomials.
struct GramMatrix {
  std::vector<std::string> labels;
  GMatrix entries;

  bool is_diagonal() const;
  bool is_hermitean() const;
  bool diagonal_real_positive() const;
};

GramMatrix gram(const std::vector<SpinorPolynomial>& family,
                const std::vector<std::string>& labels = {});
bool is_orthogonal(const std::vector<SpinorPolynomial>& family);

}  // namespace hermgt

#endif  // HERMGT_FISCHER_HPP
