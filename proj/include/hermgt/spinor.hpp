#ifndef HERMGT_SPINOR_HPP
#define HERMGT_SPINOR_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hermgt/scalar.hpp"

namespace hermgt {

// A basis state of spinor space S_n: the wedge monomial f+_{k1} ... f+_{kr} I
// with k1 < ... < kr drawn from {1..n}. The vacuum I is the empty set.
using SpinorIndex = std::vector<int>;

bool valid_spinor_index(const SpinorIndex& k, int n);

// Sign of left multiplication by f+_j (resp. f_j) on the state `k`, counting
// crossings below j: (-1)^{#{l in k : l < j}}. Returns 0 when the operator
// annihilates the state; otherwise fills `out` with the resulting state.
int creation_sign(const SpinorIndex& k, int j, SpinorIndex* out);
int annihilation_sign(const SpinorIndex& k, int j, SpinorIndex* out);

/// Element of S_n with Gaussian-rational coefficients; zero coefficients are
/// never stored.
class SpinorVector {
 public:
  explicit SpinorVector(int n);
  static SpinorVector basis_state(int n, SpinorIndex k);
  static SpinorVector vacuum(int n) { return basis_state(n, {}); }

  int n() const { return n_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<SpinorIndex, GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational coeff(const SpinorIndex& k) const;

  void add(const SpinorIndex& k, const GaussianRational& c);

  SpinorVector& operator+=(const SpinorVector& o);
  SpinorVector& operator-=(const SpinorVector& o);
  SpinorVector& operator*=(const GaussianRational& c);
  friend SpinorVector operator+(SpinorVector a, const SpinorVector& b) { return a += b; }
  friend SpinorVector operator-(SpinorVector a, const SpinorVector& b) { return a -= b; }
  friend SpinorVector operator*(const GaussianRational& c, SpinorVector v) { return v *= c; }
  friend bool operator==(const SpinorVector& a, const SpinorVector& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const SpinorVector& a, const SpinorVector& b) { return !(a == b); }

 private:
  int n_;
  std::map<SpinorIndex, GaussianRational> coeffs_;
};

// Left multiplication by f+_j resp. f_j, extended linearly. 1 <= j <= n.
SpinorVector create(int j, const SpinorVector& v);
SpinorVector annihilate(int j, const SpinorVector& v);

using SpinOp = std::function<SpinorVector(const SpinorVector&)>;

// Witt realization of the Euclidean generators on S_n:
//   e_j = f_j - f+_j (j <= n),  e_{n+j} = i (f_j + f+_j).
// They satisfy e_a e_b + e_b e_a = -2 delta_{ab}.
SpinOp euclid_generator(int alpha, int n);

// Splits v = F0 + f+_n F1 with F0, F1 over ambient n-1; join_last inverts.
std::pair<SpinorVector, SpinorVector> split_last(const SpinorVector& v);
SpinorVector join_last(const SpinorVector& f0, const SpinorVector& f1);

}  // namespace hermgt

#endif  // HERMGT_SPINOR_HPP
