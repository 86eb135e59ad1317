#ifndef HERMGT_POLYNOMIAL_HPP
#define HERMGT_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermgt/scalar.hpp"
#include "hermgt/spinor.hpp"

namespace hermgt {

/// One sparse term: z^zexp zbar^zbarexp tensored with a spinor basis state.
struct Monomial {
  std::vector<int> zexp;
  std::vector<int> zbarexp;
  SpinorIndex spinor;

  int zdeg() const;
  int zbardeg() const;
  int grade() const { return static_cast<int>(spinor.size()); }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.zexp == b.zexp && a.zbarexp == b.zbarexp && a.spinor == b.spinor;
  }
};

// Canonical term order: graded lexicographic on (zexp, zbarexp), then spinor.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

enum class Homogeneity { kZero, kHomogeneous, kMixed };

struct BidegreeReport {
  Homogeneity kind = Homogeneity::kZero;
  int a = 0;
  int b = 0;
};

struct GradeReport {
  Homogeneity kind = Homogeneity::kZero;
  int r = 0;
};

/// Names the space M^{(r)}_{a,b}(C^n) (or P^{(r)}_{a,b}(C^n)).
struct SpaceDescriptor {
  int n = 1;
  int a = 0;
  int b = 0;
  int r = 0;

  void validate() const;
  friend bool operator==(const SpaceDescriptor& x, const SpaceDescriptor& y) {
    return x.n == y.n && x.a == y.a && x.b == y.b && x.r == y.r;
  }
  friend bool operator<(const SpaceDescriptor& x, const SpaceDescriptor& y) {
    if (x.n != y.n) return x.n < y.n;
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.r < y.r;
  }
};

std::string to_string(const SpaceDescriptor& d);

/// Sparse spinor-valued polynomial in z_1..z_n, zbar_1..zbar_n over Q(i).
/// Terms are kept in canonical order with no stored zeros, so map equality is
/// polynomial equality and serialization is deterministic.
class SpinorPolynomial {
 public:
  using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;

  explicit SpinorPolynomial(int n);
  static SpinorPolynomial monomial(int n, Monomial m, GaussianRational c = GaussianRational(1));

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  GaussianRational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const GaussianRational& c);

  SpinorPolynomial& operator+=(const SpinorPolynomial& o);
  SpinorPolynomial& operator-=(const SpinorPolynomial& o);
  SpinorPolynomial& operator*=(const GaussianRational& c);
  friend SpinorPolynomial operator+(SpinorPolynomial a, const SpinorPolynomial& b) { return a += b; }
  friend SpinorPolynomial operator-(SpinorPolynomial a, const SpinorPolynomial& b) { return a -= b; }
  friend SpinorPolynomial operator*(const GaussianRational& c, SpinorPolynomial p) { return p *= c; }
  friend bool operator==(const SpinorPolynomial& a, const SpinorPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SpinorPolynomial& a, const SpinorPolynomial& b) { return !(a == b); }

 private:
  int n_;
  TermMap terms_;
};

BidegreeReport bidegree(const SpinorPolynomial& p);
GradeReport grade(const SpinorPolynomial& p);
bool is_homogeneous(const SpinorPolynomial& p, int a, int b, int r);

// Formal partial derivative in z_j (conjugated = false) or zbar_j.
SpinorPolynomial partial(const SpinorPolynomial& p, int j, bool conjugated);

// Multiplication by the variable z_j / zbar_j.
SpinorPolynomial mul_var(const SpinorPolynomial& p, int j, bool conjugated);

// Termwise left multiplication by f+_j / f_j on the spinor part.
SpinorPolynomial create(int j, const SpinorPolynomial& p);
SpinorPolynomial annihilate(int j, const SpinorPolynomial& p);

// Restriction to {z_n = zbar_n = 0} followed by the spinor split
// P|_{C^{n-1}} = P0 + f+_n P1; requires n >= 2.
std::pair<SpinorPolynomial, SpinorPolynomial> restrict_last(const SpinorPolynomial& p);

// Natural inclusion C^m into C^n (m = p.n() <= n).
SpinorPolynomial embed_lower(const SpinorPolynomial& p, int n);

// z_j -> u z_j, zbar_j -> conj(u) zbar_j for all j (diagonal U(1) substitution).
SpinorPolynomial scale_variables(const SpinorPolynomial& p, const GaussianRational& u);

}  // namespace hermgt

#endif  // HERMGT_POLYNOMIAL_HPP
