#ifndef HERMGT_DIMENSIONS_HPP
#define HERMGT_DIMENSIONS_HPP

#include <optional>
#include <vector>

#include "hermgt/polynomial.hpp"

namespace hermgt {

inline constexpr long kDefaultOracleBudget = 20000;

// dim P^{(r)}_{a,b}(C^n), the full monomial space.
Integer dim_P(const SpaceDescriptor& d);

// dim M^{(r)}_{a,b}(C^n). Generic product formula for 0 < r < n; for r = 0
// the space is anti-holomorphic (zero unless a = 0), for r = n holomorphic
// (zero unless b = 0).
Integer dim_M(const SpaceDescriptor& d);

// x_{a,b,r} = dim A^{(r)}_{a,b} and y_{a,b,r} = dim B^{(r)}_{a,b}, the initial
// data spaces inside P(C^{n-1}); requires n >= 2.
Integer dim_A(int n, int a, int b, int r);
Integer dim_B(int n, int a, int b, int r);

struct DimReport {
  SpaceDescriptor descriptor;
  Integer formula_dim;
  std::optional<Integer> oracle_dim;

  bool consistent() const { return !oracle_dim.has_value() || *oracle_dim == formula_dim; }
};

DimReport dim_report(const SpaceDescriptor& d, bool with_oracle,
                     long budget = kDefaultOracleBudget);

// Brute-force dimension of ker(upz) ∩ ker(upzd) on the monomial basis of
// P^{(r)}_{a,b}(C^n) via exact elimination. Throws when the monomial count
// exceeds the budget.
long kernel_dim_oracle(const SpaceDescriptor& d, long budget = kDefaultOracleBudget);

// Brute-force dimension of ker(dirac) on S_n-valued polynomials homogeneous of
// total degree k (all bidegrees a + b = k, all spinor grades).
long monogenic_kernel_dim_oracle(int n, int k, long budget = kDefaultOracleBudget);

// All monomials of P^{(r)}_{a,b}(C^n) in canonical order.
std::vector<Monomial> monomial_basis(const SpaceDescriptor& d);

}  // namespace hermgt

#endif  // HERMGT_DIMENSIONS_HPP
