#ifndef HERMGT_CK_HPP
#define HERMGT_CK_HPP

#include <vector>

#include "hermgt/dimensions.hpp"
#include "hermgt/operators.hpp"
#include "hermgt/polynomial.hpp"

namespace hermgt {

enum class DatumKind { kA, kB };

/// Initial datum for the Cauchy-Kovalevskaya extension into M^{(r)}_{a,b}(C^n).
/// The payload lives over C^{n-1}: for kind A it is p0 of bidegree (a, b-j),
/// grade r, with upz(payload) = 0; for kind B it is the polynomial p1 before
/// the f+_n prefix, of bidegree (a-i, b), grade r-1, with upzd(payload) = 0.
struct InitialDatum {
  DatumKind kind;
  int offset;  // j for A, i for B
  SpaceDescriptor target;
  SpinorPolynomial payload;
};

// Explicit CK series of the extension theorem:
//   A:  zbar_n^j  sum_k (floor(k/2)! (floor((k+1)/2)+j)!)^{-1} T^k [p0]
//   B:  z_n^i     sum_k (floor(k/2)! (floor((k+1)/2)+i)!)^{-1} T^k [f+_n p1]
// with T[Q] = z_n upz~(f_n Q) + zbar_n upzd~(f+_n Q), the tilde operators
// running over variables 1..n-1. Validates the datum membership predicate.
SpinorPolynomial ck_extend(const InitialDatum& datum);

/// One summand of the Fischer decomposition of an initial data space. The
/// factor acts on polynomials over C^{n-1}:
///   A:  M~  |  |z~|^{2k} zd~ M~  |  |z~|^{2k} (zd~ z~ + c z~ zd~) M~
///   B:  M~  |  |z~|^{2k} z~  M~  |  |z~|^{2k} (z~ zd~ + d zd~ z~) M~
struct EmbeddingFactor {
  enum class Kind { kDirect, kVector, kParen };
  Kind kind = Kind::kDirect;
  int k = 0;
  Rational coeff = Rational(0);  // c resp. d, exact
};

struct DecompComponent {
  DatumKind kind;
  int offset;   // j for the A_{a,b-j} space, i for B_{a-i,b}
  int ordinal;  // position in the print order of that space's decomposition
  EmbeddingFactor factor;
  SpaceDescriptor source;  // shifted space M~ over C^{n-1}
  bool empty;              // dim_M(source) == 0
};

// All Fischer-decomposition components of the initial data spaces A_{a,b-j}
// (j = b..0) and B_{a-i,b} (i = 0..a) feeding M^{(r)}_{a,b}(C^n); 0 < r < n.
std::vector<DecompComponent> initial_data_decomposition(const SpaceDescriptor& target);

// Applies the embedding factor to a source basis element (both over C^{n-1}).
SpinorPolynomial apply_embedding_factor(DatumKind kind, const EmbeddingFactor& factor,
                                        const SpinorPolynomial& source);

// Basis of the initial data space A^{(r)}_{a,bj} resp. of the B-payload space
// {p1 : upzd~ p1 = 0} in P^{(r-1)}_{ai,b}(C^{n-1}), assembled from GT bases of
// the shifted sources. `basis_of` resolves a source descriptor to its family.
using SourceFamilyFn = std::function<std::vector<SpinorPolynomial>(const SpaceDescriptor&)>;
std::vector<SpinorPolynomial> a_space_basis(int n, int a, int bj, int r,
                                            const SourceFamilyFn& basis_of);
std::vector<SpinorPolynomial> b_payload_basis(int n, int ai, int b, int r,
                                              const SourceFamilyFn& basis_of);

}  // namespace hermgt

#endif  // HERMGT_CK_HPP
