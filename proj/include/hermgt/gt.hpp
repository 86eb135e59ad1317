#ifndef HERMGT_GT_HPP
#define HERMGT_GT_HPP

#include <map>
#include <string>
#include <vector>

#include "hermgt/ck.hpp"
#include "hermgt/fischer.hpp"

namespace hermgt {

/// Highest weight of a U(m)-module: weakly decreasing integer components.
struct WeightVector {
  std::vector<long> comps;

  bool weakly_decreasing() const;
  // Branching condition l_1 >= m_1 >= l_2 >= ... >= m_{k-1} >= l_k.
  bool interlaces_below(const WeightVector& lambda) const;

  friend bool operator==(const WeightVector& x, const WeightVector& y) {
    return x.comps == y.comps;
  }
  friend bool operator<(const WeightVector& x, const WeightVector& y) {
    return x.comps < y.comps;
  }
};

std::string to_string(const WeightVector& w);

// Highest weight of M^{(s)}_{a,b}(C^m): (a+1, 1 x (s-1), 0 x (m-s-1), -b) for
// 0 < s < m; (0,...,0,-b) for s = 0; (a+1, 1,...,1) for s = m.
WeightVector weight_of(int a, int b, int s, int m);

// All weights interlacing below lambda (the Theorem-1 branching set).
std::vector<WeightVector> interlacing_weights(const WeightVector& lambda);

struct PathStep {
  DatumKind kind;
  int offset;     // j of A_{a,b-j} resp. i of B_{a-i,b}
  int component;  // ordinal within that space's Fischer decomposition
  friend bool operator==(const PathStep& x, const PathStep& y) {
    return x.kind == y.kind && x.offset == y.offset && x.component == y.component;
  }
};

/// GT pattern: the chain of highest weights lambda^(n) > ... > lambda^(1)
/// together with the structural path that produced it (one step per level,
/// top down; empty at n = 1).
struct GTLabel {
  std::vector<WeightVector> chain;
  std::vector<PathStep> path;

  bool chain_interlaces() const;
  std::string chain_string() const;
  std::string to_string() const;  // chain plus path, unique per member
  friend bool operator==(const GTLabel& x, const GTLabel& y) {
    return x.chain == y.chain && x.path == y.path;
  }
};

struct BasisFamily {
  SpaceDescriptor descriptor;
  std::vector<std::pair<GTLabel, SpinorPolynomial>> members;

  std::vector<SpinorPolynomial> polynomials() const;
};

/// Memoizing recursive GT-basis constructor. Base cases: n = 1, the
/// anti-holomorphic grade r = 0, and the holomorphic grade r = n; otherwise
/// Fischer decomposition of the initial data spaces followed by CK extension.
class GTBuilder {
 public:
  explicit GTBuilder(long budget = 200000);

  const BasisFamily& basis(const SpaceDescriptor& d);

 private:
  BasisFamily build(const SpaceDescriptor& d);
  BasisFamily build_n1(const SpaceDescriptor& d);
  BasisFamily build_antiholomorphic(const SpaceDescriptor& d);
  BasisFamily build_holomorphic(const SpaceDescriptor& d);
  BasisFamily build_general(const SpaceDescriptor& d);

  long budget_;
  std::map<SpaceDescriptor, BasisFamily> cache_;
};

// Closed-form basis polynomial P_{(a+1,-b),(mu)} of M^{(1)}_{a,b}(C^2);
// zero unless -b <= mu <= a+1 (and zero whenever a < 0 or b < 0).
SpinorPolynomial closed_form_n2(int a, int b, int mu);

struct AppellReport {
  bool pass = true;
  long identities_checked = 0;
  std::vector<std::string> failures;
};

// Verifies the four derivative identities of the n = 2 grade-1 closed forms
// for all a <= a_max, b <= b_max (with the boundary zero conventions), plus
// the differentiation ladders of the n = 1 and the (anti-)holomorphic n = 2
// families.
AppellReport appell_check(int a_max, int b_max);

// Matrix of d/dz_j (or d/dzbar_j) from one constructed family to another:
// rows index `to` members, columns `from` members. Coefficients are resolved
// against the diagonal Gram of `to`; throws if the derivative leaves the span.
GMatrix derivative_matrix(int j, bool conjugated, const BasisFamily& from,
                          const BasisFamily& to);

// Remark-1 property: every column has at most one nonzero entry, in {+1,-1}.
bool derivative_matrix_columns_ok(const GMatrix& m);

struct LatticeReport {
  SpaceDescriptor descriptor;
  bool pass = false;
  std::size_t interlacing_count = 0;
  std::size_t component_count = 0;  // nonzero components only
  std::size_t grid_count = 0;       // 2(a+1)(b+1), informational
  std::vector<std::string> missing;     // enumerated but not constructed
  std::vector<std::string> extra;       // constructed but not enumerated
  std::vector<std::string> duplicated;  // constructed more than once
};

// Compares the highest weights of the nonzero Fischer-decomposition
// components against the direct interlacing enumeration of the branching
// rule; multiplicity-free on both sides. Requires 0 < r < n.
LatticeReport lattice_check(const SpaceDescriptor& d);

struct MonogenicEntry {
  bool embedded;            // true for (z/(a+n-r) + zbar/(k-1-a+r)) images
  SpaceDescriptor source;   // the Hermitean-monogenic space it came from
  GTLabel label;
  SpinorPolynomial poly;
};

// Orthogonal basis of the k-homogeneous S_n-valued monogenic polynomials,
// assembled from the GT bases per the decomposition of the monogenic space.
std::vector<MonogenicEntry> monogenic_basis(GTBuilder& builder, int n, int k);

GramMatrix gram(const BasisFamily& family);
bool is_orthogonal(const BasisFamily& family);

}  // namespace hermgt

#endif  // HERMGT_GT_HPP
