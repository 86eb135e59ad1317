#include "hermgt/dimensions.hpp"

#include <map>

#include "hermgt/operators.hpp"

namespace hermgt {

namespace {

Integer rational_dim(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integer dimension");
  return q.get_num();
}

void compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int head = 0; head <= total; ++head) {
    cur.push_back(head);
    compositions(total - head, parts - 1, cur, emit);
    cur.pop_back();
  }
}

void subsets(int n, int r, int from, SpinorIndex& cur,
             const std::function<void(const SpinorIndex&)>& emit) {
  if (static_cast<int>(cur.size()) == r) {
    emit(cur);
    return;
  }
  for (int v = from; v <= n; ++v) {
    cur.push_back(v);
    subsets(n, r, v + 1, cur, emit);
    cur.pop_back();
  }
}

struct BlockRowOrder {
  bool operator()(const std::pair<std::size_t, Monomial>& x,
                  const std::pair<std::size_t, Monomial>& y) const {
    if (x.first != y.first) return x.first < y.first;
    return MonomialOrder{}(x.second, y.second);
  }
};

// Rows of the stacked operator images, indexed per source monomial; the
// kernel dimension is #sources - rank.
long kernel_dim(const std::vector<Monomial>& sources, int n,
                const std::vector<PolyOp>& operators) {
  std::map<std::pair<std::size_t, Monomial>, std::size_t, BlockRowOrder> row_index;
  std::vector<SpinorPolynomial> images;
  images.reserve(sources.size() * operators.size());
  for (const Monomial& m : sources) {
    const SpinorPolynomial p = SpinorPolynomial::monomial(n, m);
    for (std::size_t oi = 0; oi < operators.size(); ++oi) {
      SpinorPolynomial img = operators[oi](p);
      for (const auto& [t, c] : img.terms()) row_index.emplace(std::make_pair(oi, t), 0);
      images.push_back(std::move(img));
    }
  }
  std::size_t next = 0;
  for (auto& [key, idx] : row_index) idx = next++;
  GMatrix matrix(sources.size(), std::vector<GaussianRational>(next, GaussianRational(0)));
  std::size_t img_i = 0;
  for (std::size_t si = 0; si < sources.size(); ++si) {
    for (std::size_t oi = 0; oi < operators.size(); ++oi, ++img_i) {
      for (const auto& [t, c] : images[img_i].terms()) {
        matrix[si][row_index.at(std::make_pair(oi, t))] = c;
      }
    }
  }
  return static_cast<long>(sources.size()) - static_cast<long>(exact_rank(std::move(matrix)));
}

}  // namespace

Integer dim_P(const SpaceDescriptor& d) {
  d.validate();
  return binomial(d.a + d.n - 1, d.a) * binomial(d.b + d.n - 1, d.b) * binomial(d.n, d.r);
}

Integer dim_M(const SpaceDescriptor& d) {
  d.validate();
  const long n = d.n, a = d.a, b = d.b, r = d.r;
  if (r == 0) return a == 0 ? binomial(n + b - 1, b) : Integer(0);
  if (r == n) return b == 0 ? binomial(n + a - 1, a) : Integer(0);
  Rational q = make_rational(r * (a + b + n), (a + r) * (b + n - r));
  q *= Rational(binomial(n - 1, r) * binomial(a + n - 1, a) * binomial(b + n - 1, b));
  return rational_dim(q, "dim_M");
}

Integer dim_A(int n, int a, int b, int r) {
  if (n < 2) throw std::invalid_argument("dim_A: needs n >= 2");
  if (a < 0 || b < 0) throw std::invalid_argument("dim_A: negative bidegree");
  if (r < 0 || r > n) throw std::invalid_argument("dim_A: grade out of range");
  if (r == n) return Integer(0);  // no grade-n states over C^{n-1}
  if (r == 0) return dim_M({n - 1, a, b, 0});
  Rational q = make_rational(r, a + r);
  q *= Rational(binomial(n - 1, r) * binomial(a + n - 1, a) * binomial(b + n - 2, b));
  return rational_dim(q, "dim_A");
}

Integer dim_B(int n, int a, int b, int r) {
  if (n < 2) throw std::invalid_argument("dim_B: needs n >= 2");
  if (a < 0 || b < 0) throw std::invalid_argument("dim_B: negative bidegree");
  if (r < 0 || r > n) throw std::invalid_argument("dim_B: grade out of range");
  if (r == 0) return Integer(0);  // payload grade would be -1
  if (r == n) return dim_M({n - 1, a, b, n - 1});
  Rational q = make_rational(r, b + n - r);
  q *= Rational(binomial(n - 1, r) * binomial(a + n - 2, a) * binomial(b + n - 1, b));
  return rational_dim(q, "dim_B");
}

std::vector<Monomial> monomial_basis(const SpaceDescriptor& d) {
  d.validate();
  std::vector<std::vector<int>> zs;
  std::vector<std::vector<int>> zbs;
  std::vector<SpinorIndex> states;
  std::vector<int> cur;
  compositions(d.a, d.n, cur, [&zs](const std::vector<int>& e) { zs.push_back(e); });
  compositions(d.b, d.n, cur, [&zbs](const std::vector<int>& e) { zbs.push_back(e); });
  SpinorIndex scur;
  subsets(d.n, d.r, 1, scur, [&states](const SpinorIndex& k) { states.push_back(k); });
  std::vector<Monomial> out;
  out.reserve(zs.size() * zbs.size() * states.size());
  for (const auto& z : zs) {
    for (const auto& zb : zbs) {
      for (const auto& k : states) out.push_back(Monomial{z, zb, k});
    }
  }
  return out;
}

DimReport dim_report(const SpaceDescriptor& d, bool with_oracle, long budget) {
  DimReport rep{d, dim_M(d), std::nullopt};
  if (with_oracle) rep.oracle_dim = Integer(kernel_dim_oracle(d, budget));
  return rep;
}

long kernel_dim_oracle(const SpaceDescriptor& d, long budget) {
  const Integer count = dim_P(d);
  if (count > budget) {
    throw std::length_error("kernel_dim_oracle: monomial count " + count.get_str() +
                            " exceeds budget " + std::to_string(budget));
  }
  const std::vector<Monomial> basis = monomial_basis(d);
  return kernel_dim(basis, d.n, {ops::upz(d.n), ops::upzd(d.n)});
}

long monogenic_kernel_dim_oracle(int n, int k, long budget) {
  if (n < 1 || k < 0) throw std::invalid_argument("monogenic_kernel_dim_oracle: bad arguments");
  std::vector<Monomial> basis;
  Integer count(0);
  for (int a = 0; a <= k; ++a) {
    for (int r = 0; r <= n; ++r) count += dim_P({n, a, k - a, r});
  }
  if (count > budget) {
    throw std::length_error("monogenic_kernel_dim_oracle: monomial count " + count.get_str() +
                            " exceeds budget " + std::to_string(budget));
  }
  for (int a = 0; a <= k; ++a) {
    for (int r = 0; r <= n; ++r) {
      const auto part = monomial_basis({n, a, k - a, r});
      basis.insert(basis.end(), part.begin(), part.end());
    }
  }
  return kernel_dim(basis, n, {ops::dirac(n)});
}

}  // namespace hermgt
