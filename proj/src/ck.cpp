#include "hermgt/ck.hpp"

#include <algorithm>

namespace hermgt {

namespace {

// T[Q] = z_n upz~(f_n Q) + zbar_n upzd~(f+_n Q), tilde operators over 1..n-1.
SpinorPolynomial ck_step(const SpinorPolynomial& q, int n) {
  const int m = n - 1;
  SpinorPolynomial out = mul_var(ops::upz(m)(annihilate(n, q)), n, false);
  out += mul_var(ops::upzd(m)(create(n, q)), n, true);
  return out;
}

Rational series_coeff(int k, int offset) {
  const Integer den = factorial(k / 2) * factorial((k + 1) / 2 + offset);
  return make_rational(Integer(1), den);
}

void append_a_components(int n, int a, int bj, int r, int offset_j,
                         std::vector<DecompComponent>* out) {
  const int m = n - 1;
  auto push = [&](EmbeddingFactor f, SpaceDescriptor src) {
    out->push_back(DecompComponent{DatumKind::kA, offset_j,
                                   static_cast<int>(out->size()), std::move(f), src,
                                   dim_M(src) == 0});
  };
  const std::size_t base = out->size();
  push(EmbeddingFactor{EmbeddingFactor::Kind::kDirect, 0, Rational(0)},
       SpaceDescriptor{m, a, bj, r});
  for (int k = 0; k <= std::min(a, bj - 1); ++k) {
    if (r - 1 < 0) break;
    push(EmbeddingFactor{EmbeddingFactor::Kind::kVector, k, Rational(0)},
         SpaceDescriptor{m, a - k, bj - k - 1, r - 1});
  }
  for (int k = 0; k <= std::min(a - 1, bj - 1); ++k) {
    push(EmbeddingFactor{EmbeddingFactor::Kind::kParen, k, make_rational(a - k - 1 + r, a + r)},
         SpaceDescriptor{m, a - k - 1, bj - k - 1, r});
  }
  // ordinals are positions within this space's decomposition
  for (std::size_t i = base; i < out->size(); ++i) (*out)[i].ordinal = static_cast<int>(i - base);
}

void append_b_components(int n, int ai, int b, int r, int offset_i,
                         std::vector<DecompComponent>* out) {
  const int m = n - 1;
  auto push = [&](EmbeddingFactor f, SpaceDescriptor src) {
    out->push_back(DecompComponent{DatumKind::kB, offset_i,
                                   static_cast<int>(out->size()), std::move(f), src,
                                   dim_M(src) == 0});
  };
  const std::size_t base = out->size();
  push(EmbeddingFactor{EmbeddingFactor::Kind::kDirect, 0, Rational(0)},
       SpaceDescriptor{m, ai, b, r - 1});
  for (int k = 0; k <= std::min(ai - 1, b); ++k) {
    if (r > m) break;  // grade-r states do not exist over C^{n-1}
    push(EmbeddingFactor{EmbeddingFactor::Kind::kVector, k, Rational(0)},
         SpaceDescriptor{m, ai - k - 1, b - k, r});
  }
  for (int k = 0; k <= std::min(ai - 1, b - 1); ++k) {
    push(EmbeddingFactor{EmbeddingFactor::Kind::kParen, k,
                         make_rational(b - k - 1 + n - r, b + n - r)},
         SpaceDescriptor{m, ai - k - 1, b - k - 1, r - 1});
  }
  for (std::size_t i = base; i < out->size(); ++i) (*out)[i].ordinal = static_cast<int>(i - base);
}

}  // namespace

SpinorPolynomial ck_extend(const InitialDatum& datum) {
  const SpaceDescriptor& t = datum.target;
  t.validate();
  const int n = t.n;
  if (n < 2) throw std::invalid_argument("ck_extend: target dimension must be >= 2");
  const int m = n - 1;
  const SpinorPolynomial& p = datum.payload;
  if (p.n() != m) throw std::invalid_argument("ck_extend: payload must live over C^{n-1}");

  int kmax = 0;
  if (datum.kind == DatumKind::kA) {
    const int j = datum.offset;
    if (j < 0 || j > t.b) throw std::invalid_argument("ck_extend: A offset out of range");
    if (!is_homogeneous(p, t.a, t.b - j, t.r)) {
      throw std::invalid_argument("ck_extend: A datum has wrong bidegree or grade");
    }
    if (!apply_upz(p).is_zero()) {
      throw std::invalid_argument("ck_extend: A datum is not upz-closed");
    }
    kmax = std::min(2 * t.a + 1, 2 * t.b - 2 * j);
  } else {
    const int i = datum.offset;
    if (i < 0 || i > t.a) throw std::invalid_argument("ck_extend: B offset out of range");
    if (!is_homogeneous(p, t.a - i, t.b, t.r - 1)) {
      throw std::invalid_argument("ck_extend: B datum has wrong bidegree or grade");
    }
    if (!apply_upzd(p).is_zero()) {
      throw std::invalid_argument("ck_extend: B datum is not upzd-closed");
    }
    kmax = std::min(2 * t.a - 2 * i, 2 * t.b + 1);
  }

  SpinorPolynomial cur = embed_lower(p, n);
  if (datum.kind == DatumKind::kB) cur = create(n, cur);
  SpinorPolynomial acc(n);
  for (int k = 0; k <= kmax; ++k) {
    acc += GaussianRational(series_coeff(k, datum.offset)) * cur;
    if (k < kmax) cur = ck_step(cur, n);
  }
  for (int rep = 0; rep < datum.offset; ++rep) {
    acc = mul_var(acc, n, datum.kind == DatumKind::kA);
  }
  if (!is_homogeneous(acc, t.a, t.b, t.r)) {
    throw std::logic_error("ck_extend: output failed homogeneity validation");
  }
  return acc;
}

std::vector<DecompComponent> initial_data_decomposition(const SpaceDescriptor& target) {
  target.validate();
  if (target.r <= 0 || target.r >= target.n) {
    throw std::invalid_argument("initial_data_decomposition: requires 0 < r < n");
  }
  std::vector<DecompComponent> out;
  for (int j = target.b; j >= 0; --j) {
    append_a_components(target.n, target.a, target.b - j, target.r, j, &out);
  }
  for (int i = 0; i <= target.a; ++i) {
    append_b_components(target.n, target.a - i, target.b, target.r, i, &out);
  }
  return out;
}

SpinorPolynomial apply_embedding_factor(DatumKind kind, const EmbeddingFactor& factor,
                                        const SpinorPolynomial& source) {
  const int m = source.n();
  switch (factor.kind) {
    case EmbeddingFactor::Kind::kDirect:
      return source;
    case EmbeddingFactor::Kind::kVector: {
      SpinorPolynomial v = kind == DatumKind::kA ? mul_zdvec(source) : mul_zvec(source);
      return ops::norm_sq_pow(m, factor.k)(v);
    }
    case EmbeddingFactor::Kind::kParen: {
      const GaussianRational c{factor.coeff};
      SpinorPolynomial v(m);
      if (kind == DatumKind::kA) {
        v = mul_zdvec(mul_zvec(source)) + c * mul_zvec(mul_zdvec(source));
      } else {
        v = mul_zvec(mul_zdvec(source)) + c * mul_zdvec(mul_zvec(source));
      }
      return ops::norm_sq_pow(m, factor.k)(v);
    }
  }
  throw std::logic_error("apply_embedding_factor: unreachable");
}

std::vector<SpinorPolynomial> a_space_basis(int n, int a, int bj, int r,
                                            const SourceFamilyFn& basis_of) {
  if (n < 2) throw std::invalid_argument("a_space_basis: needs n >= 2");
  if (r == 0) return basis_of(SpaceDescriptor{n - 1, a, bj, 0});
  std::vector<DecompComponent> comps;
  append_a_components(n, a, bj, r, 0, &comps);
  std::vector<SpinorPolynomial> out;
  for (const auto& comp : comps) {
    if (comp.empty) continue;
    for (const SpinorPolynomial& src : basis_of(comp.source)) {
      out.push_back(apply_embedding_factor(DatumKind::kA, comp.factor, src));
    }
  }
  return out;
}

std::vector<SpinorPolynomial> b_payload_basis(int n, int ai, int b, int r,
                                              const SourceFamilyFn& basis_of) {
  if (n < 2) throw std::invalid_argument("b_payload_basis: needs n >= 2");
  if (r < 1) throw std::invalid_argument("b_payload_basis: needs r >= 1");
  std::vector<DecompComponent> comps;
  append_b_components(n, ai, b, r, 0, &comps);
  std::vector<SpinorPolynomial> out;
  for (const auto& comp : comps) {
    if (comp.empty) continue;
    for (const SpinorPolynomial& src : basis_of(comp.source)) {
      out.push_back(apply_embedding_factor(DatumKind::kB, comp.factor, src));
    }
  }
  return out;
}

}  // namespace hermgt
