#include "hermgt/fischer.hpp"

namespace hermgt {

namespace {

Rational monomial_norm_sq(const Monomial& m) {
  Rational out(1);
  for (int e : m.zexp) out *= Rational(factorial(e));
  for (int e : m.zbarexp) out *= Rational(factorial(e));
  return out;
}

}  // namespace

GaussianRational fischer(const SpinorPolynomial& p, const SpinorPolynomial& q) {
  if (p.n() != q.n()) throw std::invalid_argument("fischer: dimension mismatch");
  GaussianRational out(0);
  // Distinct monomials (including the spinor state) are orthogonal, so only
  // shared keys contribute.
  const auto& lhs = p.terms();
  const auto& rhs = q.terms();
  auto it = lhs.begin();
  auto jt = rhs.begin();
  const MonomialOrder less{};
  while (it != lhs.end() && jt != rhs.end()) {
    if (less(it->first, jt->first)) {
      ++it;
    } else if (less(jt->first, it->first)) {
      ++jt;
    } else {
      out += it->second.conj() * jt->second * GaussianRational(monomial_norm_sq(it->first));
      ++it;
      ++jt;
    }
  }
  return out;
}

bool GramMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      if (i != j && !entries[i][j].is_zero()) return false;
    }
  }
  return true;
}

bool GramMatrix::is_hermitean() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      if (entries[i][j] != entries[j][i].conj()) return false;
    }
  }
  return true;
}

bool GramMatrix::diagonal_real_positive() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i][i].im != 0 || entries[i][i].re <= 0) return false;
  }
  return true;
}

GramMatrix gram(const std::vector<SpinorPolynomial>& family, const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != family.size()) {
    throw std::invalid_argument("gram: label count mismatch");
  }
  GramMatrix g;
  g.labels = labels;
  if (g.labels.empty()) {
    for (std::size_t i = 0; i < family.size(); ++i) g.labels.push_back(std::to_string(i));
  }
  const std::size_t k = family.size();
  g.entries.assign(k, std::vector<GaussianRational>(k, GaussianRational(0)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      GaussianRational v = fischer(family[i], family[j]);
      g.entries[j][i] = v.conj();
      g.entries[i][j] = std::move(v);
    }
  }
  return g;
}

bool is_orthogonal(const std::vector<SpinorPolynomial>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!fischer(family[i], family[j]).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace hermgt
