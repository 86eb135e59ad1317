#include "hermgt/polynomial.hpp"

#include <numeric>

namespace hermgt {

int Monomial::zdeg() const { return std::accumulate(zexp.begin(), zexp.end(), 0); }
int Monomial::zbardeg() const { return std::accumulate(zbarexp.begin(), zbarexp.end(), 0); }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.zdeg() + a.zbardeg();
  const int db = b.zdeg() + b.zbardeg();
  if (da != db) return da < db;
  if (a.zexp != b.zexp) return a.zexp < b.zexp;
  if (a.zbarexp != b.zbarexp) return a.zbarexp < b.zbarexp;
  if (a.spinor.size() != b.spinor.size()) return a.spinor.size() < b.spinor.size();
  return a.spinor < b.spinor;
}

void SpaceDescriptor::validate() const {
  if (n < 1 || a < 0 || b < 0 || r < 0 || r > n) {
    throw std::invalid_argument("SpaceDescriptor: invalid " + to_string(*this));
  }
}

std::string to_string(const SpaceDescriptor& d) {
  return "(n=" + std::to_string(d.n) + ", a=" + std::to_string(d.a) +
         ", b=" + std::to_string(d.b) + ", r=" + std::to_string(d.r) + ")";
}

SpinorPolynomial::SpinorPolynomial(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SpinorPolynomial: dimension must be >= 1");
}

SpinorPolynomial SpinorPolynomial::monomial(int n, Monomial m, GaussianRational c) {
  SpinorPolynomial p(n);
  p.add_term(m, c);
  return p;
}

GaussianRational SpinorPolynomial::coeff(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void SpinorPolynomial::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(m.zexp.size()) != n_ || static_cast<int>(m.zbarexp.size()) != n_) {
    throw std::invalid_argument("SpinorPolynomial: exponent vector length != n");
  }
  for (int e : m.zexp) {
    if (e < 0) throw std::invalid_argument("SpinorPolynomial: negative exponent");
  }
  for (int e : m.zbarexp) {
    if (e < 0) throw std::invalid_argument("SpinorPolynomial: negative exponent");
  }
  if (!valid_spinor_index(m.spinor, n_)) {
    throw std::invalid_argument("SpinorPolynomial: bad spinor index");
  }
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SpinorPolynomial& SpinorPolynomial::operator+=(const SpinorPolynomial& o) {
  if (n_ != o.n_) throw std::invalid_argument("SpinorPolynomial: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SpinorPolynomial& SpinorPolynomial::operator-=(const SpinorPolynomial& o) {
  if (n_ != o.n_) throw std::invalid_argument("SpinorPolynomial: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SpinorPolynomial& SpinorPolynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BidegreeReport bidegree(const SpinorPolynomial& p) {
  if (p.is_zero()) return {Homogeneity::kZero, 0, 0};
  BidegreeReport out{Homogeneity::kHomogeneous, 0, 0};
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const int a = m.zdeg();
    const int b = m.zbardeg();
    if (first) {
      out.a = a;
      out.b = b;
      first = false;
    } else if (a != out.a || b != out.b) {
      return {Homogeneity::kMixed, 0, 0};
    }
  }
  return out;
}

GradeReport grade(const SpinorPolynomial& p) {
  if (p.is_zero()) return {Homogeneity::kZero, 0};
  GradeReport out{Homogeneity::kHomogeneous, 0};
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      out.r = m.grade();
      first = false;
    } else if (m.grade() != out.r) {
      return {Homogeneity::kMixed, 0};
    }
  }
  return out;
}

bool is_homogeneous(const SpinorPolynomial& p, int a, int b, int r) {
  const BidegreeReport bd = bidegree(p);
  if (bd.kind == Homogeneity::kZero) return true;
  if (bd.kind == Homogeneity::kMixed || bd.a != a || bd.b != b) return false;
  const GradeReport gr = grade(p);
  return gr.kind == Homogeneity::kHomogeneous && gr.r == r;
}

SpinorPolynomial partial(const SpinorPolynomial& p, int j, bool conjugated) {
  if (j < 1 || j > p.n()) throw std::out_of_range("partial: index out of range");
  SpinorPolynomial out(p.n());
  for (const auto& [m, c] : p.terms()) {
    const std::vector<int>& exps = conjugated ? m.zbarexp : m.zexp;
    const int e = exps[j - 1];
    if (e == 0) continue;
    Monomial t = m;
    (conjugated ? t.zbarexp : t.zexp)[j - 1] = e - 1;
    out.add_term(t, GaussianRational(e) * c);
  }
  return out;
}

SpinorPolynomial mul_var(const SpinorPolynomial& p, int j, bool conjugated) {
  if (j < 1 || j > p.n()) throw std::out_of_range("mul_var: index out of range");
  SpinorPolynomial out(p.n());
  for (const auto& [m, c] : p.terms()) {
    Monomial t = m;
    (conjugated ? t.zbarexp : t.zexp)[j - 1] += 1;
    out.add_term(t, c);
  }
  return out;
}

SpinorPolynomial create(int j, const SpinorPolynomial& p) {
  if (j < 1 || j > p.n()) throw std::out_of_range("create: index out of range");
  SpinorPolynomial out(p.n());
  SpinorIndex target;
  for (const auto& [m, c] : p.terms()) {
    const int sign = creation_sign(m.spinor, j, &target);
    if (sign == 0) continue;
    Monomial t = m;
    t.spinor = target;
    out.add_term(t, GaussianRational(sign) * c);
  }
  return out;
}

SpinorPolynomial annihilate(int j, const SpinorPolynomial& p) {
  if (j < 1 || j > p.n()) throw std::out_of_range("annihilate: index out of range");
  SpinorPolynomial out(p.n());
  SpinorIndex target;
  for (const auto& [m, c] : p.terms()) {
    const int sign = annihilation_sign(m.spinor, j, &target);
    if (sign == 0) continue;
    Monomial t = m;
    t.spinor = target;
    out.add_term(t, GaussianRational(sign) * c);
  }
  return out;
}

std::pair<SpinorPolynomial, SpinorPolynomial> restrict_last(const SpinorPolynomial& p) {
  const int n = p.n();
  if (n < 2) throw std::invalid_argument("restrict_last: needs n >= 2");
  SpinorPolynomial p0(n - 1);
  SpinorPolynomial p1(n - 1);
  for (const auto& [m, c] : p.terms()) {
    if (m.zexp[n - 1] != 0 || m.zbarexp[n - 1] != 0) continue;
    Monomial t;
    t.zexp.assign(m.zexp.begin(), m.zexp.end() - 1);
    t.zbarexp.assign(m.zbarexp.begin(), m.zbarexp.end() - 1);
    if (!m.spinor.empty() && m.spinor.back() == n) {
      t.spinor.assign(m.spinor.begin(), m.spinor.end() - 1);
      const int sign = (m.spinor.size() - 1) % 2 == 0 ? 1 : -1;
      p1.add_term(t, GaussianRational(sign) * c);
    } else {
      t.spinor = m.spinor;
      p0.add_term(t, c);
    }
  }
  return {std::move(p0), std::move(p1)};
}

SpinorPolynomial embed_lower(const SpinorPolynomial& p, int n) {
  const int m = p.n();
  if (n < m) throw std::invalid_argument("embed_lower: target dimension below source");
  if (n == m) return p;
  SpinorPolynomial out(n);
  for (const auto& [mono, c] : p.terms()) {
    Monomial t = mono;
    t.zexp.resize(n, 0);
    t.zbarexp.resize(n, 0);
    out.add_term(t, c);
  }
  return out;
}

SpinorPolynomial scale_variables(const SpinorPolynomial& p, const GaussianRational& u) {
  SpinorPolynomial out(p.n());
  const GaussianRational uc = u.conj();
  for (const auto& [m, c] : p.terms()) {
    GaussianRational factor(1);
    for (int e = 0; e < m.zdeg(); ++e) factor *= u;
    for (int e = 0; e < m.zbardeg(); ++e) factor *= uc;
    out.add_term(m, factor * c);
  }
  return out;
}

}  // namespace hermgt
