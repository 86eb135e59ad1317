#include "hermgt/spinor.hpp"

#include <algorithm>

namespace hermgt {

bool valid_spinor_index(const SpinorIndex& k, int n) {
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 1 || k[i] > n) return false;
    if (i > 0 && k[i] <= k[i - 1]) return false;
  }
  return true;
}

int creation_sign(const SpinorIndex& k, int j, SpinorIndex* out) {
  const auto it = std::lower_bound(k.begin(), k.end(), j);
  if (it != k.end() && *it == j) return 0;  // (f+_j)^2 = 0
  const int crossings = static_cast<int>(it - k.begin());
  if (out != nullptr) {
    out->assign(k.begin(), it);
    out->push_back(j);
    out->insert(out->end(), it, k.end());
  }
  return crossings % 2 == 0 ? 1 : -1;
}

int annihilation_sign(const SpinorIndex& k, int j, SpinorIndex* out) {
  const auto it = std::lower_bound(k.begin(), k.end(), j);
  if (it == k.end() || *it != j) return 0;  // f_j I = 0 and duality contraction
  const int crossings = static_cast<int>(it - k.begin());
  if (out != nullptr) {
    out->assign(k.begin(), it);
    out->insert(out->end(), it + 1, k.end());
  }
  return crossings % 2 == 0 ? 1 : -1;
}

SpinorVector::SpinorVector(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("SpinorVector: negative dimension");
}

SpinorVector SpinorVector::basis_state(int n, SpinorIndex k) {
  if (!valid_spinor_index(k, n)) throw std::invalid_argument("SpinorVector: bad basis state");
  SpinorVector v(n);
  v.coeffs_.emplace(std::move(k), GaussianRational(1));
  return v;
}

GaussianRational SpinorVector::coeff(const SpinorIndex& k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? GaussianRational(0) : it->second;
}

void SpinorVector::add(const SpinorIndex& k, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (!valid_spinor_index(k, n_)) throw std::invalid_argument("SpinorVector::add: bad state");
  auto [it, inserted] = coeffs_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SpinorVector& SpinorVector::operator+=(const SpinorVector& o) {
  if (n_ != o.n_) throw std::invalid_argument("SpinorVector: dimension mismatch");
  for (const auto& [k, c] : o.coeffs_) add(k, c);
  return *this;
}

SpinorVector& SpinorVector::operator-=(const SpinorVector& o) {
  if (n_ != o.n_) throw std::invalid_argument("SpinorVector: dimension mismatch");
  for (const auto& [k, c] : o.coeffs_) add(k, -c);
  return *this;
}

SpinorVector& SpinorVector::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, v] : coeffs_) v *= c;
  return *this;
}

SpinorVector create(int j, const SpinorVector& v) {
  if (j < 1 || j > v.n()) throw std::out_of_range("create: index out of range");
  SpinorVector out(v.n());
  SpinorIndex target;
  for (const auto& [k, c] : v.coeffs()) {
    const int sign = creation_sign(k, j, &target);
    if (sign != 0) out.add(target, GaussianRational(sign) * c);
  }
  return out;
}

SpinorVector annihilate(int j, const SpinorVector& v) {
  if (j < 1 || j > v.n()) throw std::out_of_range("annihilate: index out of range");
  SpinorVector out(v.n());
  SpinorIndex target;
  for (const auto& [k, c] : v.coeffs()) {
    const int sign = annihilation_sign(k, j, &target);
    if (sign != 0) out.add(target, GaussianRational(sign) * c);
  }
  return out;
}

SpinOp euclid_generator(int alpha, int n) {
  if (alpha < 1 || alpha > 2 * n) throw std::out_of_range("euclid_generator: index out of range");
  if (alpha <= n) {
    return [alpha](const SpinorVector& v) { return annihilate(alpha, v) - create(alpha, v); };
  }
  const int j = alpha - n;
  return [j](const SpinorVector& v) {
    SpinorVector sum = annihilate(j, v) + create(j, v);
    return GaussianRational::i() * sum;
  };
}

std::pair<SpinorVector, SpinorVector> split_last(const SpinorVector& v) {
  const int n = v.n();
  if (n < 1) throw std::invalid_argument("split_last: needs n >= 1");
  SpinorVector f0(n - 1);
  SpinorVector f1(n - 1);
  for (const auto& [k, c] : v.coeffs()) {
    if (!k.empty() && k.back() == n) {
      // f+_{k1}..f+_{kr-1} f+_n I = (-1)^{r-1} f+_n (f+_{k1}..f+_{kr-1} I)
      SpinorIndex rest(k.begin(), k.end() - 1);
      const int sign = (k.size() - 1) % 2 == 0 ? 1 : -1;
      f1.add(rest, GaussianRational(sign) * c);
    } else {
      f0.add(k, c);
    }
  }
  return {std::move(f0), std::move(f1)};
}

SpinorVector join_last(const SpinorVector& f0, const SpinorVector& f1) {
  if (f0.n() != f1.n()) throw std::invalid_argument("join_last: dimension mismatch");
  const int n = f0.n() + 1;
  SpinorVector out(n);
  for (const auto& [k, c] : f0.coeffs()) out.add(k, c);
  for (const auto& [k, c] : f1.coeffs()) {
    SpinorIndex target;
    const int sign = creation_sign(k, n, &target);
    out.add(target, GaussianRational(sign) * c);
  }
  return out;
}

}  // namespace hermgt
