#include "hermgt/scalar.hpp"

#include <cctype>

namespace hermgt {

Integer factorial(long k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return Integer(0);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num);
  q /= Rational(den);
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  std::size_t pos = text[0] == '-' || text[0] == '+' ? 1 : 0;
  bool seen_digit = false;
  bool seen_slash = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      seen_digit = true;
    } else if (text[i] == '/' && !seen_slash && seen_digit && i + 1 < text.size()) {
      seen_slash = true;
    } else {
      throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  Rational q(text, 10);
  if (q.get_den() == 0) throw std::domain_error("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational new_re = re * o.re - im * o.im;
  Rational new_im = re * o.im + im * o.re;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  const Rational n2 = o.norm_sq();
  Rational new_re = (re * o.re + im * o.im) / n2;
  Rational new_im = (im * o.re - re * o.im) / n2;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

std::string to_string(const GaussianRational& x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (x.re != 0) out = to_string(x.re);
  if (x.im != 0) {
    std::string imag;
    if (x.im == 1) {
      imag = "i";
    } else if (x.im == -1) {
      imag = "-i";
    } else {
      imag = to_string(x.im) + "i";
    }
    if (!out.empty() && imag[0] != '-') out += "+";
    out += imag;
  }
  return out;
}

std::size_t exact_rank(GMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("exact_rank: ragged matrix");
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const GaussianRational inv = GaussianRational(1) / m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      const GaussianRational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

GMatrix transpose(const GMatrix& m) {
  if (m.empty()) return {};
  GMatrix out(m[0].size(), std::vector<GaussianRational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  }
  return out;
}

}  // namespace hermgt
