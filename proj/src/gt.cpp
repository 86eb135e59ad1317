#include "hermgt/gt.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hermgt {

bool WeightVector::weakly_decreasing() const {
  for (std::size_t i = 1; i < comps.size(); ++i) {
    if (comps[i - 1] < comps[i]) return false;
  }
  return true;
}

bool WeightVector::interlaces_below(const WeightVector& lambda) const {
  if (comps.size() + 1 != lambda.comps.size()) return false;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!(lambda.comps[i] >= comps[i] && comps[i] >= lambda.comps[i + 1])) return false;
  }
  return true;
}

std::string to_string(const WeightVector& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.comps.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(w.comps[i]);
  }
  return out + ")";
}

WeightVector weight_of(int a, int b, int s, int m) {
  if (m < 1 || s < 0 || s > m) throw std::invalid_argument("weight_of: invalid grade");
  std::vector<long> c(m, 0);
  if (s == 0) {
    c[m - 1] = -b;
  } else if (s == m) {
    std::fill(c.begin(), c.end(), 1L);
    c[0] = a + 1;
  } else {
    c[0] = a + 1;
    for (int i = 1; i < s; ++i) c[i] = 1;
    c[m - 1] = -b;
  }
  return WeightVector{std::move(c)};
}

std::vector<WeightVector> interlacing_weights(const WeightVector& lambda) {
  const std::size_t m = lambda.comps.size();
  if (m < 2) throw std::invalid_argument("interlacing_weights: weight length must be >= 2");
  std::vector<WeightVector> out;
  std::vector<long> cur(m - 1, 0);
  std::function<void(std::size_t)> gen = [&](std::size_t pos) {
    if (pos == m - 1) {
      out.push_back(WeightVector{cur});
      return;
    }
    for (long v = lambda.comps[pos]; v >= lambda.comps[pos + 1]; --v) {
      cur[pos] = v;
      gen(pos + 1);
    }
  };
  gen(0);
  return out;
}

bool GTLabel::chain_interlaces() const {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].comps.size() != chain.size() - i) return false;
    if (!chain[i].weakly_decreasing()) return false;
    if (i + 1 < chain.size() && !chain[i + 1].interlaces_below(chain[i])) return false;
  }
  return true;
}

std::string GTLabel::chain_string() const {
  std::string out;
  for (const auto& w : chain) out += hermgt::to_string(w);
  return out;
}

std::string GTLabel::to_string() const {
  std::string out = chain_string();
  if (!path.empty()) {
    out += "|";
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i > 0) out += ",";
      out += path[i].kind == DatumKind::kA ? "A" : "B";
      out += std::to_string(path[i].offset) + "." + std::to_string(path[i].component);
    }
  }
  return out;
}

std::vector<SpinorPolynomial> BasisFamily::polynomials() const {
  std::vector<SpinorPolynomial> out;
  out.reserve(members.size());
  for (const auto& [label, poly] : members) out.push_back(poly);
  return out;
}

GTBuilder::GTBuilder(long budget) : budget_(budget) {}

const BasisFamily& GTBuilder::basis(const SpaceDescriptor& d) {
  d.validate();
  const auto it = cache_.find(d);
  if (it != cache_.end()) return it->second;
  BasisFamily fam = build(d);
  return cache_.emplace(d, std::move(fam)).first->second;
}

BasisFamily GTBuilder::build(const SpaceDescriptor& d) {
  const Integer dim = dim_M(d);
  if (dim == 0) return BasisFamily{d, {}};
  if (dim > budget_) {
    throw std::length_error("GTBuilder: dim " + dim.get_str() + " exceeds budget " +
                            std::to_string(budget_) + " for " + to_string(d));
  }
  BasisFamily fam = d.n == 1      ? build_n1(d)
                    : d.r == 0    ? build_antiholomorphic(d)
                    : d.r == d.n  ? build_holomorphic(d)
                                  : build_general(d);
  if (Integer(static_cast<long>(fam.members.size())) != dim) {
    throw std::logic_error("GTBuilder: member count " + std::to_string(fam.members.size()) +
                           " != dim " + dim.get_str() + " for " + to_string(d));
  }
  return fam;
}

BasisFamily GTBuilder::build_n1(const SpaceDescriptor& d) {
  BasisFamily fam{d, {}};
  GTLabel label;
  if (d.r == 0) {
    // P_{(-b)} = zbar^b / b! I
    label.chain.push_back(weight_of(d.a, d.b, 0, 1));
    const auto coeff = GaussianRational(make_rational(Integer(1), factorial(d.b)));
    fam.members.emplace_back(label,
                             SpinorPolynomial::monomial(1, Monomial{{0}, {d.b}, {}}, coeff));
  } else {
    // P_{(a+1)} = z^a / a! f+_1
    label.chain.push_back(weight_of(d.a, d.b, 1, 1));
    const auto coeff = GaussianRational(make_rational(Integer(1), factorial(d.a)));
    fam.members.emplace_back(label,
                             SpinorPolynomial::monomial(1, Monomial{{d.a}, {0}, {1}}, coeff));
  }
  return fam;
}

BasisFamily GTBuilder::build_antiholomorphic(const SpaceDescriptor& d) {
  // All monomials zbar^e / e! I of degree b, ordered by descending exponents
  // of the later variables (A-spaces by descending offset at every level).
  BasisFamily fam{d, {}};
  std::vector<int> exps(d.n, 0);
  std::function<void(int, int)> gen = [&](int level, int remaining) {
    if (level == 1) {
      exps[0] = remaining;
      Monomial mono{std::vector<int>(d.n, 0), exps, {}};
      Integer den(1);
      for (int e : exps) den *= factorial(e);
      GTLabel label;
      // chain from level n down to 1; the weight at level l carries the degree
      // held by the first l variables
      int held = d.b;
      for (int l = d.n; l >= 1; --l) {
        label.chain.push_back(weight_of(0, held, 0, l));
        held -= exps[l - 1];
        if (l >= 2) label.path.push_back(PathStep{DatumKind::kA, exps[l - 1], 0});
      }
      fam.members.emplace_back(std::move(label),
                               SpinorPolynomial::monomial(d.n, std::move(mono),
                                                          GaussianRational(make_rational(Integer(1), den))));
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[level - 1] = e;
      gen(level - 1, remaining - e);
    }
  };
  gen(d.n, d.b);
  return fam;
}

BasisFamily GTBuilder::build_holomorphic(const SpaceDescriptor& d) {
  // All monomials z^e / e! f+_1..f+_n of degree a, B-spaces by ascending
  // offset at every level.
  BasisFamily fam{d, {}};
  SpinorIndex top(d.n);
  for (int j = 1; j <= d.n; ++j) top[j - 1] = j;
  std::vector<int> exps(d.n, 0);
  std::function<void(int, int)> gen = [&](int level, int remaining) {
    if (level == 1) {
      exps[0] = remaining;
      Monomial mono{exps, std::vector<int>(d.n, 0), top};
      Integer den(1);
      for (int e : exps) den *= factorial(e);
      GTLabel label;
      int held = d.a;
      for (int l = d.n; l >= 1; --l) {
        label.chain.push_back(weight_of(held, 0, l, l));
        held -= exps[l - 1];
        if (l >= 2) label.path.push_back(PathStep{DatumKind::kB, exps[l - 1], 0});
      }
      fam.members.emplace_back(std::move(label),
                               SpinorPolynomial::monomial(d.n, std::move(mono),
                                                          GaussianRational(make_rational(Integer(1), den))));
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[level - 1] = e;
      gen(level - 1, remaining - e);
    }
  };
  gen(d.n, d.a);
  return fam;
}

BasisFamily GTBuilder::build_general(const SpaceDescriptor& d) {
  BasisFamily fam{d, {}};
  const WeightVector top = weight_of(d.a, d.b, d.r, d.n);
  for (const DecompComponent& comp : initial_data_decomposition(d)) {
    if (comp.empty) continue;
    const BasisFamily& src = basis(comp.source);
    for (const auto& [src_label, src_poly] : src.members) {
      SpinorPolynomial payload = apply_embedding_factor(comp.kind, comp.factor, src_poly);
      if (payload.is_zero()) {
        throw std::logic_error("GTBuilder: embedding factor killed a basis element of " +
                               to_string(comp.source));
      }
      SpinorPolynomial ext = ck_extend(InitialDatum{comp.kind, comp.offset, d, payload});
      GTLabel label;
      label.chain.reserve(src_label.chain.size() + 1);
      label.chain.push_back(top);
      label.chain.insert(label.chain.end(), src_label.chain.begin(), src_label.chain.end());
      label.path.reserve(src_label.path.size() + 1);
      label.path.push_back(PathStep{comp.kind, comp.offset, comp.ordinal});
      label.path.insert(label.path.end(), src_label.path.begin(), src_label.path.end());
      fam.members.emplace_back(std::move(label), std::move(ext));
    }
  }
  return fam;
}

SpinorPolynomial closed_form_n2(int a, int b, int mu) {
  SpinorPolynomial out(2);
  if (a < 0 || b < 0 || mu < -b || mu > a + 1) return out;
  auto coeff = [](int sign_pow, std::initializer_list<int> facts) {
    Integer den(1);
    for (int f : facts) den *= factorial(f);
    Rational q = make_rational(Integer(sign_pow % 2 == 0 ? 1 : -1), den);
    return GaussianRational(q);
  };
  if (mu >= a + 1 - b) {
    const int j = mu - (a + 1 - b);
    for (int k = 0; k <= std::min(a, b - j); ++k) {
      out.add_term(Monomial{{a - k, k}, {b - j - k, k + j}, {1}},
                   coeff(b - j - k, {k, k + j, a - k, b - j - k}));
    }
    for (int k = 0; k <= std::min(a, b - j - 1); ++k) {
      out.add_term(Monomial{{a - k, k}, {b - j - k - 1, k + j + 1}, {2}},
                   coeff(b - j - k - 1, {k, k + j + 1, a - k, b - j - k - 1}));
    }
  } else {
    const int i = a - b - mu;
    for (int k = 0; k <= std::min(a - i, b); ++k) {
      out.add_term(Monomial{{a - i - k, k + i}, {b - k, k}, {2}},
                   coeff(b - k, {k + i, k, a - i - k, b - k}));
    }
    for (int k = 0; k <= std::min(a - i - 1, b); ++k) {
      out.add_term(Monomial{{a - i - k - 1, k + i + 1}, {b - k, k}, {1}},
                   coeff(b - k, {k + i + 1, k, a - i - k - 1, b - k}));
    }
  }
  return out;
}

namespace {

SpinorPolynomial antiholo_n2(int b, int j1) {
  SpinorPolynomial out(2);
  if (b < 0 || j1 < 0 || j1 > b) return out;
  const Integer den = factorial(j1) * factorial(b - j1);
  out.add_term(Monomial{{0, 0}, {b - j1, j1}, {}},
               GaussianRational(make_rational(Integer(1), den)));
  return out;
}

SpinorPolynomial holo_n2(int a, int i1) {
  SpinorPolynomial out(2);
  if (a < 0 || i1 < 0 || i1 > a) return out;
  const Integer den = factorial(i1) * factorial(a - i1);
  out.add_term(Monomial{{a - i1, i1}, {0, 0}, {1, 2}},
               GaussianRational(make_rational(Integer(1), den)));
  return out;
}

SpinorPolynomial ladder_n1(int deg, bool holomorphic) {
  SpinorPolynomial out(1);
  if (deg < 0) return out;
  const GaussianRational c{make_rational(Integer(1), factorial(deg))};
  if (holomorphic) {
    out.add_term(Monomial{{deg}, {0}, {1}}, c);
  } else {
    out.add_term(Monomial{{0}, {deg}, {}}, c);
  }
  return out;
}

}  // namespace

AppellReport appell_check(int a_max, int b_max) {
  AppellReport rep;
  auto expect = [&rep](const SpinorPolynomial& lhs, const SpinorPolynomial& rhs,
                       const std::string& what) {
    ++rep.identities_checked;
    if (!(lhs == rhs)) {
      rep.pass = false;
      rep.failures.push_back(what);
    }
  };
  const SpinorPolynomial zero2(2);
  const SpinorPolynomial zero1(1);

  // Grade-1 closed forms: the four derivative identities, including one index
  // beyond every boundary to exercise the zero conventions.
  for (int a = 0; a <= a_max; ++a) {
    for (int b = 0; b <= b_max; ++b) {
      for (int mu = -b - 1; mu <= a + 2; ++mu) {
        const SpinorPolynomial p = closed_form_n2(a, b, mu);
        const std::string at =
            "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",mu=" + std::to_string(mu) + ")";
        expect(partial(p, 2, true), closed_form_n2(a, b - 1, mu), "dzbar2 " + at);
        expect(partial(p, 2, false), closed_form_n2(a - 1, b, mu), "dz2 " + at);
        expect(partial(p, 1, true), GaussianRational(-1) * closed_form_n2(a, b - 1, mu + 1),
               "dzbar1 " + at);
        expect(partial(p, 1, false), closed_form_n2(a - 1, b, mu - 1), "dz1 " + at);
      }
    }
  }

  // Anti-holomorphic n = 2 family.
  for (int b = 0; b <= b_max; ++b) {
    for (int j1 = 0; j1 <= b; ++j1) {
      const SpinorPolynomial p = antiholo_n2(b, j1);
      const std::string at = "(b=" + std::to_string(b) + ",j1=" + std::to_string(j1) + ")";
      expect(partial(p, 2, true), antiholo_n2(b - 1, j1 - 1), "r0 dzbar2 " + at);
      expect(partial(p, 1, true), antiholo_n2(b - 1, j1), "r0 dzbar1 " + at);
      expect(partial(p, 1, false), zero2, "r0 dz1 " + at);
      expect(partial(p, 2, false), zero2, "r0 dz2 " + at);
    }
  }

  // Holomorphic n = 2 family.
  for (int a = 0; a <= a_max; ++a) {
    for (int i1 = 0; i1 <= a; ++i1) {
      const SpinorPolynomial p = holo_n2(a, i1);
      const std::string at = "(a=" + std::to_string(a) + ",i1=" + std::to_string(i1) + ")";
      expect(partial(p, 2, false), holo_n2(a - 1, i1 - 1), "r2 dz2 " + at);
      expect(partial(p, 1, false), holo_n2(a - 1, i1), "r2 dz1 " + at);
      expect(partial(p, 1, true), zero2, "r2 dzbar1 " + at);
      expect(partial(p, 2, true), zero2, "r2 dzbar2 " + at);
    }
  }

  // n = 1 ladders.
  for (int b = 0; b <= b_max; ++b) {
    const SpinorPolynomial p = ladder_n1(b, false);
    expect(partial(p, 1, true), ladder_n1(b - 1, false), "n1 dzbar (b=" + std::to_string(b) + ")");
    expect(partial(p, 1, false), zero1, "n1 dz (b=" + std::to_string(b) + ")");
  }
  for (int a = 0; a <= a_max; ++a) {
    const SpinorPolynomial p = ladder_n1(a, true);
    expect(partial(p, 1, false), ladder_n1(a - 1, true), "n1 dz (a=" + std::to_string(a) + ")");
    expect(partial(p, 1, true), zero1, "n1 dzbar (a=" + std::to_string(a) + ")");
  }
  return rep;
}

GMatrix derivative_matrix(int j, bool conjugated, const BasisFamily& from, const BasisFamily& to) {
  const SpaceDescriptor& fd = from.descriptor;
  const SpaceDescriptor expected{fd.n, fd.a - (conjugated ? 0 : 1), fd.b - (conjugated ? 1 : 0),
                                 fd.r};
  if (!(to.descriptor == expected)) {
    throw std::invalid_argument("derivative_matrix: descriptor mismatch, expected target " +
                                to_string(expected));
  }
  GMatrix m(to.members.size(),
            std::vector<GaussianRational>(from.members.size(), GaussianRational(0)));
  for (std::size_t col = 0; col < from.members.size(); ++col) {
    const SpinorPolynomial d = partial(from.members[col].second, j, conjugated);
    SpinorPolynomial recon(fd.n);
    for (std::size_t row = 0; row < to.members.size(); ++row) {
      const SpinorPolynomial& t = to.members[row].second;
      const GaussianRational c = fischer(t, d) / fischer(t, t);
      m[row][col] = c;
      recon += c * t;
    }
    if (recon != d) throw std::logic_error("derivative_matrix: derivative leaves the target span");
  }
  return m;
}

bool derivative_matrix_columns_ok(const GMatrix& m) {
  if (m.empty()) return true;
  const GaussianRational one(1);
  for (std::size_t col = 0; col < m[0].size(); ++col) {
    int nonzero = 0;
    for (std::size_t row = 0; row < m.size(); ++row) {
      if (m[row][col].is_zero()) continue;
      ++nonzero;
      if (m[row][col] != one && m[row][col] != -one) return false;
    }
    if (nonzero > 1) return false;
  }
  return true;
}

LatticeReport lattice_check(const SpaceDescriptor& d) {
  d.validate();
  if (d.r <= 0 || d.r >= d.n) throw std::invalid_argument("lattice_check: requires 0 < r < n");
  LatticeReport rep;
  rep.descriptor = d;
  rep.grid_count = static_cast<std::size_t>(2) * (d.a + 1) * (d.b + 1);

  std::map<std::vector<long>, int> constructed;
  for (const DecompComponent& comp : initial_data_decomposition(d)) {
    if (comp.empty) continue;
    const WeightVector w = weight_of(comp.source.a, comp.source.b, comp.source.r, comp.source.n);
    ++constructed[w.comps];
  }
  std::set<std::vector<long>> enumerated;
  for (const WeightVector& w : interlacing_weights(weight_of(d.a, d.b, d.r, d.n))) {
    enumerated.insert(w.comps);
  }
  rep.interlacing_count = enumerated.size();
  rep.component_count = 0;
  for (const auto& [w, count] : constructed) {
    rep.component_count += count;
    if (count > 1) rep.duplicated.push_back(to_string(WeightVector{w}));
    if (enumerated.find(w) == enumerated.end()) rep.extra.push_back(to_string(WeightVector{w}));
  }
  for (const auto& w : enumerated) {
    if (constructed.find(w) == constructed.end()) rep.missing.push_back(to_string(WeightVector{w}));
  }
  rep.pass = rep.missing.empty() && rep.extra.empty() && rep.duplicated.empty();
  return rep;
}

std::vector<MonogenicEntry> monogenic_basis(GTBuilder& builder, int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("monogenic_basis: bad arguments");
  std::vector<MonogenicEntry> out;
  for (int a = 0; a <= k; ++a) {
    for (int r = 0; r <= n; ++r) {
      const SpaceDescriptor d{n, a, k - a, r};
      for (const auto& [label, poly] : builder.basis(d).members) {
        out.push_back(MonogenicEntry{false, d, label, poly});
      }
    }
  }
  for (int a = 0; a + 1 <= k; ++a) {
    for (int r = 1; r <= n - 1; ++r) {
      const SpaceDescriptor d{n, a, k - 1 - a, r};
      const GaussianRational cz{make_rational(1, a + n - r)};
      const GaussianRational czd{make_rational(1, k - 1 - a + r)};
      for (const auto& [label, poly] : builder.basis(d).members) {
        SpinorPolynomial q = cz * mul_zvec(poly) + czd * mul_zdvec(poly);
        out.push_back(MonogenicEntry{true, d, label, std::move(q)});
      }
    }
  }
  return out;
}

GramMatrix gram(const BasisFamily& family) {
  std::vector<std::string> labels;
  labels.reserve(family.members.size());
  for (const auto& [label, poly] : family.members) labels.push_back(label.to_string());
  return gram(family.polynomials(), labels);
}

bool is_orthogonal(const BasisFamily& family) { return is_orthogonal(family.polynomials()); }

}  // namespace hermgt
