#include "hermgt/verify.hpp"

#include <algorithm>

namespace hermgt {

bool RunReport::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

Json RunReport::to_json() const {
  Json out;
  out["command"] = command;
  out["payload"] = payload;
  Json cs = Json::array();
  for (const auto& c : checks) {
    cs.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  out["checks"] = std::move(cs);
  out["pass"] = pass();
  return out;
}

std::string RunReport::to_text() const {
  std::string out = command + "\n";
  for (auto it = payload.begin(); it != payload.end(); ++it) {
    out += "  " + it.key() + " = " +
           (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) + "\n";
  }
  for (const auto& c : checks) {
    out += std::string("  [") + (c.pass ? "pass" : "FAIL") + "] " + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  out += pass() ? "PASS\n" : "FAIL\n";
  return out;
}

std::optional<GaussianRational> proportionality_scalar(const SpinorPolynomial& p,
                                                       const SpinorPolynomial& q) {
  if (q.is_zero()) return std::nullopt;
  const auto& [mono, qc] = *q.terms().begin();
  const GaussianRational s = p.coeff(mono) / qc;
  if (p == s * q) return s;
  return std::nullopt;
}

BasisFamily closed_form_family(int a, int b) {
  BasisFamily fam{SpaceDescriptor{2, a, b, 1}, {}};
  for (int mu = a + 1; mu >= -b; --mu) {
    GTLabel label;
    label.chain.push_back(weight_of(a, b, 1, 2));
    label.chain.push_back(WeightVector{{mu}});
    if (mu >= a + 1 - b) {
      label.path.push_back(PathStep{DatumKind::kA, mu - (a + 1 - b), 0});
    } else {
      label.path.push_back(PathStep{DatumKind::kB, a - b - mu, 0});
    }
    fam.members.emplace_back(std::move(label), closed_form_n2(a, b, mu));
  }
  return fam;
}

CheckResult ck_roundtrip_check(GTBuilder& builder, const SpaceDescriptor& t) {
  t.validate();
  if (t.n < 2) return {"ck", true, "not applicable at n = 1"};
  const int n = t.n;
  const SourceFamilyFn basis_of = [&builder](const SpaceDescriptor& d) {
    return builder.basis(d).polynomials();
  };

  // deterministic, nonconstant weights per data element
  long counter = 0;
  auto combine = [&counter](const std::vector<SpinorPolynomial>& basis, int m) {
    SpinorPolynomial out(m);
    for (const auto& e : basis) {
      out += GaussianRational(2 + (counter++ % 5)) * e;
    }
    return out;
  };

  std::vector<SpinorPolynomial> p0;  // index j = 0..b (A data), grade r
  std::vector<SpinorPolynomial> p1;  // index i = 0..a (B payloads), grade r-1
  for (int j = 0; j <= t.b; ++j) {
    p0.push_back(t.r < n ? combine(a_space_basis(n, t.a, t.b - j, t.r, basis_of), n - 1)
                         : SpinorPolynomial(n - 1));
  }
  for (int i = 0; i <= t.a; ++i) {
    p1.push_back(t.r > 0 ? combine(b_payload_basis(n, t.a - i, t.b, t.r, basis_of), n - 1)
                         : SpinorPolynomial(n - 1));
  }

  SpinorPolynomial m_ext(n);
  for (int j = 0; j <= t.b; ++j) {
    if (!p0[j].is_zero()) m_ext += ck_extend(InitialDatum{DatumKind::kA, j, t, p0[j]});
  }
  for (int i = 0; i <= t.a; ++i) {
    if (!p1[i].is_zero()) m_ext += ck_extend(InitialDatum{DatumKind::kB, i, t, p1[i]});
  }

  auto fail = [&t](const std::string& what) {
    return CheckResult{"ck", false, what + " at " + to_string(t)};
  };

  // (i): M|_{C^{n-1}} = p0_{a,b} + f+_n p1_{a,b}
  {
    const auto [f0, f1] = restrict_last(m_ext);
    if (f0 != p0[0]) return fail("restriction F0 != p0");
    if (f1 != p1[0]) return fail("restriction F1 != p1");
  }
  // (ii): (d/dzbar_n)^j M| = p0_{a,b-j} - f+_n upzd~ p0_{a,b-j+1}
  SpinorPolynomial dz = m_ext;
  for (int j = 1; j <= t.b; ++j) {
    dz = partial(dz, n, true);
    const auto [f0, f1] = restrict_last(dz);
    if (f0 != p0[j]) return fail("zbar-derivative " + std::to_string(j) + ": F0 mismatch");
    SpinorPolynomial corr = GaussianRational(-1) * apply_upzd(p0[j - 1]);
    if (f1 != corr) return fail("zbar-derivative " + std::to_string(j) + ": F1 mismatch");
  }
  // (iii): (d/dz_n)^i M| = upz~ p1_{a-i+1,b} + f+_n p1_{a-i,b}
  dz = m_ext;
  for (int i = 1; i <= t.a; ++i) {
    dz = partial(dz, n, false);
    const auto [f0, f1] = restrict_last(dz);
    if (f0 != apply_upz(p1[i - 1])) {
      return fail("z-derivative " + std::to_string(i) + ": F0 mismatch");
    }
    if (f1 != p1[i]) return fail("z-derivative " + std::to_string(i) + ": F1 mismatch");
  }
  return {"ck", true, "roundtrip exact at " + to_string(t)};
}

CheckResult count_check(GTBuilder& builder, const SpaceDescriptor& d) {
  const auto& fam = builder.basis(d);
  const Integer dim = dim_M(d);
  const bool ok = Integer(static_cast<long>(fam.members.size())) == dim;
  return {"count", ok,
          std::to_string(fam.members.size()) + " members, dim " + dim.get_str()};
}

CheckResult hmono_check(GTBuilder& builder, const SpaceDescriptor& d) {
  const auto& fam = builder.basis(d);
  for (const auto& [label, poly] : fam.members) {
    if (!is_hermitean_monogenic(poly)) {
      return {"hmono", false, "member " + label.to_string() + " is not h-monogenic"};
    }
    if (poly.is_zero() || !is_homogeneous(poly, d.a, d.b, d.r)) {
      return {"hmono", false, "member " + label.to_string() + " has wrong homogeneity"};
    }
  }
  return {"hmono", true, std::to_string(fam.members.size()) + " members h-monogenic"};
}

CheckResult gram_check(GTBuilder& builder, const SpaceDescriptor& d) {
  const GramMatrix g = gram(builder.basis(d));
  if (!g.is_hermitean()) return {"gram", false, "Gram matrix not Hermitean"};
  if (!g.is_diagonal()) return {"gram", false, "off-diagonal Fischer product nonzero"};
  if (!g.diagonal_real_positive()) return {"gram", false, "diagonal not positive rational"};
  return {"gram", true, "diagonal with positive rational diagonal"};
}

CheckResult labels_check(GTBuilder& builder, const SpaceDescriptor& d) {
  const auto& fam = builder.basis(d);
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    if (!fam.members[i].first.chain_interlaces()) {
      return {"labels", false, "chain " + fam.members[i].first.chain_string() + " not interlacing"};
    }
    for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
      if (fam.members[i].first.chain == fam.members[j].first.chain) {
        return {"labels", false, "duplicate chain " + fam.members[i].first.chain_string()};
      }
    }
  }
  return {"labels", true, "chains valid and pairwise distinct"};
}

CheckResult lattice_check_result(const SpaceDescriptor& d) {
  if (d.r <= 0 || d.r >= d.n) {
    return {"lattice", true, "not applicable at edge grade"};
  }
  const LatticeReport rep = lattice_check(d);
  if (rep.pass) {
    return {"lattice", true,
            std::to_string(rep.component_count) + " component weights = interlacing set (grid " +
                std::to_string(rep.grid_count) + ")"};
  }
  std::string detail = "mismatch;";
  for (const auto& w : rep.missing) detail += " missing " + w;
  for (const auto& w : rep.extra) detail += " extra " + w;
  for (const auto& w : rep.duplicated) detail += " duplicated " + w;
  return {"lattice", false, detail};
}

CheckResult closedform_check(GTBuilder& builder, const SpaceDescriptor& d) {
  const auto& fam = builder.basis(d);
  if (d.n == 2 && d.r == 1) {
    std::string scalars;
    for (const auto& [label, poly] : fam.members) {
      const PathStep& top = label.path.at(0);
      const int mu = top.kind == DatumKind::kA ? d.a + 1 - d.b + top.offset
                                               : d.a - d.b - top.offset;
      const SpinorPolynomial expected = closed_form_n2(d.a, d.b, mu);
      const auto s = proportionality_scalar(poly, expected);
      if (!s.has_value() || s->is_zero()) {
        return {"closedform", false, "member mu=" + std::to_string(mu) + " not proportional"};
      }
      if (!scalars.empty()) scalars += ", ";
      scalars += "mu=" + std::to_string(mu) + ": " + to_string(*s);
    }
    return {"closedform", true, "scalars " + scalars};
  }
  if (d.r == 0 || d.r == d.n || d.n == 1) {
    // Monomial displays: exponents are the path offsets, coefficients are the
    // inverse factorials.
    const bool holo = d.r == d.n && d.r > 0;
    for (const auto& [label, poly] : fam.members) {
      std::vector<int> exps(d.n, 0);
      int rest = holo ? d.a : d.b;
      for (std::size_t s = 0; s < label.path.size(); ++s) {
        exps[d.n - 1 - static_cast<int>(s)] = label.path[s].offset;
        rest -= label.path[s].offset;
      }
      exps[0] = rest;
      Integer den(1);
      for (int e : exps) den *= factorial(e);
      Monomial mono;
      SpinorIndex top;
      if (holo) {
        for (int j = 1; j <= d.n; ++j) top.push_back(j);
        mono = Monomial{exps, std::vector<int>(d.n, 0), top};
      } else {
        mono = Monomial{std::vector<int>(d.n, 0), exps, {}};
      }
      const SpinorPolynomial expected =
          SpinorPolynomial::monomial(d.n, mono, GaussianRational(make_rational(Integer(1), den)));
      if (poly != expected) {
        return {"closedform", false, "member " + label.to_string() + " differs from display"};
      }
    }
    return {"closedform", true, "coefficient-exact match with the monomial display"};
  }
  return {"closedform", true, "not applicable for this descriptor"};
}

RunReport cmd_dims(int n, int a, int b, int r, bool with_oracle, long budget) {
  RunReport rep;
  rep.command = "dims --n " + std::to_string(n) + " --a " + std::to_string(a) + " --b " +
                std::to_string(b) + " --r " + std::to_string(r);
  const SpaceDescriptor d{n, a, b, r};
  d.validate();
  const DimReport dims = dim_report(d, with_oracle, budget);
  const Integer& m = dims.formula_dim;
  rep.payload["dim"] = m.get_str();
  if (r > 0 && r < n) {
    rep.payload["dim_A"] = dim_A(n, a, b, r).get_str();
    rep.payload["dim_B"] = dim_B(n, a, b, r).get_str();
    Integer total(0);
    for (int j = 0; j <= b; ++j) total += dim_A(n, a, j, r);
    for (int i = 0; i <= a; ++i) total += dim_B(n, i, b, r);
    rep.checks.push_back({"sum_identity", total == m,
                          total.get_str() + " = sum_j x(a,j) + sum_i y(i,b) vs dim " + m.get_str()});
  }
  if (dims.oracle_dim.has_value()) {
    rep.payload["oracle"] = dims.oracle_dim->get_str();
    rep.checks.push_back({"oracle_match", dims.consistent(),
                          m.get_str() + " = " + dims.oracle_dim->get_str()});
  }
  return rep;
}

RunReport cmd_verify(int n, int a, int b, int r, const VerifyOptions& opts) {
  RunReport rep;
  rep.command = "verify --n " + std::to_string(n) + " --a " + std::to_string(a) + " --b " +
                std::to_string(b) + " --r " + std::to_string(r);
  const SpaceDescriptor d{n, a, b, r};
  d.validate();
  GTBuilder builder(opts.budget);
  std::vector<std::string> names = opts.checks;
  if (names.empty()) names = {"count", "hmono", "gram", "labels", "lattice", "ck", "closedform"};
  for (const std::string& name : names) {
    if (name == "count") {
      rep.checks.push_back(count_check(builder, d));
    } else if (name == "hmono") {
      rep.checks.push_back(hmono_check(builder, d));
    } else if (name == "gram") {
      rep.checks.push_back(gram_check(builder, d));
    } else if (name == "labels") {
      rep.checks.push_back(labels_check(builder, d));
    } else if (name == "lattice") {
      rep.checks.push_back(lattice_check_result(d));
    } else if (name == "ck") {
      rep.checks.push_back(ck_roundtrip_check(builder, d));
    } else if (name == "closedform") {
      rep.checks.push_back(closedform_check(builder, d));
    } else {
      throw std::invalid_argument("verify: unknown check '" + name + "'");
    }
  }
  return rep;
}

RunReport cmd_appell(int a_max, int b_max) {
  RunReport rep;
  rep.command = "appell --amax " + std::to_string(a_max) + " --bmax " + std::to_string(b_max);
  const AppellReport ap = appell_check(a_max, b_max);
  rep.payload["identities"] = std::to_string(ap.identities_checked);
  std::string detail = std::to_string(ap.identities_checked) + " identities";
  if (!ap.pass) {
    detail += "; failures:";
    for (const auto& f : ap.failures) detail += " " + f;
  }
  rep.checks.push_back({"appell", ap.pass, detail});

  // Remark-1 column structure of the four derivative matrices on every grade.
  GTBuilder builder;
  bool cols_ok = true;
  std::string bad;
  long matrices = 0;
  for (int a = 0; a <= a_max; ++a) {
    for (int b = 0; b <= b_max; ++b) {
      std::vector<BasisFamily> fams;
      fams.push_back(closed_form_family(a, b));
      fams.push_back(builder.basis({2, a, b, 0}));
      fams.push_back(builder.basis({2, a, b, 2}));
      for (const BasisFamily& from : fams) {
        for (const bool conj : {false, true}) {
          for (int j = 1; j <= 2; ++j) {
            const SpaceDescriptor td{2, from.descriptor.a - (conj ? 0 : 1),
                                     from.descriptor.b - (conj ? 1 : 0), from.descriptor.r};
            if (td.a < 0 || td.b < 0) continue;
            const BasisFamily& to =
                td.r == 1 ? closed_form_family(td.a, td.b) : builder.basis(td);
            const GMatrix mat = derivative_matrix(j, conj, from, to);
            ++matrices;
            if (!derivative_matrix_columns_ok(mat)) {
              cols_ok = false;
              bad = "d" + std::string(conj ? "zbar" : "z") + std::to_string(j) + " on " +
                    to_string(from.descriptor);
            }
          }
        }
      }
    }
  }
  rep.checks.push_back({"derivative_matrices", cols_ok,
                        cols_ok ? std::to_string(matrices) + " matrices, <=1 entry in {+-1} per column"
                                : bad});
  return rep;
}

RunReport cmd_monogenic(int n, int k, bool verify, bool with_oracle, long budget) {
  RunReport rep;
  rep.command = "monogenic --n " + std::to_string(n) + " --k " + std::to_string(k);
  GTBuilder builder(budget);
  const auto entries = monogenic_basis(builder, n, k);
  rep.payload["count"] = std::to_string(entries.size());
  const Integer expected = Integer(1) << n;
  const Integer dim = expected * binomial(k + 2 * n - 2, 2 * n - 2);
  rep.payload["dim"] = dim.get_str();
  rep.checks.push_back({"count", Integer(static_cast<long>(entries.size())) == dim,
                        std::to_string(entries.size()) + " vs dim " + dim.get_str()});
  if (verify) {
    bool all_mono = true;
    std::string bad;
    for (const auto& e : entries) {
      if (!is_monogenic(e.poly)) {
        all_mono = false;
        bad = (e.embedded ? "embedded from " : "direct from ") + to_string(e.source);
        break;
      }
    }
    rep.checks.push_back({"dirac", all_mono, all_mono ? "all members dirac-annihilated" : bad});
    std::vector<SpinorPolynomial> polys;
    polys.reserve(entries.size());
    for (const auto& e : entries) polys.push_back(e.poly);
    const bool orth = is_orthogonal(polys);
    rep.checks.push_back({"orthogonal", orth, orth ? "pairwise Fischer-orthogonal" : "failure"});
  }
  if (with_oracle) {
    const long oracle = monogenic_kernel_dim_oracle(n, k, budget);
    rep.payload["oracle"] = std::to_string(oracle);
    rep.checks.push_back({"oracle_match", Integer(oracle) == dim,
                          dim.get_str() + " = " + std::to_string(oracle)});
  }
  return rep;
}

}  // namespace hermgt
