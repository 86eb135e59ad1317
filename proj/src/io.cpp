#include "hermgt/io.hpp"

namespace hermgt {

Json to_json(const GaussianRational& x) {
  return Json{{"re", to_string(x.re)}, {"im", to_string(x.im)}};
}

GaussianRational gaussian_from_json(const Json& j) {
  return GaussianRational(parse_rational(j.at("re").get<std::string>()),
                          parse_rational(j.at("im").get<std::string>()));
}

Json to_json(const SpinorPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back(Json{{"z", m.zexp}, {"zbar", m.zbarexp}, {"spinor", m.spinor},
                         {"coeff", to_json(c)}});
  }
  return Json{{"n", p.n()}, {"terms", std::move(terms)}};
}

SpinorPolynomial polynomial_from_json(const Json& j) {
  SpinorPolynomial p(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Monomial m{t.at("z").get<std::vector<int>>(), t.at("zbar").get<std::vector<int>>(),
               t.at("spinor").get<SpinorIndex>()};
    p.add_term(m, gaussian_from_json(t.at("coeff")));
  }
  return p;
}

Json to_json(const SpaceDescriptor& d) {
  return Json{{"n", d.n}, {"a", d.a}, {"b", d.b}, {"r", d.r}};
}

SpaceDescriptor descriptor_from_json(const Json& j) {
  SpaceDescriptor d{j.at("n").get<int>(), j.at("a").get<int>(), j.at("b").get<int>(),
                    j.at("r").get<int>()};
  d.validate();
  return d;
}

Json to_json(const GTLabel& label) {
  Json weights = Json::array();
  for (const auto& w : label.chain) weights.push_back(w.comps);
  Json path = Json::array();
  for (const auto& s : label.path) {
    path.push_back(Json{{"space", s.kind == DatumKind::kA ? "A" : "B"},
                        {"offset", s.offset},
                        {"component", s.component}});
  }
  return Json{{"weights", std::move(weights)}, {"path", std::move(path)}};
}

GTLabel label_from_json(const Json& j) {
  GTLabel label;
  for (const auto& w : j.at("weights")) {
    label.chain.push_back(WeightVector{w.get<std::vector<long>>()});
  }
  for (const auto& s : j.at("path")) {
    label.path.push_back(PathStep{
        s.at("space").get<std::string>() == "A" ? DatumKind::kA : DatumKind::kB,
        s.at("offset").get<int>(), s.at("component").get<int>()});
  }
  return label;
}

Json to_json(const BasisFamily& family) {
  Json members = Json::array();
  for (const auto& [label, poly] : family.members) {
    members.push_back(Json{{"label", to_json(label)}, {"polynomial", to_json(poly)}});
  }
  return Json{{"descriptor", to_json(family.descriptor)}, {"members", std::move(members)}};
}

BasisFamily family_from_json(const Json& j) {
  BasisFamily family{descriptor_from_json(j.at("descriptor")), {}};
  for (const auto& m : j.at("members")) {
    family.members.emplace_back(label_from_json(m.at("label")),
                                polynomial_from_json(m.at("polynomial")));
  }
  return family;
}

Json to_json(const GramMatrix& g) {
  Json rows = Json::array();
  for (const auto& row : g.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    rows.push_back(std::move(r));
  }
  return Json{{"labels", g.labels}, {"entries", std::move(rows)}};
}

namespace {

std::string term_text(const Monomial& m, const GaussianRational& c) {
  std::string out = "(" + to_string(c) + ")";
  for (std::size_t j = 0; j < m.zexp.size(); ++j) {
    if (m.zexp[j] == 0) continue;
    out += " z" + std::to_string(j + 1);
    if (m.zexp[j] > 1) out += "^" + std::to_string(m.zexp[j]);
  }
  for (std::size_t j = 0; j < m.zbarexp.size(); ++j) {
    if (m.zbarexp[j] == 0) continue;
    out += " zb" + std::to_string(j + 1);
    if (m.zbarexp[j] > 1) out += "^" + std::to_string(m.zbarexp[j]);
  }
  if (m.spinor.empty()) {
    out += " I";
  } else {
    out += " f+{";
    for (std::size_t i = 0; i < m.spinor.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(m.spinor[i]);
    }
    out += "}";
  }
  return out;
}

std::string term_latex(const Monomial& m, const GaussianRational& c) {
  std::string out = "\\left(" + to_string(c) + "\\right)";
  for (std::size_t j = 0; j < m.zexp.size(); ++j) {
    if (m.zexp[j] == 0) continue;
    out += " z_{" + std::to_string(j + 1) + "}";
    if (m.zexp[j] > 1) out += "^{" + std::to_string(m.zexp[j]) + "}";
  }
  for (std::size_t j = 0; j < m.zbarexp.size(); ++j) {
    if (m.zbarexp[j] == 0) continue;
    out += " \\bar{z}_{" + std::to_string(j + 1) + "}";
    if (m.zbarexp[j] > 1) out += "^{" + std::to_string(m.zbarexp[j]) + "}";
  }
  for (int k : m.spinor) out += " f^{\\dagger}_{" + std::to_string(k) + "}";
  out += " I";
  return out;
}

}  // namespace

std::string render_text(const SpinorPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += term_text(m, c);
  }
  return out;
}

std::string render_text(const BasisFamily& family) {
  std::string out;
  for (const auto& [label, poly] : family.members) {
    out += label.chain_string() + " : " + render_text(poly) + "\n";
  }
  return out;
}

std::string render_latex(const SpinorPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += term_latex(m, c);
  }
  return out;
}

std::string render_latex(const BasisFamily& family) {
  std::string out = "\\begin{align*}\n";
  for (const auto& [label, poly] : family.members) {
    out += "P_{" + label.chain_string() + "} &= " + render_latex(poly) + " \\\\\n";
  }
  out += "\\end{align*}\n";
  return out;
}

}  // namespace hermgt
