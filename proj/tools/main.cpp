#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "hermgt/verify.hpp"

namespace {

using hermgt::Json;
using hermgt::RunReport;

int write_output(const std::string& body, const std::string& out_path,
                 std::chrono::steady_clock::time_point start) {
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return 2;
    }
    out << body;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "elapsed " << elapsed.count() << " ms\n";
  return 0;
}

int emit(const RunReport& rep, bool as_json, const std::string& out_path,
         std::chrono::steady_clock::time_point start) {
  const std::string body = as_json ? rep.to_json().dump(2) + "\n" : rep.to_text();
  const int rc = write_output(body, out_path, start);
  if (rc != 0) return rc;
  return rep.pass() ? 0 : 1;
}

std::vector<std::string> split_checks(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Gelfand-Tsetlin bases of Hermitean monogenic polynomials"};
  app.require_subcommand(1);

  int n = 2, a = 0, b = 0, r = 0, k = 0, a_max = 2, b_max = 2;
  long budget = 200000;
  bool with_oracle = false, as_json = false, do_verify = false;
  std::string format = "text", out_path, checks_csv;

  auto* dims = app.add_subcommand("dims", "Dimension formulas and the kernel oracle");
  dims->add_option("--n", n)->required();
  dims->add_option("--a", a)->required();
  dims->add_option("--b", b)->required();
  dims->add_option("--r", r)->required();
  dims->add_flag("--oracle", with_oracle, "cross-check against the brute-force kernel dimension");
  dims->add_flag("--json", as_json);
  dims->add_option("--budget", budget, "monomial-count guard for the oracle");

  auto* basis = app.add_subcommand("basis", "Construct the GT basis of M^(r)_{a,b}(C^n)");
  basis->add_option("--n", n)->required();
  basis->add_option("--a", a)->required();
  basis->add_option("--b", b)->required();
  basis->add_option("--r", r)->required();
  basis->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));
  basis->add_option("--out", out_path);
  basis->add_option("--budget", budget);

  auto* verify = app.add_subcommand("verify", "Run invariant checks on a constructed family");
  verify->add_option("--n", n)->required();
  verify->add_option("--a", a)->required();
  verify->add_option("--b", b)->required();
  verify->add_option("--r", r)->required();
  verify->add_option("--checks", checks_csv,
                     "comma-separated subset of count,hmono,gram,labels,lattice,ck,closedform");
  verify->add_flag("--json", as_json);
  verify->add_option("--budget", budget);

  auto* appell = app.add_subcommand("appell", "Derivative identities of the n=2 bases");
  appell->add_option("--amax", a_max)->required();
  appell->add_option("--bmax", b_max)->required();
  appell->add_flag("--json", as_json);

  auto* monogenic = app.add_subcommand("monogenic", "Orthogonal basis of k-homogeneous monogenics");
  monogenic->add_option("--n", n)->required();
  monogenic->add_option("--k", k)->required();
  monogenic->add_flag("--verify", do_verify);
  monogenic->add_flag("--oracle", with_oracle);
  monogenic->add_flag("--json", as_json);
  monogenic->add_option("--budget", budget);

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a constructed family");
  gram_cmd->add_option("--n", n)->required();
  gram_cmd->add_option("--a", a)->required();
  gram_cmd->add_option("--b", b)->required();
  gram_cmd->add_option("--r", r)->required();
  gram_cmd->add_option("--out", out_path);
  gram_cmd->add_option("--budget", budget);

  CLI11_PARSE(app, argc, argv);
  const auto start = std::chrono::steady_clock::now();

  try {
    if (dims->parsed()) {
      return emit(hermgt::cmd_dims(n, a, b, r, with_oracle, budget), as_json, "", start);
    }
    if (verify->parsed()) {
      hermgt::VerifyOptions opts;
      opts.checks = split_checks(checks_csv);
      opts.budget = budget;
      return emit(hermgt::cmd_verify(n, a, b, r, opts), as_json, "", start);
    }
    if (appell->parsed()) {
      return emit(hermgt::cmd_appell(a_max, b_max), as_json, "", start);
    }
    if (monogenic->parsed()) {
      return emit(hermgt::cmd_monogenic(n, k, do_verify, with_oracle, budget), as_json, "", start);
    }
    if (basis->parsed()) {
      hermgt::GTBuilder builder(budget);
      const hermgt::SpaceDescriptor d{n, a, b, r};
      d.validate();
      const hermgt::BasisFamily& fam = builder.basis(d);
      std::string body;
      if (format == "json") {
        body = hermgt::to_json(fam).dump(2) + "\n";
      } else if (format == "latex") {
        body = hermgt::render_latex(fam);
      } else {
        body = hermgt::render_text(fam);
      }
      return write_output(body, out_path, start);
    }
    if (gram_cmd->parsed()) {
      hermgt::GTBuilder builder(budget);
      const hermgt::SpaceDescriptor d{n, a, b, r};
      d.validate();
      const Json body = hermgt::to_json(hermgt::gram(builder.basis(d)));
      return write_output(body.dump(2) + "\n", out_path, start);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
