#ifndef HERMGT_VERIFY_HPP
#define HERMGT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "hermgt/io.hpp"

namespace hermgt {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Machine- and human-readable run summary. The JSON and text renderings agree
/// on verdicts and carry no timing, so output is byte-identical across runs;
/// timing is reported separately on stderr by the CLI.
struct RunReport {
  std::string command;
  Json payload = Json::object();
  std::vector<CheckResult> checks;

  bool pass() const;
  Json to_json() const;
  std::string to_text() const;
};

// p == s * q for a single nonzero scalar s; nullopt when q == 0 or not
// proportional.
std::optional<GaussianRational> proportionality_scalar(const SpinorPolynomial& p,
                                                       const SpinorPolynomial& q);

// The grade-1 closed-form family of M^{(1)}_{a,b}(C^2), labeled by mu and
// ordered mu = a+1 down to -b.
BasisFamily closed_form_family(int a, int b);

// Theorem-3 roundtrip: sums the CK extensions of a deterministic nonzero
// family of initial data and compares the restrictions of M and of its pure
// z_n / zbar_n derivatives against the data with the correction terms.
CheckResult ck_roundtrip_check(GTBuilder& builder, const SpaceDescriptor& target);

// Individual family checks used by `verify`.
CheckResult count_check(GTBuilder& builder, const SpaceDescriptor& d);
CheckResult hmono_check(GTBuilder& builder, const SpaceDescriptor& d);
CheckResult gram_check(GTBuilder& builder, const SpaceDescriptor& d);
CheckResult labels_check(GTBuilder& builder, const SpaceDescriptor& d);
CheckResult lattice_check_result(const SpaceDescriptor& d);
CheckResult closedform_check(GTBuilder& builder, const SpaceDescriptor& d);

struct VerifyOptions {
  std::vector<std::string> checks;  // empty = all applicable
  long budget = 200000;
};

RunReport cmd_dims(int n, int a, int b, int r, bool with_oracle, long budget);
RunReport cmd_verify(int n, int a, int b, int r, const VerifyOptions& opts);
RunReport cmd_appell(int a_max, int b_max);
RunReport cmd_monogenic(int n, int k, bool verify, bool with_oracle, long budget);

}  // namespace hermgt

#endif  // HERMGT_VERIFY_HPP
