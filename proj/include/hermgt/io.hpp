#ifndef HERMGT_IO_HPP
#define HERMGT_IO_HPP

#include <json.hpp>

#include <string>

#include "hermgt/gt.hpp"

namespace hermgt {

// All machine output uses insertion-ordered JSON so runs are byte-identical.
using Json = nlohmann::ordered_json;

Json to_json(const GaussianRational& x);
GaussianRational gaussian_from_json(const Json& j);

Json to_json(const SpinorPolynomial& p);
SpinorPolynomial polynomial_from_json(const Json& j);

Json to_json(const SpaceDescriptor& d);
SpaceDescriptor descriptor_from_json(const Json& j);

Json to_json(const GTLabel& label);
GTLabel label_from_json(const Json& j);

Json to_json(const BasisFamily& family);
BasisFamily family_from_json(const Json& j);

// Gram entries rendered as compact Gaussian-rational strings.
Json to_json(const GramMatrix& g);

std::string render_text(const SpinorPolynomial& p);
std::string render_text(const BasisFamily& family);
std::string render_latex(const SpinorPolynomial& p);
std::string render_latex(const BasisFamily& family);

}  // namespace hermgt

#endif  // HERMGT_IO_HPP
