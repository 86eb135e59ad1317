#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermgt/verify.hpp"
#include "test_util.hpp"

using namespace hermgt;
using hermgt::testutil::poly;
using hermgt::testutil::random_poly;

TEST_CASE("gaussian rational json round trip") {
  const GaussianRational x(make_rational(-5, 6), make_rational(7, 2));
  const Json j = to_json(x);
  CHECK(j.at("re") == "-5/6");
  CHECK(j.at("im") == "7/2");
  CHECK(gaussian_from_json(j) == x);
}

TEST_CASE("polynomial json round trip is the identity") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const SpinorPolynomial p = random_poly(rng, 3, 3);
    CHECK(polynomial_from_json(to_json(p)) == p);
  }
  // canonical ordering makes serialization deterministic under permuted builds
  SpinorPolynomial q1(2), q2(2);
  q1.add_term(Monomial{{1, 0}, {0, 0}, {1}}, GaussianRational(1));
  q1.add_term(Monomial{{0, 1}, {0, 0}, {2}}, GaussianRational(2));
  q2.add_term(Monomial{{0, 1}, {0, 0}, {2}}, GaussianRational(2));
  q2.add_term(Monomial{{1, 0}, {0, 0}, {1}}, GaussianRational(1));
  CHECK(to_json(q1).dump() == to_json(q2).dump());
}

TEST_CASE("family json round trip and determinism across builders") {
  GTBuilder b1, b2;
  for (const SpaceDescriptor d :
       {SpaceDescriptor{2, 1, 1, 1}, SpaceDescriptor{2, 0, 2, 0}, SpaceDescriptor{3, 1, 1, 2}}) {
    const BasisFamily& fam = b1.basis(d);
    const BasisFamily parsed = family_from_json(to_json(fam));
    CHECK(parsed.descriptor == d);
    REQUIRE(parsed.members.size() == fam.members.size());
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
      CHECK(parsed.members[i].first == fam.members[i].first);
      CHECK(parsed.members[i].second == fam.members[i].second);
    }
    CHECK(to_json(b1.basis(d)).dump() == to_json(b2.basis(d)).dump());
  }
}

TEST_CASE("text rendering of the b = 1 anti-holomorphic family") {
  GTBuilder builder;
  const std::string text = render_text(builder.basis({2, 0, 1, 0}));
  CHECK(text == "(0,-1)(0) : (1) zb2 I\n(0,-1)(-1) : (1) zb1 I\n");
}

TEST_CASE("latex rendering smoke") {
  const std::string tex = render_latex(poly(2, {{{2, 0}, {0, 1}, {1, 2},
                                                GaussianRational(make_rational(-1, 2))}}));
  CHECK(tex.find("z_{1}^{2}") != std::string::npos);
  CHECK(tex.find("\\bar{z}_{2}") != std::string::npos);
  CHECK(tex.find("f^{\\dagger}_{1}") != std::string::npos);
  CHECK(tex.find("-1/2") != std::string::npos);
}

TEST_CASE("gram matrix json") {
  GTBuilder builder;
  const Json g = to_json(gram(builder.basis({2, 0, 1, 1})));
  CHECK(g.at("entries").size() == 3);
  CHECK(g.at("entries")[0][0] == "1");
  CHECK(g.at("entries")[0][1] == "0");
}

TEST_CASE("run reports agree between text and json verdicts") {
  const RunReport rep = cmd_dims(3, 1, 1, 1, true, 20000);
  CHECK(rep.pass());
  const Json j = rep.to_json();
  CHECK(j.at("pass").get<bool>() == rep.pass());
  CHECK(j.at("payload").at("dim") == "15");
  CHECK(j.at("payload").at("oracle") == "15");
  const std::string text = rep.to_text();
  CHECK(text.find("PASS") != std::string::npos);
  // byte-identical reruns
  CHECK(cmd_dims(3, 1, 1, 1, true, 20000).to_json().dump() == j.dump());
  CHECK(cmd_dims(3, 1, 1, 1, true, 20000).to_text() == text);
}

TEST_CASE("verify command aggregates checks") {
  VerifyOptions opts;
  opts.checks = {"hmono", "gram", "count"};
  const RunReport rep = cmd_verify(2, 2, 1, 1, opts);
  CHECK(rep.pass());
  CHECK(rep.checks.size() == 3);
  CHECK(rep.checks[2].detail.find("5 members") != std::string::npos);
  CHECK_THROWS_AS(cmd_verify(2, 1, 1, 1, VerifyOptions{{"nope"}, 1000}), std::invalid_argument);
}

TEST_CASE("monogenic command") {
  const RunReport rep = cmd_monogenic(2, 1, true, true, 20000);
  CHECK(rep.pass());
  CHECK(rep.payload.at("count") == "12");
  CHECK(rep.payload.at("oracle") == "12");
}
