#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hermgt/spinor.hpp"

using namespace hermgt;

namespace {

std::vector<SpinorIndex> all_states(int n) {
  std::vector<SpinorIndex> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    SpinorIndex k;
    for (int j = 1; j <= n; ++j) {
      if (mask & (1 << (j - 1))) k.push_back(j);
    }
    out.push_back(k);
  }
  return out;
}

}  // namespace

TEST_CASE("creation and annihilation on pinned states") {
  const SpinorVector vac = SpinorVector::vacuum(2);
  CHECK(create(1, vac) == SpinorVector::basis_state(2, {1}));
  CHECK(create(1, SpinorVector::basis_state(2, {1})).is_zero());
  CHECK(annihilate(1, SpinorVector::basis_state(2, {1})) == vac);
  CHECK(annihilate(2, SpinorVector::basis_state(2, {1})).is_zero());
  CHECK(annihilate(1, SpinorVector::basis_state(2, {1, 2})) ==
        SpinorVector::basis_state(2, {2}));
  CHECK(annihilate(1, vac).is_zero());
  // Sign rule (-1)^{#{k in K : k < j}}: f+_2 f+_1 I = -f+_1 f+_2 I.
  CHECK(create(2, SpinorVector::basis_state(2, {1})) ==
        GaussianRational(-1) * SpinorVector::basis_state(2, {1, 2}));
  CHECK(create(1, SpinorVector::basis_state(2, {2})) == SpinorVector::basis_state(2, {1, 2}));
  CHECK_THROWS_AS(create(3, vac), std::out_of_range);
  CHECK_THROWS_AS(annihilate(0, vac), std::out_of_range);
}

TEST_CASE("anticommutation relations hold state by state") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& k : all_states(n)) {
      const SpinorVector v = SpinorVector::basis_state(n, k);
      for (int j = 1; j <= n; ++j) {
        for (int l = 1; l <= n; ++l) {
          CHECK((annihilate(j, annihilate(l, v)) + annihilate(l, annihilate(j, v))).is_zero());
          CHECK((create(j, create(l, v)) + create(l, create(j, v))).is_zero());
          SpinorVector anti = annihilate(j, create(l, v)) + create(l, annihilate(j, v));
          if (j == l) {
            CHECK(anti == v);
          } else {
            CHECK(anti.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("euclidean generator relations") {
  for (int n = 1; n <= 3; ++n) {
    for (int alpha = 1; alpha <= 2 * n; ++alpha) {
      for (int beta = 1; beta <= 2 * n; ++beta) {
        const SpinOp ea = euclid_generator(alpha, n);
        const SpinOp eb = euclid_generator(beta, n);
        for (const auto& k : all_states(n)) {
          const SpinorVector v = SpinorVector::basis_state(n, k);
          const SpinorVector anti = ea(eb(v)) + eb(ea(v));
          if (alpha == beta) {
            CHECK(anti == GaussianRational(-2) * v);
          } else {
            CHECK(anti.is_zero());
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(euclid_generator(5, 2), std::out_of_range);
}

TEST_CASE("split and join of the last generator") {
  // split of state {2} (n=2): F0 = 0, F1 = I
  {
    const auto [f0, f1] = split_last(SpinorVector::basis_state(2, {2}));
    CHECK(f0.is_zero());
    CHECK(f1 == SpinorVector::vacuum(1));
  }
  // split of state {1} (n=2): F0 = {1}, F1 = 0
  {
    const auto [f0, f1] = split_last(SpinorVector::basis_state(2, {1}));
    CHECK(f0 == SpinorVector::basis_state(1, {1}));
    CHECK(f1.is_zero());
  }
  // split of {1,2}: factoring f+_2 to the left crosses f+_1, so F1 = -{1}
  {
    const auto [f0, f1] = split_last(SpinorVector::basis_state(2, {1, 2}));
    CHECK(f0.is_zero());
    CHECK(f1 == GaussianRational(-1) * SpinorVector::basis_state(1, {1}));
  }
}

TEST_CASE("join inverts split on every state and on combinations") {
  for (int n = 1; n <= 4; ++n) {
    SpinorVector v(n);
    int sign = 1;
    for (const auto& k : all_states(n)) {
      v.add(k, GaussianRational(make_rational(sign, 1 + static_cast<long>(k.size()))));
      sign = -sign;
    }
    const auto [f0, f1] = split_last(v);
    CHECK(join_last(f0, f1) == v);
    // v = F0 + f+_n F1 exactly
    SpinorVector recon(n);
    for (const auto& [k, c] : f0.coeffs()) recon.add(k, c);
    SpinorVector embedded(n);
    for (const auto& [k, c] : f1.coeffs()) embedded.add(k, c);
    recon += create(n, embedded);
    CHECK(recon == v);
  }
}

TEST_CASE("grade shifts") {
  for (const auto& k : all_states(3)) {
    const SpinorVector v = SpinorVector::basis_state(3, k);
    for (int j = 1; j <= 3; ++j) {
      const SpinorVector up = create(j, v);
      for (const auto& [l, c] : up.coeffs()) CHECK(l.size() == k.size() + 1);
      const SpinorVector down = annihilate(j, v);
      for (const auto& [l, c] : down.coeffs()) CHECK(l.size() == k.size() - 1);
    }
  }
}
