#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "normix/family_l2.hpp"
#include "normix/special.hpp"

using namespace normix;

TEST_CASE("family constant and envelope/threshold formulas") {
  CHECK(kL2FamilyC ==
        doctest::Approx(std::sqrt(2.0) * std::pow(2.0 * M_PI, 0.75))
            .epsilon(1e-15));
  CHECK(l2_envelope_constant(1) ==
        doctest::Approx(8.0 * std::sqrt(3.0)).epsilon(1e-14));
  CHECK(l2_epsilon_nonneg_bound(1) ==
        doctest::Approx((1.0 / 16.0) / std::sqrt(3.0) ).epsilon(1e-14));
  CHECK(l2_split_M() * l2_split_M() ==
        doctest::Approx(8.0 * std::log(9.0)).epsilon(1e-14));
  CHECK(l2_split_Cstar() ==
        doctest::Approx(2.0 * std::sqrt(2.0 * M_PI) * 6561.0).epsilon(1e-12));
}

TEST_CASE("perturbation matches its defining formula") {
  const auto cfg = make_l2_family(2, 0.5 * l2_epsilon_nonneg_bound(2));
  // v_k(u) = C 3^{k/2} phi(u) h_k(2u/sqrt 3)
  for (double u : {-1.5, 0.3, 1.0}) {
    CHECK(cfg.perturbations[0](u) ==
          doctest::Approx(kL2FamilyC * std::sqrt(3.0) * phi(u) *
                          hermite_normalized(1, 2.0 * u / std::sqrt(3.0)))
              .epsilon(1e-13));
    CHECK(cfg.perturbations[1](u) ==
          doctest::Approx(kL2FamilyC * 3.0 * std::sqrt(3.0) * phi(u) *
                          hermite_normalized(3, 2.0 * u / std::sqrt(3.0)))
              .epsilon(1e-13));
  }
  CHECK(cfg.orders() == std::vector<int>{1, 3});
  // perturbations integrate to zero (odd functions)
  CHECK(integrate_real([&](double u) { return cfg.perturbations[1](u); }) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("convolution closed form: phi * v_k is k-independent up to order") {
  // phi * v_k = (C/sqrt 2) phi(x/sqrt 2) h_k(x)
  const auto cfg = make_l2_family(3, 0.5 * l2_epsilon_nonneg_bound(3));
  for (size_t i = 0; i < 3; ++i) {
    const auto& w = cfg.convolved[i];
    CHECK(w.rho == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(w.gamma == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(w.amplitude ==
          doctest::Approx(kL2FamilyC / std::sqrt(2.0)).epsilon(1e-12));
  }
  // each convolved perturbation has squared norm 2 pi
  for (size_t i = 0; i < 3; ++i) {
    const double norm2 = integrate_real(
        [&](double x) { return cfg.convolved[i](x) * cfg.convolved[i](x); });
    CHECK(norm2 == doctest::Approx(2.0 * M_PI).epsilon(1e-11));
  }
  CHECK_THROWS_AS(
      convolve_perturbation_with_phi(Perturbation{1, 1.0, 2.0, 1.0}),
      std::invalid_argument);
}

TEST_CASE("schedule reproduces the worked example at n = 10^4") {
  const auto cfg = l2_schedule(10000);
  CHECK(cfg.m == 2);
  CHECK(cfg.checked);
  CHECK(cfg.eps2_nonneg_branch > 0.0);
  CHECK(cfg.eps2_chi2_branch > 0.0);
  CHECK(cfg.epsilon * cfg.epsilon ==
        doctest::Approx(std::min(cfg.eps2_nonneg_branch, cfg.eps2_chi2_branch))
            .epsilon(1e-14));
  CHECK(cfg.base_variance == doctest::Approx(2.0));
  // m grows with n, slowly
  CHECK(l2_schedule(100).m <= cfg.m);
  CHECK(l2_schedule(100000000).m >= cfg.m);
  CHECK_THROWS_AS(l2_schedule(1), std::invalid_argument);
  CHECK_THROWS_AS(l2_schedule(1000, 1.5), std::invalid_argument);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(make_l2_family(0, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(make_l2_family(2, -0.1), std::invalid_argument);
  // epsilon above the nonnegativity budget requires the explicit flag
  const double big = 2.0 * l2_epsilon_nonneg_bound(2);
  CHECK_THROWS_AS(make_l2_family(2, big), std::invalid_argument);
  const auto cfg = make_l2_family(2, big, /*allow_unchecked=*/true);
  CHECK_FALSE(cfg.checked);
}

TEST_CASE("mixing and mixture densities") {
  const auto cfg = make_l2_family(2, 0.5 * l2_epsilon_nonneg_bound(2));
  const BitVector zeros{0, 0}, ones{1, 1};
  CHECK(pi_alpha(cfg, zeros, 0.7) ==
        doctest::Approx(phi_var(0.7, 2.0)).epsilon(1e-14));
  CHECK(f_alpha(cfg, zeros, 0.7) ==
        doctest::Approx(phi_var(0.7, 3.0)).epsilon(1e-14));
  CHECK(integrate_real([&](double u) { return pi_alpha(cfg, ones, u); }) ==
        doctest::Approx(1.0).epsilon(1e-11));
  CHECK(integrate_real([&](double x) { return f_alpha(cfg, ones, x); }) ==
        doctest::Approx(1.0).epsilon(1e-11));
  CHECK_THROWS_AS(pi_alpha(cfg, BitVector{1}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(f_alpha(cfg, BitVector{1, 0, 1}, 0.0),
                  std::invalid_argument);
}

TEST_CASE("closed-form mixture agrees with the quadrature oracle") {
  const auto cfg = make_l2_family(3, 0.9 * l2_epsilon_nonneg_bound(3));
  const BitVector v{1, 0, 1};
  for (double x : {-3.0, 0.0, 2.5}) {
    CHECK(f_alpha(cfg, v, x) ==
          doctest::Approx(f_alpha_oracle(cfg, v, x)).epsilon(1e-9));
  }
}

TEST_CASE("separation identity for a hand-picked pair") {
  const auto cfg = make_l2_family(3, 0.9 * l2_epsilon_nonneg_bound(3));
  const BitVector a{1, 0, 1}, b{0, 1, 1};
  const double expected = 2.0 * M_PI * cfg.epsilon * cfg.epsilon * 2.0;
  CHECK(l2_separation(cfg, a, b) ==
        doctest::Approx(expected).epsilon(1e-9));
  CHECK(l2_separation(cfg, a, a) == doctest::Approx(0.0));
}

TEST_CASE("chi-square adjacency under the schedule") {
  const auto cfg = l2_schedule(1000);
  const auto rep = chi2_adjacent_check(cfg, 1000);
  CHECK(rep.per_coordinate.size() == static_cast<size_t>(cfg.m));
  CHECK(rep.all_within);
  for (double v : rep.per_coordinate) {
    CHECK(v >= 0.0);
    CHECK(v <= rep.threshold);
    CHECK(v <= rep.proof_bound);  // empirical value beats the proof constant
  }
}

TEST_CASE("positivity holds under the schedule and fails for huge epsilon") {
  const auto good = l2_schedule(10000);
  const auto rep = l2_positivity_check(good);
  CHECK(rep.pass);
  CHECK(rep.exhaustive);  // m = 2 here

  const auto bad =
      make_l2_family(2, 20.0 * l2_epsilon_nonneg_bound(2), true);
  CHECK_FALSE(l2_positivity_check(bad).pass);
}
