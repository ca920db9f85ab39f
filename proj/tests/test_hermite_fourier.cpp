#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "normix/hermite_fourier.hpp"
#include "normix/quadrature.hpp"
#include "normix/special.hpp"

using namespace normix;

TEST_CASE("closed-form parameters for the three reference (a, b) pairs") {
  // (a, b) = (1, 2): c = sqrt 3, b' = 2/sqrt 3
  auto f1 = inverse_fourier_gauss_hermite(1.0, 2.0, 3);
  CHECK(f1.gaussian_scale == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(f1.hermite_scale ==
        doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(std::abs(f1.coefficient) ==
        doctest::Approx(std::pow(3.0, 1.5)).epsilon(1e-13));

  // (a, b) = (sqrt(2/3), 2): c = sqrt 5, b' = 3/sqrt 5
  auto f2 = inverse_fourier_gauss_hermite(std::sqrt(2.0 / 3.0), 2.0, 2);
  CHECK(f2.hermite_scale ==
        doctest::Approx(3.0 / std::sqrt(5.0)).epsilon(1e-13));
  CHECK(std::abs(f2.coefficient) ==
        doctest::Approx(5.0 / std::sqrt(2.0 / 3.0)).epsilon(1e-13));

  // (a, b) = (sqrt 2, 2): c = 1, b' = 1, |Q_k| = 1/sqrt 2
  auto f3 = inverse_fourier_gauss_hermite(std::sqrt(2.0), 2.0, 5);
  CHECK(f3.hermite_scale == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(f3.coefficient) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("closed form matches the numeric inverse transform") {
  const QuadratureSpec spec{30.0, 120, 16, 1e-10};
  for (int k : {1, 2, 3, 4, 7}) {
    const double a = 1.0, b = 2.0;
    const auto form = inverse_fourier_gauss_hermite(a, b, k);
    for (double u : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
      const auto numeric = inverse_fourier_numeric(
          [&](double t) {
            return std::complex<double>(phi(a * t) *
                                        hermite_normalized(k, b * t));
          },
          u, spec);
      const auto closed =
          form.coefficient * static_cast<std::complex<double>>(
                                 form.envelope(u));
      CHECK(std::abs(numeric - closed) < 1e-9);
    }
  }
}

TEST_CASE("precondition b > a > 0 is enforced") {
  CHECK_THROWS_AS(inverse_fourier_gauss_hermite(2.0, 2.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(inverse_fourier_gauss_hermite(3.0, 2.0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(inverse_fourier_gauss_hermite(-1.0, 2.0, 1),
                  std::invalid_argument);
}

TEST_CASE("perturbation evaluation and symmetry") {
  Perturbation v{3, 2.5, 1.0, 2.0};
  CHECK(v(1.3) == doctest::Approx(2.5 * phi(1.3) *
                                  hermite_normalized(3, 2.6))
                      .epsilon(1e-14));
  // odd order => odd function
  CHECK(v(-1.3) == doctest::Approx(-v(1.3)).epsilon(1e-14));
  CHECK(v(0.0) == doctest::Approx(0.0));
}
