#pragma once

#include <complex>

#include "normix/special.hpp"

namespace normix {

// Closed form of the inverse Fourier transform of t -> phi(a t) H_k(b t)
// for b > a > 0:
//   u -> Q_k phi(u/a) H_k(b' u),  Q_k = (i c)^k / a,
//   c = sqrt(b^2/a^2 - 1),  b' = b / (a^2 c).
struct GaussHermiteForm {
  int order = 0;
  std::complex<double> coefficient;  // Q_k
  double gaussian_scale = 1.0;       // the "a" in phi(u/a)
  double hermite_scale = 1.0;        // b'

  // Real-valued evaluation with the H_k/sqrt(k!) normalization; the i^k in
  // Q_k is kept in `coefficient`, so this uses |Q_k| * sign conventions of
  // the caller. Evaluates phi(u/a) * hermite_normalized(k, b'ated u).
  double envelope(double u) const {
    return phi(u / gaussian_scale) *
           hermite_normalized(order, hermite_scale * u);
  }
};

GaussHermiteForm inverse_fourier_gauss_hermite(double a, double b, int k);

// Perturbation v(u) = amplitude * phi(rho u) * (H_k / sqrt(k!))(gamma u).
// The amplitude carries the 1/sqrt(k!)-normalized coefficient so that no
// factorial is ever formed.
struct Perturbation {
  int order = 1;
  double amplitude = 0.0;
  double rho = 1.0;
  double gamma = 1.0;

  double operator()(double u) const {
    return amplitude * phi(rho * u) * hermite_normalized(order, gamma * u);
  }
};

}  // namespace normix
