#pragma once

#include <cmath>

namespace normix {

// Cramer envelope constant: |H_k(t)| <= kappa * sqrt(k!) * exp(t^2/4).
inline constexpr double kCramerKappa = 1.086435;

// Orders above this are rejected; the schedules never exceed ~2*ceil(log n).
inline constexpr int kMaxHermiteOrder = 200;

// Probabilists' Hermite polynomial H_k(t) divided by sqrt(k!), computed by
// the normalized three-term recurrence; no intermediate factorial is formed.
double hermite_normalized(int k, double t);

// kappa * exp(t^2/4) - |hermite_normalized(k, t)|; nonnegative for all inputs.
double cramer_margin(int k, double t);

// Normal density with the given mean and variance.
double gaussian_pdf(double x, double mean, double variance);

// Standard normal density.
inline double phi(double x) {
  return std::exp(-0.5 * x * x) * 0.3989422804014326779;
}

// Zero-mean normal density with variance sigma2 (phi_{sigma^2}).
double phi_var(double x, double sigma2);

struct GaussianDensity {
  double mean = 0.0;
  double variance = 1.0;
  double operator()(double x) const { return gaussian_pdf(x, mean, variance); }
};

}  // namespace normix
