#pragma once

#include <cstdint>
#include <functional>

#include "normix/quadrature.hpp"
#include "normix/rng.hpp"

namespace normix {

// int (f - g)^2
double l2_sq(const RealFn& f, const RealFn& g, const QuadratureSpec& spec = {});

// int (sqrt f - sqrt g)^2; throws on a negative density value.
double hellinger_sq(const RealFn& f, const RealFn& g,
                    const QuadratureSpec& spec = {});

// int (f - g)^2 / f; nodes where f underflows contribute via the caller's
// tail accounting (treated as zero here).
double chi_sq(const RealFn& f, const RealFn& g,
              const QuadratureSpec& spec = {});

struct SampleableDensity {
  std::function<double(double)> pdf;
  std::function<double(RngStream&)> draw;
};

struct AffinityEstimate {
  double estimate = 0.0;  // testing affinity ||P_f^n ^ P_g^n||_1
  double stderr_ = 0.0;
  // per-direction estimates; must agree within joint error bars
  double forward = 0.0;
  double backward = 0.0;
  long n = 0;
  int reps = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo estimate of the testing affinity between n-fold products,
// via E_f[(1 - prod g/f)_+] averaged over both sampling directions.
// Likelihood ratios accumulate in log space. Bit-stable for a given seed.
AffinityEstimate affinity_mc(const SampleableDensity& f,
                             const SampleableDensity& g, long n, int reps,
                             std::uint64_t seed);

}  // namespace normix
