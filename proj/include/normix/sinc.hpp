#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "normix/quadrature.hpp"
#include "normix/rng.hpp"

namespace normix {

struct SampleSet {
  long n = 0;
  std::uint64_t seed = 0;
  std::vector<double> values;
  double acceptance_rate = 1.0;
  std::string source;
};

// Two-stage mixture sampling: u ~ mixing density (rejection against
// envelope_factor * base Gaussian), then x = u + standard normal draw.
// Throws if the rejection loop exceeds 1e6 proposals for one draw.
SampleSet sample_mixture(const std::function<double(double)>& mixing_pdf,
                         double base_variance, double envelope_factor, long n,
                         std::uint64_t seed, std::string source = "mixture");

// Plain Gaussian N(0, 1 + base_variance) target (all-zeros vertex).
SampleSet sample_gaussian_mixture(double base_variance, long n,
                                  std::uint64_t seed);

// sin(u)/(pi u) with the removable singularity at 0.
double sinc_kernel(double u);

// f_hat(x) = (1/(n h)) sum K((X_j - x)/h).
double sinc_estimate(std::span<const double> samples, double x, double h);

// Same estimator on a whole grid, with sin/cos of X_j/h precomputed.
std::vector<double> sinc_estimate_grid(std::span<const double> samples,
                                       std::span<const double> grid, double h);

struct RiskReport {
  long n = 0;
  int reps = 0;
  std::uint64_t seed = 0;
  double h = 0.0;
  double mise_mean = 0.0;
  double mise_stderr = 0.0;
  double variance_bound = 0.0;  // (1/(n h)) int K^2 = 1/(pi n h)
  double bias_sq_bound = 0.0;   // 2 exp(-1/(2 h^2)) / sqrt(2 pi)
  double ell_n = 0.0;           // sqrt(log n)/n
  double mean_mass = 0.0;       // average of int f_hat over the grid
};

// Monte Carlo MISE of the sinc estimator with h = 1/sqrt(log n) against the
// given target density. `sampler(rng, out)` fills `n` draws per replication.
RiskReport mise_mc(const std::function<double(double)>& target,
                   const std::function<void(RngStream&, std::vector<double>&)>&
                       sampler,
                   long n, int reps, std::uint64_t seed, double grid_half_width,
                   int grid_points = 4001, int threads = 0);

// Convenience: target f = phi_{1 + base_variance} with plain Gaussian mixing.
RiskReport mise_mc_gaussian(double base_variance, long n, int reps,
                            std::uint64_t seed, int threads = 0);

// min over the grid of (1/sqrt(2 pi)) exp(y^2/2) - |f*(x + i y)| where f*
// is the complexified mixture with the given mixing density.
double analytic_growth_margin(const std::function<double(double)>& mixing_pdf,
                              double y, std::span<const double> grid,
                              const QuadratureSpec& spec = {});

}  // namespace normix
