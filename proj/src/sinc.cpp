#include "normix/sinc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "normix/special.hpp"

namespace normix {

SampleSet sample_mixture(const std::function<double(double)>& mixing_pdf,
                         double base_variance, double envelope_factor, long n,
                         std::uint64_t seed, std::string source) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(envelope_factor >= 1.0))
    throw std::invalid_argument("envelope_factor must be >= 1");
  SampleSet set;
  set.n = n;
  set.seed = seed;
  set.source = std::move(source);
  set.values.reserve(static_cast<size_t>(n));
  RngStream rng(seed);
  const double sd = std::sqrt(base_variance);
  long proposals = 0;
  for (long i = 0; i < n; ++i) {
    long tries = 0;
    double u = 0.0;
    for (;;) {
      if (++tries > 1000000)
        throw std::runtime_error("rejection envelope appears broken");
      u = sd * rng.normal();
      const double envelope = envelope_factor * phi_var(u, base_variance);
      const double target = mixing_pdf(u);
      if (target < 0.0)
        throw std::domain_error("negative mixing density during sampling");
      if (target > envelope * (1.0 + 1e-12))
        throw std::runtime_error("mixing density exceeds rejection envelope");
      if (rng.uniform() * envelope <= target) break;
    }
    proposals += tries;
    set.values.push_back(u + rng.normal());
  }
  set.acceptance_rate = static_cast<double>(n) / static_cast<double>(proposals);
  return set;
}

SampleSet sample_gaussian_mixture(double base_variance, long n,
                                  std::uint64_t seed) {
  SampleSet set;
  set.n = n;
  set.seed = seed;
  set.source = "gaussian";
  set.values.reserve(static_cast<size_t>(n));
  RngStream rng(seed);
  const double sd = std::sqrt(1.0 + base_variance);
  for (long i = 0; i < n; ++i) set.values.push_back(sd * rng.normal());
  return set;
}

double sinc_kernel(double u) {
  if (std::fabs(u) < 1e-8) return (1.0 - u * u / 6.0) / M_PI;
  return std::sin(u) / (M_PI * u);
}

double sinc_estimate(std::span<const double> samples, double x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  double sum = 0.0;
  for (double xj : samples) sum += sinc_kernel((xj - x) / h);
  return sum / (static_cast<double>(samples.size()) * h);
}

std::vector<double> sinc_estimate_grid(std::span<const double> samples,
                                       std::span<const double> grid, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  const size_t n = samples.size();
  std::vector<double> s(n), c(n);
  for (size_t j = 0; j < n; ++j) {
    s[j] = std::sin(samples[j] / h);
    c[j] = std::cos(samples[j] / h);
  }
  std::vector<double> out(grid.size());
  for (size_t g = 0; g < grid.size(); ++g) {
    const double x = grid[g];
    const double sx = std::sin(x / h);
    const double cx = std::cos(x / h);
    double sum = 0.0;
    for (size_t j = 0; j < n; ++j) {
      const double dx = samples[j] - x;
      if (std::fabs(dx) < 1e-8 * h) {
        const double u = dx / h;
        sum += (1.0 - u * u / 6.0) / h;
      } else {
        // sin((X_j - x)/h) expanded to reuse the precomputed terms
        sum += (s[j] * cx - c[j] * sx) / dx;
      }
    }
    out[g] = sum / (M_PI * static_cast<double>(n));
  }
  return out;
}

// Composite Simpson over a uniform grid with an odd point count.
static double simpson(std::span<const double> values, double step) {
  const size_t n = values.size();
  double sum = values[0] + values[n - 1];
  for (size_t i = 1; i + 1 < n; ++i) sum += values[i] * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * step / 3.0;
}

RiskReport mise_mc(const std::function<double(double)>& target,
                   const std::function<void(RngStream&, std::vector<double>&)>&
                       sampler,
                   long n, int reps, std::uint64_t seed, double grid_half_width,
                   int grid_points, int threads) {
  if (reps < 10) throw std::invalid_argument("reps must be >= 10");
  if (grid_points % 2 == 0) ++grid_points;
  const double h = 1.0 / std::sqrt(std::log(static_cast<double>(n)));

  std::vector<double> grid(static_cast<size_t>(grid_points));
  std::vector<double> f_grid(static_cast<size_t>(grid_points));
  const double step = 2.0 * grid_half_width / (grid_points - 1);
  for (int g = 0; g < grid_points; ++g) {
    grid[static_cast<size_t>(g)] = -grid_half_width + step * g;
    f_grid[static_cast<size_t>(g)] = target(grid[static_cast<size_t>(g)]);
  }

  std::vector<double> mise(static_cast<size_t>(reps));
  std::vector<double> mass(static_cast<size_t>(reps));
  auto run_rep = [&](int r) {
    RngStream rng = RngStream::substream(seed, static_cast<std::uint64_t>(r));
    std::vector<double> samples;
    samples.reserve(static_cast<size_t>(n));
    sampler(rng, samples);
    const auto fhat = sinc_estimate_grid(samples, grid, h);
    std::vector<double> sq(fhat.size());
    for (size_t g = 0; g < fhat.size(); ++g) {
      const double d = fhat[g] - f_grid[g];
      sq[g] = d * d;
    }
    mise[static_cast<size_t>(r)] = simpson(sq, step);
    mass[static_cast<size_t>(r)] = simpson(fhat, step);
  };

  if (threads <= 0)
    threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (threads > reps) threads = reps;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t]() {
      for (int r = t; r < reps; r += threads) run_rep(r);
    });
  for (auto& th : pool) th.join();

  // fixed-order reduction, independent of the thread count
  double mean = 0.0, mean_mass = 0.0;
  for (int r = 0; r < reps; ++r) {
    mean += mise[static_cast<size_t>(r)];
    mean_mass += mass[static_cast<size_t>(r)];
  }
  mean /= reps;
  mean_mass /= reps;
  double var = 0.0;
  for (int r = 0; r < reps; ++r) {
    const double d = mise[static_cast<size_t>(r)] - mean;
    var += d * d;
  }
  var /= (reps - 1);

  RiskReport report;
  report.n = n;
  report.reps = reps;
  report.seed = seed;
  report.h = h;
  report.mise_mean = mean;
  report.mise_stderr = std::sqrt(var / reps);
  report.variance_bound = 1.0 / (M_PI * static_cast<double>(n) * h);
  report.bias_sq_bound =
      2.0 * std::exp(-0.5 / (h * h)) / std::sqrt(2.0 * M_PI);
  report.ell_n = std::sqrt(std::log(static_cast<double>(n))) /
                 static_cast<double>(n);
  report.mean_mass = mean_mass;
  return report;
}

RiskReport mise_mc_gaussian(double base_variance, long n, int reps,
                            std::uint64_t seed, int threads) {
  const double total_var = 1.0 + base_variance;
  const double half_width = 8.0 + 8.0 * std::sqrt(total_var);
  return mise_mc(
      [total_var](double x) { return phi_var(x, total_var); },
      [n, total_var](RngStream& rng, std::vector<double>& out) {
        const double sd = std::sqrt(total_var);
        for (long i = 0; i < n; ++i) out.push_back(sd * rng.normal());
      },
      n, reps, seed, half_width, 4001, threads);
}

double analytic_growth_margin(const std::function<double(double)>& mixing_pdf,
                              double y, std::span<const double> grid,
                              const QuadratureSpec& spec) {
  if (std::fabs(y) > 6.0)
    throw std::invalid_argument("growth check restricted to |y| <= 6");
  const double norm = 1.0 / std::sqrt(2.0 * M_PI);
  const double bound = norm * std::exp(0.5 * y * y);
  double min_margin = std::numeric_limits<double>::infinity();
  for (double x : grid) {
    // exp(-(x + iy - u)^2 / 2) = exp((y^2 - (x-u)^2)/2) * exp(-i y (x-u))
    const double re = integrate_real(
        [&](double u) {
          const double d = x - u;
          return std::exp(0.5 * (y * y - d * d)) * std::cos(y * d) *
                 mixing_pdf(u);
        },
        spec);
    const double im = integrate_real(
        [&](double u) {
          const double d = x - u;
          return -std::exp(0.5 * (y * y - d * d)) * std::sin(y * d) *
                 mixing_pdf(u);
        },
        spec);
    const double modulus = norm * std::hypot(re, im);
    min_margin = std::min(min_margin, bound - modulus);
  }
  return min_margin;
}

}  // namespace normix
