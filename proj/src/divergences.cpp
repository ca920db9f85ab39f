#include "normix/divergences.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace normix {

double l2_sq(const RealFn& f, const RealFn& g, const QuadratureSpec& spec) {
  return integrate_real(
      [&](double x) {
        const double d = f(x) - g(x);
        return d * d;
      },
      spec);
}

double hellinger_sq(const RealFn& f, const RealFn& g,
                    const QuadratureSpec& spec) {
  return integrate_real(
      [&](double x) {
        const double fx = f(x);
        const double gx = g(x);
        if (fx < 0.0 || gx < 0.0)
          throw std::domain_error("negative density in hellinger_sq");
        const double d = std::sqrt(fx) - std::sqrt(gx);
        return d * d;
      },
      spec);
}

double chi_sq(const RealFn& f, const RealFn& g, const QuadratureSpec& spec) {
  return integrate_real(
      [&](double x) {
        const double fx = f(x);
        const double d = fx - g(x);
        if (fx < 1e-300) return 0.0;
        return d * d / fx;
      },
      spec);
}

// One-direction replication: log-space product of likelihood ratios over n
// draws from `from`, returning the (1 - ratio)_+ term.
static double tv_term(const SampleableDensity& from,
                      const SampleableDensity& to, long n, RngStream& rng) {
  double log_ratio = 0.0;
  for (long i = 0; i < n; ++i) {
    const double x = from.draw(rng);
    const double pf = from.pdf(x);
    const double pt = to.pdf(x);
    if (!(pf > 0.0))
      throw std::domain_error("sampled point has zero density under source");
    log_ratio += std::log(pt) - std::log(pf);
  }
  if (log_ratio >= 0.0) return 0.0;
  return 1.0 - std::exp(log_ratio);
}

AffinityEstimate affinity_mc(const SampleableDensity& f,
                             const SampleableDensity& g, long n, int reps,
                             std::uint64_t seed) {
  if (reps < 2) throw std::invalid_argument("reps must be >= 2");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<double> fwd(static_cast<size_t>(reps));
  std::vector<double> bwd(static_cast<size_t>(reps));
  for (int r = 0; r < reps; ++r) {
    RngStream sf = RngStream::substream(seed, static_cast<std::uint64_t>(r));
    fwd[static_cast<size_t>(r)] = tv_term(f, g, n, sf);
    RngStream sg = RngStream::substream(
        seed, static_cast<std::uint64_t>(reps + r));
    bwd[static_cast<size_t>(r)] = tv_term(g, f, n, sg);
  }
  auto mean_var = [](const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(xs.size() - 1);
    return std::pair<double, double>(mean, var);
  };
  const auto [mf, vf] = mean_var(fwd);
  const auto [mg, vg] = mean_var(bwd);
  AffinityEstimate est;
  est.forward = 1.0 - mf;
  est.backward = 1.0 - mg;
  est.estimate = 1.0 - 0.5 * (mf + mg);
  est.stderr_ = 0.5 * std::sqrt((vf + vg) / reps);
  est.n = n;
  est.reps = reps;
  est.seed = seed;
  return est;
}

}  // namespace normix
