#include "normix/family_hellinger.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "normix/rng.hpp"
#include "normix/special.hpp"

namespace normix {

AbsorbParams absorb_transform(double sigma2, double rho, double gamma,
                              double coeff) {
  if (!(sigma2 > 0.0) || !(rho > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("absorb_transform parameters must be positive");
  if (rho * rho < 1.0 / sigma2 + 0.5 * gamma * gamma - 1e-12)
    throw std::invalid_argument(
        "absorb_transform requires rho^2 >= 1/sigma^2 + gamma^2/2");
  AbsorbParams p;
  p.sigma2 = sigma2;
  p.rho = rho;
  p.gamma = gamma;
  p.coeff = coeff;
  p.sigma2_t = 1.0 + 1.0 / (2.0 * sigma2 + 1.0);
  const double sigma_t = std::sqrt(p.sigma2_t);
  p.rho_t = std::sqrt(rho * rho + 1.0 - p.sigma2_t) / p.sigma2_t;
  p.gamma_t = gamma / p.sigma2_t;
  p.coeff_t =
      coeff * std::pow(2.0 * M_PI * (1.0 + sigma2), 0.25) / sigma_t;
  return p;
}

double absorb_identity_deviation(const AbsorbParams& params, int k,
                                 const std::vector<double>& grid,
                                 const QuadratureSpec& spec) {
  Perturbation v{k, params.coeff, params.rho, params.gamma};
  Perturbation vt{k, params.coeff_t, params.rho_t, params.gamma_t};
  const double denom_var = 1.0 + params.sigma2;
  double max_dev = 0.0;
  for (double x : grid) {
    const double denom = phi_var(x, denom_var);
    if (denom < 1e-300)
      throw std::domain_error("denominator underflow on identity grid");
    const double lhs =
        convolve_numeric([](double t) { return phi(t); },
                         [&](double u) { return v(u); }, x, spec) /
        std::sqrt(denom);
    const double rhs = convolve_numeric(
        [&](double t) { return phi_var(t, params.sigma2_t); },
        [&](double u) { return vt(u); }, x, spec);
    max_dev = std::max(max_dev, std::fabs(lhs - rhs));
  }
  return max_dev;
}

std::vector<int> HellingerFamilyConfig::orders() const {
  std::vector<int> ks(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) ks[static_cast<size_t>(i)] = 2 * i + 1;
  return ks;
}

double hellinger_coefficient(int k) {
  return std::pow(2.0, 1.25) * std::sqrt(M_PI) * std::pow(5.0, 0.5 * k);
}

double hellinger_epsilon_bound(int m) {
  return 1.0 /
         (2.0 * kCramerKappa * m * hellinger_coefficient(2 * m - 1));
}

HellingerFamilyConfig make_hellinger_family(int m, double epsilon,
                                            bool allow_unchecked) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  HellingerFamilyConfig cfg;
  cfg.m = m;
  cfg.epsilon = epsilon;
  cfg.degenerate = (m == 0);
  cfg.checked = cfg.degenerate || epsilon <= hellinger_epsilon_bound(m);
  if (!cfg.checked && !allow_unchecked)
    throw std::invalid_argument(
        "epsilon exceeds the sandwich bound; pass allow_unchecked to "
        "construct anyway");
  for (int k : cfg.orders()) {
    Perturbation v;
    v.order = k;
    v.rho = std::sqrt(3.0);
    v.gamma = 4.0 / std::sqrt(5.0);
    v.amplitude = hellinger_coefficient(k);
    cfg.perturbations.push_back(v);
    cfg.convolved.push_back(convolve_perturbation_with_phi(v));
  }
  return cfg;
}

HellingerFamilyConfig hellinger_schedule(long n) {
  if (n < 16) throw std::invalid_argument("n must be >= 16");
  const double budget = 4.0 * std::sqrt((double)n);
  int m = 0;
  for (int cand = 1; cand <= 60; ++cand) {
    if (6.0 * cand * std::pow(5.0, cand) <= budget) m = cand;
  }
  return make_hellinger_family(m, 1.0 / (4.0 * std::sqrt((double)n)));
}

static void check_vertex(const HellingerFamilyConfig& cfg,
                         const BitVector& alpha) {
  if (alpha.size() != static_cast<size_t>(cfg.m))
    throw std::invalid_argument("bit vector length must equal m");
}

double pi_alpha(const HellingerFamilyConfig& cfg, const BitVector& alpha,
                double u) {
  check_vertex(cfg, alpha);
  if (!std::isfinite(u)) throw std::invalid_argument("u must be finite");
  double value = phi(u);
  for (int i = 0; i < cfg.m; ++i)
    if (alpha[static_cast<size_t>(i)])
      value += cfg.epsilon * cfg.perturbations[static_cast<size_t>(i)](u);
  return value;
}

double f_alpha(const HellingerFamilyConfig& cfg, const BitVector& alpha,
               double x) {
  check_vertex(cfg, alpha);
  double value = phi_var(x, 2.0);
  for (int i = 0; i < cfg.m; ++i)
    if (alpha[static_cast<size_t>(i)])
      value += cfg.epsilon * cfg.convolved[static_cast<size_t>(i)](x);
  return value;
}

double f_alpha_oracle(const HellingerFamilyConfig& cfg, const BitVector& alpha,
                      double x, const QuadratureSpec& spec) {
  check_vertex(cfg, alpha);
  return convolve_numeric([](double t) { return phi(t); },
                          [&](double u) { return pi_alpha(cfg, alpha, u); },
                          x, spec);
}

SandwichReport sandwich_check(const HellingerFamilyConfig& cfg,
                              std::uint64_t seed) {
  SandwichReport report;
  report.lower_margin = std::numeric_limits<double>::infinity();
  report.upper_margin = std::numeric_limits<double>::infinity();
  const double L = 8.0;
  const int grid_points = 4001;

  std::vector<BitVector> vertices;
  if (cfg.m <= 6) {
    for (int code = 0; code < (1 << cfg.m); ++code) {
      BitVector v(static_cast<size_t>(cfg.m));
      for (int i = 0; i < cfg.m; ++i)
        v[static_cast<size_t>(i)] = (code >> i) & 1;
      vertices.push_back(std::move(v));
    }
  } else {
    report.exhaustive = false;
    vertices.emplace_back(static_cast<size_t>(cfg.m), 1);
    RngStream rng(seed);
    for (int s = 0; s < 64; ++s) {
      BitVector v(static_cast<size_t>(cfg.m));
      for (int i = 0; i < cfg.m; ++i)
        v[static_cast<size_t>(i)] = rng.uniform() < 0.5 ? 0 : 1;
      vertices.push_back(std::move(v));
    }
  }

  for (const auto& v : vertices) {
    for (int g = 0; g < grid_points; ++g) {
      const double u = -L + 2.0 * L * g / (grid_points - 1);
      const double base = phi(u);
      const double value = pi_alpha(cfg, v, u);
      const double lower = value - 0.5 * base;
      const double upper = 1.5 * base - value;
      if (lower < report.lower_margin) {
        report.lower_margin = lower;
        report.worst_u_lower = u;
        report.worst_vertex_lower = v;
      }
      if (upper < report.upper_margin) {
        report.upper_margin = upper;
        report.worst_u_upper = u;
        report.worst_vertex_upper = v;
      }
    }
  }
  report.pass = report.lower_margin >= 0.0 && report.upper_margin >= 0.0;
  return report;
}

HellingerPairReport hellinger_pair_check(const HellingerFamilyConfig& cfg,
                                         const BitVector& alpha,
                                         const BitVector& beta,
                                         const QuadratureSpec& spec) {
  check_vertex(cfg, alpha);
  check_vertex(cfg, beta);
  HellingerPairReport report;
  for (int i = 0; i < cfg.m; ++i)
    if (alpha[static_cast<size_t>(i)] != beta[static_cast<size_t>(i)])
      ++report.hamming;
  report.expected_weighted =
      2.0 * M_PI * cfg.epsilon * cfg.epsilon * report.hamming;
  report.weighted_l2 = integrate_real(
      [&](double x) {
        const double d = f_alpha(cfg, alpha, x) - f_alpha(cfg, beta, x);
        const double f0 = phi_var(x, 2.0);
        if (f0 < 1e-300) return 0.0;
        return d * d / f0;
      },
      spec);
  report.hellinger_sq = integrate_real(
      [&](double x) {
        const double fa = f_alpha(cfg, alpha, x);
        const double fb = f_alpha(cfg, beta, x);
        if (fa < 0.0 || fb < 0.0)
          throw std::domain_error("negative density in hellinger integrand");
        const double d = std::sqrt(fa) - std::sqrt(fb);
        return d * d;
      },
      spec);
  report.chi_sq = integrate_real(
      [&](double x) {
        const double fa = f_alpha(cfg, alpha, x);
        const double d = fa - f_alpha(cfg, beta, x);
        if (fa < 1e-300) return 0.0;
        return d * d / fa;
      },
      spec);
  return report;
}

}  // namespace normix
