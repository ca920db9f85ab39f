#include "normix/family_l2.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "normix/rng.hpp"
#include "normix/special.hpp"

namespace normix {

Perturbation convolve_perturbation_with_phi(const Perturbation& v) {
  const double rho = v.rho;
  const double gamma = v.gamma;
  if (!(gamma > rho))
    throw std::invalid_argument(
        "closed-form convolution requires gamma > rho");
  // Fourier-side representation: phi(rho u) H_k(gamma u) is the inverse
  // transform of phi(a t) H_k(b t) up to Q_k, with a = 1/rho and b below.
  const double a = 1.0 / rho;
  const double b = gamma / (rho * std::sqrt(gamma * gamma - rho * rho));
  const double c = std::sqrt(b * b / (a * a) - 1.0);
  // Multiplying by phi(t) on the Fourier side tightens the Gaussian factor
  // to phi(a2 t); invert once more.
  const double a2 = std::sqrt(1.0 + 1.0 / (rho * rho));
  if (!(b > a2))
    throw std::invalid_argument("convolved form leaves the b > a regime");
  const double c2 = std::sqrt(b * b / (a2 * a2) - 1.0);
  Perturbation out;
  out.order = v.order;
  out.rho = 1.0 / a2;
  out.gamma = b / (a2 * a2 * c2);
  out.amplitude = v.amplitude * (a / a2) * std::pow(c2 / c, v.order);
  return out;
}

std::vector<int> L2FamilyConfig::orders() const {
  std::vector<int> ks(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) ks[static_cast<size_t>(i)] = 2 * i + 1;
  return ks;
}

double l2_envelope_constant(int k) { return 8.0 * std::pow(3.0, 0.5 * k); }

double l2_epsilon_nonneg_bound(int m) {
  return (1.0 / 16.0) * std::pow(3.0, -m + 0.5) * std::pow(m, -1.5);
}

double l2_split_M() { return std::sqrt(8.0 * std::log(9.0)); }

double l2_split_Cstar() {
  const double M = l2_split_M();
  return 2.0 * std::sqrt(2.0 * M_PI) * std::exp(0.5 * M * M);
}

L2FamilyConfig make_l2_family(int m, double epsilon, bool allow_unchecked) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  const double bound = l2_epsilon_nonneg_bound(m);
  L2FamilyConfig cfg;
  cfg.m = m;
  cfg.epsilon = epsilon;
  cfg.base_variance = static_cast<double>(m);
  cfg.checked = epsilon <= bound;
  if (!cfg.checked && !allow_unchecked)
    throw std::invalid_argument(
        "epsilon exceeds the nonnegativity bound; pass allow_unchecked to "
        "construct anyway");
  for (int k : cfg.orders()) {
    Perturbation v;
    v.order = k;
    v.rho = 1.0;
    v.gamma = 2.0 / std::sqrt(3.0);
    v.amplitude = kL2FamilyC * std::pow(3.0, 0.5 * k);
    cfg.perturbations.push_back(v);
    cfg.convolved.push_back(convolve_perturbation_with_phi(v));
  }
  return cfg;
}

L2FamilyConfig l2_schedule(long n, double c1) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (!(c1 > 0.0 && c1 < 1.0)) throw std::invalid_argument("c1 must be in (0,1)");
  int m = 1;
  for (int cand = 1; cand <= 50; ++cand) {
    const double lhs = std::pow(3.0, -2.0 * cand) / (cand * (double)cand);
    const double rhs = std::sqrt((double)cand) / (double)n;
    if (lhs >= rhs) m = cand;
  }
  const double eps_nonneg = l2_epsilon_nonneg_bound(m);
  const double eps2_nonneg = eps_nonneg * eps_nonneg;
  const double cstar = l2_split_Cstar();
  const double eps2_chi2 =
      c1 / ((double)n * std::sqrt((double)m) * 2.0 *
            (2.0 * M_PI * cstar + 64.0 / 3.0));
  const double eps2 = std::min(eps2_nonneg, eps2_chi2);
  L2FamilyConfig cfg = make_l2_family(m, std::sqrt(eps2));
  cfg.c1 = c1;
  cfg.eps2_nonneg_branch = eps2_nonneg;
  cfg.eps2_chi2_branch = eps2_chi2;
  return cfg;
}

static void check_vertex(const L2FamilyConfig& cfg, const BitVector& alpha) {
  if (alpha.size() != static_cast<size_t>(cfg.m))
    throw std::invalid_argument("bit vector length must equal m");
}

double pi_alpha(const L2FamilyConfig& cfg, const BitVector& alpha, double u) {
  check_vertex(cfg, alpha);
  if (!std::isfinite(u)) throw std::invalid_argument("u must be finite");
  double value = phi_var(u, cfg.base_variance);
  for (int i = 0; i < cfg.m; ++i)
    if (alpha[static_cast<size_t>(i)])
      value += cfg.epsilon * cfg.perturbations[static_cast<size_t>(i)](u);
  return value;
}

double f_alpha(const L2FamilyConfig& cfg, const BitVector& alpha, double x) {
  check_vertex(cfg, alpha);
  double value = phi_var(x, 1.0 + cfg.base_variance);
  for (int i = 0; i < cfg.m; ++i)
    if (alpha[static_cast<size_t>(i)])
      value += cfg.epsilon * cfg.convolved[static_cast<size_t>(i)](x);
  return value;
}

double f_alpha_oracle(const L2FamilyConfig& cfg, const BitVector& alpha,
                      double x, const QuadratureSpec& spec) {
  check_vertex(cfg, alpha);
  return convolve_numeric([](double t) { return phi(t); },
                          [&](double u) { return pi_alpha(cfg, alpha, u); },
                          x, spec);
}

double l2_separation(const L2FamilyConfig& cfg, const BitVector& alpha,
                     const BitVector& beta, const QuadratureSpec& spec) {
  check_vertex(cfg, alpha);
  check_vertex(cfg, beta);
  return integrate_real(
      [&](double x) {
        const double d = f_alpha(cfg, alpha, x) - f_alpha(cfg, beta, x);
        return d * d;
      },
      spec);
}

Chi2Report chi2_adjacent_check(const L2FamilyConfig& cfg, long n,
                               const QuadratureSpec& spec) {
  Chi2Report report;
  report.threshold = cfg.c1 / (double)n;
  report.proof_bound = 2.0 * std::sqrt((double)cfg.m) * cfg.epsilon *
                       cfg.epsilon *
                       (2.0 * M_PI * l2_split_Cstar() + 64.0 / 3.0);
  BitVector alpha(static_cast<size_t>(cfg.m), 0);
  for (int i = 0; i < cfg.m; ++i) {
    alpha[static_cast<size_t>(i)] = 1;
    const double value = integrate_real(
        [&](double x) {
          const double fa = f_alpha(cfg, alpha, x);
          const double diff =
              cfg.epsilon * cfg.convolved[static_cast<size_t>(i)](x);
          if (fa < 1e-300) return 0.0;  // tail mass accounted by envelope
          return diff * diff / fa;
        },
        spec);
    report.per_coordinate.push_back(value);
    if (value > report.threshold) report.all_within = false;
    alpha[static_cast<size_t>(i)] = 0;
  }
  return report;
}

PositivityReport l2_positivity_check(const L2FamilyConfig& cfg,
                                     std::uint64_t seed) {
  PositivityReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  const double L = 8.0 * std::sqrt(cfg.base_variance);
  const int grid_points = 4001;

  std::vector<BitVector> vertices;
  if (cfg.m <= 6) {
    for (int code = 0; code < (1 << cfg.m); ++code) {
      BitVector v(static_cast<size_t>(cfg.m));
      for (int i = 0; i < cfg.m; ++i) v[static_cast<size_t>(i)] = (code >> i) & 1;
      vertices.push_back(std::move(v));
    }
  } else {
    report.exhaustive = false;
    vertices.emplace_back(static_cast<size_t>(cfg.m), 1);  // all-ones worst case
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
      const double margin = pi_alpha(cfg, v, u) - 0.5 * phi_var(u, cfg.base_variance);
      if (margin < report.min_margin) {
        report.min_margin = margin;
        report.worst_u = u;
        report.worst_vertex = v;
      }
    }
  }
  report.pass = report.min_margin >= 0.0;
  return report;
}

}  // namespace normix
