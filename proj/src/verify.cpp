#include "normix/verify.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>

#include "normix/family_hellinger.hpp"
#include "normix/family_l2.hpp"
#include "normix/hermite_fourier.hpp"
#include "normix/quadrature.hpp"
#include "normix/sinc.hpp"
#include "normix/special.hpp"

namespace normix {
namespace {

using cplx = std::complex<double>;

CheckResult make_check(std::string name, double margin, double tolerance) {
  CheckResult r;
  r.name = std::move(name);
  r.margin = margin;
  r.tolerance = tolerance;
  r.pass = margin >= tolerance;
  return r;
}

// max deviation converted to a margin against `tol`
CheckResult deviation_check(std::string name, double max_dev, double tol) {
  CheckResult r;
  r.name = std::move(name);
  r.margin = tol - max_dev;
  r.tolerance = tol;
  r.pass = r.margin >= 0.0;
  return r;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  std::vector<double> g(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i)
    g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  return g;
}

void check_hermite_recurrence(std::vector<CheckResult>& out) {
  double max_rel = 0.0;
  for (int k = 1; k < 40; ++k) {
    for (double t : uniform_grid(-10.0, 10.0, 201)) {
      const double lhs = hermite_normalized(k + 1, t) * std::sqrt(k + 1.0);
      const double rhs = t * hermite_normalized(k, t) -
                         std::sqrt(static_cast<double>(k)) *
                             hermite_normalized(k - 1, t);
      const double scale = std::max(1.0, std::fabs(rhs));
      max_rel = std::max(max_rel, std::fabs(lhs - rhs) / scale);
    }
  }
  out.push_back(deviation_check("hermite_recurrence", max_rel, 1e-12));
}

void check_hermite_orthonormality(std::vector<CheckResult>& out) {
  // mass of order-20 Hermite functions extends to |t| ~ 2 sqrt(21)
  const QuadratureSpec spec{18.0, 144, 16, 1e-12};
  double max_dev = 0.0;
  for (int j = 0; j <= 20; ++j) {
    for (int k = j; k <= 20; ++k) {
      const double inner = integrate_real(
          [&](double t) {
            return phi(t) * hermite_normalized(j, t) *
                   hermite_normalized(k, t);
          },
          spec);
      const double expected = j == k ? 1.0 : 0.0;
      max_dev = std::max(max_dev, std::fabs(inner - expected));
    }
  }
  out.push_back(deviation_check("hermite_orthonormality", max_dev, 1e-9));
}

void check_cramer_envelope(std::vector<CheckResult>& out) {
  double min_margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= 40; ++k)
    for (double t : uniform_grid(-12.0, 12.0, 10001))
      min_margin = std::min(min_margin, cramer_margin(k, t));
  out.push_back(
      make_check("cramer_envelope", min_margin + 1e-12, -1e-12));
}

void check_odd_symmetry(std::vector<CheckResult>& out) {
  double max_rel = 0.0;
  for (int k = 0; k <= 40; ++k) {
    for (double t : uniform_grid(0.1, 10.0, 100)) {
      const double a = hermite_normalized(k, -t);
      const double b = (k % 2 == 0 ? 1.0 : -1.0) * hermite_normalized(k, t);
      const double scale = std::max(1e-300, std::fabs(b));
      max_rel = std::max(max_rel, std::fabs(a - b) / scale);
    }
  }
  out.push_back(deviation_check("hermite_odd_symmetry", max_rel, 1e-14));
}

void check_plancherel(std::vector<CheckResult>& out) {
  const QuadratureSpec direct{12.0, 96, 16, 1e-12};
  const QuadratureSpec outer{10.0, 80, 16, 1e-12};
  const QuadratureSpec inner{12.0, 96, 16, 1e-12};
  std::vector<std::function<double(double)>> fns = {
      [](double u) { return phi(u); },
      [](double u) {
        return phi(u) * hermite_normalized(3, 2.0 * u / std::sqrt(3.0));
      },
      [](double u) {
        return phi(std::sqrt(3.0) * u) *
               hermite_normalized(5, 4.0 * u / std::sqrt(5.0));
      }};
  double max_dev = 0.0;
  for (const auto& f : fns) {
    const double norm_direct =
        integrate_real([&](double x) { return f(x) * f(x); }, direct);
    const double norm_fourier = integrate_real(
        [&](double t) { return std::norm(fourier_numeric(f, t, inner)); },
        outer);
    max_dev = std::max(max_dev, std::fabs(norm_direct - norm_fourier));
  }
  out.push_back(deviation_check("plancherel", max_dev, 1e-8));
}

double inversion_max_deviation(double a, double b,
                             const std::vector<int>& orders,
                             const std::vector<double>& grid) {
  const QuadratureSpec inner{20.0, 140, 16, 1e-12};
  double max_dev = 0.0;
  for (int k : orders) {
    const GaussHermiteForm form = inverse_fourier_gauss_hermite(a, b, k);
    for (double u : grid) {
      const cplx numeric = inverse_fourier_numeric(
          [&](double t) {
            return cplx(phi(a * t) * hermite_normalized(k, b * t), 0.0);
          },
          u, inner);
      const cplx closed = form.coefficient * form.envelope(u);
      max_dev = std::max(max_dev, std::abs(numeric - closed));
    }
  }
  return max_dev;
}

void check_gauss_hermite_inversion(std::vector<CheckResult>& out) {
  const std::vector<int> orders = {1, 3, 5, 7, 9};
  const auto grid = uniform_grid(-8.0, 8.0, 81);
  const std::vector<std::pair<double, double>> cases = {
      {1.0, 2.0}, {std::sqrt(2.0 / 3.0), 2.0}, {std::sqrt(2.0), 2.0}};
  for (const auto& [a, b] : cases) {
    const double dev = inversion_max_deviation(a, b, orders, grid);
    out.push_back(deviation_check(
        "hermite_inverse_fourier(a=" + std::to_string(a) + ")", dev, 1e-6));
  }
}

// psi_k(t) = phi(t) * (Fourier of v_k)(t) for the L2 family; the set must
// be orthonormal over odd orders.
void check_psi_orthonormality_l2(std::vector<CheckResult>& out, int max_order) {
  const QuadratureSpec outer{8.0, 64, 16, 1e-12};
  const QuadratureSpec inner{14.0, 96, 16, 1e-12};
  const auto nodes = quadrature_nodes(outer);

  std::vector<int> orders;
  for (int k = 1; k <= max_order; k += 2) orders.push_back(k);
  std::vector<std::vector<cplx>> psi(orders.size(),
                                     std::vector<cplx>(nodes.size()));
  for (size_t i = 0; i < orders.size(); ++i) {
    const int k = orders[i];
    Perturbation v{k, kL2FamilyC * std::pow(3.0, 0.5 * k), 1.0,
                   2.0 / std::sqrt(3.0)};
    for (size_t t = 0; t < nodes.size(); ++t)
      psi[i][t] = phi(nodes[t].first) *
                  fourier_numeric([&](double u) { return v(u); },
                                  nodes[t].first, inner);
  }
  double max_dev = 0.0;
  for (size_t i = 0; i < orders.size(); ++i) {
    for (size_t j = i; j < orders.size(); ++j) {
      cplx inner_prod = 0.0;
      for (size_t t = 0; t < nodes.size(); ++t)
        inner_prod += nodes[t].second * psi[i][t] * std::conj(psi[j][t]);
      const double expected = i == j ? 1.0 : 0.0;
      max_dev = std::max(max_dev, std::abs(inner_prod - expected));
    }
  }
  out.push_back(deviation_check("psi_orthonormality_l2", max_dev, 1e-8));
}

// psi_k(t) = F[phi_{4/3}](t) * F[v~_k](t) for the Hellinger family.
void check_psi_orthonormality_hellinger(std::vector<CheckResult>& out,
                                        int max_order) {
  const QuadratureSpec outer{8.0, 64, 16, 1e-12};
  const QuadratureSpec inner{12.0, 96, 16, 1e-12};
  const auto nodes = quadrature_nodes(outer);

  std::vector<int> orders;
  for (int k = 1; k <= max_order; k += 2) orders.push_back(k);
  std::vector<std::vector<cplx>> psi(orders.size(),
                                     std::vector<cplx>(nodes.size()));
  for (size_t i = 0; i < orders.size(); ++i) {
    const int k = orders[i];
    const AbsorbParams p = absorb_transform(
        1.0, std::sqrt(3.0), 4.0 / std::sqrt(5.0), hellinger_coefficient(k));
    Perturbation vt{k, p.coeff_t, p.rho_t, p.gamma_t};
    for (size_t t = 0; t < nodes.size(); ++t) {
      const double tt = nodes[t].first;
      const double weight =
          std::exp(-2.0 * tt * tt / 3.0) / std::sqrt(2.0 * M_PI);
      psi[i][t] = weight * fourier_numeric([&](double u) { return vt(u); },
                                           tt, inner);
    }
  }
  double max_dev = 0.0;
  for (size_t i = 0; i < orders.size(); ++i) {
    for (size_t j = i; j < orders.size(); ++j) {
      cplx inner_prod = 0.0;
      for (size_t t = 0; t < nodes.size(); ++t)
        inner_prod += nodes[t].second * psi[i][t] * std::conj(psi[j][t]);
      const double expected = i == j ? 1.0 : 0.0;
      max_dev = std::max(max_dev, std::abs(inner_prod - expected));
    }
  }
  out.push_back(
      deviation_check("psi_orthonormality_hellinger", max_dev, 1e-8));
}

void check_fourier_phi43(std::vector<CheckResult>& out) {
  const QuadratureSpec spec{14.0, 96, 16, 1e-12};
  double max_dev = 0.0;
  for (double t : uniform_grid(-5.0, 5.0, 41)) {
    const cplx numeric =
        fourier_numeric([](double x) { return phi_var(x, 4.0 / 3.0); }, t,
                        spec);
    const double expected =
        std::exp(-2.0 * t * t / 3.0) / std::sqrt(2.0 * M_PI);
    max_dev = std::max(max_dev, std::abs(numeric - cplx(expected, 0.0)));
  }
  out.push_back(deviation_check("fourier_phi_4_3", max_dev, 1e-10));
}

void check_absorption_reference(std::vector<CheckResult>& out) {
  const QuadratureSpec spec{16.0, 120, 16, 1e-12};
  const auto grid = uniform_grid(-6.0, 6.0, 25);
  double max_dev = 0.0;
  for (int k : {1, 3, 5, 7, 9}) {
    const AbsorbParams p = absorb_transform(
        1.0, std::sqrt(3.0), 4.0 / std::sqrt(5.0), hellinger_coefficient(k));
    max_dev = std::max(max_dev, absorb_identity_deviation(p, k, grid, spec));
  }
  out.push_back(deviation_check("absorption_identity", max_dev, 1e-6));
}

void check_vtilde_square_integrable(std::vector<CheckResult>& out) {
  const QuadratureSpec spec{16.0, 120, 16, 1e-12};
  double worst = 0.0;
  for (int k : {1, 3, 5, 7, 9, 11}) {
    const AbsorbParams p = absorb_transform(
        1.0, std::sqrt(3.0), 4.0 / std::sqrt(5.0), hellinger_coefficient(k));
    Perturbation vt{k, p.coeff_t, p.rho_t, p.gamma_t};
    const double norm2 = integrate_real(
        [&](double u) { return vt(u) * vt(u); }, spec);
    if (!std::isfinite(norm2)) worst = std::numeric_limits<double>::infinity();
    worst = std::max(worst, norm2);
  }
  CheckResult r;
  r.name = "vtilde_square_integrable";
  r.margin = std::isfinite(worst) ? 1.0 : -1.0;
  r.tolerance = 0.0;
  r.pass = std::isfinite(worst);
  out.push_back(r);
}

void check_l2_family(std::vector<CheckResult>& out, long n,
                     double epsilon_override) {
  L2FamilyConfig cfg = l2_schedule(n);
  if (epsilon_override > 0.0)
    cfg = make_l2_family(cfg.m, epsilon_override, /*allow_unchecked=*/true);

  // envelope chain |v_k| <= C_k phi(u/sqrt 3) <= C_k sqrt(m) pi_0. The outer
  // step needs m >= 3 (phi(u/sqrt 3) <= phi(u/sqrt m) fails pointwise for
  // m < 3), so evaluate it on a family with m >= 3; positivity of the
  // scheduled family is checked directly below.
  const L2FamilyConfig env_cfg =
      cfg.m >= 3 ? cfg
                 : make_l2_family(3, 0.9 * l2_epsilon_nonneg_bound(3));
  double margin1 = std::numeric_limits<double>::infinity();
  double margin2 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < env_cfg.m; ++i) {
    const int k = 2 * i + 1;
    const double ck = l2_envelope_constant(k);
    for (double u : uniform_grid(-10.0, 10.0, 2001)) {
      const double mid = ck * phi(u / std::sqrt(3.0));
      margin1 = std::min(
          margin1,
          mid - std::fabs(env_cfg.perturbations[static_cast<size_t>(i)](u)));
      margin2 = std::min(margin2,
                         ck * std::sqrt(static_cast<double>(env_cfg.m)) *
                                 phi_var(u, env_cfg.base_variance) -
                             mid);
    }
  }
  out.push_back(make_check("l2_envelope_chain_inner", margin1, 0.0));
  // at m = 3 the outer step is an exact equality, so allow rounding slack
  out.push_back(make_check("l2_envelope_chain_outer", margin2, -1e-12));

  const PositivityReport pos = l2_positivity_check(cfg);
  out.push_back(make_check("l2_positivity", pos.min_margin, 0.0));

  // mass of pi_alpha and f_alpha at the all-ones vertex
  const QuadratureSpec spec{40.0, 160, 16, 1e-10};
  BitVector ones(static_cast<size_t>(cfg.m), 1);
  const double pi_mass =
      integrate_real([&](double u) { return pi_alpha(cfg, ones, u); }, spec);
  out.push_back(deviation_check("l2_pi_alpha_mass", std::fabs(pi_mass - 1.0),
                                1e-9));
  const double f_mass =
      integrate_real([&](double x) { return f_alpha(cfg, ones, x); }, spec);
  out.push_back(
      deviation_check("l2_f_alpha_mass", std::fabs(f_mass - 1.0), 1e-9));

  // closed-form convolution against the quadrature oracle
  const L2FamilyConfig small = make_l2_family(
      3, 0.9 * l2_epsilon_nonneg_bound(3));
  BitVector v{1, 0, 1};
  double max_dev = 0.0;
  for (double x : {-3.0, 0.0, 2.5}) {
    max_dev = std::max(max_dev, std::fabs(f_alpha(small, v, x) -
                                          f_alpha_oracle(small, v, x, spec)));
  }
  out.push_back(deviation_check("l2_closed_form_vs_oracle", max_dev, 1e-8));

  // growth condition for the complexified mixture
  const auto growth_grid = uniform_grid(-8.0, 8.0, 33);
  for (double y : {0.0, 1.0, 2.0}) {
    const double margin = analytic_growth_margin(
        [&](double u) { return pi_alpha(cfg, ones, u); }, y, growth_grid,
        spec);
    out.push_back(make_check(
        "l2_growth_condition(y=" + std::to_string(static_cast<int>(y)) + ")",
        margin + 1e-9, -1e-9));
  }
}

void check_hellinger_family(std::vector<CheckResult>& out, long n) {
  const HellingerFamilyConfig cfg = hellinger_schedule(n);
  if (cfg.degenerate) {
    CheckResult r;
    r.name = "hellinger_schedule_degenerate";
    r.margin = -1.0;
    r.pass = false;
    out.push_back(r);
    return;
  }

  // |v_k| <= kappa C_k phi(u)
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < cfg.m; ++i) {
    const int k = 2 * i + 1;
    const double ck = hellinger_coefficient(k);
    for (double u : uniform_grid(-10.0, 10.0, 2001))
      margin = std::min(margin,
                        kCramerKappa * ck * phi(u) -
                            std::fabs(cfg.perturbations[static_cast<size_t>(i)](u)));
  }
  out.push_back(make_check("hellinger_envelope", margin, 0.0));

  const SandwichReport sandwich = sandwich_check(cfg);
  out.push_back(make_check("hellinger_sandwich_lower", sandwich.lower_margin,
                           0.0));
  out.push_back(make_check("hellinger_sandwich_upper", sandwich.upper_margin,
                           0.0));

  const QuadratureSpec spec{40.0, 160, 16, 1e-10};
  BitVector ones(static_cast<size_t>(cfg.m), 1);
  const double f_mass =
      integrate_real([&](double x) { return f_alpha(cfg, ones, x); }, spec);
  out.push_back(deviation_check("hellinger_f_alpha_mass",
                                std::fabs(f_mass - 1.0), 1e-9));

  // sub-Gaussian tail via the sandwich: pi_alpha(|u| > t) <= (3/2) tail of phi
  double tail_margin = std::numeric_limits<double>::infinity();
  for (double t : {2.0, 3.0, 4.0, 5.0}) {
    const double mass = integrate_real(
        [&](double u) {
          return std::fabs(u) > t ? pi_alpha(cfg, ones, u) : 0.0;
        },
        QuadratureSpec{10.0, 200, 16, 1e-10});
    tail_margin =
        std::min(tail_margin, 1.5 * std::erfc(t / std::sqrt(2.0)) - mass);
  }
  out.push_back(make_check("hellinger_subgaussian_tail", tail_margin, 0.0));

  const auto growth_grid = uniform_grid(-8.0, 8.0, 33);
  for (double y : {0.0, 1.0, 2.0}) {
    const double g = analytic_growth_margin(
        [&](double u) { return pi_alpha(cfg, ones, u); }, y, growth_grid,
        spec);
    out.push_back(make_check(
        "hellinger_growth_condition(y=" + std::to_string(static_cast<int>(y)) +
            ")",
        g + 1e-9, -1e-9));
  }
}

void check_kernel_fourier(std::vector<CheckResult>& out) {
  const QuadratureSpec spec{2000.0, 4000, 16, 1e-8};
  const double norm = 1.0 / std::sqrt(2.0 * M_PI);
  double max_dev = 0.0;
  for (double t : {0.0, 0.3, 0.6, 0.85, 1.15, 1.5, 2.0}) {
    const cplx value =
        fourier_numeric([](double u) { return sinc_kernel(u); }, t, spec);
    const double expected = std::fabs(t) <= 1.0 ? norm : 0.0;
    max_dev = std::max(max_dev, std::abs(value - cplx(expected, 0.0)));
  }
  out.push_back(deviation_check("sinc_kernel_fourier_shape", max_dev, 0.01));

  const double k2 = integrate_real(
      [](double u) {
        const double k = sinc_kernel(u);
        return k * k;
      },
      spec);
  const double tail = 1.0 / (M_PI * M_PI * spec.half_width);
  out.push_back(deviation_check("sinc_kernel_l2_norm",
                                std::fabs(k2 - 1.0 / M_PI), 2e-4 + tail));
}

}  // namespace

std::vector<CheckResult> run_verification(bool include_l2,
                                          bool include_hellinger, long n) {
  VerifyOptions options;
  options.include_l2 = include_l2;
  options.include_hellinger = include_hellinger;
  options.n = n;
  return run_verification(options);
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.inversion_a != 0.0 || options.inversion_b != 0.0) {
    if (!(options.inversion_b > options.inversion_a) || !(options.inversion_a > 0.0))
      throw std::invalid_argument(
          "inversion identity check requires b > a > 0");
  }
  std::vector<CheckResult> results;
  check_hermite_recurrence(results);
  check_hermite_orthonormality(results);
  check_cramer_envelope(results);
  check_odd_symmetry(results);
  check_plancherel(results);
  check_gauss_hermite_inversion(results);
  if (options.inversion_a > 0.0) {
    const double dev =
        inversion_max_deviation(options.inversion_a, options.inversion_b,
                              {1, 3, 5, 7, 9}, uniform_grid(-8.0, 8.0, 81));
    results.push_back(deviation_check(
        "hermite_inverse_fourier(a=" + std::to_string(options.inversion_a) + ")",
        dev, 1e-6));
  }
  check_fourier_phi43(results);
  check_kernel_fourier(results);
  if (options.include_l2) {
    check_psi_orthonormality_l2(results, 15);
    check_l2_family(results, options.n, options.l2_epsilon);
  }
  if (options.include_hellinger) {
    check_psi_orthonormality_hellinger(results, 11);
    check_absorption_reference(results);
    check_vtilde_square_integrable(results);
    check_hellinger_family(results, options.n);
  }
  return results;
}

}  // namespace normix
