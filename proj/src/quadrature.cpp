#include "normix/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace normix {

void QuadratureSpec::validate() const {
  if (!(half_width > 0.0)) throw std::invalid_argument("half_width must be > 0");
  if (panels < 1) throw std::invalid_argument("panels must be >= 1");
  if (nodes_per_panel < 2)
    throw std::invalid_argument("nodes_per_panel must be >= 2");
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be > 0");
}

const std::vector<std::pair<double, double>>& gauss_legendre(int order) {
  static std::map<int, std::vector<std::pair<double, double>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  if (order < 2 || order > 200)
    throw std::invalid_argument("gauss_legendre order out of range");

  std::vector<std::pair<double, double>> nw(order);
  const int n = order;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration on P_n with the Chebyshev-like initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nw[i] = {-x, w};
    nw[n - 1 - i] = {x, w};
  }
  return cache.emplace(order, std::move(nw)).first->second;
}

std::vector<std::pair<double, double>> quadrature_nodes(
    const QuadratureSpec& spec) {
  spec.validate();
  const auto& nw = gauss_legendre(spec.nodes_per_panel);
  const double width = 2.0 * spec.half_width / spec.panels;
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<size_t>(spec.panels) * nw.size());
  for (int p = 0; p < spec.panels; ++p) {
    const double mid = -spec.half_width + (p + 0.5) * width;
    for (const auto& [node, weight] : nw)
      out.emplace_back(mid + 0.5 * width * node, 0.5 * width * weight);
  }
  return out;
}

static double integrate_at(const RealFn& f, const QuadratureSpec& spec,
                           int panels) {
  const auto& nw = gauss_legendre(spec.nodes_per_panel);
  const double width = 2.0 * spec.half_width / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = -spec.half_width + p * width;
    const double mid = a + 0.5 * width;
    double panel_sum = 0.0;
    for (const auto& [node, weight] : nw) {
      const double x = mid + 0.5 * width * node;
      const double fx = f(x);
      if (!std::isfinite(fx))
        throw std::domain_error("non-finite integrand value at x=" +
                                std::to_string(x));
      panel_sum += weight * fx;
    }
    total += 0.5 * width * panel_sum;
  }
  return total;
}

double integrate_real(const RealFn& f, const QuadratureSpec& spec) {
  spec.validate();
  return integrate_at(f, spec, spec.panels);
}

IntegralResult integrate_checked(const RealFn& f, const QuadratureSpec& spec) {
  spec.validate();
  const double coarse = integrate_at(f, spec, spec.panels);
  const double fine = integrate_at(f, spec, 2 * spec.panels);
  IntegralResult r;
  r.value = fine;
  r.error_estimate = std::fabs(fine - coarse);
  r.converged = r.error_estimate <= spec.abs_tol;
  return r;
}

std::complex<double> fourier_numeric(const RealFn& f, double t,
                                     const QuadratureSpec& spec) {
  const double norm = 1.0 / std::sqrt(2.0 * M_PI);
  const double re = integrate_real(
      [&](double x) { return f(x) * std::cos(x * t); }, spec);
  const double im = integrate_real(
      [&](double x) { return -f(x) * std::sin(x * t); }, spec);
  return {norm * re, norm * im};
}

std::complex<double> fourier_numeric_complex(const ComplexFn& f, double t,
                                             const QuadratureSpec& spec) {
  const double norm = 1.0 / std::sqrt(2.0 * M_PI);
  const double re = integrate_real(
      [&](double x) {
        const auto v = f(x);
        return v.real() * std::cos(x * t) + v.imag() * std::sin(x * t);
      },
      spec);
  const double im = integrate_real(
      [&](double x) {
        const auto v = f(x);
        return v.imag() * std::cos(x * t) - v.real() * std::sin(x * t);
      },
      spec);
  return {norm * re, norm * im};
}

std::complex<double> inverse_fourier_numeric(const ComplexFn& g, double u,
                                             const QuadratureSpec& spec) {
  const double norm = 1.0 / std::sqrt(2.0 * M_PI);
  const double re = integrate_real(
      [&](double t) {
        const auto v = g(t);
        return v.real() * std::cos(u * t) - v.imag() * std::sin(u * t);
      },
      spec);
  const double im = integrate_real(
      [&](double t) {
        const auto v = g(t);
        return v.real() * std::sin(u * t) + v.imag() * std::cos(u * t);
      },
      spec);
  return {norm * re, norm * im};
}

double convolve_numeric(const RealFn& f, const RealFn& g, double x,
                        const QuadratureSpec& spec) {
  return integrate_real([&](double u) { return f(x - u) * g(u); }, spec);
}

double gaussian_tail_mass(double half_width, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return std::erfc(half_width / (sigma * std::sqrt(2.0)));
}

}  // namespace normix
