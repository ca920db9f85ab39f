#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace normix {

// Composite Gauss-Legendre quadrature over [-half_width, half_width].
struct QuadratureSpec {
  double half_width = 40.0;
  int panels = 160;
  int nodes_per_panel = 16;
  double abs_tol = 1e-10;

  void validate() const;
};

struct IntegralResult {
  double value = 0.0;
  // |value - value at doubled panel count|
  double error_estimate = 0.0;
  bool converged = true;
};

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;

// Gauss-Legendre nodes and weights on [-1, 1] for the given order (cached).
const std::vector<std::pair<double, double>>& gauss_legendre(int order);

// The composite node/weight set over [-L, L] for the given spec; lets
// callers precompute integrand tables.
std::vector<std::pair<double, double>> quadrature_nodes(
    const QuadratureSpec& spec);

// Integral of f over [-L, L] at the spec's resolution. Throws on a
// non-finite integrand value at any node.
double integrate_real(const RealFn& f, const QuadratureSpec& spec = {});

// Same, with a convergence report from a panel-doubling comparison.
IntegralResult integrate_checked(const RealFn& f, const QuadratureSpec& spec = {});

// Fourier transform (1/sqrt(2pi)) int exp(-i x t) f(x) dx, real and
// imaginary parts integrated separately.
std::complex<double> fourier_numeric(const RealFn& f, double t,
                                     const QuadratureSpec& spec = {});
std::complex<double> fourier_numeric_complex(const ComplexFn& f, double t,
                                             const QuadratureSpec& spec = {});

// Inverse transform (1/sqrt(2pi)) int exp(+i u t) g(t) dt.
std::complex<double> inverse_fourier_numeric(const ComplexFn& g, double u,
                                             const QuadratureSpec& spec = {});

// (f * g)(x) = int f(x - u) g(u) du over the truncated domain.
double convolve_numeric(const RealFn& f, const RealFn& g, double x,
                        const QuadratureSpec& spec = {});

// Mass of a zero-mean Gaussian envelope with scale sigma beyond |x| > L;
// used for truncation-error accounting next to reported integrals.
double gaussian_tail_mass(double half_width, double sigma);

}  // namespace normix
