#include "normix/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace normix {

static void check_order_and_point(int k, double t) {
  if (k < 0) throw std::invalid_argument("hermite order must be nonnegative");
  if (k > kMaxHermiteOrder)
    throw std::invalid_argument("hermite order " + std::to_string(k) +
                                " exceeds guard " +
                                std::to_string(kMaxHermiteOrder));
  if (!std::isfinite(t))
    throw std::invalid_argument("hermite evaluation point must be finite");
}

double hermite_normalized(int k, double t) {
  check_order_and_point(k, t);
  if (k == 0) return 1.0;
  if (k == 1) return t;
  // h_{j+1} = (t*h_j - sqrt(j)*h_{j-1}) / sqrt(j+1)
  double hm1 = 1.0;
  double h = t;
  for (int j = 1; j < k; ++j) {
    const double next =
        (t * h - std::sqrt(static_cast<double>(j)) * hm1) /
        std::sqrt(static_cast<double>(j + 1));
    hm1 = h;
    h = next;
  }
  return h;
}

double cramer_margin(int k, double t) {
  check_order_and_point(k, t);
  return kCramerKappa * std::exp(0.25 * t * t) -
         std::fabs(hermite_normalized(k, t));
}

double gaussian_pdf(double x, double mean, double variance) {
  if (!(variance > 0.0))
    throw std::invalid_argument("gaussian variance must be positive");
  const double z = x - mean;
  return std::exp(-0.5 * z * z / variance) /
         std::sqrt(2.0 * M_PI * variance);
}

double phi_var(double x, double sigma2) { return gaussian_pdf(x, 0.0, sigma2); }

}  // namespace normix
