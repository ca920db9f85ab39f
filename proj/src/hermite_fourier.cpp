#include "normix/hermite_fourier.hpp"

#include <cmath>
#include <stdexcept>

namespace normix {

GaussHermiteForm inverse_fourier_gauss_hermite(double a, double b, int k) {
  if (!(a > 0.0) || !(b > a))
    throw std::invalid_argument(
        "inverse_fourier_gauss_hermite requires b > a > 0");
  if (k < 0 || k > kMaxHermiteOrder)
    throw std::invalid_argument("order out of range");
  const double c = std::sqrt(b * b / (a * a) - 1.0);
  GaussHermiteForm form;
  form.order = k;
  form.gaussian_scale = a;
  form.hermite_scale = b / (a * a * c);
  form.coefficient = std::pow(std::complex<double>(0.0, c), k) / a;
  return form;
}

}  // namespace normix
