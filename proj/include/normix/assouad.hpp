#pragma once

#include <string>
#include <vector>

#include "normix/quadrature.hpp"

namespace normix {

enum class Regime { L2, Hellinger };

std::string regime_name(Regime r);

struct AssouadCertificate {
  Regime regime = Regime::L2;
  double zeta = 0.5;  // 1/2 for squared-L2 loss, 1 for squared Hellinger
  double c0 = 0.0;    // 2 pi for L2, pi/3 for Hellinger
  double c1 = 0.25;
  int m = 0;
  double epsilon2 = 0.0;
  bool separation_verified = false;
  bool chi2_verified = false;
  bool positivity_verified = false;
  bool degenerate = false;
  double bound = 0.0;  // (c0 zeta / 4) (1 - sqrt(c1)) m eps^2

  bool all_verified() const {
    return separation_verified && chi2_verified && positivity_verified &&
           m >= 1;
  }
};

// Arithmetic-only certificate: fills the closed-form bound, leaves the
// verification flags as given.
AssouadCertificate assouad_bound(Regime regime, double c1, int m,
                                 double epsilon2,
                                 bool separation_verified = false,
                                 bool chi2_verified = false,
                                 bool positivity_verified = false);

// Runs the regime's schedule at sample size n and verifies the three
// hypotheses numerically (separation, chi^2, positivity/sandwich).
AssouadCertificate certify(Regime regime, long n, double c1 = 0.25,
                           const QuadratureSpec& spec = {});

struct RateRow {
  long n = 0;
  int m = 0;
  double epsilon2 = 0.0;
  double bound = 0.0;
  double target_rate = 0.0;  // sqrt(log n)/n for L2, log n / n for Hellinger
  double ratio = 0.0;
  bool verified = false;
};

// Per-n certificates with bound/target ratios. When `verify` is false the
// rows carry arithmetic only (flags false), which is cheap.
std::vector<RateRow> rate_table(Regime regime, const std::vector<long>& ns,
                                double c1 = 0.25, bool verify = true,
                                const QuadratureSpec& spec = {});

}  // namespace normix
