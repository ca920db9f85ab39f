#pragma once

#include <string>
#include <vector>

#include "normix/assouad.hpp"

namespace normix {

struct CheckResult {
  std::string name;
  double margin = 0.0;     // signed distance to the tolerance; >= 0 passes
  double tolerance = 0.0;  // the threshold the margin was measured against
  bool pass = false;
};

struct VerifyOptions {
  bool include_l2 = true;
  bool include_hellinger = true;
  long n = 10000;  // schedule sample size for the family checks
  // Optional manual epsilon for the L2 family (constructed with the
  // unchecked flag when it violates the nonnegativity budget).
  double l2_epsilon = 0.0;  // 0 = use the schedule
  // Optional extra (a, b) pair for the Fourier-inversion identity; b <= a
  // is a usage error.
  double inversion_a = 0.0;
  double inversion_b = 0.0;
};

// The full identity/invariant suite: Hermite recurrence and envelopes,
// orthonormality, Plancherel, the two Fourier-inversion identities, family
// positivity/sandwich under the default schedules, the kernel Fourier
// shape, and the analytic growth condition. Restrict to one regime's
// family checks if requested; shared checks always run.
std::vector<CheckResult> run_verification(bool include_l2 = true,
                                          bool include_hellinger = true,
                                          long n = 10000);
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace normix
