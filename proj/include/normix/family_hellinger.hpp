#pragma once

#include <cstdint>
#include <vector>

#include "normix/family_l2.hpp"
#include "normix/hermite_fourier.hpp"
#include "normix/quadrature.hpp"

namespace normix {

// Denominator-absorption transform: for v_k(u) = (C_k/sqrt(k!)) phi(rho u)
// H_k(gamma u) with rho^2 >= 1/sigma^2 + gamma^2/2,
//   (phi * v_k)(x) / sqrt(phi * phi_{sigma^2}(x)) = phi_{sigma~^2} * v~_k.
struct AbsorbParams {
  double sigma2 = 1.0;
  double rho = 1.0;
  double gamma = 1.0;
  double coeff = 1.0;  // C_k (with the 1/sqrt(k!) normalization absorbed)
  // derived tilde quadruple
  double sigma2_t = 0.0;
  double rho_t = 0.0;
  double gamma_t = 0.0;
  double coeff_t = 0.0;
};

AbsorbParams absorb_transform(double sigma2, double rho, double gamma,
                              double coeff);

// Max-abs deviation between the two sides of the absorption identity for
// order k on the given grid, both evaluated by independent quadrature.
double absorb_identity_deviation(const AbsorbParams& params, int k,
                                 const std::vector<double>& grid,
                                 const QuadratureSpec& spec = {});

// Hellinger-loss adversarial family: base pi_0 = phi (variance 1),
// perturbations v_k(u) = 2^{5/4} sqrt(pi) sqrt(5^k/k!) phi(sqrt(3) u)
// H_k(4u/sqrt(5)) for odd k in {1, ..., 2m-1}.
struct HellingerFamilyConfig {
  int m = 0;
  double epsilon = 0.0;
  std::vector<Perturbation> perturbations;
  std::vector<Perturbation> convolved;  // phi * v_k closed forms
  bool degenerate = false;              // schedule yielded m = 0
  bool checked = true;

  std::vector<int> orders() const;
};

// Coefficient C_k = 2^{5/4} sqrt(pi) sqrt(5^k).
double hellinger_coefficient(int k);

// Sandwich threshold 1/(2 kappa m C_{2m-1}) on epsilon.
double hellinger_epsilon_bound(int m);

HellingerFamilyConfig make_hellinger_family(int m, double epsilon,
                                            bool allow_unchecked = false);

// epsilon = 1/(4 sqrt(n)); m = largest integer with 6 m 5^m <= 4 sqrt(n)
// (m = 0 flagged degenerate at tiny n).
HellingerFamilyConfig hellinger_schedule(long n);

double pi_alpha(const HellingerFamilyConfig& cfg, const BitVector& alpha,
                double u);
double f_alpha(const HellingerFamilyConfig& cfg, const BitVector& alpha,
               double x);
double f_alpha_oracle(const HellingerFamilyConfig& cfg, const BitVector& alpha,
                      double x, const QuadratureSpec& spec = {});

struct SandwichReport {
  double lower_margin = 0.0;  // min of pi_a - pi_0/2
  double upper_margin = 0.0;  // min of (3/2) pi_0 - pi_a
  double worst_u_lower = 0.0;
  double worst_u_upper = 0.0;
  std::vector<int> worst_vertex_lower;
  std::vector<int> worst_vertex_upper;
  bool exhaustive = true;
  bool pass = true;
};

SandwichReport sandwich_check(const HellingerFamilyConfig& cfg,
                              std::uint64_t seed = 20240817);

struct HellingerPairReport {
  double weighted_l2 = 0.0;    // int (f_a - f_b)^2 / f_0
  double hellinger_sq = 0.0;   // int (sqrt f_a - sqrt f_b)^2
  double chi_sq = 0.0;         // int (f_a - f_b)^2 / f_a
  double expected_weighted = 0.0;  // 2 pi eps^2 * Hamming
  int hamming = 0;
};

HellingerPairReport hellinger_pair_check(const HellingerFamilyConfig& cfg,
                                         const BitVector& alpha,
                                         const BitVector& beta,
                                         const QuadratureSpec& spec = {});

}  // namespace normix
