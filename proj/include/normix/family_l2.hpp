#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "normix/hermite_fourier.hpp"
#include "normix/quadrature.hpp"

namespace normix {

using BitVector = std::vector<int>;  // entries in {0,1}, indexed by K

// Closed form of phi * v for a Gaussian-Hermite perturbation
// v(u) = A phi(rho u) h_k(gamma u); requires gamma > rho. The i^k factors
// cancel, so the result is another real Gaussian-Hermite form.
Perturbation convolve_perturbation_with_phi(const Perturbation& v);

// Squared-error-loss adversarial family: base pi_0 = phi_m, perturbations
// v_k(u) = C sqrt(3^k/k!) phi(u) H_k(2u/sqrt(3)) for odd k in
// {1, 3, ..., 2m-1}, with C = sqrt(2) (2 pi)^{3/4}.
struct L2FamilyConfig {
  int m = 1;
  double epsilon = 0.0;
  double base_variance = 1.0;  // variance of pi_0 (= m)
  std::vector<Perturbation> perturbations;       // one per k in K
  std::vector<Perturbation> convolved;           // phi * v_k closed forms
  bool checked = true;   // epsilon satisfies the nonnegativity bound
  double c1 = 0.25;
  // schedule diagnostics
  double eps2_nonneg_branch = 0.0;
  double eps2_chi2_branch = 0.0;

  std::vector<int> orders() const;  // K = {1, 3, ..., 2m-1}
};

// sqrt(2) (2 pi)^{3/4}, the constant making C phi(t)^2 = sqrt(2 phi(2t))
inline const double kL2FamilyC =
    std::sqrt(2.0) * std::pow(2.0 * M_PI, 0.75);

// Envelope constant C_k = 8 * 3^{k/2} from the Cramer bound chain.
double l2_envelope_constant(int k);

// Nonnegativity threshold (1/16) 3^{-m+1/2} m^{-3/2} on epsilon.
double l2_epsilon_nonneg_bound(int m);

// Constants of the chi^2 splitting argument: M^2 = 8 log 9 and
// C* = 2 sqrt(2 pi) exp(M^2/2).
double l2_split_M();
double l2_split_Cstar();

L2FamilyConfig make_l2_family(int m, double epsilon,
                              bool allow_unchecked = false);

// Largest m with 3^{-2m} m^{-2} >= sqrt(m)/n (searched over 1..50), and
// epsilon^2 = min of the nonnegativity and chi^2 budgets.
L2FamilyConfig l2_schedule(long n, double c1 = 0.25);

double pi_alpha(const L2FamilyConfig& cfg, const BitVector& alpha, double u);

// Mixture density f_alpha = phi_{1+m} + eps sum alpha_k (phi * v_k),
// closed-form path.
double f_alpha(const L2FamilyConfig& cfg, const BitVector& alpha, double x);

// Oracle path: direct numeric convolution of phi with pi_alpha.
double f_alpha_oracle(const L2FamilyConfig& cfg, const BitVector& alpha,
                      double x, const QuadratureSpec& spec = {});

// Quadrature value of ||f_alpha - f_beta||_2^2; equals
// 2 pi eps^2 ||alpha - beta||_0 for a valid family.
double l2_separation(const L2FamilyConfig& cfg, const BitVector& alpha,
                     const BitVector& beta, const QuadratureSpec& spec = {});

struct Chi2Report {
  std::vector<double> per_coordinate;  // int (f_ei - f_0)^2 / f_ei
  double threshold = 0.0;              // c1 / n
  double proof_bound = 0.0;            // 2 sqrt(m) eps^2 (2 pi C* + 64/3)
  bool all_within = true;
};

Chi2Report chi2_adjacent_check(const L2FamilyConfig& cfg, long n,
                               const QuadratureSpec& spec = {});

struct PositivityReport {
  double min_margin = 0.0;      // min over grid/vertices of pi_a - pi_0/2
  double worst_u = 0.0;
  std::vector<int> worst_vertex;
  bool exhaustive = true;
  bool pass = true;
};

// pi_alpha >= pi_0/2 on a 4001-point grid over [-8 sqrt(m), 8 sqrt(m)];
// exhaustive over vertices for m <= 6, otherwise 64 seeded vertices plus
// the all-ones vertex.
PositivityReport l2_positivity_check(const L2FamilyConfig& cfg,
                                     std::uint64_t seed = 20240817);

}  // namespace normix
