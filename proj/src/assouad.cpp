#include "normix/assouad.hpp"

#include <cmath>
#include <stdexcept>

#include "normix/family_hellinger.hpp"
#include "normix/family_l2.hpp"

namespace normix {

std::string regime_name(Regime r) {
  return r == Regime::L2 ? "l2" : "hellinger";
}

AssouadCertificate assouad_bound(Regime regime, double c1, int m,
                                 double epsilon2, bool separation_verified,
                                 bool chi2_verified,
                                 bool positivity_verified) {
  if (!(c1 > 0.0 && c1 < 1.0))
    throw std::invalid_argument("c1 must be in (0,1)");
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  if (m >= 1 && !(epsilon2 > 0.0))
    throw std::invalid_argument("epsilon2 must be > 0");
  AssouadCertificate cert;
  cert.regime = regime;
  cert.zeta = regime == Regime::L2 ? 0.5 : 1.0;
  cert.c0 = regime == Regime::L2 ? 2.0 * M_PI : M_PI / 3.0;
  cert.c1 = c1;
  cert.m = m;
  cert.epsilon2 = epsilon2;
  cert.separation_verified = separation_verified;
  cert.chi2_verified = chi2_verified;
  cert.positivity_verified = positivity_verified;
  cert.degenerate = (m == 0);
  cert.bound = cert.degenerate
                   ? 0.0
                   : (cert.c0 * cert.zeta / 4.0) * (1.0 - std::sqrt(c1)) *
                         m * epsilon2;
  return cert;
}

static AssouadCertificate certify_l2(long n, double c1,
                                     const QuadratureSpec& spec) {
  const L2FamilyConfig cfg = l2_schedule(n, c1);
  const double eps2 = cfg.epsilon * cfg.epsilon;

  BitVector zeros(static_cast<size_t>(cfg.m), 0);
  BitVector adjacent = zeros;
  adjacent[0] = 1;
  const double sep = l2_separation(cfg, adjacent, zeros, spec);
  const double expected = 2.0 * M_PI * eps2;
  const bool sep_ok = std::fabs(sep - expected) <= 1e-8 * expected;

  const Chi2Report chi2 = chi2_adjacent_check(cfg, n, spec);
  const PositivityReport pos = l2_positivity_check(cfg);

  return assouad_bound(Regime::L2, c1, cfg.m, eps2, sep_ok, chi2.all_within,
                       pos.pass);
}

static AssouadCertificate certify_hellinger(long n,
                                            const QuadratureSpec& spec) {
  const HellingerFamilyConfig cfg = hellinger_schedule(n);
  const double eps2 = cfg.epsilon * cfg.epsilon;
  // With eps = 1/(4 sqrt n), the chi^2 level is 4 pi eps^2 = (pi/4)/n,
  // so the certificate's c1 is pi/4.
  const double c1 = M_PI / 4.0;
  if (cfg.degenerate)
    return assouad_bound(Regime::Hellinger, c1, 0, eps2);

  BitVector zeros(static_cast<size_t>(cfg.m), 0);
  BitVector adjacent = zeros;
  adjacent[0] = 1;
  const HellingerPairReport pair =
      hellinger_pair_check(cfg, adjacent, zeros, spec);
  const bool sep_ok =
      std::fabs(pair.weighted_l2 - pair.expected_weighted) <=
          1e-7 * pair.expected_weighted &&
      pair.hellinger_sq >= pair.weighted_l2 / 6.0 - 1e-10;
  const bool chi2_ok = pair.chi_sq <= 4.0 * M_PI * eps2 * (1.0 + 1e-7);
  const SandwichReport sandwich = sandwich_check(cfg);

  return assouad_bound(Regime::Hellinger, c1, cfg.m, eps2, sep_ok, chi2_ok,
                       sandwich.pass);
}

AssouadCertificate certify(Regime regime, long n, double c1,
                           const QuadratureSpec& spec) {
  return regime == Regime::L2 ? certify_l2(n, c1, spec)
                              : certify_hellinger(n, spec);
}

std::vector<RateRow> rate_table(Regime regime, const std::vector<long>& ns,
                                double c1, bool verify,
                                const QuadratureSpec& spec) {
  if (ns.empty()) throw std::invalid_argument("n_list must be nonempty");
  for (size_t i = 1; i < ns.size(); ++i)
    if (ns[i] <= ns[i - 1])
      throw std::invalid_argument("n_list must be strictly ascending");
  for (long n : ns)
    if (n < 100) throw std::invalid_argument("n values must be >= 100");

  std::vector<RateRow> rows;
  for (long n : ns) {
    AssouadCertificate cert;
    if (verify) {
      cert = certify(regime, n, c1, spec);
    } else if (regime == Regime::L2) {
      const L2FamilyConfig cfg = l2_schedule(n, c1);
      cert = assouad_bound(Regime::L2, c1, cfg.m,
                           cfg.epsilon * cfg.epsilon);
    } else {
      const HellingerFamilyConfig cfg = hellinger_schedule(n);
      cert = assouad_bound(Regime::Hellinger, M_PI / 4.0, cfg.m,
                           cfg.epsilon * cfg.epsilon);
    }
    RateRow row;
    row.n = n;
    row.m = cert.m;
    row.epsilon2 = cert.epsilon2;
    row.bound = cert.bound;
    const double logn = std::log(static_cast<double>(n));
    row.target_rate = regime == Regime::L2
                          ? std::sqrt(logn) / static_cast<double>(n)
                          : logn / static_cast<double>(n);
    row.ratio = row.bound / row.target_rate;
    row.verified = cert.all_verified();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace normix
