// End-to-end acceptance suite: one pass/fail line per criterion, exit 0
// only when every criterion holds. Tolerances are pinned here on purpose;
// loosening them is a contract change, not a fix.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include "normix/assouad.hpp"
#include "normix/divergences.hpp"
#include "normix/family_hellinger.hpp"
#include "normix/family_l2.hpp"
#include "normix/hermite_fourier.hpp"
#include "normix/quadrature.hpp"
#include "normix/rng.hpp"
#include "normix/sinc.hpp"
#include "normix/special.hpp"

using namespace normix;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail, double seconds) {
  std::printf("%s  %2d %-28s %s (%.1fs)\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  std::vector<double> g(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i)
    g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (points - 1);
  return g;
}

// 1. psi orthonormality for the squared-loss family: psi_k = (phi * v_k) /
// sqrt(2 pi) for odd k <= 15, Gram matrix within 1e-8 of the identity.
// The convolutions are evaluated by inner quadrature (no closed forms).
void criterion_orthonormality() {
  const auto t0 = Clock::now();
  const auto cfg = make_l2_family(8, 1e-12);
  // the Gram integrand carries order-15 Hermite mass out to ~2 sqrt(16)
  const auto outer = quadrature_nodes(QuadratureSpec{14.0, 112, 16, 1e-10});
  const auto inner = quadrature_nodes(QuadratureSpec{18.0, 120, 16, 1e-10});

  // v_k tables over the inner nodes
  std::vector<std::vector<double>> vtab(8, std::vector<double>(inner.size()));
  for (size_t i = 0; i < 8; ++i)
    for (size_t q = 0; q < inner.size(); ++q)
      vtab[i][q] = cfg.perturbations[i](inner[q].first);

  // psi_k at the outer nodes via the convolution integral
  const double norm = 1.0 / std::sqrt(2.0 * M_PI);
  std::vector<std::vector<double>> psi(8, std::vector<double>(outer.size()));
  for (size_t o = 0; o < outer.size(); ++o) {
    const double x = outer[o].first;
    std::vector<double> kernel(inner.size());
    for (size_t q = 0; q < inner.size(); ++q)
      kernel[q] = inner[q].second * phi(x - inner[q].first);
    for (size_t i = 0; i < 8; ++i) {
      double conv = 0.0;
      for (size_t q = 0; q < inner.size(); ++q) conv += kernel[q] * vtab[i][q];
      psi[i][o] = norm * conv;
    }
  }

  double max_dev = 0.0;
  for (size_t i = 0; i < 8; ++i) {
    for (size_t j = i; j < 8; ++j) {
      double gram = 0.0;
      for (size_t o = 0; o < outer.size(); ++o)
        gram += outer[o].second * psi[i][o] * psi[j][o];
      max_dev = std::max(max_dev, std::fabs(gram - (i == j ? 1.0 : 0.0)));
    }
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(1, "psi_orthonormality", max_dev <= 1e-8 && secs < 30.0,
         "max|gram - id|=" + fmt(max_dev), secs);
}

// 2. Gaussian-Hermite inverse Fourier identity on [-8, 8].
void criterion_fourier_identity() {
  const auto t0 = Clock::now();
  const QuadratureSpec spec{30.0, 120, 16, 1e-10};
  const std::vector<std::pair<double, double>> pairs{
      {1.0, 2.0}, {std::sqrt(2.0 / 3.0), 2.0}, {std::sqrt(2.0), 2.0}};
  double max_dev = 0.0;
  for (const auto& [a, b] : pairs) {
    for (int k : {1, 3, 5, 7, 9}) {
      const auto form = inverse_fourier_gauss_hermite(a, b, k);
      for (double u : uniform_grid(-8.0, 8.0, 81)) {
        const auto numeric = inverse_fourier_numeric(
            [&, a = a, b = b](double t) {
              return std::complex<double>(phi(a * t) *
                                          hermite_normalized(k, b * t));
            },
            u, spec);
        const auto closed = form.coefficient *
                            static_cast<std::complex<double>>(form.envelope(u));
        max_dev = std::max(max_dev, std::abs(numeric - closed));
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(2, "fourier_identity", max_dev <= 1e-6 && secs < 60.0,
         "max_dev=" + fmt(max_dev), secs);
}

// 3. Exact separation identities for 20 seeded vertex pairs at m = 3.
void criterion_separation() {
  const auto t0 = Clock::now();
  const auto l2 = make_l2_family(3, 0.9 * l2_epsilon_nonneg_bound(3));
  const auto hel = make_hellinger_family(3, 0.9 * hellinger_epsilon_bound(3));
  RngStream rng(20240817);
  double max_rel = 0.0;
  int checked_pairs = 0;
  for (int trial = 0; trial < 20; ++trial) {
    BitVector a(3), b(3);
    int hamming = 0;
    do {
      hamming = 0;
      for (int i = 0; i < 3; ++i) {
        a[static_cast<size_t>(i)] = rng.uniform() < 0.5 ? 0 : 1;
        b[static_cast<size_t>(i)] = rng.uniform() < 0.5 ? 0 : 1;
        hamming += a[static_cast<size_t>(i)] != b[static_cast<size_t>(i)];
      }
    } while (hamming == 0);
    ++checked_pairs;

    const double expected =
        2.0 * M_PI * l2.epsilon * l2.epsilon * hamming;
    max_rel = std::max(
        max_rel, std::fabs(l2_separation(l2, a, b) - expected) / expected);

    const auto pair = hellinger_pair_check(hel, a, b);
    max_rel = std::max(max_rel,
                       std::fabs(pair.weighted_l2 - pair.expected_weighted) /
                           pair.expected_weighted);
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(3, "exact_separation", max_rel <= 1e-7 && checked_pairs == 20,
         "max_rel=" + fmt(max_rel), secs);
}

// 4. Positivity (L2) and sandwich (Hellinger) under the schedules.
void criterion_positivity_sandwich() {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst = 0.0;
  for (long n : {1000L, 10000L, 100000L}) {
    const auto pos = l2_positivity_check(l2_schedule(n));
    ok = ok && pos.pass;
    worst = std::min(worst, pos.min_margin);
    const auto sand = sandwich_check(hellinger_schedule(n));
    ok = ok && sand.pass;
    worst = std::min(worst, std::min(sand.lower_margin, sand.upper_margin));
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(4, "positivity_sandwich", ok, "worst_margin=" + fmt(worst), secs);
}

// 5. chi-square conditions at n in {1e3, 1e4, 1e5}.
void criterion_chi2() {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst_slack = 1.0;
  for (long n : {1000L, 10000L, 100000L}) {
    const auto l2 = l2_schedule(n);
    const auto chi2 = chi2_adjacent_check(l2, n);
    ok = ok && chi2.all_within;
    for (double v : chi2.per_coordinate)
      worst_slack = std::min(worst_slack, 1.0 - v / chi2.threshold);

    const auto hel = hellinger_schedule(n);
    const double level =
        4.0 * M_PI * hel.epsilon * hel.epsilon * (1.0 + 1e-7);
    BitVector zeros(static_cast<size_t>(hel.m), 0);
    for (int i = 0; i < hel.m; ++i) {
      BitVector e = zeros;
      e[static_cast<size_t>(i)] = 1;
      const auto pair = hellinger_pair_check(hel, e, zeros);
      ok = ok && pair.chi_sq <= level;
      worst_slack = std::min(worst_slack, 1.0 - pair.chi_sq / level);
    }
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(5, "chi2_conditions", ok, "worst_slack=" + fmt(worst_slack), secs);
}

// 6. Denominator-absorption identity on [-6, 6].
void criterion_absorption() {
  const auto t0 = Clock::now();
  const auto grid = uniform_grid(-6.0, 6.0, 49);
  double max_dev = 0.0;
  for (int k : {1, 3, 5, 7, 9}) {
    const auto p = absorb_transform(1.0, std::sqrt(3.0),
                                    4.0 / std::sqrt(5.0),
                                    hellinger_coefficient(k));
    max_dev = std::max(max_dev, absorb_identity_deviation(p, k, grid));
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(6, "absorption_identity", max_dev <= 1e-6,
         "max_dev=" + fmt(max_dev), secs);
}

// 7. Affinity chain at n = 200 with 20,000 replications per regime.
void criterion_affinity() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;

  auto run = [&](const std::function<double(const BitVector&, double)>& pdf,
                 const std::function<double(const BitVector&, double)>& mixing,
                 double base_variance, int m, const char* tag) {
    const BitVector zeros(static_cast<size_t>(m), 0);
    BitVector adj = zeros;
    adj[0] = 1;
    auto density = [&](const BitVector alpha) {
      return SampleableDensity{
          [&pdf, alpha](double x) { return pdf(alpha, x); },
          [&mixing, alpha, base_variance](RngStream& rng) {
            const double sd = std::sqrt(base_variance);
            for (int tries = 0; tries < 1000000; ++tries) {
              const double u = sd * rng.normal();
              const double envelope =
                  1.5 * phi_var(u, base_variance);
              if (rng.uniform() * envelope <= mixing(alpha, u))
                return u + rng.normal();
            }
            throw std::runtime_error("rejection envelope appears broken");
          }};
    };
    const auto est =
        affinity_mc(density(zeros), density(adj), 200, 20000, 20240817);
    const double chi2 = chi_sq([&](double x) { return pdf(zeros, x); },
                               [&](double x) { return pdf(adj, x); });
    const double floor = 1.0 - std::sqrt(200.0 * chi2);
    ok = ok && est.estimate >= floor - 3.0 * est.stderr_;
    detail += std::string(tag) + ":aff=" + fmt(est.estimate) +
              ">=floor=" + fmt(floor) + " ";
  };

  const auto l2 = l2_schedule(200);
  run([&](const BitVector& a, double x) { return f_alpha(l2, a, x); },
      [&](const BitVector& a, double u) { return pi_alpha(l2, a, u); },
      l2.base_variance, l2.m, "l2");

  const auto hel = hellinger_schedule(200);
  run([&](const BitVector& a, double x) { return f_alpha(hel, a, x); },
      [&](const BitVector& a, double u) { return pi_alpha(hel, a, u); },
      1.0, hel.m, "hel");

  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(7, "affinity_chain", ok && secs < 300.0, detail, secs);
}

// 8. Lower-bound arithmetic and the rate-table band.
void criterion_bound_arithmetic() {
  const auto t0 = Clock::now();
  bool ok = true;

  const auto cert = assouad_bound(Regime::L2, 0.25, 3, 1e-6);
  ok = ok && cert.bound ==
                 (2.0 * M_PI * 0.5 / 4.0) * (1.0 - std::sqrt(0.25)) * 3 * 1e-6;
  const auto hcert = assouad_bound(Regime::Hellinger, M_PI / 4.0, 2, 4e-5);
  ok = ok && hcert.bound == (M_PI / 3.0 / 4.0) *
                                (1.0 - std::sqrt(M_PI / 4.0)) * 2 * 4e-5;

  std::string detail;
  const std::vector<long> ns{1000, 10000, 100000, 1000000};
  for (Regime regime : {Regime::L2, Regime::Hellinger}) {
    const double c1 = regime == Regime::L2 ? 0.25 : M_PI / 4.0;
    const auto rows = rate_table(regime, ns, c1, /*verify=*/true);
    double lo = rows[0].ratio, hi = rows[0].ratio;
    for (const auto& row : rows) {
      ok = ok && row.verified;
      lo = std::min(lo, row.ratio);
      hi = std::max(hi, row.ratio);
    }
    ok = ok && hi / lo <= 10.0;
    detail += regime_name(regime) + ":band=" + fmt(hi / lo) + " ";
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(8, "bound_arithmetic", ok, detail, secs);
}

// 9. Estimator rate regression at n in {2^10, 2^12, 2^14}.
void criterion_estimator_rate() {
  const auto t0 = Clock::now();
  std::vector<RiskReport> reps;
  for (long n : {1024L, 4096L, 16384L})
    reps.push_back(mise_mc_gaussian(1.0, n, 50, 20240817));
  bool ok = true;
  std::string detail;
  for (const auto& r : reps) {
    ok = ok && r.mise_mean <=
                   r.variance_bound + r.bias_sq_bound + 5.0 * r.mise_stderr;
    detail += "n=" + std::to_string(r.n) + ":" + fmt(r.mise_mean) + " ";
  }
  for (size_t i = 0; i + 1 < reps.size(); ++i) {
    const double joint = std::sqrt(reps[i].mise_stderr * reps[i].mise_stderr +
                                   reps[i + 1].mise_stderr *
                                       reps[i + 1].mise_stderr);
    ok = ok &&
         reps[i + 1].mise_mean <= 0.5 * reps[i].mise_mean + 3.0 * joint;
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(9, "estimator_rate", ok && secs < 600.0, detail, secs);
}

// 10. Analytic growth condition on both scheduled families.
void criterion_growth() {
  const auto t0 = Clock::now();
  const auto grid = uniform_grid(-8.0, 8.0, 81);
  const auto l2 = l2_schedule(10000);
  const auto hel = hellinger_schedule(10000);
  const BitVector l2_ones(static_cast<size_t>(l2.m), 1);
  const BitVector hel_ones(static_cast<size_t>(hel.m), 1);
  double min_margin = std::numeric_limits<double>::infinity();
  for (double y : {0.0, 1.0, 2.0}) {
    min_margin = std::min(
        min_margin,
        analytic_growth_margin(
            [&](double u) { return pi_alpha(l2, l2_ones, u); }, y, grid));
    min_margin = std::min(
        min_margin,
        analytic_growth_margin(
            [&](double u) { return pi_alpha(hel, hel_ones, u); }, y, grid));
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(10, "growth_condition", min_margin >= -1e-9,
         "min_margin=" + fmt(min_margin), secs);
}

// 11. Seed determinism of a stochastic CLI command's CSV output.
void criterion_determinism() {
  const auto t0 = Clock::now();
  const std::string cli = NORMIX_CLI_PATH;
  auto run_once = [&](const std::string& out) {
    const std::string cmd =
        cli + " estimate --n 1024 --reps 10 --seed 7 > " + out + " 2>/dev/null";
    return std::system(cmd.c_str());
  };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const int rc1 = run_once("acceptance_estimate_a.csv");
  const int rc2 = run_once("acceptance_estimate_b.csv");
  const std::string a = slurp("acceptance_estimate_a.csv");
  const std::string b = slurp("acceptance_estimate_b.csv");
  std::remove("acceptance_estimate_a.csv");
  std::remove("acceptance_estimate_b.csv");
  const bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  report(11, "seed_determinism", ok,
         "bytes=" + std::to_string(a.size()), secs);
}

}  // namespace

int main() {
  criterion_orthonormality();
  criterion_fourier_identity();
  criterion_separation();
  criterion_positivity_sandwich();
  criterion_chi2();
  criterion_absorption();
  criterion_affinity();
  criterion_bound_arithmetic();
  criterion_estimator_rate();
  criterion_growth();
  criterion_determinism();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
