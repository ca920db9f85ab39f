#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "normix/assouad.hpp"
#include "normix/divergences.hpp"
#include "normix/family_hellinger.hpp"
#include "normix/family_l2.hpp"
#include "normix/report.hpp"
#include "normix/sinc.hpp"
#include "normix/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace normix;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

// Flat key=value configuration; '#' starts a comment. Environment
// variables NORMIX_<KEY> override file values; CLI flags override both.
std::map<std::string, std::string> load_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
  }
  for (const char* key : {"regime", "n", "seed", "c1", "reps", "out"}) {
    std::string env = "NORMIX_";
    for (const char* p = key; *p; ++p)
      env += static_cast<char>(std::toupper(*p));
    if (const char* value = std::getenv(env.c_str())) kv[key] = value;
  }
  return kv;
}

Regime parse_regime(const std::string& name) {
  if (name == "l2" || name == "L2") return Regime::L2;
  if (name == "hellinger" || name == "Hellinger") return Regime::Hellinger;
  throw CLI::ValidationError("regime", "must be 'l2' or 'hellinger'");
}

std::map<std::string, std::string> run_metadata(
    const std::string& command, const std::map<std::string, std::string>& kv) {
  std::map<std::string, std::string> meta = kv;
  meta["command"] = command;
  meta["artifact_version"] = "normix 0.1.0";
  return meta;
}

int cmd_verify(const std::string& regime, long n, const std::string& out_path,
               const std::map<std::string, std::string>& kv) {
  const bool l2 = regime.empty() || regime == "l2";
  const bool hell = regime.empty() || regime == "hellinger";
  if (!l2 && !hell) throw CLI::ValidationError("regime", "unknown regime");
  VerifyOptions options;
  options.include_l2 = l2;
  options.include_hellinger = hell;
  options.n = n;
  if (kv.count("epsilon")) options.l2_epsilon = std::stod(kv.at("epsilon"));
  if (kv.count("inversion_a")) options.inversion_a = std::stod(kv.at("inversion_a"));
  if (kv.count("inversion_b")) options.inversion_b = std::stod(kv.at("inversion_b"));
  const auto results = run_verification(options);

  json report = json::array();
  std::string first_failure;
  for (const auto& r : results) {
    report.push_back({{"name", r.name},
                      {"margin", r.margin},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}});
    if (!r.pass && first_failure.empty()) first_failure = r.name;
  }
  json doc = {{"command", "verify"},
              {"n", n},
              {"checks", report},
              {"all_pass", first_failure.empty()}};
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    os << doc.dump(2) << "\n";
  }
  if (!first_failure.empty()) {
    std::cerr << "FAILED: " << first_failure << "\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

json certificate_json(const AssouadCertificate& cert) {
  return {{"regime", regime_name(cert.regime)},
          {"zeta", cert.zeta},
          {"c0", cert.c0},
          {"c1", cert.c1},
          {"m", cert.m},
          {"epsilon2", cert.epsilon2},
          {"separation_verified", cert.separation_verified},
          {"chi2_verified", cert.chi2_verified},
          {"positivity_verified", cert.positivity_verified},
          {"degenerate", cert.degenerate},
          {"bound", cert.bound}};
}

int cmd_construct(Regime regime, long n, const std::string& out_dir,
                  const std::map<std::string, std::string>& kv) {
  fs::create_directories(out_dir);
  const QuadratureSpec spec;

  std::ofstream csv(fs::path(out_dir) / "family.csv");
  if (!csv) {
    std::cerr << "cannot write to " << out_dir << "\n";
    return kExitUsage;
  }
  CsvWriter w(csv);
  auto meta = run_metadata("construct", kv);
  meta["regime"] = regime_name(regime);
  meta["n"] = std::to_string(n);
  w.metadata(meta);
  w.header({"x", "f_0", "f_alpha", "f_beta", "diff"});

  json cert_doc;
  const int grid_points = 801;
  if (regime == Regime::L2) {
    const L2FamilyConfig cfg = l2_schedule(n);
    BitVector zeros(static_cast<size_t>(cfg.m), 0), ones(zeros);
    for (auto& b : ones) b = 1;
    const double L = 8.0 * std::sqrt(1.0 + cfg.base_variance);
    for (int g = 0; g < grid_points; ++g) {
      const double x = -L + 2.0 * L * g / (grid_points - 1);
      const double f0 = f_alpha(cfg, zeros, x);
      const double fa = f_alpha(cfg, ones, x);
      BitVector beta = ones;
      beta[0] = 0;
      const double fb = f_alpha(cfg, beta, x);
      w.numeric_row({x, f0, fa, fb, fa - fb});
    }
    cert_doc = certificate_json(certify(Regime::L2, n, cfg.c1, spec));
    cert_doc["epsilon_bounds"] = {{"nonneg", cfg.eps2_nonneg_branch},
                                  {"chi2", cfg.eps2_chi2_branch}};
  } else {
    const HellingerFamilyConfig cfg = hellinger_schedule(n);
    if (cfg.degenerate) {
      std::cerr << "schedule degenerate (m = 0) at n = " << n << "\n";
      return kExitCheckFailure;
    }
    BitVector zeros(static_cast<size_t>(cfg.m), 0), ones(zeros);
    for (auto& b : ones) b = 1;
    const double L = 12.0;
    for (int g = 0; g < grid_points; ++g) {
      const double x = -L + 2.0 * L * g / (grid_points - 1);
      const double f0 = f_alpha(cfg, zeros, x);
      const double fa = f_alpha(cfg, ones, x);
      BitVector beta = ones;
      beta[0] = 0;
      const double fb = f_alpha(cfg, beta, x);
      w.numeric_row({x, f0, fa, fb, fa - fb});
    }
    cert_doc = certificate_json(certify(Regime::Hellinger, n, 0.25, spec));
  }
  cert_doc["quadrature"] = {{"half_width", spec.half_width},
                            {"panels", spec.panels},
                            {"nodes_per_panel", spec.nodes_per_panel},
                            {"abs_tol", spec.abs_tol}};
  std::ofstream js(fs::path(out_dir) / "certificate.json");
  js << cert_doc.dump(2) << "\n";
  return kExitOk;
}

int cmd_bound(Regime regime, long n, double c1) {
  const AssouadCertificate cert = certify(regime, n, c1);
  std::cout << certificate_json(cert).dump(2) << "\n";
  return cert.all_verified() || cert.degenerate ? kExitOk : kExitCheckFailure;
}

int cmd_rates(Regime regime, const std::vector<long>& ns, std::uint64_t seed,
              int reps, const std::string& out_dir,
              const std::map<std::string, std::string>& kv) {
  if (ns.empty()) throw CLI::ValidationError("n-list", "must be nonempty");
  fs::create_directories(out_dir);
  auto meta = run_metadata("rates", kv);
  meta["regime"] = regime_name(regime);
  meta["seed"] = std::to_string(seed);
  meta["reps"] = std::to_string(reps);
  {
    std::ostringstream list;
    for (size_t i = 0; i < ns.size(); ++i)
      list << (i ? "," : "") << ns[i];
    meta["n_list"] = list.str();
  }

  const auto rows = rate_table(regime, ns, 0.25, true);
  {
    std::ofstream csv(fs::path(out_dir) / "lower_bound.csv");
    CsvWriter w(csv);
    w.metadata(meta);
    w.header({"n", "regime", "m", "epsilon2", "bound", "target_rate", "ratio",
              "verified"});
    for (const auto& r : rows)
      w.row({std::to_string(r.n), regime_name(regime), std::to_string(r.m),
             format_real(r.epsilon2), format_real(r.bound),
             format_real(r.target_rate), format_real(r.ratio),
             r.verified ? "true" : "false"});
  }

  std::vector<double> mise_means;
  {
    std::ofstream csv(fs::path(out_dir) / "mise.csv");
    CsvWriter w(csv);
    w.metadata(meta);
    w.header({"n", "h", "R", "mise_mean", "mise_stderr", "variance_bound",
              "bias_sq_bound", "ell_n", "ratio"});
    for (long n : ns) {
      const RiskReport r = mise_mc_gaussian(1.0, n, reps, seed);
      mise_means.push_back(r.mise_mean);
      w.numeric_row({static_cast<double>(r.n), r.h,
                     static_cast<double>(r.reps), r.mise_mean, r.mise_stderr,
                     r.variance_bound, r.bias_sq_bound, r.ell_n,
                     r.mise_mean / r.ell_n});
    }
  }

  {
    std::vector<double> xs(ns.begin(), ns.end());
    std::vector<double> bounds, targets;
    for (const auto& r : rows) {
      bounds.push_back(r.bound);
      targets.push_back(r.target_rate);
    }
    SvgPlot plot;
    plot.add_series("mise_mean", "steelblue", xs, mise_means);
    plot.add_series("lower_bound", "firebrick", xs, bounds);
    plot.add_series("target_rate", "gray", xs, targets);
    std::ofstream svg(fs::path(out_dir) / "rates.svg");
    plot.write(svg, "risk and bounds vs n (" + regime_name(regime) + ")");
  }
  return kExitOk;
}

int cmd_estimate(long n, int reps, std::uint64_t seed,
                 const std::map<std::string, std::string>& kv) {
  const RiskReport r = mise_mc_gaussian(1.0, n, reps, seed);
  CsvWriter w(std::cout);
  auto meta = run_metadata("estimate", kv);
  meta["seed"] = std::to_string(seed);
  w.metadata(meta);
  w.header({"n", "h", "R", "mise_mean", "mise_stderr", "variance_bound",
            "bias_sq_bound", "ell_n", "ratio"});
  w.numeric_row({static_cast<double>(r.n), r.h, static_cast<double>(r.reps),
                 r.mise_mean, r.mise_stderr, r.variance_bound,
                 r.bias_sq_bound, r.ell_n, r.mise_mean / r.ell_n});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for minimax bounds on normal mixtures"};
  app.require_subcommand(1);

  std::string config_path, regime_str, out_dir, n_list_str;
  long n = 10000;
  double c1 = 0.25;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int reps = 50;

  auto* verify = app.add_subcommand("verify", "run the identity suites");
  verify->add_option("--regime", regime_str, "restrict to l2 or hellinger");
  verify->add_option("--config", config_path, "flat key=value config file");
  verify->add_option("--n", n, "schedule sample size for family checks");
  verify->add_option("--out", out_dir, "JSON report path (default stdout)");

  auto* construct =
      app.add_subcommand("construct", "emit family CSV and certificate");
  construct->add_option("--regime", regime_str)->required();
  construct->add_option("--n", n)->required();
  construct->add_option("--out", out_dir)->required();
  construct->add_option("--config", config_path);

  auto* bound = app.add_subcommand("bound", "lower-bound certificate");
  bound->add_option("--regime", regime_str)->required();
  bound->add_option("--n", n)->required();
  bound->add_option("--c1", c1);
  bound->add_option("--config", config_path);

  auto* rates = app.add_subcommand("rates", "rate tables and plot");
  rates->add_option("--regime", regime_str)->required();
  rates->add_option("--n-list", n_list_str)->required();
  rates->add_option("--seed", seed)->required();
  rates->add_option("--reps", reps);
  rates->add_option("--out", out_dir)->required();
  rates->add_option("--config", config_path);

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo MISE run");
  estimate->add_option("--n", n)->required();
  estimate->add_option("--reps", reps)->required();
  estimate
      ->add_option("--seed", seed)
      ->required();
  estimate->add_option("--config", config_path);

  try {
    app.parse(argc, argv);
    auto kv = load_config(config_path);
    // config-file / env values apply where the CLI did not set the option
    auto fill = [&](CLI::App* cmd, const std::string& opt_name,
                    const std::string& key, auto& target) {
      auto* opt = cmd->get_option_no_throw("--" + opt_name);
      if (opt && opt->count() == 0 && kv.count(key)) {
        std::istringstream is(kv[key]);
        is >> target;
      }
    };
    for (CLI::App* cmd : {verify, construct, bound, rates, estimate}) {
      if (!cmd->parsed()) continue;
      fill(cmd, "regime", "regime", regime_str);
      fill(cmd, "n", "n", n);
      fill(cmd, "c1", "c1", c1);
      fill(cmd, "seed", "seed", seed);
      fill(cmd, "reps", "reps", reps);
      fill(cmd, "out", "out", out_dir);
    }
    (void)seed_given;

    if (verify->parsed()) return cmd_verify(regime_str, n, out_dir, kv);
    if (construct->parsed())
      return cmd_construct(parse_regime(regime_str), n, out_dir, kv);
    if (bound->parsed()) {
      if (n < 100) throw CLI::ValidationError("n", "must be >= 100");
      return cmd_bound(parse_regime(regime_str), n, c1);
    }
    if (rates->parsed()) {
      std::vector<long> ns;
      std::stringstream ss(n_list_str);
      std::string token;
      while (std::getline(ss, token, ',')) ns.push_back(std::stol(token));
      return cmd_rates(parse_regime(regime_str), ns, seed, reps, out_dir, kv);
    }
    if (estimate->parsed()) return cmd_estimate(n, reps, seed, kv);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}
