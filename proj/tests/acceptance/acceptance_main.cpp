// Runs the acceptance suite and prints one PASS/FAIL line per criterion.
// With --criterion N only that criterion runs; the exit code is nonzero if
// any criterion that ran failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "rsma/allocator.hpp"
#include "rsma/bounds.hpp"
#include "rsma/channel.hpp"
#include "rsma/harness.hpp"
#include "rsma/oracle.hpp"
#include "rsma/precoding.hpp"
#include "rsma/rates.hpp"
#include "rsma/specfun.hpp"

namespace {

using namespace rsma;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SystemConfig config_at(int n, int k, double snr_db, const std::vector<double>& v, int trials, std::uint64_t seed) {
  SystemConfig c = uniform_config(n, k, 1.0, trials, seed);
  c.large_scale = v;
  c.power = power_for_snr(snr_db, v);
  return c;
}

// Closed form against the grid optimum of the same bound objective.
Outcome closed_form_vs_oracle() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 1e300;
  double worst_mc = 1e300;
  std::string where;
  for (auto [n, k] : {std::pair{4, 6}, std::pair{8, 10}}) {
    const std::vector<std::vector<double>> vs = {std::vector<double>(static_cast<std::size_t>(k), 1.0),
                                                 draw_large_scale(k, 2024)};
    for (std::size_t vi = 0; vi < vs.size(); ++vi) {
      for (double snr : {20.0, 30.0, 40.0}) {
        const SystemConfig config = config_at(n, k, snr, vs[vi], 100, 42);
        const UserGroups groups = default_groups(config);
        const AllocationDecision d = select(config, groups);
        const OracleResult best = exhaustive_search(config, groups);
        const double ratio = d.chosen.r_mm / best.value;
        std::cerr << "  [1] N=" << n << " K=" << k << (vi == 0 ? " v=1" : " v=random") << " snr=" << snr
                  << "  r_mm=" << d.chosen.r_mm << " (n_hat=" << d.n_hat() << ", t=" << d.chosen.t
                  << ")  oracle=" << best.value << " (" << to_string(best.scheme) << ", t=" << best.t
                  << ", beta=" << best.beta << ")  ratio=" << ratio << '\n';
        if (ratio < worst) {
          worst = ratio;
          where = "N=" + std::to_string(n) + " K=" + std::to_string(k) + fmt(" snr=%.0f", snr);
        }
        // Diagnostic only: the same comparison on Monte Carlo rates.
        const double achieved = d.chosen.scheme == Scheme::kZfRsma
                                    ? min_rate_rsma_zf(ergodic_rates_zf(config, groups, d.chosen.t), 0.0, groups)
                                    : min_rate_rsma_mrt(ergodic_rates_mrt(config, d.chosen.t), k);
        const double mc_best = exhaustive_search_monte_carlo(config, groups, build_grid(k)).value;
        std::cerr << "      monte carlo: allocator=" << achieved << " grid optimum=" << mc_best
                  << " ratio=" << achieved / mc_best << '\n';
        worst_mc = std::min(worst_mc, achieved / mc_best);
      }
    }
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = worst >= 0.95 && elapsed < 60.0;
  o.detail = "worst r_mm/oracle " + fmt("%.4f", worst) + " at " + where + " (need >= 0.95); monte carlo ratio " +
             fmt("%.4f", worst_mc) + " (diagnostic); " + fmt("%.1fs", elapsed);
  return o;
}

// Non-saturating RSMA against saturating SDMA between 30 and 40 dB.
Outcome non_saturation() {
  const auto start = std::chrono::steady_clock::now();
  SystemConfig base = uniform_config(4, 8, 1.0, 100, 42);
  base.large_scale = draw_large_scale(8, 42);
  const std::vector<double> snr = {30.0, 40.0};
  const std::vector<SweepScheme> schemes = {SweepScheme::kRsmaProposed, SweepScheme::kSdmaZf, SweepScheme::kSdmaMrt};
  const auto records = run_sweep(base, snr, schemes);
  auto rate = [&](double s, SweepScheme scheme) {
    for (const SweepRecord& r : records) {
      if (r.snr_db == s && r.scheme == scheme) return r.min_rate;
    }
    throw std::logic_error("missing record");
  };
  const double rsma_gain = rate(40, SweepScheme::kRsmaProposed) - rate(30, SweepScheme::kRsmaProposed);
  const double zf_gain = rate(40, SweepScheme::kSdmaZf) - rate(30, SweepScheme::kSdmaZf);
  const double mrt_gain = rate(40, SweepScheme::kSdmaMrt) - rate(30, SweepScheme::kSdmaMrt);
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = rsma_gain >= 0.3 && zf_gain < 0.1 && mrt_gain < 0.1 && elapsed < 120.0;
  o.detail = "rsma gain " + fmt("%.4f", rsma_gain) + " (>= 0.3), sdma-zf gain " + fmt("%.4f", zf_gain) +
             ", sdma-mrt gain " + fmt("%.4f", mrt_gain) + " (< 0.1); " + fmt("%.1fs", elapsed);
  return o;
}

// Monte Carlo rates against the closed-form lower bounds.
Outcome bound_validity() {
  int checks = 0;
  int violations = 0;
  double worst_margin = 1e300;
  for (double power : {1e3, 1e4}) {
    const SystemConfig config = uniform_config(4, 6, power, 10000, 7);
    const UserGroups groups = default_groups(config);
    const ZfBoundParams zf = zf_params(config, groups);
    const MrtBoundParams mrt = mrt_params(config);
    for (double t : {0.1, 0.5, 1.0}) {
      const ErgodicRates rz = ergodic_rates_zf(config, groups, t);
      const ErgodicRates rm = ergodic_rates_mrt(config, t);
      auto check = [&](double estimate, double error, double bound, const char* what) {
        const double margin = (estimate + 2.0 * error - bound);
        ++checks;
        worst_margin = std::min(worst_margin, margin);
        if (margin < 0.0) {
          ++violations;
          std::cerr << "  [3] violation P=" << power << " t=" << t << " " << what << ": estimate " << estimate
                    << " +- " << error << " < bound " << bound << '\n';
        }
      };
      check(rz.common_rate, rz.common_std_error, lb_common_zf(t, zf), "zf common");
      for (int k : groups.g1) {
        check(rz.private_rates[static_cast<std::size_t>(k)], rz.private_std_errors[static_cast<std::size_t>(k)],
              lb_private_zf(t, zf), "zf private");
      }
      check(rm.common_rate, rm.common_std_error, lb_common_mrt(t, mrt), "mrt common");
      for (std::size_t k = 0; k < 6; ++k) {
        check(rm.private_rates[k], rm.private_std_errors[k], lb_private_mrt(t, mrt), "mrt private");
      }
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " violations in " + std::to_string(checks) +
             " checks; smallest margin " + fmt("%.4f", worst_margin) + " bits/s/Hz";
  return o;
}

// Kolmogorov-Smirnov tests on the beam-gain distributions.
Outcome distributions() {
  const SystemConfig config = uniform_config(4, 6, 1.0, 1, 1234);
  const UserGroups groups = default_groups(config);
  std::vector<double> zf;
  std::vector<double> self;
  std::vector<double> cross;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const auto r = draw_channel(config, i);
    const Eigen::MatrixXcd pz = zf_precoders(r, groups);
    const Eigen::MatrixXcd pm = mrt_precoders(r);
    zf.push_back(std::norm(r.h.col(0).dot(pz.col(0))));
    self.push_back(std::norm(r.h.col(0).dot(pm.col(0))));
    cross.push_back(std::norm(r.h.col(1).dot(pm.col(0))));
  }
  auto exp1 = [](double x) { return rsma::testing::gamma_cdf_integer(1, x); };
  auto gamma_n = [](double x) { return rsma::testing::gamma_cdf_integer(4, x); };
  const double p_zf = rsma::testing::ks_p_value(rsma::testing::ks_statistic(zf, exp1), zf.size());
  const double p_self = rsma::testing::ks_p_value(rsma::testing::ks_statistic(self, gamma_n), self.size());
  const double p_cross = rsma::testing::ks_p_value(rsma::testing::ks_statistic(cross, exp1), cross.size());
  Outcome o;
  o.pass = p_zf > 0.01 && p_self > 0.01 && p_cross > 0.01;
  o.detail = "p-values: zf " + fmt("%.3f", p_zf) + ", mrt self " + fmt("%.3f", p_self) + ", mrt cross " +
             fmt("%.3f", p_cross) + " (each > 0.01)";
  return o;
}

// Equality of the two max-min terms at the ZF grid optimum, and the
// common-share objective decreasing in beta.
Outcome equality_and_monotonicity() {
  double worst_excess = -1e300;
  int equality_fail = 0;
  for (auto [n, k] : {std::pair{4, 6}, std::pair{8, 10}, std::pair{4, 8}}) {
    for (double snr : {20.0, 30.0, 40.0}) {
      const SystemConfig config = uniform_config(n, k, std::pow(10.0, snr / 10.0), 1, 0);
      const ZfBoundParams p = zf_params(config, default_groups(config));
      const GridSpec grid = build_grid(k);
      auto value = [&](std::size_t i, std::size_t j) {
        return zf_bound_objective(grid.t_values[i], grid.beta_values[j], p, n, k);
      };
      std::size_t bi = 0;
      std::size_t bj = 0;
      for (std::size_t i = 0; i < grid.t_values.size(); ++i) {
        for (std::size_t j = 0; j < grid.beta_values.size(); ++j) {
          if (value(i, j) > value(bi, bj)) {
            bi = i;
            bj = j;
          }
        }
      }
      const double t = grid.t_values[bi];
      const double beta = grid.beta_values[bj];
      const double common = lb_common_zf(t, p);
      const double gap = std::abs((1.0 - n * beta) / (k - n) * common - (beta * common + lb_private_zf(t, p)));
      double step = 0.0;
      for (auto [di, dj] : {std::pair{-1, 0}, std::pair{1, 0}, std::pair{0, -1}, std::pair{0, 1}}) {
        const long ni = static_cast<long>(bi) + di;
        const long nj = static_cast<long>(bj) + dj;
        if (ni < 0 || nj < 0 || ni >= static_cast<long>(grid.t_values.size()) ||
            nj >= static_cast<long>(grid.beta_values.size())) {
          continue;
        }
        step = std::max(step, std::abs(value(bi, bj) - value(static_cast<std::size_t>(ni), static_cast<std::size_t>(nj))));
      }
      std::cerr << "  [5] N=" << n << " K=" << k << " snr=" << snr << "  optimum t=" << t << " beta=" << beta
                << "  gap=" << gap << "  2 grid steps=" << 2.0 * step << '\n';
      worst_excess = std::max(worst_excess, gap - 2.0 * step);
      if (gap > 2.0 * step) ++equality_fail;
    }
  }

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> antennas(1, 16);
  std::uniform_int_distribution<int> extra(1, 10);
  std::uniform_real_distribution<double> log_sigma(1e-3, 10.0);
  int monotone_fail = 0;
  for (int c = 0; c < 100; ++c) {
    const int n = antennas(rng);
    const int k = n + extra(rng);
    ZfBoundParams p;
    p.rho = rho_zf(n, k);
    p.sigma = std::exp(log_sigma(rng));
    double prev = 0.0;
    for (int j = 0; j < 50; ++j) {
      const double beta = j / (49.0 * k);
      // The split follows the (1 - K beta) exponent.
      const double t = zf_high_snr_split(p, n, k, beta);
      const double g = (1.0 - n * beta) / (k - n) * std::log2(1.0 - p.rho + p.rho / t);
      if (j > 0 && !(g < prev)) {
        ++monotone_fail;
        break;
      }
      prev = g;
    }
  }
  Outcome o;
  o.pass = equality_fail == 0 && monotone_fail == 0;
  o.detail = "equality gap over 2 grid steps in " + std::to_string(equality_fail) + "/9 configs (largest excess " +
             fmt("%.3g", worst_excess) + "); monotonicity violations " + std::to_string(monotone_fail) + "/100";
  return o;
}

// Exact Lambert-W split against the fixed point and the shipped approximation.
Outcome lambert_chain() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> antennas(1, 16);
  std::uniform_int_distribution<int> extra(1, 8);
  std::uniform_real_distribution<double> snr_db(0.0, 50.0);
  int found = 0;
  int residual_fail = 0;
  int approx_fail = 0;
  int approx_checked = 0;
  double worst_residual = 0.0;
  double worst_approx = 0.0;
  for (int attempt = 0; found < 20 && attempt < 100000; ++attempt) {
    const int n = antennas(rng);
    const int k = n + extra(rng);
    const ZfBoundParams p = make_zf_params(n, k, std::pow(10.0, snr_db(rng) / 10.0), 1.0);
    const double delta = zf_low_snr_delta(p, n, k);
    if (delta * p.rho < std::numbers::e) continue;
    ++found;
    const double exact = zf_low_snr_split_exact(p, n, k);
    const double residual = std::abs(p.rho - exact * std::exp(delta * exact)) / p.rho;
    worst_residual = std::max(worst_residual, residual);
    if (residual > 1e-9) ++residual_fail;
    if (delta * p.rho >= 10.0) {
      ++approx_checked;
      const double shipped = candidate_zf_low(p, n, k).t;
      const double rel = std::abs(shipped - std::min(exact, 1.0)) / std::min(exact, 1.0);
      worst_approx = std::max(worst_approx, rel);
      if (rel > 0.25) ++approx_fail;
    }
  }
  Outcome o;
  o.pass = found == 20 && residual_fail == 0 && approx_fail == 0;
  o.detail = std::to_string(found) + " configs; worst fixed-point residual " + fmt("%.2e", worst_residual) +
             " (<= 1e-9); worst approximation error " + fmt("%.3f", worst_approx) + " over " +
             std::to_string(approx_checked) + " configs (<= 0.25)";
  return o;
}

// Stationarity of the MRT candidate objective at interior quadratic roots.
Outcome quadratic_stationarity() {
  int interior = 0;
  int fail = 0;
  double worst = 0.0;
  double worst_high_snr = 0.0;
  for (int n = 1; n <= 16; ++n) {
    for (int k = n + 1; k <= n + 8; ++k) {
      for (double snr = 0.0; snr <= 50.0; snr += 5.0) {
        const MrtBoundParams p = make_mrt_params(n, k, std::pow(10.0, snr / 10.0), 1.0);
        for (const Candidate& c : candidates_mrt(p, n, k)) {
          if (!(c.t < 1.0)) continue;
          ++interior;
          auto relative_slope = [&](const std::function<double(double)>& f) {
            const double t = c.t;
            const double slope = rsma::testing::central_difference(f, t, 1e-4 * t);
            const double secant = 0.5 * (std::abs(f(2.0 * t) - f(t)) / t + std::abs(f(t) - f(0.5 * t)) / (0.5 * t));
            return std::abs(slope) / secant;
          };
          const double rel = relative_slope([&](double t) { return mrt_bound_objective(t, p, k); });
          worst_high_snr = std::max(worst_high_snr,
                                    relative_slope([&](double t) { return mrt_high_snr_objective(t, p, k); }));
          worst = std::max(worst, rel);
          if (rel > 1e-5) ++fail;
        }
      }
    }
  }
  Outcome o;
  o.pass = interior > 0 && fail == 0;
  o.detail = std::to_string(fail) + "/" + std::to_string(interior) + " interior roots exceed 1e-5; worst " +
             fmt("%.3g", worst) + " relative slope of r_mm (high-SNR form " + fmt("%.3g", worst_high_snr) +
             ", diagnostic)";
  return o;
}

// Two identical CLI sweeps produce identical bytes.
Outcome determinism() {
  namespace fs = std::filesystem;
  const std::string tag = std::to_string(::getpid());
  const fs::path a = fs::temp_directory_path() / ("rsma_accept_a_" + tag + ".csv");
  const fs::path b = fs::temp_directory_path() / ("rsma_accept_b_" + tag + ".csv");
  std::ostringstream sink;
  const std::vector<std::string> common = {"--antennas", "4",  "--users",   "6",  "--snr",     "0:5:40",
                                           "--trials",   "100", "--seed",   "42", "--schemes", "all"};
  auto run = [&](const fs::path& out) {
    std::vector<std::string> args = common;
    args.push_back("--out");
    args.push_back(out.string());
    return cli::cli_main(args, sink, sink);
  };
  const int ca = run(a);
  const int cb = run(b);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string da = slurp(a);
  const std::string db = slurp(b);
  fs::remove(a);
  fs::remove(b);
  const auto rows = std::count(da.begin(), da.end(), '\n');
  Outcome o;
  o.pass = ca == 0 && cb == 0 && !da.empty() && da == db;
  o.detail = std::to_string(da.size()) + " bytes, " + std::to_string(rows) + " lines, " +
             (da == db ? "identical" : "different");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"closed form within 5% of the bound-objective grid optimum", closed_form_vs_oracle},
      {"RSMA keeps growing at high SNR while SDMA saturates", non_saturation},
      {"Monte Carlo rates dominate the lower bounds", bound_validity},
      {"beam-gain distributions pass Kolmogorov-Smirnov at 1%", distributions},
      {"max-min terms equal at the optimum; common-share objective decreasing", equality_and_monotonicity},
      {"Lambert-W split: fixed point and approximation accuracy", lambert_chain},
      {"MRT quadratic roots are stationary points of r_mm", quadratic_stationarity},
      {"CLI sweep output is byte-identical across runs", determinism},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: rsma-acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first
              << " - " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
