#include "rsma/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "rsma/rates.hpp"

namespace rsma {

GridSpec build_grid(int n_users) {
  if (n_users < 2) throw std::invalid_argument("build_grid: need K >= 2");
  GridSpec grid;
  grid.t_values.reserve(kLogSplitPoints + kLinearSplitPoints);
  const double log_lo = std::log10(kMinGridSplit);
  const double log_hi = std::log10(0.1);
  for (int i = 0; i < kLogSplitPoints; ++i) {
    grid.t_values.push_back(std::pow(10.0, log_lo + (log_hi - log_lo) * i / kLogSplitPoints));
  }
  for (int i = 0; i < kLinearSplitPoints; ++i) {
    grid.t_values.push_back(0.1 + 0.9 * i / (kLinearSplitPoints - 1));
  }
  grid.t_values.front() = kMinGridSplit;
  grid.t_values.back() = 1.0;

  // ceil(1 / (0.001 K)) in integer arithmetic.
  const int count = (1000 + n_users - 1) / n_users;
  grid.beta_values.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    grid.beta_values.push_back(count == 1 ? 0.0 : static_cast<double>(i) / (n_users * (count - 1.0)));
  }
  grid.beta_values.back() = 1.0 / n_users;
  return grid;
}

namespace {

// Visits every grid point in tie-break order: by t, then ZF by beta, then MRT.
template <typename ZfValue, typename MrtValue, typename Visit>
void for_each_point(const GridSpec& grid, ZfValue zf_value, MrtValue mrt_value, Visit visit) {
  for (std::size_t i = 0; i < grid.t_values.size(); ++i) {
    for (std::size_t j = 0; j < grid.beta_values.size(); ++j) {
      OracleResult p{Scheme::kZfRsma, grid.t_values[i], grid.beta_values[j], 0.0, i, j};
      p.value = zf_value(i, p.t, p.beta);
      visit(p);
    }
    OracleResult p{Scheme::kMrtRsma, grid.t_values[i], 0.0, 0.0, i, 0};
    p.value = mrt_value(i, p.t);
    visit(p);
  }
}

template <typename ZfValue, typename MrtValue>
OracleResult argmax(const GridSpec& grid, ZfValue zf_value, MrtValue mrt_value) {
  if (grid.t_values.empty() || grid.beta_values.empty()) throw std::invalid_argument("exhaustive_search: empty grid");
  OracleResult best;
  bool first = true;
  for_each_point(grid, zf_value, mrt_value, [&](const OracleResult& p) {
    if (first || p.value > best.value) {
      best = p;
      first = false;
    }
  });
  return best;
}

auto bound_values(const ZfBoundParams& zf, const MrtBoundParams& mrt, int n, int k) {
  return std::pair{[&zf, n, k](std::size_t, double t, double beta) { return zf_bound_objective(t, beta, zf, n, k); },
                   [&mrt, k](std::size_t, double t) { return mrt_bound_objective(t, mrt, k); }};
}

}  // namespace

OracleResult exhaustive_search(const SystemConfig& config, const UserGroups& groups) {
  return exhaustive_search(zf_params(config, groups), mrt_params(config), config.n_antennas,
                           config.n_users, build_grid(config.n_users));
}

OracleResult exhaustive_search(const ZfBoundParams& zf, const MrtBoundParams& mrt, int n_antennas,
                               int n_users, const GridSpec& grid) {
  const auto [zf_value, mrt_value] = bound_values(zf, mrt, n_antennas, n_users);
  return argmax(grid, zf_value, mrt_value);
}

std::vector<OracleResult> top_grid_points(const ZfBoundParams& zf, const MrtBoundParams& mrt,
                                          int n_antennas, int n_users, const GridSpec& grid,
                                          std::size_t count) {
  std::vector<OracleResult> all;
  const auto [zf_value, mrt_value] = bound_values(zf, mrt, n_antennas, n_users);
  for_each_point(grid, zf_value, mrt_value, [&](const OracleResult& p) { all.push_back(p); });
  count = std::min(count, all.size());
  std::stable_sort(all.begin(), all.end(),
                   [](const OracleResult& a, const OracleResult& b) { return a.value > b.value; });
  all.resize(count);
  return all;
}

std::vector<double> rescore_with_monte_carlo(const SystemConfig& config, const UserGroups& groups,
                                             const std::vector<OracleResult>& points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const OracleResult& p : points) {
    if (p.scheme == Scheme::kZfRsma) {
      out.push_back(min_rate_rsma_zf(ergodic_rates_zf(config, groups, p.t), p.beta, groups));
    } else {
      out.push_back(min_rate_rsma_mrt(ergodic_rates_mrt(config, p.t), config.n_users));
    }
  }
  return out;
}

OracleResult exhaustive_search_monte_carlo(const SystemConfig& config, const UserGroups& groups,
                                           const GridSpec& grid) {
  const auto zf = ergodic_rates_zf_sweep(config, groups, grid.t_values);
  const auto mrt = ergodic_rates_mrt_sweep(config, grid.t_values);
  return argmax(
      grid, [&](std::size_t i, double, double beta) { return min_rate_rsma_zf(zf[i], beta, groups); },
      [&](std::size_t i, double) { return min_rate_rsma_mrt(mrt[i], config.n_users); });
}

}  // namespace rsma
