#pragma once

#include <cstddef>
#include <vector>

#include "rsma/allocator.hpp"
#include "rsma/bounds.hpp"
#include "rsma/channel.hpp"
#include "rsma/precoding.hpp"

namespace rsma {

/// Search grid: 130 power splits on [1e-6, 1] (60 log-spaced below 0.1,
/// 70 linear on [0.1, 1]) and ceil(1 / (0.001 K)) uniform shares on [0, 1/K].
struct GridSpec {
  std::vector<double> t_values;
  std::vector<double> beta_values;
};

inline constexpr int kLogSplitPoints = 60;
inline constexpr int kLinearSplitPoints = 70;
inline constexpr double kMinGridSplit = 1e-6;

GridSpec build_grid(int n_users);

/// Best grid point. beta and beta_index are 0 for MRT.
struct OracleResult {
  Scheme scheme = Scheme::kZfRsma;
  double t = 1.0;
  double beta = 0.0;
  double value = 0.0;
  std::size_t t_index = 0;
  std::size_t beta_index = 0;
};

/// Maximizes the bound-based ZF objective over the (t, beta) grid and the
/// bound-based MRT objective over the t grid. Ties go to the smaller t,
/// then the smaller beta, then ZF.
OracleResult exhaustive_search(const SystemConfig& config, const UserGroups& groups);
OracleResult exhaustive_search(const ZfBoundParams& zf, const MrtBoundParams& mrt, int n_antennas,
                               int n_users, const GridSpec& grid);

/// The `count` best grid points of the bound objective, best first, in the
/// same tie order as exhaustive_search.
std::vector<OracleResult> top_grid_points(const ZfBoundParams& zf, const MrtBoundParams& mrt,
                                          int n_antennas, int n_users, const GridSpec& grid,
                                          std::size_t count);

/// Monte Carlo max-min rate (ZF: beta-split common rate, MRT: even split) at
/// each given operating point, all over the config's channel draws.
std::vector<double> rescore_with_monte_carlo(const SystemConfig& config, const UserGroups& groups,
                                             const std::vector<OracleResult>& points);

/// Grid search over the Monte Carlo max-min rate itself rather than the
/// bound objective. Every grid point sees the same channel draws.
OracleResult exhaustive_search_monte_carlo(const SystemConfig& config, const UserGroups& groups,
                                           const GridSpec& grid);

}  // namespace rsma
