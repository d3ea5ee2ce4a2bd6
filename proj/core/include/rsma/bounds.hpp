#pragma once

#include "rsma/channel.hpp"
#include "rsma/precoding.hpp"

namespace rsma {

/// Coefficients of the ZF-RSMA rate bounds for the weakest G1 user.
struct ZfBoundParams {
  double rho = 0.0;       // common-rate coefficient, in (0, 1)
  double sigma = 0.0;     // v_min * (P / N) * e^{psi(1)}
  double v_min_g1 = 0.0;  // smallest large-scale coefficient in G1
};

/// Coefficients of the MRT-RSMA rate bounds for the weakest user overall.
struct MrtBoundParams {
  double rho = 0.0;
  double alpha = 0.0;   // v_min * (P / K) * e^{psi(N + K - 1)}
  double lambda = 0.0;  // v_min * P * (K - 1) / K
  double v_min = 0.0;
};

/// rho_ZF = N / (m - 1) * exp(-gamma - 1 / (2 (m - 1))) with
/// m = round(N (K - N + 1)). Throws std::invalid_argument if K <= N, N < 1
/// or m - 1 <= 0.
double rho_zf(int n_antennas, int n_users);

/// rho_MRT = K / ((N + K - 1) K - 1) * exp(-gamma - 1 / (2 ((N + K - 1) K - 1))).
double rho_mrt(int n_antennas, int n_users);

ZfBoundParams make_zf_params(int n_antennas, int n_users, double power, double v_min_g1);
MrtBoundParams make_mrt_params(int n_antennas, int n_users, double power, double v_min);

/// Parameters for a config, taking v over G1 (ZF) or over all users (MRT).
ZfBoundParams zf_params(const SystemConfig& config, const UserGroups& groups);
MrtBoundParams mrt_params(const SystemConfig& config);

/// Private-rate bound log2(1 + sigma t), t in [0, 1].
double lb_private_zf(double t, const ZfBoundParams& params);

/// High-SNR common-rate bound log2(1 - rho + rho / t), t in (0, 1].
/// Throws std::domain_error for t <= 0.
double lb_common_zf(double t, const ZfBoundParams& params);

/// log2(1 + alpha t) - log2(1 + lambda t), t in [0, 1].
double lb_private_mrt(double t, const MrtBoundParams& params);

/// log2(1 - rho + rho / t), t in (0, 1]. Throws std::domain_error for t <= 0.
double lb_common_mrt(double t, const MrtBoundParams& params);

}  // namespace rsma
