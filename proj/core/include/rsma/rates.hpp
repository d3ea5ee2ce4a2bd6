#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rsma/channel.hpp"
#include "rsma/precoding.hpp"

namespace rsma {

/// Per-user SINRs of one channel realization.
struct SinrSnapshot {
  std::vector<double> gamma_common;   // gamma_{c,k}
  std::vector<double> gamma_private;  // gamma_k
};

/// Monte Carlo estimate of the common rate R_c and the private rates R_k,
/// in bits/s/Hz, with standard errors of each mean.
struct ErgodicRates {
  double common_rate = 0.0;
  std::vector<double> private_rates;
  int trials_used = 0;
  /// Largest of the per-stream standard errors below.
  double std_error = 0.0;
  double common_std_error = 0.0;
  std::vector<double> private_std_errors;

  double min_private_rate() const;
  double min_private_rate(std::span<const int> users) const;
};

/// Squared beam gains of one realization: common_gain[k] = |h_k^H p_c|^2 and
/// cross(k, j) = |h_k^H p_j|^2.
struct LinkGains {
  std::vector<double> common_gain;
  Eigen::MatrixXd cross;
};

LinkGains link_gains(const ChannelRealization& realization, const PrecoderSet& precoders);

/// SINRs for a given power split from precomputed gains.
SinrSnapshot sinr_from_gains(const LinkGains& gains, std::span<const double> mu,
                             std::span<const double> v, double power, double t);

/// Common and private SINRs of every user for one realization.
SinrSnapshot instant_sinr(const ChannelRealization& realization, const PrecoderSet& precoders,
                          double power);

/// Supplies the realization for a trial index. Defaults to draw_channel.
using ChannelSource = std::function<ChannelRealization(std::uint64_t trial)>;

ChannelSource default_source(const SystemConfig& config);

/// RSMA with ZF private streams on G1 (mu = 1/N) and no private stream on G2.
ErgodicRates ergodic_rates_zf(const SystemConfig& config, const UserGroups& groups, double t);
ErgodicRates ergodic_rates_zf(const SystemConfig& config, const UserGroups& groups, double t,
                              const ChannelSource& source);

/// ZF rates at several power splits over the same channel draws, so the
/// estimates are comparable point to point.
std::vector<ErgodicRates> ergodic_rates_zf_sweep(const SystemConfig& config,
                                                 const UserGroups& groups,
                                                 std::span<const double> t_values);

/// RSMA with MRT private streams for every user (mu = 1/K).
ErgodicRates ergodic_rates_mrt(const SystemConfig& config, double t);
ErgodicRates ergodic_rates_mrt(const SystemConfig& config, double t, const ChannelSource& source);

std::vector<ErgodicRates> ergodic_rates_mrt_sweep(const SystemConfig& config,
                                                  std::span<const double> t_values);

/// Max-min rate of ZF-RSMA for common-rate share beta per G1 user:
/// min(beta R_c + min_{k in G1} R_k, (1 - N beta) / (K - N) R_c).
/// Requires 0 <= beta < 1/N.
double min_rate_rsma_zf(const ErgodicRates& rates, double beta, const UserGroups& groups);

/// Max-min rate of MRT-RSMA with the common rate split evenly:
/// R_c / K + min_k R_k.
double min_rate_rsma_mrt(const ErgodicRates& rates, int n_users);

/// Index-ordered partition of K users into ceil(K/N) groups of at most N.
std::vector<std::vector<int>> sdma_groups(int n_antennas, int n_users);

/// SDMA benchmark 1: per-group ZF, all groups on air at once, t = 1 and
/// mu = 1/K. Per-user ergodic rates (common rate is zero).
ErgodicRates sdma_zf_grouped_rates(const SystemConfig& config);
ErgodicRates sdma_zf_grouped_rates(const SystemConfig& config, const ChannelSource& source);

/// Minimum over users of the SDMA-ZF ergodic rates.
double sdma_zf_grouped(const SystemConfig& config);

/// SDMA benchmark 2: MRT for every user, t = 1, mu = 1/K.
ErgodicRates sdma_mrt_rates(const SystemConfig& config);
ErgodicRates sdma_mrt_rates(const SystemConfig& config, const ChannelSource& source);

double sdma_mrt(const SystemConfig& config);

}  // namespace rsma
