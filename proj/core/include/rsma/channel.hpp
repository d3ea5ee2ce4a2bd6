#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>
#include <vector>

namespace rsma {

/// Full parameterization of one downlink experiment: N transmit antennas
/// serving K single-antenna users with total transmit power P (linear).
struct SystemConfig {
  int n_antennas = 4;
  int n_users = 6;
  double power = 100.0;
  /// Per-user large-scale fading coefficients v_k in (0, 1].
  std::vector<double> large_scale;
  int trials = 100;
  std::uint64_t seed = 0;

  /// Checks the invariants. The overloaded regime K > N is required unless
  /// `require_overloaded` is false, which some benchmark sanity checks use.
  /// Throws std::invalid_argument naming the first violated invariant.
  void validate(bool require_overloaded = true) const;

  double min_large_scale() const;
};

/// Builds a config with v_k = 1 for all users.
SystemConfig uniform_config(int n_antennas, int n_users, double power, int trials,
                            std::uint64_t seed);

/// One draw of the N x K channel matrix; column k is h_k.
struct ChannelRealization {
  Eigen::MatrixXcd h;
  std::vector<double> v;

  int n_antennas() const { return static_cast<int>(h.rows()); }
  int n_users() const { return static_cast<int>(h.cols()); }
};

/// Independent random streams addressed by (seed, stream tag, index). The
/// same triple always yields the same engine state.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index);

inline constexpr std::uint64_t kChannelStreamTag = 0x6368616e6e656cULL;
inline constexpr std::uint64_t kLargeScaleStreamTag = 0x6c61726765ULL;

/// Small-scale Rayleigh fading: i.i.d. CN(0, 1) entries, a pure function of
/// (config.seed, trial_index).
ChannelRealization draw_channel(const SystemConfig& config, std::uint64_t trial_index);

/// Large-scale coefficients for `k_users` users: the first user is pinned to
/// 0.1, the last to 1.0 and the rest are U[0.1, 1]. Requires k_users >= 2.
std::vector<double> draw_large_scale(int k_users, std::uint64_t seed);

}  // namespace rsma
