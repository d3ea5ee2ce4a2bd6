#include "rsma/rates.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "rsma/parallel.hpp"

namespace rsma {

double ErgodicRates::min_private_rate() const {
  if (private_rates.empty()) throw std::logic_error("ErgodicRates: no private rates");
  return *std::min_element(private_rates.begin(), private_rates.end());
}

double ErgodicRates::min_private_rate(std::span<const int> users) const {
  if (users.empty()) throw std::invalid_argument("ErgodicRates: empty user set");
  double best = std::numeric_limits<double>::infinity();
  for (int k : users) best = std::min(best, private_rates.at(static_cast<std::size_t>(k)));
  return best;
}

LinkGains link_gains(const ChannelRealization& realization, const PrecoderSet& precoders) {
  const Eigen::VectorXcd common = realization.h.adjoint() * precoders.common;
  const Eigen::MatrixXcd cross = realization.h.adjoint() * precoders.priv;
  LinkGains gains;
  gains.common_gain.resize(static_cast<std::size_t>(common.size()));
  for (Eigen::Index k = 0; k < common.size(); ++k) gains.common_gain[static_cast<std::size_t>(k)] = std::norm(common(k));
  gains.cross = cross.cwiseAbs2();
  return gains;
}

SinrSnapshot sinr_from_gains(const LinkGains& gains, std::span<const double> mu,
                             std::span<const double> v, double power, double t) {
  const std::size_t k_users = gains.common_gain.size();
  if (mu.size() != k_users || v.size() != k_users) {
    throw std::invalid_argument("sinr: mu and v must have one entry per user");
  }
  SinrSnapshot out;
  out.gamma_common.resize(k_users);
  out.gamma_private.resize(k_users);
  const double private_power = power * t;
  const double common_power = power * (1.0 - t);
  for (std::size_t k = 0; k < k_users; ++k) {
    const auto row = static_cast<Eigen::Index>(k);
    double others = 0.0;
    for (std::size_t j = 0; j < k_users; ++j) {
      if (j != k) others += mu[j] * gains.cross(row, static_cast<Eigen::Index>(j));
    }
    const double own = mu[k] * gains.cross(row, row);
    out.gamma_common[k] =
        common_power * v[k] * gains.common_gain[k] / (1.0 + private_power * v[k] * (others + own));
    out.gamma_private[k] = private_power * v[k] * own / (1.0 + private_power * v[k] * others);
  }
  return out;
}

SinrSnapshot instant_sinr(const ChannelRealization& realization, const PrecoderSet& precoders,
                          double power) {
  return sinr_from_gains(link_gains(realization, precoders), precoders.mu, realization.v, power,
                         precoders.t);
}

ChannelSource default_source(const SystemConfig& config) {
  return [config](std::uint64_t trial) { return draw_channel(config, trial); };
}

namespace {

// Fills `out` with log2(1 + min_k gamma_{c,k}) followed by log2(1 + gamma_k)
// for every user, once per evaluated point.
using TrialEvaluator = std::function<void(std::uint64_t trial, std::span<double> out)>;

// Trials are grouped into fixed blocks whose partial sums are combined in
// block order, so the estimate does not depend on the worker count.
std::vector<ErgodicRates> monte_carlo(int trials, std::size_t points, int k_users,
                                      const TrialEvaluator& evaluate) {
  if (trials < 1) throw std::invalid_argument("monte carlo: trials must be >= 1");
  constexpr int kBlock = 32;
  const std::size_t width = static_cast<std::size_t>(k_users) + 1;
  const std::size_t stride = points * width;
  const std::size_t n_blocks = static_cast<std::size_t>((trials + kBlock - 1) / kBlock);

  std::vector<double> sums(n_blocks * stride, 0.0);
  std::vector<double> squares(n_blocks * stride, 0.0);
  parallel_for(n_blocks, [&](std::size_t block) {
    std::vector<double> out(stride);
    const int begin = static_cast<int>(block) * kBlock;
    const int end = std::min(trials, begin + kBlock);
    double* sum = sums.data() + block * stride;
    double* sq = squares.data() + block * stride;
    for (int trial = begin; trial < end; ++trial) {
      std::fill(out.begin(), out.end(), 0.0);
      evaluate(static_cast<std::uint64_t>(trial), out);
      for (std::size_t i = 0; i < stride; ++i) {
        sum[i] += out[i];
        sq[i] += out[i] * out[i];
      }
    }
  });

  std::vector<double> total(stride, 0.0);
  std::vector<double> total_sq(stride, 0.0);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    for (std::size_t i = 0; i < stride; ++i) {
      total[i] += sums[b * stride + i];
      total_sq[i] += squares[b * stride + i];
    }
  }

  const double n = static_cast<double>(trials);
  auto mean_and_error = [&](std::size_t i) {
    const double mean = total[i] / n;
    double var = 0.0;
    if (trials > 1) var = std::max(0.0, (total_sq[i] - total[i] * mean) / (n - 1.0));
    return std::pair{mean, std::sqrt(var / n)};
  };

  std::vector<ErgodicRates> result(points);
  for (std::size_t p = 0; p < points; ++p) {
    ErgodicRates& r = result[p];
    r.trials_used = trials;
    std::tie(r.common_rate, r.common_std_error) = mean_and_error(p * width);
    r.std_error = r.common_std_error;
    r.private_rates.resize(static_cast<std::size_t>(k_users));
    r.private_std_errors.resize(static_cast<std::size_t>(k_users));
    for (std::size_t k = 0; k < static_cast<std::size_t>(k_users); ++k) {
      std::tie(r.private_rates[k], r.private_std_errors[k]) = mean_and_error(p * width + 1 + k);
      r.std_error = std::max(r.std_error, r.private_std_errors[k]);
    }
  }
  return result;
}

void write_log_rates(const SinrSnapshot& sinr, std::span<double> out) {
  const double min_common = *std::min_element(sinr.gamma_common.begin(), sinr.gamma_common.end());
  out[0] = std::log2(1.0 + min_common);
  for (std::size_t k = 0; k < sinr.gamma_private.size(); ++k) {
    out[1 + k] = std::log2(1.0 + sinr.gamma_private[k]);
  }
}

void check_split(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("power split t must lie in [0, 1]");
}

// Evaluates one precoder construction at every t in `t_values`.
template <typename BuildPrecoders>
std::vector<ErgodicRates> sweep_split(const SystemConfig& config, std::span<const double> t_values,
                                      const ChannelSource& source, BuildPrecoders build) {
  for (double t : t_values) check_split(t);
  const std::size_t width = static_cast<std::size_t>(config.n_users) + 1;
  return monte_carlo(config.trials, t_values.size(), config.n_users,
                     [&](std::uint64_t trial, std::span<double> out) {
                       const ChannelRealization realization = source(trial);
                       const PrecoderSet precoders = build(realization);
                       const LinkGains gains = link_gains(realization, precoders);
                       for (std::size_t p = 0; p < t_values.size(); ++p) {
                         write_log_rates(sinr_from_gains(gains, precoders.mu, realization.v,
                                                         config.power, t_values[p]),
                                         out.subspan(p * width, width));
                       }
                     });
}

}  // namespace

ErgodicRates ergodic_rates_zf(const SystemConfig& config, const UserGroups& groups, double t) {
  return ergodic_rates_zf(config, groups, t, default_source(config));
}

ErgodicRates ergodic_rates_zf(const SystemConfig& config, const UserGroups& groups, double t,
                              const ChannelSource& source) {
  config.validate();
  groups.validate(config.n_users);
  const double split[] = {t};
  return sweep_split(config, split, source, [&](const ChannelRealization& r) {
           return rsma_zf_precoder_set(r, groups, 0.0);
         }).front();
}

std::vector<ErgodicRates> ergodic_rates_zf_sweep(const SystemConfig& config,
                                                 const UserGroups& groups,
                                                 std::span<const double> t_values) {
  config.validate();
  groups.validate(config.n_users);
  return sweep_split(config, t_values, default_source(config), [&](const ChannelRealization& r) {
    return rsma_zf_precoder_set(r, groups, 0.0);
  });
}

ErgodicRates ergodic_rates_mrt(const SystemConfig& config, double t) {
  return ergodic_rates_mrt(config, t, default_source(config));
}

ErgodicRates ergodic_rates_mrt(const SystemConfig& config, double t, const ChannelSource& source) {
  config.validate();
  const double split[] = {t};
  return sweep_split(config, split, source, [](const ChannelRealization& r) {
           return rsma_mrt_precoder_set(r, 0.0);
         }).front();
}

std::vector<ErgodicRates> ergodic_rates_mrt_sweep(const SystemConfig& config,
                                                  std::span<const double> t_values) {
  config.validate();
  return sweep_split(config, t_values, default_source(config),
                     [](const ChannelRealization& r) { return rsma_mrt_precoder_set(r, 0.0); });
}

double min_rate_rsma_zf(const ErgodicRates& rates, double beta, const UserGroups& groups) {
  const int n = static_cast<int>(groups.g1.size());
  const int k = groups.n_users();
  if (n < 1 || k <= n) throw std::invalid_argument("min_rate_rsma_zf: need 1 <= |G1| < K");
  if (!(beta >= 0.0 && beta < 1.0 / n)) throw std::invalid_argument("min_rate_rsma_zf: beta must lie in [0, 1/N)");
  const double group1 = beta * rates.common_rate + rates.min_private_rate(groups.g1);
  const double group2 = (1.0 - n * beta) / static_cast<double>(k - n) * rates.common_rate;
  return std::min(group1, group2);
}

double min_rate_rsma_mrt(const ErgodicRates& rates, int n_users) {
  if (n_users < 1) throw std::invalid_argument("min_rate_rsma_mrt: n_users must be >= 1");
  return rates.common_rate / n_users + rates.min_private_rate();
}

std::vector<std::vector<int>> sdma_groups(int n_antennas, int n_users) {
  if (n_antennas < 1 || n_users < 1) throw std::invalid_argument("sdma_groups: empty system");
  std::vector<std::vector<int>> groups;
  for (int k = 0; k < n_users; ++k) {
    if (k % n_antennas == 0) groups.emplace_back();
    groups.back().push_back(k);
  }
  return groups;
}

namespace {

PrecoderSet sdma_precoder_set(const ChannelRealization& realization, Eigen::MatrixXcd priv) {
  PrecoderSet set;
  set.common = Eigen::VectorXcd::Zero(realization.n_antennas());
  set.priv = std::move(priv);
  set.mu.assign(static_cast<std::size_t>(realization.n_users()),
                1.0 / static_cast<double>(realization.n_users()));
  set.t = 1.0;
  return set;
}

}  // namespace

ErgodicRates sdma_zf_grouped_rates(const SystemConfig& config) {
  return sdma_zf_grouped_rates(config, default_source(config));
}

ErgodicRates sdma_zf_grouped_rates(const SystemConfig& config, const ChannelSource& source) {
  config.validate(/*require_overloaded=*/false);
  const auto groups = sdma_groups(config.n_antennas, config.n_users);
  const double split[] = {1.0};
  return sweep_split(config, split, source, [&](const ChannelRealization& r) {
           Eigen::MatrixXcd priv(r.n_antennas(), r.n_users());
           for (const auto& group : groups) {
             Eigen::MatrixXcd hg(r.n_antennas(), static_cast<Eigen::Index>(group.size()));
             for (std::size_t i = 0; i < group.size(); ++i) hg.col(static_cast<Eigen::Index>(i)) = r.h.col(group[i]);
             const Eigen::MatrixXcd directions = zero_forcing_directions(hg);
             for (std::size_t i = 0; i < group.size(); ++i) priv.col(group[i]) = directions.col(static_cast<Eigen::Index>(i));
           }
           return sdma_precoder_set(r, std::move(priv));
         }).front();
}

double sdma_zf_grouped(const SystemConfig& config) {
  return sdma_zf_grouped_rates(config).min_private_rate();
}

ErgodicRates sdma_mrt_rates(const SystemConfig& config) {
  return sdma_mrt_rates(config, default_source(config));
}

ErgodicRates sdma_mrt_rates(const SystemConfig& config, const ChannelSource& source) {
  config.validate(/*require_overloaded=*/false);
  const double split[] = {1.0};
  return sweep_split(config, split, source, [](const ChannelRealization& r) {
           return sdma_precoder_set(r, mrt_precoders(r));
         }).front();
}

double sdma_mrt(const SystemConfig& config) { return sdma_mrt_rates(config).min_private_rate(); }

}  // namespace rsma
