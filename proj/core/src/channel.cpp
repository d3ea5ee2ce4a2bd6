#include "rsma/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rsma {

void SystemConfig::validate(bool require_overloaded) const {
  if (n_antennas < 1) throw std::invalid_argument("config: at least one antenna is required");
  if (n_users < 1) throw std::invalid_argument("config: at least one user is required");
  if (require_overloaded && n_users <= n_antennas) {
    throw std::invalid_argument("config: overloaded regime requires K > N (got N=" +
                                std::to_string(n_antennas) + ", K=" + std::to_string(n_users) + ")");
  }
  if (static_cast<int>(large_scale.size()) != n_users) {
    throw std::invalid_argument("config: expected " + std::to_string(n_users) +
                                " large-scale coefficients, got " +
                                std::to_string(large_scale.size()));
  }
  for (double v : large_scale) {
    if (!(v > 0.0 && v <= 1.0)) {
      throw std::invalid_argument("config: large-scale coefficients must lie in (0, 1]");
    }
  }
  if (!(power >= 0.0) || !std::isfinite(power)) {
    throw std::invalid_argument("config: power must be finite and non-negative");
  }
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
}

double SystemConfig::min_large_scale() const {
  if (large_scale.empty()) throw std::invalid_argument("config: no large-scale coefficients");
  return *std::min_element(large_scale.begin(), large_scale.end());
}

SystemConfig uniform_config(int n_antennas, int n_users, double power, int trials,
                            std::uint64_t seed) {
  SystemConfig config;
  config.n_antennas = n_antennas;
  config.n_users = n_users;
  config.power = power;
  config.large_scale.assign(static_cast<std::size_t>(std::max(n_users, 0)), 1.0);
  config.trials = trials;
  config.seed = seed;
  return config;
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
  auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x & 0xffffffffULL); };
  auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
  std::seed_seq seq{lo(seed), hi(seed), lo(tag), hi(tag), lo(index), hi(index)};
  return std::mt19937_64(seq);
}

ChannelRealization draw_channel(const SystemConfig& config, std::uint64_t trial_index) {
  if (config.n_antennas < 1 || config.n_users < 1) {
    throw std::invalid_argument("draw_channel: empty channel dimensions");
  }
  auto engine = make_stream(config.seed, kChannelStreamTag, trial_index);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));

  ChannelRealization out;
  out.h.resize(config.n_antennas, config.n_users);
  for (Eigen::Index k = 0; k < out.h.cols(); ++k) {
    for (Eigen::Index n = 0; n < out.h.rows(); ++n) {
      const double re = gauss(engine);
      const double im = gauss(engine);
      out.h(n, k) = {re, im};
    }
  }
  out.v = config.large_scale;
  return out;
}

std::vector<double> draw_large_scale(int k_users, std::uint64_t seed) {
  if (k_users < 2) {
    throw std::invalid_argument("draw_large_scale: need at least two users to pin both extremes");
  }
  auto engine = make_stream(seed, kLargeScaleStreamTag, 0);
  std::uniform_real_distribution<double> uniform(0.1, 1.0);

  std::vector<double> v(static_cast<std::size_t>(k_users));
  v.front() = 0.1;
  for (int k = 1; k + 1 < k_users; ++k) v[static_cast<std::size_t>(k)] = uniform(engine);
  v.back() = 1.0;
  return v;
}

}  // namespace rsma
