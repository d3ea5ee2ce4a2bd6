#include "rsma/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rsma/specfun.hpp"

namespace rsma {

namespace {

void check_dimensions(int n_antennas, int n_users) {
  if (n_antennas < 1 || n_users <= n_antennas) {
    throw std::invalid_argument("bounds: require K > N >= 1");
  }
}

double common_bound(double t, double rho) {
  if (!(t > 0.0)) throw std::domain_error("common-rate bound requires t > 0");
  return std::log2(1.0 - rho + rho / t);
}

}  // namespace

double rho_zf(int n_antennas, int n_users) {
  check_dimensions(n_antennas, n_users);
  // The argument is a positive integer product, so round-half-away is exact.
  const double m = std::round(static_cast<double>(n_antennas) * (n_users - n_antennas + 1)) - 1.0;
  if (m <= 0.0) throw std::invalid_argument("rho_zf: degenerate denominator");
  return n_antennas / m * std::exp(-specfun::kEulerGamma - 1.0 / (2.0 * m));
}

double rho_mrt(int n_antennas, int n_users) {
  check_dimensions(n_antennas, n_users);
  const double m = static_cast<double>(n_antennas + n_users - 1) * n_users - 1.0;
  return n_users / m * std::exp(-specfun::kEulerGamma - 1.0 / (2.0 * m));
}

ZfBoundParams make_zf_params(int n_antennas, int n_users, double power, double v_min_g1) {
  ZfBoundParams p;
  p.rho = rho_zf(n_antennas, n_users);
  p.v_min_g1 = v_min_g1;
  p.sigma = v_min_g1 * power / n_antennas * std::exp(specfun::digamma(1));
  return p;
}

MrtBoundParams make_mrt_params(int n_antennas, int n_users, double power, double v_min) {
  MrtBoundParams p;
  p.rho = rho_mrt(n_antennas, n_users);
  p.v_min = v_min;
  p.alpha = v_min * power / n_users * std::exp(specfun::digamma(n_antennas + n_users - 1));
  p.lambda = v_min * power * (n_users - 1) / n_users;
  return p;
}

ZfBoundParams zf_params(const SystemConfig& config, const UserGroups& groups) {
  config.validate();
  groups.validate(config.n_users);
  double v_min = std::numeric_limits<double>::infinity();
  for (int k : groups.g1) v_min = std::min(v_min, config.large_scale[static_cast<std::size_t>(k)]);
  return make_zf_params(config.n_antennas, config.n_users, config.power, v_min);
}

MrtBoundParams mrt_params(const SystemConfig& config) {
  config.validate();
  return make_mrt_params(config.n_antennas, config.n_users, config.power, config.min_large_scale());
}

double lb_private_zf(double t, const ZfBoundParams& params) {
  return std::log2(1.0 + params.sigma * t);
}

double lb_common_zf(double t, const ZfBoundParams& params) { return common_bound(t, params.rho); }

double lb_private_mrt(double t, const MrtBoundParams& params) {
  return std::log2(1.0 + params.alpha * t) - std::log2(1.0 + params.lambda * t);
}

double lb_common_mrt(double t, const MrtBoundParams& params) { return common_bound(t, params.rho); }

}  // namespace rsma
