#include "rsma/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rsma/specfun.hpp"

namespace rsma {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kZfRsma:
      return "ZF-RSMA";
    case Scheme::kMrtRsma:
      return "MRT-RSMA";
  }
  return "unknown";
}

namespace {

double clamp_split(double t) {
  if (std::isnan(t)) return 1.0;
  return std::clamp(t, kMinPowerSplit, 1.0);
}

// Positive finite roots are kept (capped at 1); anything else falls back to 1.
double root_or_one(double root) {
  if (!std::isfinite(root) || root <= 0.0) return 1.0;
  return clamp_split(std::min(1.0, root));
}

Candidate zf_candidate(int index, double t, const ZfBoundParams& params, int n, int k) {
  Candidate c;
  c.index = index;
  c.t = clamp_split(t);
  c.scheme = Scheme::kZfRsma;
  c.r_mm = zf_bound_objective(c.t, params, n, k);
  return c;
}

}  // namespace

double zf_bound_objective(double t, const ZfBoundParams& params, int n_antennas, int n_users) {
  return zf_bound_objective(t, 0.0, params, n_antennas, n_users);
}

double zf_bound_objective(double t, double beta, const ZfBoundParams& params, int n_antennas,
                          int n_users) {
  const double common = lb_common_zf(t, params);
  const double group1 = beta * common + lb_private_zf(t, params);
  const double group2 = (1.0 - n_antennas * beta) / (n_users - n_antennas) * common;
  return std::min(group1, group2);
}

double mrt_bound_objective(double t, const MrtBoundParams& params, int n_users) {
  return lb_common_mrt(t, params) / n_users + lb_private_mrt(t, params);
}

double mrt_high_snr_objective(double t, const MrtBoundParams& params, int n_users) {
  return std::log2(params.rho / t) / n_users + lb_private_mrt(t, params);
}

double zf_high_snr_split(const ZfBoundParams& params, int n_antennas, int n_users, double beta) {
  const double excess = n_users - n_antennas;
  const double common_weight = 1.0 - n_users * beta;
  // Log domain: sigma^{K-N} overflows for large K - N.
  const double log_t = (common_weight * std::log(params.rho) - excess * std::log(params.sigma)) /
                       (common_weight + excess);
  return std::exp(log_t);
}

double zf_low_snr_delta(const ZfBoundParams& params, int n_antennas, int n_users) {
  return std::numbers::ln2 * (n_users - n_antennas) * params.sigma;
}

double zf_low_snr_split_exact(const ZfBoundParams& params, int n_antennas, int n_users) {
  const double delta = zf_low_snr_delta(params, n_antennas, n_users);
  if (!(delta > 0.0)) throw std::domain_error("zf_low_snr_split_exact: delta must be positive");
  return specfun::lambert_w0(delta * params.rho) / delta;
}

Candidate candidate_zf_high(const ZfBoundParams& params, int n_antennas, int n_users) {
  const double t = std::min(zf_high_snr_split(params, n_antennas, n_users), 1.0);
  return zf_candidate(1, t, params, n_antennas, n_users);
}

Candidate candidate_zf_low(const ZfBoundParams& params, int n_antennas, int n_users) {
  const double delta = zf_low_snr_delta(params, n_antennas, n_users);
  const double x = delta * params.rho;
  double t = 1.0;
  if (x >= std::numbers::e) {
    // At x == e the approximation is exactly 1 / delta; the helper itself
    // only accepts x > e.
    t = (x == std::numbers::e ? 1.0 : specfun::lambert_w0_log_approx(x)) / delta;
  }
  return zf_candidate(2, t, params, n_antennas, n_users);
}

MrtQuadratic mrt_quadratic(const MrtBoundParams& params, int n_users) {
  MrtQuadratic q;
  q.a = -params.alpha * params.lambda;
  q.b = n_users * (params.alpha - params.lambda) - (params.alpha + params.lambda);
  return q;
}

std::array<Candidate, 2> candidates_mrt(const MrtBoundParams& params, int n_antennas, int n_users) {
  if (n_antennas < 1 || n_users <= n_antennas) throw std::invalid_argument("candidates_mrt: require K > N >= 1");
  const MrtQuadratic q = mrt_quadratic(params, n_users);
  const double discriminant = q.b * q.b + 4.0 * q.a;
  const bool usable = discriminant >= 0.0 && q.b >= 0.0;
  const double root = usable ? std::sqrt(discriminant) : 0.0;

  std::array<Candidate, 2> out;
  for (int i = 0; i < 2; ++i) {
    const double sign = i == 0 ? 1.0 : -1.0;
    Candidate& c = out[static_cast<std::size_t>(i)];
    c.index = 3 + i;
    c.scheme = Scheme::kMrtRsma;
    c.t = usable ? root_or_one((-q.b + sign * root) / (2.0 * q.a)) : 1.0;
    c.r_mm = mrt_bound_objective(c.t, params, n_users);
  }
  return out;
}

AllocationDecision select(const SystemConfig& config, const UserGroups& groups) {
  AllocationDecision d;
  d.groups = groups;
  d.zf = zf_params(config, groups);
  d.mrt = mrt_params(config);
  const int n = config.n_antennas;
  const int k = config.n_users;

  d.all[0] = candidate_zf_high(d.zf, n, k);
  d.all[1] = candidate_zf_low(d.zf, n, k);
  const auto mrt = candidates_mrt(d.mrt, n, k);
  d.all[2] = mrt[0];
  d.all[3] = mrt[1];

  d.chosen = d.all[0];
  for (const Candidate& c : d.all) {
    if (c.r_mm > d.chosen.r_mm) d.chosen = c;
  }
  return d;
}

PrecoderSet allocated_precoders(const AllocationDecision& decision,
                                const ChannelRealization& realization) {
  if (decision.chosen.scheme == Scheme::kZfRsma) {
    return rsma_zf_precoder_set(realization, decision.groups, decision.chosen.t);
  }
  return rsma_mrt_precoder_set(realization, decision.chosen.t);
}

}  // namespace rsma
