#pragma once

#include <array>
#include <string_view>

#include "rsma/bounds.hpp"
#include "rsma/channel.hpp"
#include "rsma/precoding.hpp"

namespace rsma {

enum class Scheme { kZfRsma, kMrtRsma };

std::string_view to_string(Scheme scheme);

/// One closed-form operating point: power split t, common-rate share beta
/// (always 0 for the closed forms) and the bound-predicted max-min rate.
struct Candidate {
  int index = 0;  // 1..4
  double t = 1.0;
  double beta = 0.0;
  double r_mm = 0.0;
  Scheme scheme = Scheme::kZfRsma;
};

struct AllocationDecision {
  Candidate chosen;
  std::array<Candidate, 4> all;
  UserGroups groups;
  ZfBoundParams zf;
  MrtBoundParams mrt;

  int n_hat() const { return chosen.index; }
};

/// Power splits are clamped to [kMinPowerSplit, 1] before rho / t is formed.
inline constexpr double kMinPowerSplit = 1e-9;

/// Bound-based ZF max-min objective at beta = 0:
/// min(log2(1 - rho + rho/t) / (K - N), log2(1 + sigma t)).
double zf_bound_objective(double t, const ZfBoundParams& params, int n_antennas, int n_users);

/// Bound-based ZF objective for a general common-rate share beta in [0, 1/N):
/// min(beta Rc + Rk, (1 - N beta) / (K - N) Rc) with the bounds in place of
/// the ergodic rates.
double zf_bound_objective(double t, double beta, const ZfBoundParams& params, int n_antennas,
                          int n_users);

/// Bound-based MRT objective (1/K) log2(1 - rho + rho/t) + log2((1 + alpha t) / (1 + lambda t)).
double mrt_bound_objective(double t, const MrtBoundParams& params, int n_users);

/// The MRT objective with the common term replaced by its high-SNR form
/// log2(rho / t). The quadratic roots of candidates 3/4 are its stationary
/// points.
double mrt_high_snr_objective(double t, const MrtBoundParams& params, int n_users);

/// Unclamped high-SNR ZF power split for common-rate share beta:
/// (rho^{1 - K beta} / sigma^{K - N})^{1 / (1 - K beta + K - N)}.
double zf_high_snr_split(const ZfBoundParams& params, int n_antennas, int n_users,
                         double beta = 0.0);

/// delta = ln(2) (K - N) sigma, the scale of the low-SNR ZF fixed point
/// rho = t exp(delta t).
double zf_low_snr_delta(const ZfBoundParams& params, int n_antennas, int n_users);

/// Exact solution W0(delta rho) / delta of the low-SNR fixed point.
double zf_low_snr_split_exact(const ZfBoundParams& params, int n_antennas, int n_users);

/// Candidate 1: ZF-RSMA, high private SNR.
Candidate candidate_zf_high(const ZfBoundParams& params, int n_antennas, int n_users);

/// Candidate 2: ZF-RSMA, low private SNR, with W0 replaced by
/// log(x) - log(log(x)); t = 1 when delta rho < e.
Candidate candidate_zf_low(const ZfBoundParams& params, int n_antennas, int n_users);

/// Coefficients of a t^2 + b t = 1, the stationarity condition of the
/// high-SNR MRT objective.
struct MrtQuadratic {
  double a = 0.0;  // -alpha lambda
  double b = 0.0;  // K (alpha - lambda) - (alpha + lambda)
};

MrtQuadratic mrt_quadratic(const MrtBoundParams& params, int n_users);

/// Candidates 3 (+ root) and 4 (- root): MRT-RSMA. A root is used when
/// b^2 + 4a >= 0 and b >= 0; otherwise, or if the root is not a positive
/// finite number, t = 1.
std::array<Candidate, 2> candidates_mrt(const MrtBoundParams& params, int n_antennas, int n_users);

/// Evaluates all four candidates and keeps the one with the largest r_mm
/// (smallest index on ties). beta is always 0.
AllocationDecision select(const SystemConfig& config, const UserGroups& groups);

/// Precoders implied by a decision: ZF on G1 and nothing on G2 for
/// n_hat <= 2, MRT for every user otherwise; common precoder in both cases.
PrecoderSet allocated_precoders(const AllocationDecision& decision,
                                const ChannelRealization& realization);

}  // namespace rsma
