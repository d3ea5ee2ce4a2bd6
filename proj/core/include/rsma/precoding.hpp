#pragma once

#include <Eigen/Core>
#include <vector>

#include "rsma/channel.hpp"

namespace rsma {

/// Partition of the K users into G1 (private ZF stream plus common stream,
/// |G1| = N) and G2 (common stream only). Indices are zero-based.
struct UserGroups {
  std::vector<int> g1;
  std::vector<int> g2;

  int n_users() const { return static_cast<int>(g1.size() + g2.size()); }
  /// Throws std::invalid_argument unless g1 and g2 partition {0..K-1}.
  void validate(int k_users) const;
};

/// G1 = the first N users by index, G2 = the rest.
UserGroups default_groups(const SystemConfig& config);

/// Unit-norm common precoder, per-user private precoders (unit-norm or zero
/// columns), private power fractions mu_k and the private power share t.
struct PrecoderSet {
  Eigen::VectorXcd common;
  Eigen::MatrixXcd priv;
  std::vector<double> mu;
  double t = 1.0;

  /// Throws std::invalid_argument if the norm, fraction or range
  /// invariants are broken.
  void validate() const;
};

/// Zero-forcing condition numbers above this are reported as rank deficient.
inline constexpr double kMaxZfConditionNumber = 1e12;

/// Column-normalized pseudo-inverse of an N x m channel block (m <= N):
/// column i is orthogonal to every other channel of the block.
/// Throws RankDeficiencyError when cond(hg) > kMaxZfConditionNumber.
Eigen::MatrixXcd zero_forcing_directions(const Eigen::MatrixXcd& hg);

/// ZF private precoders for G1, exact zero columns for G2.
Eigen::MatrixXcd zf_precoders(const ChannelRealization& realization, const UserGroups& groups);

/// Matched-filter precoders p_k = h_k / ||h_k||. Throws
/// std::invalid_argument on a zero channel.
Eigen::MatrixXcd mrt_precoders(const ChannelRealization& realization);

struct PowerIterationOptions {
  double tolerance = 1e-10;
  int max_iterations = 10000;
};

/// Leading eigenvector of h * h^H by power iteration, started from the
/// strongest column. Converged when ||Mx - lambda x|| <= tol * lambda.
/// Throws ConvergenceError at the iteration cap.
Eigen::VectorXcd leading_left_singular_vector(const Eigen::MatrixXcd& h,
                                              const PowerIterationOptions& options = {});

/// Common precoder: the leading left singular vector of H with its
/// largest-magnitude entry rotated onto the positive real axis.
Eigen::VectorXcd common_precoder(const ChannelRealization& realization);

/// Multiplies v by the unit phase that makes its largest-magnitude entry
/// real and positive. The first entry wins ties.
void fix_phase(Eigen::VectorXcd& v);

/// RSMA precoders with ZF private streams: mu = 1/N on G1, 0 on G2.
PrecoderSet rsma_zf_precoder_set(const ChannelRealization& realization, const UserGroups& groups,
                                 double t);

/// RSMA precoders with MRT private streams: mu = 1/K for every user.
PrecoderSet rsma_mrt_precoder_set(const ChannelRealization& realization, double t);

}  // namespace rsma
