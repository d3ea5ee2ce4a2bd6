#include "rsma/precoding.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rsma/errors.hpp"

namespace rsma {

void UserGroups::validate(int k_users) const {
  std::vector<int> seen(static_cast<std::size_t>(k_users), 0);
  auto mark = [&](int k) {
    if (k < 0 || k >= k_users) throw std::invalid_argument("groups: user index out of range");
    if (seen[static_cast<std::size_t>(k)]++) throw std::invalid_argument("groups: user listed twice");
  };
  for (int k : g1) mark(k);
  for (int k : g2) mark(k);
  if (n_users() != k_users) throw std::invalid_argument("groups: G1 and G2 must cover every user");
}

UserGroups default_groups(const SystemConfig& config) {
  if (config.n_users <= config.n_antennas) {
    throw std::invalid_argument("default_groups: requires K > N");
  }
  UserGroups groups;
  for (int k = 0; k < config.n_users; ++k) (k < config.n_antennas ? groups.g1 : groups.g2).push_back(k);
  return groups;
}

void PrecoderSet::validate() const {
  constexpr double tol = 1e-12;
  if (std::abs(common.norm() - 1.0) > 1e-9) throw std::invalid_argument("precoders: ||p_c|| != 1");
  if (static_cast<std::size_t>(priv.cols()) != mu.size()) {
    throw std::invalid_argument("precoders: one power fraction per private precoder expected");
  }
  double mu_sum = 0.0;
  for (Eigen::Index k = 0; k < priv.cols(); ++k) {
    const double norm = priv.col(k).norm();
    if (norm != 0.0 && std::abs(norm - 1.0) > 1e-9) {
      throw std::invalid_argument("precoders: private column is neither unit-norm nor zero");
    }
    const double m = mu[static_cast<std::size_t>(k)];
    if (m < 0.0 || m > 1.0) throw std::invalid_argument("precoders: mu outside [0, 1]");
    mu_sum += m;
  }
  if (mu_sum > 1.0 + tol) throw std::invalid_argument("precoders: sum of mu exceeds 1");
  if (t < 0.0 || t > 1.0) throw std::invalid_argument("precoders: t outside [0, 1]");
}

Eigen::MatrixXcd zero_forcing_directions(const Eigen::MatrixXcd& hg) {
  if (hg.cols() == 0) return Eigen::MatrixXcd(hg.rows(), 0);
  if (hg.cols() > hg.rows()) {
    throw std::invalid_argument("zero_forcing_directions: more streams than antennas");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(hg, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  const double cond = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
  if (!(cond <= kMaxZfConditionNumber)) {
    throw RankDeficiencyError("zero-forcing block is rank deficient (condition number " +
                                  std::to_string(cond) + ")",
                              cond);
  }
  // pinv(hg^H) = U S^-1 V^H, so hg^H * P = I.
  Eigen::MatrixXcd p = svd.matrixU() * s.cwiseInverse().asDiagonal() * svd.matrixV().adjoint();
  p.colwise().normalize();
  return p;
}

Eigen::MatrixXcd zf_precoders(const ChannelRealization& realization, const UserGroups& groups) {
  const int n = realization.n_antennas();
  const int k = realization.n_users();
  groups.validate(k);
  if (static_cast<int>(groups.g1.size()) > n) {
    throw std::invalid_argument("zf_precoders: |G1| exceeds the number of antennas");
  }
  Eigen::MatrixXcd hg(n, static_cast<Eigen::Index>(groups.g1.size()));
  for (std::size_t i = 0; i < groups.g1.size(); ++i) hg.col(static_cast<Eigen::Index>(i)) = realization.h.col(groups.g1[i]);
  const Eigen::MatrixXcd directions = zero_forcing_directions(hg);

  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, k);
  for (std::size_t i = 0; i < groups.g1.size(); ++i) p.col(groups.g1[i]) = directions.col(static_cast<Eigen::Index>(i));
  return p;
}

Eigen::MatrixXcd mrt_precoders(const ChannelRealization& realization) {
  Eigen::MatrixXcd p = realization.h;
  for (Eigen::Index k = 0; k < p.cols(); ++k) {
    const double norm = p.col(k).norm();
    if (norm == 0.0) throw std::invalid_argument("mrt_precoders: zero channel vector for user " + std::to_string(k));
    p.col(k) /= norm;
  }
  return p;
}

Eigen::VectorXcd leading_left_singular_vector(const Eigen::MatrixXcd& h,
                                              const PowerIterationOptions& options) {
  if (h.size() == 0) throw std::invalid_argument("leading_left_singular_vector: empty matrix");
  Eigen::Index strongest = 0;
  const double best = h.colwise().squaredNorm().maxCoeff(&strongest);
  if (best == 0.0) throw std::invalid_argument("leading_left_singular_vector: zero matrix");

  const Eigen::MatrixXcd gram = h * h.adjoint();
  Eigen::VectorXcd x = h.col(strongest).normalized();
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const Eigen::VectorXcd y = gram * x;
    const double lambda = x.dot(y).real();
    const double residual = (y - lambda * x).norm();
    if (residual <= options.tolerance * lambda) return x;
    x = y.normalized();
  }
  throw ConvergenceError("leading_left_singular_vector: power iteration hit the iteration cap");
}

void fix_phase(Eigen::VectorXcd& v) {
  Eigen::Index arg = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > best) {
      best = mag;
      arg = i;
    }
  }
  if (best > 0.0) v *= std::conj(v(arg)) / best;
}

Eigen::VectorXcd common_precoder(const ChannelRealization& realization) {
  Eigen::VectorXcd pc;
  try {
    pc = leading_left_singular_vector(realization.h);
  } catch (const ConvergenceError&) {
    // Near-degenerate top eigenvalues stall the power iteration; the exact
    // Hermitian solver handles them.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(realization.h * realization.h.adjoint());
    if (eig.info() != Eigen::Success) throw;
    pc = eig.eigenvectors().col(eig.eigenvectors().cols() - 1);
  }
  pc.normalize();
  fix_phase(pc);
  return pc;
}

PrecoderSet rsma_zf_precoder_set(const ChannelRealization& realization, const UserGroups& groups,
                                 double t) {
  PrecoderSet set;
  set.common = common_precoder(realization);
  set.priv = zf_precoders(realization, groups);
  set.mu.assign(static_cast<std::size_t>(realization.n_users()), 0.0);
  const double share = 1.0 / static_cast<double>(realization.n_antennas());
  for (int k : groups.g1) set.mu[static_cast<std::size_t>(k)] = share;
  set.t = t;
  return set;
}

PrecoderSet rsma_mrt_precoder_set(const ChannelRealization& realization, double t) {
  PrecoderSet set;
  set.common = common_precoder(realization);
  set.priv = mrt_precoders(realization);
  set.mu.assign(static_cast<std::size_t>(realization.n_users()),
                1.0 / static_cast<double>(realization.n_users()));
  set.t = t;
  return set;
}

}  // namespace rsma
