#pragma once

namespace rsma::specfun {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Digamma at a positive integer, psi(n) = -gamma + sum_{k=1}^{n-1} 1/k.
/// Throws std::domain_error for n < 1.
double digamma(long long n);

/// Principal branch W0 of the Lambert-W function, the real w >= -1 with
/// w * exp(w) == x. Halley iteration; the residual |w e^w - x| is within
/// 1e-12 * max(1, |x|).
///
/// Throws std::domain_error for x < -1/e and rsma::ConvergenceError if the
/// iteration does not settle within 100 steps.
double lambert_w0(double x);

/// Asymptotic approximation W0(x) ~ log(x) - log(log(x)), valid for large x.
/// Throws std::domain_error for x <= e, where log(log(x)) <= 0.
double lambert_w0_log_approx(double x);

}  // namespace rsma::specfun
