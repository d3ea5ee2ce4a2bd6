#include "rsma/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rsma/errors.hpp"

namespace rsma::specfun {

double digamma(long long n) {
  if (n < 1) throw std::domain_error("digamma: argument must be >= 1, got " + std::to_string(n));
  // Summing small terms first keeps the harmonic sum accurate to a few ulp.
  double harmonic = 0.0;
  for (long long k = n - 1; k >= 1; --k) harmonic += 1.0 / static_cast<double>(k);
  return harmonic - kEulerGamma;
}

namespace {

double initial_guess(double x) {
  constexpr double e = std::numbers::e;
  if (x >= 0.0) return std::log1p(x);
  if (x > -0.25) return x * (1.0 - x);
  // Series about the branch point -1/e.
  const double p = std::sqrt(2.0 * (e * x + 1.0));
  return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
}

}  // namespace

double lambert_w0(double x) {
  constexpr double minus_inv_e = -1.0 / std::numbers::e;
  if (std::isnan(x) || x < minus_inv_e) {
    throw std::domain_error("lambert_w0: argument below -1/e has no real principal value");
  }
  if (x == 0.0) return 0.0;
  if (x == minus_inv_e) return -1.0;
  if (std::isinf(x)) return x;

  constexpr int kMaxIterations = 100;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double w = initial_guess(x);
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) return w;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    double dw = f / denom;
    if (!std::isfinite(dw)) dw = f / (ew * wp1);
    w -= dw;
    if (std::abs(dw) <= 4.0 * eps * (1.0 + std::abs(w))) return w;
  }
  throw ConvergenceError("lambert_w0: Halley iteration did not converge");
}

double lambert_w0_log_approx(double x) {
  if (!(x > std::numbers::e)) {
    throw std::domain_error("lambert_w0_log_approx: argument must exceed e");
  }
  const double lx = std::log(x);
  return lx - std::log(lx);
}

}  // namespace rsma::specfun
