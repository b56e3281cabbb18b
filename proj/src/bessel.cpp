#include "qcircle/bessel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcircle/errors.hpp"

namespace qcircle::bessel {

namespace {

// Ascending series for I_v(x), v in {0, 1}, without any scaling.
double power_series(int order, double x, double tol) {
  const double half = 0.5 * x;
  const double q = half * half;
  double term = order == 0 ? 1.0 : half;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + order));
    sum += term;
    if (std::abs(term) <= tol * std::abs(sum)) break;
  }
  return sum;
}

// Series for I1(x)/x = (1/2) sum_k (x^2/4)^k / (k! (k+1)!); even, 1/2 at 0.
double i1_over_x_series(double x, double tol) {
  const double q = 0.25 * x * x;
  double term = 0.5;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + 1));
    sum += term;
    if (term <= tol * sum) break;
  }
  return sum;
}

// Hankel expansion coefficients a_k(v) = prod_{j=1..k} (4v^2 - (2j-1)^2) / (k! 8^k).
// Sums sum_k (-1)^k a_k / x^k up to the smallest term. `x` must be positive.
// With `difference` set, returns the series for a_k(0) - a_k(1) instead,
// whose k = 0 terms cancel exactly.
double hankel_sum(int order, double x, bool difference = false) {
  double a0 = 1.0;  // a_k(0)
  double a1 = 1.0;  // a_k(1)
  double sum = difference ? 0.0 : 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = static_cast<double>(2 * k - 1);
    const double denom = 8.0 * static_cast<double>(k) * x;
    a0 *= -(0.0 - odd * odd) / denom;
    a1 *= -(4.0 - odd * odd) / denom;
    const double term = difference ? (a0 - a1) : (order == 0 ? a0 : a1);
    const double mag = std::abs(term);
    if (mag > last && k > 2) break;  // series has started to diverge
    sum += term;
    last = mag;
    if (mag <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

double hankel_prefactor(double ax) {
  return 1.0 / std::sqrt(2.0 * std::numbers::pi * ax);
}

void check_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw RangeError(std::string(fn) + ": argument is not finite");
  }
}

void check_overflow(double x, const char* fn) {
  check_finite(x, fn);
  if (std::abs(x) > kOverflowThreshold) {
    throw RangeError(std::string(fn) + ": |x| exceeds " +
                     std::to_string(kOverflowThreshold) +
                     "; use the scaled variant");
  }
}

// 1 - I1(x)/I0(x) for x beyond the series cutoff, free of cancellation.
double one_minus_ratio_large(double ax) {
  return hankel_sum(0, ax, true) / hankel_sum(0, ax);
}

}  // namespace

void BesselConfig::validate() const {
  if (!(series_cutoff > 0.0)) {
    throw std::invalid_argument("BesselConfig: series_cutoff must be positive");
  }
  if (!(term_tolerance > 0.0 && term_tolerance <= 1e-6)) {
    throw std::invalid_argument("BesselConfig: term_tolerance must lie in (0, 1e-6]");
  }
}

double i0_scaled(double x, const BesselConfig& cfg) {
  check_finite(x, "i0_scaled");
  const double ax = std::abs(x);
  if (ax <= cfg.series_cutoff) {
    return std::exp(-ax) * power_series(0, ax, cfg.term_tolerance);
  }
  return hankel_prefactor(ax) * hankel_sum(0, ax);
}

double i1_scaled(double x, const BesselConfig& cfg) {
  check_finite(x, "i1_scaled");
  const double ax = std::abs(x);
  double v;
  if (ax <= cfg.series_cutoff) {
    v = std::exp(-ax) * power_series(1, ax, cfg.term_tolerance);
  } else {
    v = hankel_prefactor(ax) * hankel_sum(1, ax);
  }
  return std::copysign(v, x);
}

double i0(double x, const BesselConfig& cfg) {
  check_overflow(x, "i0");
  const double ax = std::abs(x);
  if (ax <= cfg.series_cutoff) return power_series(0, ax, cfg.term_tolerance);
  return std::exp(ax) * i0_scaled(ax, cfg);
}

double i1(double x, const BesselConfig& cfg) {
  check_overflow(x, "i1");
  const double ax = std::abs(x);
  if (ax <= cfg.series_cutoff) return std::copysign(power_series(1, ax, cfg.term_tolerance), x);
  return std::copysign(std::exp(ax) * i1_scaled(ax, cfg), x);
}

double ratio(double x, const BesselConfig& cfg) {
  check_finite(x, "ratio");
  const double ax = std::abs(x);
  if (ax <= cfg.series_cutoff) {
    return x * ratio_over_x(x, cfg);
  }
  return std::copysign(hankel_sum(1, ax) / hankel_sum(0, ax), x);
}

double ratio_over_x(double x, const BesselConfig& cfg) {
  check_finite(x, "ratio_over_x");
  const double ax = std::abs(x);
  if (ax <= cfg.series_cutoff) {
    return i1_over_x_series(ax, cfg.term_tolerance) /
           power_series(0, ax, cfg.term_tolerance);
  }
  return ratio(ax, cfg) / ax;
}

double f_alpha(double x, const BesselConfig& cfg) {
  check_finite(x, "f_alpha");
  const double ax = std::abs(x);
  if (ax == 0.0) return std::numbers::sqrt2;
  if (ax <= cfg.series_cutoff) {
    // f^2 = 1/q - x^2 q with q = I1/(x I0)
    const double q = ratio_over_x(ax, cfg);
    return std::sqrt(1.0 / q - ax * ax * q);
  }
  // f^2 = x (1 - r)(1 + r) / r
  const double d = one_minus_ratio_large(ax);
  const double r = 1.0 - d;
  return std::sqrt(ax * d * (1.0 + r) / r);
}

double h_alpha(double x, const BesselConfig& cfg) {
  check_finite(x, "h_alpha");
  const double ax = std::abs(x);
  if (ax == 0.0) return 0.0;
  if (ax <= cfg.series_cutoff) {
    // h = x^2 q (1 - q - x^2 q^2) with q = I1/(x I0)
    const double q = ratio_over_x(ax, cfg);
    return ax * ax * q * (1.0 - q - ax * ax * q * q);
  }
  const double d = one_minus_ratio_large(ax);
  const double r = 1.0 - d;
  return ax * r * (d * (1.0 + r) - r / ax);
}

}  // namespace qcircle::bessel
