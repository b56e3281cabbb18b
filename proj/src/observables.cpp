#include "qcircle/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qcircle/errors.hpp"
#include "qcircle/kernels.hpp"

namespace qcircle {

namespace {

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("harmonic index n must be >= 1");
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

cplx expect_harmonic(const CircleState& state, int n) {
  const auto c = state.coeffs();
  const auto size = static_cast<int>(c.size());
  const int lag = std::abs(n);
  cplx acc = 0.0;
  for (int k = 0; k + lag < size; ++k) {
    acc += std::conj(c[static_cast<std::size_t>(k + lag)]) * c[static_cast<std::size_t>(k)];
  }
  return n >= 0 ? acc : std::conj(acc);
}

std::pair<double, double> expect_xy(const CircleState& state, int n) {
  require_positive(n);
  const cplx z = expect_harmonic(state, n);
  return {z.real(), z.imag()};
}

double expect_lz(const CircleState& state) {
  double acc = 0.0;
  for (int m = state.min_mode(); m <= state.max_mode(); ++m) {
    acc += state.mu(m) * std::norm(state.coeff(m));
  }
  return state.hbar() * acc;
}

double sigma_lz(const CircleState& state) {
  const double mean = expect_lz(state) / state.hbar();
  double var = 0.0;
  for (int m = state.min_mode(); m <= state.max_mode(); ++m) {
    const double d = state.mu(m) - mean;
    var += d * d * std::norm(state.coeff(m));
  }
  return state.hbar() * std::sqrt(var);
}

std::pair<double, double> sigma_xy(const CircleState& state, int n) {
  require_positive(n);
  const cplx z = expect_harmonic(state, n);
  const double x2n = expect_harmonic(state, 2 * n).real();
  const double vx = 0.5 * (1.0 + x2n) - z.real() * z.real();
  const double vy = 0.5 * (1.0 - x2n) - z.imag() * z.imag();
  return {std::sqrt(clamp_unit(vx)), std::sqrt(clamp_unit(vy))};
}

double mean_resultant(const CircleState& state, int n) {
  require_positive(n);
  return std::min(1.0, std::abs(expect_harmonic(state, n)));
}

std::optional<double> mean_angle(const CircleState& state, const Config& cfg) {
  const cplx z = expect_harmonic(state, 1);
  if (std::abs(z) < cfg.cmp_tol) return std::nullopt;
  double a = std::atan2(z.imag(), z.real());
  if (a <= -std::numbers::pi) a = std::numbers::pi;
  return a;
}

double sigma_total(const CircleState& state, int n) {
  const double r = mean_resultant(state, n);
  if (r == 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(1.0 - r * r) / (static_cast<double>(n) * r);
}

ObservableReport observe(const CircleState& state, int n, const Config& cfg) {
  require_positive(n);
  ObservableReport rep;
  rep.n = n;
  std::tie(rep.ex, rep.ey) = expect_xy(state, n);
  rep.r_n = mean_resultant(state, n);
  rep.mean_phi = mean_angle(state, cfg);
  std::tie(rep.sigma_x, rep.sigma_y) = sigma_xy(state, n);
  rep.sigma_lz = sigma_lz(state);
  rep.sigma_tilde = std::sqrt(rep.sigma_x * rep.sigma_x + rep.sigma_y * rep.sigma_y);
  rep.sigma_n = sigma_total(state, n);
  return rep;
}

AngleMoments angle_moments_beta(const CircleState& state, double beta,
                                std::size_t intervals) {
  if (!state.periodic()) {
    throw UnsupportedStateError("angle moments need a strictly periodic state (theta = 0)");
  }
  if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
  // Integrate in u = phi - beta on [0, 2pi] and shift back.
  const auto s = kernels::simpson_moments(state, beta, intervals);
  const double mu = s.m1;
  const double var = std::max(0.0, s.m2 - mu * mu);
  AngleMoments out;
  out.mean = beta + mu;
  out.second = s.m2 + 2.0 * beta * mu + beta * beta;
  out.sigma = std::sqrt(var);
  return out;
}

}  // namespace qcircle
