#include "qcircle/kernels.hpp"

#include <fftw3.h>
#include <omp.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "qcircle/circle_state.hpp"

namespace qcircle::kernels {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW planning is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// |sum_k c_k z^k|^2 / 2pi with z = e^{i phi}. The modulus drops the common
// factor exp(i (min_mode + theta/2pi) phi).
inline double density_point(std::span<const cplx> c, double phi) {
  const double zr = std::cos(phi);
  const double zi = std::sin(phi);
  double pr = 0.0;
  double pi = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const double nr = pr * zr - pi * zi + it->real();
    const double ni = pr * zi + pi * zr + it->imag();
    pr = nr;
    pi = ni;
  }
  return (pr * pr + pi * pi) / kTwoPi;
}

inline double simpson_weight(std::size_t j, std::size_t n) {
  if (j == 0 || j == n) return 1.0;
  return (j % 2 == 1) ? 4.0 : 2.0;
}

void check_intervals(std::size_t n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("Simpson quadrature needs an even interval count >= 2");
  }
}

}  // namespace

std::vector<cplx> forward_dft(std::span<const cplx> x) {
  const auto n = x.size();
  std::vector<cplx> in(x.begin(), x.end());
  std::vector<cplx> out(n);
  if (n == 0) return out;
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(n),
                            reinterpret_cast<fftw_complex*>(in.data()),
                            reinterpret_cast<fftw_complex*>(out.data()),
                            FFTW_FORWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return out;
}

std::vector<cplx> forward_dft_direct(std::span<const cplx> x) {
  const auto n = x.size();
  std::vector<cplx> out(n);
  std::vector<cplx> twiddle(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double a = -kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    twiddle[j] = {std::cos(a), std::sin(a)};
  }
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += x[j] * twiddle[(j * k) % n];
    out[k] = acc;
  }
  return out;
}

void density_at(const CircleState& state, std::span<const double> phi,
                std::span<double> out) {
  const auto c = state.coeffs();
  const auto n = static_cast<std::ptrdiff_t>(phi.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) out[j] = density_point(c, phi[j]);
}

void density_at_serial(const CircleState& state, std::span<const double> phi,
                       std::span<double> out) {
  const auto c = state.coeffs();
  for (std::size_t j = 0; j < phi.size(); ++j) out[j] = density_point(c, phi[j]);
}

MomentSums simpson_moments(const CircleState& state, double beta,
                           std::size_t intervals) {
  check_intervals(intervals);
  const auto c = state.coeffs();
  const double h = kTwoPi / static_cast<double>(intervals);
  const auto n = static_cast<std::ptrdiff_t>(intervals);
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s0, s1, s2)
  for (std::ptrdiff_t j = 0; j <= n; ++j) {
    const double u = h * static_cast<double>(j);
    const double w = simpson_weight(static_cast<std::size_t>(j), intervals) *
                     density_point(c, beta + u);
    s0 += w;
    s1 += w * u;
    s2 += w * u * u;
  }
  return {s0 * h / 3.0, s1 * h / 3.0, s2 * h / 3.0};
}

MomentSums simpson_moments_serial(const CircleState& state, double beta,
                                  std::size_t intervals) {
  check_intervals(intervals);
  const auto c = state.coeffs();
  const double h = kTwoPi / static_cast<double>(intervals);
  double s0 = 0.0, s1 = 0.0, s2 = 0.0;
  for (std::size_t j = 0; j <= intervals; ++j) {
    const double u = h * static_cast<double>(j);
    const double w = simpson_weight(j, intervals) * density_point(c, beta + u);
    s0 += w;
    s1 += w * u;
    s2 += w * u * u;
  }
  return {s0 * h / 3.0, s1 * h / 3.0, s2 * h / 3.0};
}

double simpson_mass(const CircleState& state, double a, double b,
                    std::size_t intervals) {
  check_intervals(intervals);
  const auto c = state.coeffs();
  const double h = (b - a) / static_cast<double>(intervals);
  const auto n = static_cast<std::ptrdiff_t>(intervals);
  double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
  for (std::ptrdiff_t j = 0; j <= n; ++j) {
    s += simpson_weight(static_cast<std::size_t>(j), intervals) *
         density_point(c, a + h * static_cast<double>(j));
  }
  return s * h / 3.0;
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace qcircle::kernels
