#include "qcircle/mwp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qcircle/bessel.hpp"
#include "qcircle/errors.hpp"
#include "qcircle/observables.hpp"

namespace qcircle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_args(int n, double kappa) {
  if (n < 1) throw std::invalid_argument("packet harmonic n must be >= 1");
  if (!std::isfinite(kappa)) throw std::invalid_argument("packet concentration must be finite");
}

// Exponent profile (without the kappa/2 factor): sin(n phi) or -cos(n phi).
double profile(Axis axis, int n, double phi) {
  return axis == Axis::X ? std::sin(n * phi) : -std::cos(n * phi);
}

}  // namespace

std::string_view to_string(Axis axis) { return axis == Axis::X ? "X" : "Y"; }

VonMisesPacket make_packet(Axis axis, int n, int m, double kappa, double hbar) {
  check_args(n, kappa);
  VonMisesPacket p{axis, n, m, kappa, hbar, {}};
  const double r = bessel::ratio(kappa);
  const double q = bessel::ratio_over_x(kappa);  // r / kappa, 1/2 at kappa = 0
  const double along = q;                        // variance of the concentrated harmonic
  const double across = 1.0 - q - r * r;
  const double half_step = 0.5 * n * hbar;

  auto& pr = p.predicted;
  if (axis == Axis::X) {
    pr.ex = 0.0;
    pr.ey = r;
    pr.sigma_x2 = along;
    pr.sigma_y2 = across;
  } else {
    pr.ex = -r;
    pr.ey = 0.0;
    pr.sigma_x2 = across;
    pr.sigma_y2 = along;
  }
  pr.lz = m * hbar;
  pr.sigma_lz2 = kappa * kappa * q * half_step * half_step;
  // 1/sqrt(2 pi I0(kappa)) via the scaled I0 so large kappa cannot overflow.
  pr.norm_const = std::exp(-0.5 * std::abs(kappa)) /
                  std::sqrt(kTwoPi * bessel::i0_scaled(kappa));
  return p;
}

std::pair<VonMisesPacket, CircleState> build_packet(Axis axis, int n, int m, double kappa,
                                                    const Config& cfg) {
  auto packet = make_packet(axis, n, m, kappa, cfg.hbar);
  const std::size_t max_grid =
      std::max(cfg.grid_size, std::bit_ceil(static_cast<std::size_t>(8 * (cfg.max_mode + 1))));
  const double shift = 0.5 * std::abs(kappa);
  for (std::size_t grid = cfg.grid_size; grid <= max_grid; grid *= 2) {
    std::vector<cplx> samples(grid);
    for (std::size_t j = 0; j < grid; ++j) {
      const double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(grid);
      const double amp = std::exp(0.5 * kappa * profile(axis, n, phi) - shift);
      samples[j] = std::polar(amp, m * phi);
    }
    try {
      return {packet, CircleState::from_samples(samples, 0.0, cfg)};
    } catch (const AliasingError&) {
      // refine
    }
  }
  throw ResolutionError("packet with n=" + std::to_string(n) + ", kappa=" +
                        std::to_string(kappa) + " is not resolved within the mode cap");
}

std::pair<VonMisesPacket, CircleState> mwp_x(int n, int m, double alpha, const Config& cfg) {
  return build_packet(Axis::X, n, m, alpha, cfg);
}

std::pair<VonMisesPacket, CircleState> mwp_y(int n, int m, double beta, const Config& cfg) {
  return build_packet(Axis::Y, n, m, beta, cfg);
}

PacketVerification verify_packet(const VonMisesPacket& packet, const CircleState& state,
                                 double tolerance) {
  PacketVerification v;
  v.tolerance = tolerance;
  auto& ms = v.measured;
  std::tie(ms.ex, ms.ey) = expect_xy(state, packet.n);
  const auto [sx, sy] = sigma_xy(state, packet.n);
  ms.sigma_x2 = sx * sx;
  ms.sigma_y2 = sy * sy;
  ms.lz = expect_lz(state);
  const double slz = sigma_lz(state);
  ms.sigma_lz2 = slz * slz;
  // The exponent vanishes at phi = 0 (axis X) and phi = pi/2n (axis Y),
  // where |psi| equals the normalization constant.
  const double node = packet.axis == Axis::X ? 0.0 : std::numbers::pi / (2.0 * packet.n);
  ms.norm_const = std::abs(state.evaluate(node));

  const auto& pr = packet.predicted;
  v.d_ex = std::abs(ms.ex - pr.ex);
  v.d_ey = std::abs(ms.ey - pr.ey);
  v.d_sigma_x2 = std::abs(ms.sigma_x2 - pr.sigma_x2);
  v.d_sigma_y2 = std::abs(ms.sigma_y2 - pr.sigma_y2);
  v.d_sigma_lz2 = std::abs(ms.sigma_lz2 - pr.sigma_lz2);
  v.d_lz = std::abs(ms.lz - pr.lz);

  v.kappa_measured = packet.axis == Axis::X ? ms.ey / ms.sigma_x2 : -ms.ex / ms.sigma_y2;
  v.d_kappa = std::abs(v.kappa_measured - packet.kappa) / std::max(1.0, std::abs(packet.kappa));

  const double d_norm = std::abs(ms.norm_const - pr.norm_const);
  v.passed = v.d_ex < tolerance && v.d_ey < tolerance && v.d_sigma_x2 < tolerance &&
             v.d_sigma_y2 < tolerance && v.d_sigma_lz2 < tolerance && v.d_lz < tolerance &&
             v.d_kappa < tolerance && d_norm < tolerance;
  return v;
}

double saturation_gap(const CircleState& state, int n, Axis axis) {
  const auto [ex, ey] = expect_xy(state, n);
  const auto [sx, sy] = sigma_xy(state, n);
  const double slz = sigma_lz(state);
  const double half_step = 0.5 * n * state.hbar();
  return axis == Axis::X ? sx * slz - half_step * std::abs(ey)
                         : sy * slz - half_step * std::abs(ex);
}

}  // namespace qcircle
