#pragma once

#include <string_view>
#include <utility>

#include "qcircle/circle_state.hpp"
#include "qcircle/config.hpp"

namespace qcircle {

enum class Axis { X, Y };

std::string_view to_string(Axis axis);

// Closed-form statistics of a von Mises minimum wave packet.
struct PacketPrediction {
  double ex = 0.0;
  double ey = 0.0;
  double sigma_x2 = 0.0;
  double sigma_y2 = 0.0;
  double lz = 0.0;
  double sigma_lz2 = 0.0;
  double norm_const = 0.0;  // 1 / sqrt(2 pi I0(kappa))
};

// Axis X: psi ∝ exp[(kappa/2) sin(n phi) + i m phi]   (minimizes the X_n bound)
// Axis Y: psi ∝ exp[-(kappa/2) cos(n phi) + i m phi]  (minimizes the Y_n bound)
struct VonMisesPacket {
  Axis axis = Axis::X;
  int n = 1;
  int m = 0;
  double kappa = 0.0;
  double hbar = 1.0;
  PacketPrediction predicted;
};

// Closed forms only; no state is built.
VonMisesPacket make_packet(Axis axis, int n, int m, double kappa, double hbar = 1.0);

// Builds the packet state by sampling and transforming, doubling the grid
// until the profile is resolved. Throws ResolutionError when the profile
// needs more than cfg.max_mode modes.
std::pair<VonMisesPacket, CircleState> mwp_x(int n, int m, double alpha, const Config& cfg = {});
std::pair<VonMisesPacket, CircleState> mwp_y(int n, int m, double beta, const Config& cfg = {});
std::pair<VonMisesPacket, CircleState> build_packet(Axis axis, int n, int m, double kappa,
                                                    const Config& cfg = {});

struct PacketVerification {
  PacketPrediction measured;
  // |measured - predicted| for ex, ey, sigma_x2, sigma_y2, sigma_lz2, lz.
  double d_ex = 0.0;
  double d_ey = 0.0;
  double d_sigma_x2 = 0.0;
  double d_sigma_y2 = 0.0;
  double d_sigma_lz2 = 0.0;
  double d_lz = 0.0;
  // kappa recovered from the state: <Y_n>/sigma_Xn^2 (axis X) or
  // -<X_n>/sigma_Yn^2 (axis Y).
  double kappa_measured = 0.0;
  double d_kappa = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// Compares the state's spectral statistics with the packet's closed forms.
// Deltas are absolute; the kappa consistency delta is relative to max(1, |kappa|).
PacketVerification verify_packet(const VonMisesPacket& packet, const CircleState& state,
                                 double tolerance = 1e-9);

// sigma_A sigma_Lz - (n hbar / 2)|<B>| for the pair (A, B) = (X_n, Y_n) on
// axis X or (Y_n, X_n) on axis Y.
double saturation_gap(const CircleState& state, int n, Axis axis);

}  // namespace qcircle
