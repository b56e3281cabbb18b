#pragma once

#include <optional>
#include <utility>

#include "qcircle/circle_state.hpp"
#include "qcircle/config.hpp"

namespace qcircle {

// Statistics of one state for the harmonic pair X_n = cos(n phi), Y_n = sin(n phi).
struct ObservableReport {
  int n = 1;
  double ex = 0.0;                 // <X_n>
  double ey = 0.0;                 // <Y_n>
  double r_n = 0.0;                // mean resultant length
  std::optional<double> mean_phi;  // <phi> from <X_1>, <Y_1>; absent when R_1 < cmp_tol
  double sigma_x = 0.0;
  double sigma_y = 0.0;
  double sigma_lz = 0.0;
  double sigma_tilde = 0.0;        // sqrt(sigma_x^2 + sigma_y^2) = sqrt(1 - R_n^2)
  double sigma_n = 0.0;            // sqrt(1 - R_n^2) / (n R_n); +inf when R_n = 0
};

// <exp(i n phi)> = sum_m conj(c_{m+n}) c_m. Exact for any integer n.
cplx expect_harmonic(const CircleState& state, int n);

// (<X_n>, <Y_n>). Requires n >= 1.
std::pair<double, double> expect_xy(const CircleState& state, int n);

// <L_z> = hbar sum mu_m |c_m|^2.
double expect_lz(const CircleState& state);
double sigma_lz(const CircleState& state);

// (sigma_Xn, sigma_Yn) via the double-angle identities.
std::pair<double, double> sigma_xy(const CircleState& state, int n);

double mean_resultant(const CircleState& state, int n);

// atan2(<Y_1>, <X_1>) in (-pi, pi]; empty when R_1 < cfg.cmp_tol.
std::optional<double> mean_angle(const CircleState& state, const Config& cfg = {});

// sqrt(1 - R_n^2) / (n R_n), or +infinity when R_n = 0.
double sigma_total(const CircleState& state, int n);

ObservableReport observe(const CircleState& state, int n, const Config& cfg = {});

// Moments of the non-periodic angle over the window [beta, beta + 2 pi].
struct AngleMoments {
  double mean = 0.0;    // <phi>_beta
  double second = 0.0;  // <phi^2>_beta
  double sigma = 0.0;   // sigma_phi^beta
};

inline constexpr std::size_t kAngleQuadratureIntervals = std::size_t{1} << 16;

// Composite Simpson on kAngleQuadratureIntervals. Periodic states only;
// throws UnsupportedStateError otherwise.
AngleMoments angle_moments_beta(const CircleState& state, double beta,
                                 std::size_t intervals = kAngleQuadratureIntervals);

}  // namespace qcircle
