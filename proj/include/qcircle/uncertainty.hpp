#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qcircle/circle_state.hpp"
#include "qcircle/config.hpp"

namespace qcircle {

enum class URKind { X_AXIS, Y_AXIS, TOTAL, FUJIKAWA };

std::string_view to_string(URKind kind);

// One inequality lhs >= rhs evaluated on one state.
struct URReport {
  URKind kind = URKind::X_AXIS;
  int n = 1;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs - rhs
  bool holds = true;   // slack >= -cmp_tol
  bool saturated = false;  // |slack| <= cmp_tol
};

// sigma_Xn sigma_Lz >= (n hbar / 2) |<Y_n>|
URReport check_ur_x(const CircleState& state, int n, const Config& cfg = {});
// sigma_Yn sigma_Lz >= (n hbar / 2) |<X_n>|
URReport check_ur_y(const CircleState& state, int n, const Config& cfg = {});
// sigma_n sigma_Lz >= hbar / 2; an infinite sigma_n holds trivially.
URReport check_total_ur(const CircleState& state, int n, const Config& cfg = {});
// sigma_phi sigma_Lz >= (hbar/2)(1 - 2 pi |psi(pi)|^2) with the angle window
// starting at -pi. Periodic states only (UnsupportedStateError otherwise).
URReport check_fujikawa(const CircleState& state, const Config& cfg = {});

struct FoldSymmetry {
  int n = 1;
  // Density is uniform, so every n qualifies; n is then the configured mode cap.
  bool fully_symmetric = false;
};

// Largest n such that the density harmonics off the lattice nZ carry total
// amplitude sum_k R_k <= tol. Returns 1 when there is no symmetry.
FoldSymmetry detect_fold_symmetry(const CircleState& state, double tol,
                                  const Config& cfg = {});

// Smallest n with R_n >= r_threshold, searching up to the largest harmonic
// the density can carry.
std::optional<int> recommend_n(const CircleState& state, double r_threshold);

// Worst slack per inequality over a batch of random states.
struct SweepSummary {
  std::size_t states = 0;
  double min_slack_x = 0.0;
  double min_slack_y = 0.0;
  double min_slack_total = 0.0;
  double min_slack_fujikawa = 0.0;
  std::size_t failures = 0;  // individual checks that did not hold
};

struct SweepSpec {
  std::size_t count = 500;
  int max_mode = 8;
  std::uint64_t first_seed = 1;
  int n_max = 8;
  bool fujikawa = true;
};

// One random state per seed in [first_seed, first_seed + count); every
// check for n = 1..n_max (and Fujikawa if requested). OpenMP over seeds.
SweepSummary sweep_random_states(const SweepSpec& spec, const Config& cfg = {});
SweepSummary sweep_random_states_serial(const SweepSpec& spec, const Config& cfg = {});

}  // namespace qcircle
