#include "qcircle/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qcircle/errors.hpp"
#include "qcircle/observables.hpp"

namespace qcircle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

URReport make_report(URKind kind, int n, double lhs, double rhs, const Config& cfg) {
  URReport r;
  r.kind = kind;
  r.n = n;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = std::isinf(lhs) ? kInf : lhs - rhs;
  r.holds = r.slack >= -cfg.cmp_tol;
  r.saturated = std::abs(r.slack) <= cfg.cmp_tol;
  return r;
}

struct StateOutcome {
  double x = kInf;
  double y = kInf;
  double total = kInf;
  double fujikawa = kInf;
  std::size_t failures = 0;
};

StateOutcome evaluate_seed(const SweepSpec& spec, std::uint64_t seed, const Config& cfg) {
  const auto state = CircleState::random(spec.max_mode, seed, cfg);
  StateOutcome out;
  for (int n = 1; n <= spec.n_max; ++n) {
    const auto rx = check_ur_x(state, n, cfg);
    const auto ry = check_ur_y(state, n, cfg);
    const auto rt = check_total_ur(state, n, cfg);
    out.x = std::min(out.x, rx.slack);
    out.y = std::min(out.y, ry.slack);
    out.total = std::min(out.total, rt.slack);
    out.failures += !rx.holds + !ry.holds + !rt.holds;
  }
  if (spec.fujikawa) {
    const auto rf = check_fujikawa(state, cfg);
    out.fujikawa = rf.slack;
    out.failures += !rf.holds;
  }
  return out;
}

SweepSummary reduce(const std::vector<StateOutcome>& outcomes) {
  SweepSummary s;
  s.states = outcomes.size();
  s.min_slack_x = s.min_slack_y = s.min_slack_total = s.min_slack_fujikawa = kInf;
  for (const auto& o : outcomes) {
    s.min_slack_x = std::min(s.min_slack_x, o.x);
    s.min_slack_y = std::min(s.min_slack_y, o.y);
    s.min_slack_total = std::min(s.min_slack_total, o.total);
    s.min_slack_fujikawa = std::min(s.min_slack_fujikawa, o.fujikawa);
    s.failures += o.failures;
  }
  return s;
}

}  // namespace

std::string_view to_string(URKind kind) {
  switch (kind) {
    case URKind::X_AXIS: return "X_AXIS";
    case URKind::Y_AXIS: return "Y_AXIS";
    case URKind::TOTAL: return "TOTAL";
    case URKind::FUJIKAWA: return "FUJIKAWA";
  }
  return "?";
}

URReport check_ur_x(const CircleState& state, int n, const Config& cfg) {
  const auto [ex, ey] = expect_xy(state, n);
  const auto [sx, sy] = sigma_xy(state, n);
  const double slz = sigma_lz(state);
  return make_report(URKind::X_AXIS, n, sx * slz,
                     0.5 * n * state.hbar() * std::abs(ey), cfg);
}

URReport check_ur_y(const CircleState& state, int n, const Config& cfg) {
  const auto [ex, ey] = expect_xy(state, n);
  const auto [sx, sy] = sigma_xy(state, n);
  const double slz = sigma_lz(state);
  return make_report(URKind::Y_AXIS, n, sy * slz,
                     0.5 * n * state.hbar() * std::abs(ex), cfg);
}

URReport check_total_ur(const CircleState& state, int n, const Config& cfg) {
  const double sn = sigma_total(state, n);
  const double lhs = std::isinf(sn) ? kInf : sn * sigma_lz(state);
  return make_report(URKind::TOTAL, n, lhs, 0.5 * state.hbar(), cfg);
}

URReport check_fujikawa(const CircleState& state, const Config& cfg) {
  if (!state.periodic()) {
    throw UnsupportedStateError("Fujikawa bound needs a strictly periodic state");
  }
  const auto mom = angle_moments_beta(state, -std::numbers::pi);
  const double lhs = mom.sigma * sigma_lz(state);
  const double rhs = 0.5 * state.hbar() *
                     (1.0 - 2.0 * std::numbers::pi * state.density(std::numbers::pi));
  return make_report(URKind::FUJIKAWA, 1, lhs, rhs, cfg);
}

FoldSymmetry detect_fold_symmetry(const CircleState& state, double tol, const Config& cfg) {
  if (!(tol > 0.0)) throw std::invalid_argument("symmetry tolerance must be positive");
  const int max_lag = state.max_mode() - state.min_mode();
  std::vector<double> amp(static_cast<std::size_t>(max_lag + 1), 0.0);
  double total = 0.0;
  for (int k = 1; k <= max_lag; ++k) {
    amp[static_cast<std::size_t>(k)] = std::abs(expect_harmonic(state, k));
    total += amp[static_cast<std::size_t>(k)];
  }
  if (total <= tol) return {cfg.max_mode, true};
  for (int n = max_lag; n >= 2; --n) {
    double off = 0.0;
    for (int k = 1; k <= max_lag; ++k) {
      if (k % n != 0) off += amp[static_cast<std::size_t>(k)];
    }
    if (off <= tol) return {n, false};
  }
  return {1, false};
}

std::optional<int> recommend_n(const CircleState& state, double r_threshold) {
  if (!(r_threshold > 0.0 && r_threshold < 1.0)) {
    throw std::invalid_argument("r_threshold must lie in (0, 1)");
  }
  const int max_lag = state.max_mode() - state.min_mode();
  for (int n = 1; n <= max_lag; ++n) {
    if (mean_resultant(state, n) >= r_threshold) return n;
  }
  return std::nullopt;
}

SweepSummary sweep_random_states(const SweepSpec& spec, const Config& cfg) {
  std::vector<StateOutcome> outcomes(spec.count);
  const auto count = static_cast<std::ptrdiff_t>(spec.count);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    outcomes[static_cast<std::size_t>(i)] =
        evaluate_seed(spec, spec.first_seed + static_cast<std::uint64_t>(i), cfg);
  }
  return reduce(outcomes);
}

SweepSummary sweep_random_states_serial(const SweepSpec& spec, const Config& cfg) {
  std::vector<StateOutcome> outcomes(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    outcomes[i] = evaluate_seed(spec, spec.first_seed + i, cfg);
  }
  return reduce(outcomes);
}

}  // namespace qcircle
