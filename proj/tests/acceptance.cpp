// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qcircle/bessel.hpp"
#include "qcircle/examples.hpp"
#include "qcircle/kernels.hpp"
#include "qcircle/mwp.hpp"
#include "qcircle/observables.hpp"
#include "qcircle/uncertainty.hpp"

using namespace qcircle;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHbar = 1.0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Tracks the worst error seen against a bound.
class Check {
 public:
  void close(double got, double want, double tol, const std::string& what) {
    const double err = std::abs(got - want);
    if (!(err <= tol)) fail(what + " err=" + fmt(err) + " tol=" + fmt(tol));
    worst_ = std::max(worst_, err);
  }
  void rel(double got, double want, double tol, const std::string& what) {
    const double err = std::abs(got - want) / std::abs(want);
    if (!(err <= tol)) fail(what + " rel err=" + fmt(err) + " tol=" + fmt(tol));
    worst_rel_ = std::max(worst_rel_, err);
  }
  void that(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  Outcome outcome() const {
    Outcome o;
    o.ok = first_failure_.empty();
    o.detail = o.ok ? "max abs err " + fmt(worst_) +
                          (worst_rel_ > 0 ? ", max rel err " + fmt(worst_rel_) : "")
                    : first_failure_;
    return o;
  }
  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
  }

 private:
  void fail(const std::string& msg) {
    if (first_failure_.empty()) first_failure_ = msg;
  }
  double worst_ = 0.0;
  double worst_rel_ = 0.0;
  std::string first_failure_;
};

double product_total(const CircleState& s, int n) {
  const double sn = sigma_total(s, n);
  return std::isinf(sn) ? INFINITY : sn * sigma_lz(s);
}

Outcome example_superposition() {
  Check c;
  for (int k = -3; k <= 4; ++k) {
    for (int d = 1; d <= 5; ++d) {
      const auto s = superposition_state(k, k + d);
      const std::string tag = "(" + std::to_string(k) + "," + std::to_string(k + d) + ")";
      if (d == 1) {
        c.close(product_total(s, 1), std::sqrt(3.0) / 2.0 * kHbar, 1e-10, tag);
      } else {
        c.that(std::isinf(sigma_total(s, 1)), tag + " sigma_R not infinite");
        c.close(sigma_lz(s), 0.5 * kHbar * d, 1e-12, tag + " sigma_Lz");
      }
    }
  }
  return c.outcome();
}

Outcome example_sin_power() {
  Check c;
  for (int n = 1; n <= 10; ++n) {
    const auto s = sin_power_state(n);
    const std::string tag = "n=" + std::to_string(n);
    c.that(s.periodic() == (n % 2 == 0), tag + " boundary phase");
    c.close(expect_xy(s, 1).first, -n / (n + 1.0), 1e-9, tag + " <X>");
    c.close(sigma_total(s, 1), std::sqrt(2.0 * n + 1.0) / n, 1e-9, tag + " sigma_R");
    c.close(sigma_lz(s), 0.5 * kHbar * n / std::sqrt(2.0 * n - 1.0), 1e-9, tag + " sigma_Lz");
    c.close(product_total(s, 1), 0.5 * kHbar * std::sqrt((2.0 * n + 1) / (2.0 * n - 1)), 1e-9,
            tag + " product");
  }
  return c.outcome();
}

Outcome example_von_mises() {
  Check c;
  double prev = INFINITY;
  for (double a : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
    const auto s = mwp_x(1, 0, a).second;
    const double f = bessel::f_alpha(a);
    const std::string tag = "alpha=" + Check::fmt(a);
    c.close(product_total(s, 1), 0.5 * kHbar * f, 1e-8, tag);
    c.that(f >= 1.0, tag + " f < 1");
    c.that(f < prev, tag + " f not decreasing");
    prev = f;
  }
  c.close(bessel::f_alpha(0.0), std::sqrt(2.0), 1e-10, "f(0)");
  return c.outcome();
}

Outcome mwp_saturation() {
  Check c;
  for (int n = 1; n <= 4; ++n) {
    for (int m = -2; m <= 2; ++m) {
      for (double a : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const auto s = mwp_x(n, m, a).second;
        const auto [ex, ey] = expect_xy(s, n);
        const auto [sx, sy] = sigma_xy(s, n);
        const std::string tag =
            "n=" + std::to_string(n) + " m=" + std::to_string(m) + " a=" + Check::fmt(a);
        c.close(sx * sigma_lz(s), 0.5 * n * kHbar * ey, 1e-8, tag + " saturation");
        c.close(expect_lz(s), m * kHbar, 1e-10, tag + " <Lz>");
        c.close(ex, 0.0, 1e-10, tag + " <X_n>");
      }
    }
  }
  return c.outcome();
}

Outcome conjugate_non_saturation() {
  Check c;
  for (int n = 1; n <= 4; ++n) {
    for (double a : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      const auto s = mwp_x(n, 0, a).second;
      const auto [sx, sy] = sigma_xy(s, n);
      const double lz = sigma_lz(s);
      const double h = bessel::h_alpha(a);
      const std::string tag = "n=" + std::to_string(n) + " a=" + Check::fmt(a);
      c.rel(sy * sy * lz * lz, std::pow(0.5 * n * kHbar, 2) * h, 1e-8, tag);
      c.that(h > 0.0, tag + " h(alpha) <= 0");
    }
  }
  return c.outcome();
}

Outcome fold_examples() {
  Check c;
  const auto s1 = cos_state(1);
  c.that(mean_resultant(s1, 1) <= 1e-12, "cos phi: R_1");
  c.close(sigma_lz(s1), kHbar, 1e-10, "cos phi: sigma_Lz");
  c.close(expect_xy(s1, 2).first, 0.5, 1e-10, "cos phi: <X_2>");
  c.close(product_total(s1, 2), std::sqrt(3.0) / 2.0 * kHbar, 1e-10, "cos phi: product");
  const auto s2 = cos_state(2);
  c.close(mean_resultant(s2, 4), 0.5, 1e-10, "cos 2phi: R_4");
  c.close(sigma_total(s2, 4), std::sqrt(3.0) / 4.0, 1e-10, "cos 2phi: sigma_4");
  c.close(sigma_lz(s2), 2.0 * kHbar, 1e-10, "cos 2phi: sigma_Lz");
  c.close(product_total(s2, 4), std::sqrt(3.0) / 2.0 * kHbar, 1e-10, "cos 2phi: product");
  return c.outcome();
}

Outcome boundary_problem() {
  Check c;
  const auto u = CircleState::from_fourier({{0, 1.0}});
  const int steps = 64;
  for (int i = 0; i <= steps; ++i) {
    const double beta = kTwoPi * i / steps;
    c.close(angle_moments_beta(u, beta).mean, beta + kPi, 1e-8, "uniform beta=" + Check::fmt(beta));
  }
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> bd(-kTwoPi, kTwoPi);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto s = CircleState::random(6, seed);
    const double beta = bd(rng);
    const double m0 = angle_moments_beta(s, 0.0).mean;
    const double mb = angle_moments_beta(s, beta).mean;
    const double mass = kernels::simpson_mass(s, 0.0, beta, 1 << 14);
    c.close(mb, m0 + kTwoPi * mass, 1e-7, "shift seed=" + std::to_string(seed));
  }
  return c.outcome();
}

Outcome theorem_sweep() {
  SweepSpec spec;
  spec.count = 500;
  spec.max_mode = 8;
  spec.n_max = 8;
  spec.fujikawa = true;
  const auto sum = sweep_random_states(spec);
  Check c;
  c.that(sum.states == 500, "state count");
  c.that(sum.failures == 0, std::to_string(sum.failures) + " checks failed");
  for (double v : {sum.min_slack_x, sum.min_slack_y, sum.min_slack_total, sum.min_slack_fujikawa}) {
    c.that(v >= -1e-9, "slack " + Check::fmt(v));
  }
  auto o = c.outcome();
  if (o.ok) {
    o.detail = "min slack x=" + Check::fmt(sum.min_slack_x) + " y=" + Check::fmt(sum.min_slack_y) +
               " total=" + Check::fmt(sum.min_slack_total) +
               " fujikawa=" + Check::fmt(sum.min_slack_fujikawa);
  }
  return o;
}

Outcome symmetry_lemma() {
  Check c;
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g;
  for (int n = 2; n <= 6; ++n) {
    for (int variant = 0; variant < 3; ++variant) {
      std::map<int, cplx> coeffs;
      const int offset = variant - 1;
      for (int j = -2; j <= 2; ++j) coeffs[offset + n * j] = cplx(g(rng), g(rng));
      const auto s = CircleState::from_fourier(coeffs);
      const auto fs = detect_fold_symmetry(s, 1e-9);
      const std::string tag = "n=" + std::to_string(n) + " variant " + std::to_string(variant);
      c.that(!fs.fully_symmetric && fs.n >= 2 && fs.n % n == 0,
             tag + " detected " + std::to_string(fs.n));
      for (int k = 1; k <= 8; ++k) {
        if (k % fs.n != 0) c.that(mean_resultant(s, k) <= 1e-9, tag + " R_" + std::to_string(k));
      }
    }
  }
  return c.outcome();
}

double i0_quad(double x) {
  constexpr int nodes = 1024;
  double s = 0.0;
  for (int j = 0; j < nodes; ++j) s += std::exp(x * std::cos(kTwoPi * j / nodes));
  return s / nodes;
}

double i1_quad(double x) {
  constexpr int nodes = 1024;
  double s = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double t = kTwoPi * j / nodes;
    s += std::cos(t) * std::exp(x * std::cos(t));
  }
  return s / nodes;
}

Outcome bessel_suite() {
  Check c;
  const double hstep = 1e-5;
  for (double x : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double d0 = (bessel::i0(x + hstep) - bessel::i0(x - hstep)) / (2 * hstep);
    c.rel(bessel::i1(x), d0, 1e-6, "I0' = I1 at " + Check::fmt(x));
    const double d1 = (bessel::i1(x + hstep) - bessel::i1(x - hstep)) / (2 * hstep);
    c.rel(x * d1 + bessel::i1(x), x * bessel::i0(x), 1e-6, "recurrence at " + Check::fmt(x));
  }
  c.close(bessel::ratio(0.01), 0.005, 1e-5, "ratio small x");
  c.close(bessel::ratio(50.0), 1.0 - 1.0 / 100 - 1.0 / 20000, 1e-4, "ratio large x");
  c.close(bessel::h_alpha(0.1), 0.0025, 5e-5, "h small x");
  c.close(bessel::h_alpha(20.0), 1.0 / 40, 1e-3, "h large x");
  for (int i = 0; i <= 40; ++i) {
    const double x = 0.5 * i;
    c.rel(bessel::i0(x), i0_quad(x), 1e-10, "I0 quadrature at " + Check::fmt(x));
    if (x > 0) c.rel(bessel::i1(x), i1_quad(x), 1e-10, "I1 quadrature at " + Check::fmt(x));
  }
  return c.outcome();
}

Outcome phase_relation() {
  Check c;
  for (int n = 1; n <= 3; ++n) {
    for (double k : {0.5, 1.0, 2.0, 5.0}) {
      const auto x = mwp_x(n, 0, k).second.rotate(kPi / (2 * n));
      const auto y = mwp_y(n, 0, k).second;
      c.close(max_coeff_deviation_up_to_phase(x, y), 0.0, 1e-9,
              "n=" + std::to_string(n) + " kappa=" + Check::fmt(k));
    }
  }
  return c.outcome();
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;  // <= 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "superposition example", 1.0, example_superposition},
      {2, "sin-power example", 2.0, example_sin_power},
      {3, "von Mises total relation", 0.0, example_von_mises},
      {4, "wave packet saturation", 10.0, mwp_saturation},
      {5, "conjugate bound non-saturation", 0.0, conjugate_non_saturation},
      {6, "cos phi / cos 2phi examples", 0.0, fold_examples},
      {7, "integration window dependence", 0.0, boundary_problem},
      {8, "theorem sweep", 30.0, theorem_sweep},
      {9, "symmetry lemma", 0.0, symmetry_lemma},
      {10, "Bessel suite", 0.0, bessel_suite},
      {11, "phase-shift relation", 0.0, phase_relation},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && cr.time_limit_s > 0 && secs >= cr.time_limit_s) {
      o = {false, "runtime " + Check::fmt(secs) + " s exceeds " + Check::fmt(cr.time_limit_s) + " s"};
    }
    failed += !o.ok;
    std::printf("%s criterion %2d  %-32s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", cr.id, cr.name,
                secs, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
