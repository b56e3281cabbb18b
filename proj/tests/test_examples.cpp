#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "qcircle/examples.hpp"
#include "qcircle/observables.hpp"

using namespace qcircle;

TEST(ExampleStates, Normalized) {
  for (const auto& s : {superposition_state(3, 2), sin_power_state(1), sin_power_state(4),
                        sin_power_state(7), cos_state(1), cos_state(3)}) {
    double norm = 0.0;
    for (const auto& c : s.coeffs()) norm += std::norm(c);
    EXPECT_NEAR(norm, 1.0, 1e-14);
  }
}

TEST(ExampleStates, SinPowerProfile) {
  for (int n = 1; n <= 6; ++n) {
    const auto s = sin_power_state(n);
    EXPECT_EQ(s.periodic(), n % 2 == 0);
    // |psi| ∝ |sin(phi/2)|^n; compare shapes at two points.
    const double a = std::abs(s.evaluate(1.0)) / std::abs(s.evaluate(2.5));
    EXPECT_NEAR(a, std::pow(std::sin(0.5) / std::sin(1.25), n), 1e-12) << n;
  }
  EXPECT_THROW(sin_power_state(0), std::invalid_argument);
  EXPECT_THROW(cos_state(0), std::invalid_argument);
  EXPECT_THROW(superposition_state(2, 2), std::invalid_argument);
}

TEST(ExampleSelector, Families) {
  EXPECT_EQ(parse_example_selector("superposition").size(), 4u);
  EXPECT_EQ(parse_example_selector("sin-power").size(), 10u);
  EXPECT_EQ(parse_example_selector("von-mises").size(), 6u);
  EXPECT_EQ(parse_example_selector("cos-phi").size(), 1u);
  EXPECT_EQ(parse_example_selector("cos-2phi").size(), 1u);
  EXPECT_EQ(default_examples().size(), 22u);
}

TEST(ExampleSelector, Parameterized) {
  const auto s = parse_example_selector("superposition:3,2");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].k, 3);
  EXPECT_EQ(s[0].m, 2);
  EXPECT_EQ(s[0].label(), "superposition:3,2");
  EXPECT_EQ(parse_example_selector("sin-power:4")[0].power, 4);
  EXPECT_DOUBLE_EQ(parse_example_selector("von-mises:2.5")[0].alpha, 2.5);
  for (const auto* bad : {"", "nope", "superposition:3", "superposition:2,2", "sin-power:0",
                          "sin-power:x", "von-mises:", "cos-phi:1"}) {
    EXPECT_THROW(parse_example_selector(bad), std::invalid_argument) << bad;
  }
}

TEST(RunExample, AllDefaultsPass) {
  for (const auto& c : default_examples()) {
    const auto r = run_example(c);
    EXPECT_TRUE(r.passed) << c.label();
    EXPECT_FALSE(r.checks.empty());
    for (const auto& q : r.checks) {
      EXPECT_TRUE(q.passed) << c.label() << " " << q.name << " " << q.computed << " vs "
                            << q.expected;
      EXPECT_FALSE(q.expression.empty());
    }
  }
}

TEST(RunExample, SuperpositionNumbers) {
  const auto r = run_example(parse_example_selector("superposition:3,2")[0]);
  bool seen = false;
  for (const auto& q : r.checks) {
    if (q.name.find("sigma_R*sigma_Lz") != std::string::npos) {
      EXPECT_NEAR(q.computed, std::sqrt(3.0) / 2.0, 1e-10);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}

TEST(RunExample, SinPowerFour) {
  const auto r = run_example(parse_example_selector("sin-power:4")[0]);
  EXPECT_TRUE(r.passed);
  for (const auto& q : r.checks) {
    if (q.name == "sigma_R*sigma_Lz") EXPECT_NEAR(q.computed, 0.5 * std::sqrt(9.0 / 7.0), 1e-9);
  }
}

TEST(RunExample, HbarPropagates) {
  Config cfg;
  cfg.hbar = 2.0;
  for (const auto& c : default_examples()) EXPECT_TRUE(run_example(c, cfg).passed) << c.label();
}

TEST(RunExample, TightToleranceCanFail) {
  Config cfg;
  cfg.cmp_tol = 1e-300;
  bool any_failed = false;
  for (const auto& c : parse_example_selector("von-mises")) {
    any_failed = any_failed || !run_example(c, cfg).passed;
  }
  EXPECT_TRUE(any_failed);
}
