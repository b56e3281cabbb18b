#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcircle/circle_state.hpp"
#include "qcircle/config.hpp"

namespace qcircle {

// (e^{ik phi} + e^{im phi}) / sqrt(4 pi), k != m.
CircleState superposition_state(int k, int m, const Config& cfg = {});
// Normalized sin^n(phi/2). Odd n is anti-periodic and uses theta = pi.
CircleState sin_power_state(int n, const Config& cfg = {});
// sqrt(1/pi) cos(h phi), h >= 1.
CircleState cos_state(int harmonic, const Config& cfg = {});

enum class ExampleId { SUPERPOSITION, SIN_POWER, VON_MISES, COS_PHI, COS_2PHI };

struct ExampleCase {
  ExampleId id = ExampleId::COS_PHI;
  int k = 0;           // SUPERPOSITION
  int m = 0;           // SUPERPOSITION
  int power = 0;       // SIN_POWER
  double alpha = 0.0;  // VON_MISES

  std::string label() const;
};

// One computed quantity against its closed form. `expression` is the exact
// form (in terms of hbar, sqrt, Bessel functions) that `expected` evaluates.
struct QuantityCheck {
  std::string name;
  std::string expression;
  double expected = 0.0;
  double computed = 0.0;
  double error = 0.0;
  bool passed = false;
};

struct ExampleResult {
  ExampleCase example;
  std::vector<QuantityCheck> checks;
  bool passed = false;
};

// Every case reproduced by `qcircle examples`.
std::vector<ExampleCase> default_examples();

// Accepts a family name (`superposition`, `sin-power`, `von-mises`,
// `cos-phi`, `cos-2phi`) or a parameterized case such as
// `superposition:3,2`, `sin-power:4`, `von-mises:2.5`.
// Throws std::invalid_argument on anything else.
std::vector<ExampleCase> parse_example_selector(std::string_view selector);

ExampleResult run_example(const ExampleCase& example, const Config& cfg = {});

}  // namespace qcircle
