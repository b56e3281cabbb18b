#pragma once

#include <cstddef>

namespace qcircle {

// Numerical knobs shared by every module. All fields are user-overridable
// from the command line.
struct Config {
  double hbar = 1.0;
  // Initial sampling grid for states built from samples; must be a power of
  // two. Doubled on demand when a profile is not resolved.
  std::size_t grid_size = 4096;
  // Relative amplitude below which Fourier coefficients are dropped.
  double trunc_tol = 1e-12;
  // Absolute tolerance for equality comparisons (saturation, examples).
  double cmp_tol = 1e-9;
  // Largest |m| a state may carry.
  int max_mode = 512;

  void validate() const;
};

}  // namespace qcircle
