#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "qcircle/config.hpp"

namespace qcircle {

using cplx = std::complex<double>;

// Normalized wavefunction on the circle in the L_z eigenbasis:
//
//   psi(phi) = sum_m c_m exp(i mu_m phi) / sqrt(2 pi),  mu_m = m + theta / 2pi
//
// so that psi(phi + 2pi) = exp(i theta) psi(phi). theta = 0 is the strictly
// periodic case. Coefficients are stored densely over [min_mode, max_mode].
//
// Instances are immutable once built.
class CircleState {
 public:
  // Builds a state from a sparse coefficient map and normalizes it.
  // Throws DegenerateStateError if every coefficient is zero and
  // ResolutionError if a mode exceeds cfg.max_mode.
  static CircleState from_fourier(const std::map<int, cplx>& coeffs,
                                  double theta = 0.0,
                                  const Config& cfg = {});

  // Same, from a dense run of coefficients starting at `first_mode`.
  static CircleState from_dense(int first_mode, std::vector<cplx> coeffs,
                                double theta = 0.0, const Config& cfg = {});

  // Builds a state from N equispaced samples g(2 pi j / N) of the periodic
  // part g(phi) = psi(phi) exp(-i theta phi / 2pi). N must be a power of
  // two >= 4. Coefficients below cfg.trunc_tol (relative) are dropped.
  // Throws AliasingError if the outer 10% of the band carries more than
  // cfg.trunc_tol of the weight.
  static CircleState from_samples(std::span<const cplx> samples,
                                  double theta = 0.0, const Config& cfg = {});

  // Pseudo-random normalized state on |m| <= max_mode with theta = 0.
  static CircleState random(int max_mode, std::uint64_t seed,
                            const Config& cfg = {});

  int min_mode() const noexcept { return first_; }
  int max_mode() const noexcept { return first_ + static_cast<int>(c_.size()) - 1; }
  // Largest |m| present.
  int mode_bound() const noexcept;
  double theta() const noexcept { return theta_; }
  double hbar() const noexcept { return hbar_; }
  bool periodic() const noexcept { return theta_ == 0.0; }

  // c_m, zero outside the stored band.
  cplx coeff(int m) const noexcept;
  std::span<const cplx> coeffs() const noexcept { return c_; }
  // Effective L_z eigenvalue (in units of hbar) of mode m.
  double mu(int m) const noexcept;

  cplx evaluate(double phi) const noexcept;
  double density(double phi) const noexcept;

  // psi'(phi) = psi(phi - delta).
  CircleState rotate(double delta) const;

  // Sparse view of the nonzero coefficients.
  std::map<int, cplx> to_map() const;

 private:
  CircleState(int first, std::vector<cplx> c, double theta, double hbar)
      : first_(first), c_(std::move(c)), theta_(theta), hbar_(hbar) {}

  int first_ = 0;
  std::vector<cplx> c_;
  double theta_ = 0.0;
  double hbar_ = 1.0;
};

// Largest |c'_m - e^{i g} c_m| after choosing the global phase g that best
// aligns b onto a. Both states must share theta.
double max_coeff_deviation_up_to_phase(const CircleState& a, const CircleState& b);

// Text record: first line `theta <value>`, then one `m re im` per line.
// Blank lines and lines starting with '#' are ignored. Values are written
// with 17 significant digits.
void write_state(std::ostream& os, const CircleState& state);
// Throws ParseError (with line number) or DegenerateStateError.
CircleState read_state(std::istream& is, const Config& cfg = {});

}  // namespace qcircle
