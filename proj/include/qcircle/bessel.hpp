#pragma once

// Modified Bessel functions of the first kind, orders 0 and 1, and the
// derived functions that govern von Mises wave packets.
//
// Small arguments use the ascending power series
//   I_v(x) = sum_k (x/2)^(2k+v) / (k! (k+v)!)
// and large arguments the exponentially scaled Hankel expansion, so that the
// ratio I1/I0 never forms e^x explicitly.

namespace qcircle::bessel {

struct BesselConfig {
  // |x| above which the scaled asymptotic expansion is used.
  double series_cutoff = 15.0;
  // Relative truncation tolerance for the power series.
  double term_tolerance = 1e-17;

  void validate() const;
};

// Largest |x| for which i0 and i1 are finite in double precision.
inline constexpr double kOverflowThreshold = 700.0;

// I0(x). Throws RangeError when |x| > kOverflowThreshold.
double i0(double x, const BesselConfig& cfg = {});
// I1(x) = dI0/dx. Same overflow policy as i0.
double i1(double x, const BesselConfig& cfg = {});

// e^{-|x|} I0(x) and e^{-|x|} I1(x); finite for every finite x.
double i0_scaled(double x, const BesselConfig& cfg = {});
double i1_scaled(double x, const BesselConfig& cfg = {});

// I1(x)/I0(x). Odd, |ratio| < 1, total on finite x.
double ratio(double x, const BesselConfig& cfg = {});

// I1(x)/(x I0(x)), continuous at 0 with value 1/2. Even.
double ratio_over_x(double x, const BesselConfig& cfg = {});

// f(x) = sqrt(x (I0/I1 - I1/I0)); even, f(0) = sqrt(2), f >= 1.
double f_alpha(double x, const BesselConfig& cfg = {});

// h(x) = x r (1 - r/x - r^2) with r = I1/I0; even, h(0) = 0, h > 0 elsewhere.
double h_alpha(double x, const BesselConfig& cfg = {});

}  // namespace qcircle::bessel
