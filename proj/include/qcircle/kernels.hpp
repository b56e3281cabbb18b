#pragma once

// Data-parallel inner loops. Each OpenMP kernel has a `_serial` twin that
// computes the same quantity with a plain loop; tests hold the two against
// each other and bench/ compares their throughput.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qcircle {
class CircleState;
}

namespace qcircle::kernels {

using cplx = std::complex<double>;

// X_k = sum_j x_j exp(-2 pi i j k / N), k = 0..N-1 (FFTW).
std::vector<cplx> forward_dft(std::span<const cplx> x);
// Same transform by direct O(N^2) summation.
std::vector<cplx> forward_dft_direct(std::span<const cplx> x);

// out[j] = |psi(phi[j])|^2.
void density_at(const CircleState& state, std::span<const double> phi,
                std::span<double> out);
void density_at_serial(const CircleState& state, std::span<const double> phi,
                       std::span<double> out);

// Composite Simpson approximations of
//   int_0^{2pi} u^p rho(beta + u) du,  p = 0, 1, 2
// and of the partial mass int_0^{beta} rho.
struct MomentSums {
  double m0 = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
};

MomentSums simpson_moments(const CircleState& state, double beta,
                           std::size_t intervals);
MomentSums simpson_moments_serial(const CircleState& state, double beta,
                                  std::size_t intervals);

// int_a^b rho(phi) dphi by composite Simpson (intervals must be even).
double simpson_mass(const CircleState& state, double a, double b,
                    std::size_t intervals);

// Number of OpenMP threads the parallel kernels will use.
int thread_count();

}  // namespace qcircle::kernels
