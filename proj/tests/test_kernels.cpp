#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qcircle/circle_state.hpp"
#include "qcircle/kernels.hpp"

namespace kernels = qcircle::kernels;
using qcircle::CircleState;
using qcircle::cplx;

TEST(Kernels, FftMatchesDirectDft) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (std::size_t n : {4u, 16u, 256u}) {
    std::vector<cplx> x(n);
    for (auto& v : x) v = {g(rng), g(rng)};
    const auto fast = kernels::forward_dft(x);
    const auto slow = kernels::forward_dft_direct(x);
    const auto naive = oracle::naive_dft(x, -1);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(std::abs(fast[k] - slow[k]), 0.0, 1e-11);
      EXPECT_NEAR(std::abs(slow[k] - naive[k]), 0.0, 1e-11);
    }
  }
}

TEST(Kernels, DensityParallelMatchesSerialAndPointwise) {
  const auto s = CircleState::random(12, 3);
  std::vector<double> phi(1001);
  for (std::size_t j = 0; j < phi.size(); ++j) phi[j] = -5.0 + 0.013 * j;
  std::vector<double> a(phi.size()), b(phi.size());
  kernels::density_at(s, phi, a);
  kernels::density_at_serial(s, phi, b);
  for (std::size_t j = 0; j < phi.size(); ++j) {
    EXPECT_EQ(a[j], b[j]);
    EXPECT_NEAR(a[j], s.density(phi[j]), 1e-14);
  }
}

TEST(Kernels, SimpsonParallelMatchesSerial) {
  const auto s = CircleState::random(6, 8);
  for (double beta : {-3.0, 0.0, 2.5}) {
    const auto p = kernels::simpson_moments(s, beta, 1 << 12);
    const auto q = kernels::simpson_moments_serial(s, beta, 1 << 12);
    EXPECT_NEAR(p.m0, q.m0, 1e-13);
    EXPECT_NEAR(p.m1, q.m1, 1e-12);
    EXPECT_NEAR(p.m2, q.m2, 1e-11);
    EXPECT_NEAR(p.m0, 1.0, 1e-13);
  }
}

TEST(Kernels, SimpsonMomentsOfUniformDensity) {
  const auto u = CircleState::from_fourier({{0, 1.0}});
  const auto m = kernels::simpson_moments(u, 0.3, 1 << 10);
  EXPECT_NEAR(m.m1, oracle::kPi, 1e-13);
  EXPECT_NEAR(m.m2, 4.0 * oracle::kPi * oracle::kPi / 3.0, 1e-12);
  EXPECT_NEAR(kernels::simpson_mass(u, 0.0, 1.0, 64), 1.0 / oracle::kTwoPi, 1e-15);
}

TEST(Kernels, SimpsonRejectsOddIntervals) {
  const auto u = CircleState::from_fourier({{0, 1.0}});
  EXPECT_THROW(kernels::simpson_moments(u, 0.0, 7), std::invalid_argument);
  EXPECT_THROW(kernels::simpson_mass(u, 0.0, 1.0, 0), std::invalid_argument);
}

TEST(Kernels, ThreadCountPositive) { EXPECT_GE(kernels::thread_count(), 1); }
