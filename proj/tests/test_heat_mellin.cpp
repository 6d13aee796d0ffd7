#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "friedlab/errors.hpp"
#include "friedlab/heat_mellin.hpp"

using namespace friedlab;

namespace {

double oracle(long n, double sigma) {
  const double k = static_cast<double>(std::abs(n));
  return std::exp(std::exp(-k * std::sqrt(sigma)) / (2.0 * k));
}

}  // namespace

TEST(HeatTrace, Examples) {
  const double pi = std::numbers::pi;
  EXPECT_NEAR(heat_trace_line(1, 0.25), std::exp(-1.0) / std::sqrt(pi), 1e-16);
  EXPECT_EQ(heat_trace_line(2, 1e-6), 0.0);
  EXPECT_NEAR(heat_trace_line(1, 1.0), std::exp(-0.25) / std::sqrt(4 * pi), 1e-16);
  EXPECT_NEAR(alternating_heat_trace_line(1, 1.0), -std::exp(-0.25) / std::sqrt(4 * pi), 1e-16);
  EXPECT_NEAR(alternating_heat_trace_line(3, 2.0), -std::exp(-9.0 / 8) / std::sqrt(8 * pi), 1e-16);
  for (double t : {0.1, 1.0, 7.0}) EXPECT_EQ(alternating_heat_trace_line(2, t) + heat_trace_line(2, t), 0.0);
  EXPECT_THROW(heat_trace_line(1, 0.0), DomainError);
  EXPECT_THROW(heat_trace_line(1, -1.0), DomainError);
}

TEST(ReciprocalGamma, MatchesStdGamma) {
  EXPECT_EQ(reciprocal_gamma(0.0), 0.0);
  EXPECT_EQ(reciprocal_gamma(-2.0), 0.0);
  for (double s : {-0.4, -0.1, 1e-4, 0.2, 0.49, 0.7, 1.5, 3.2})
    EXPECT_NEAR(reciprocal_gamma(s), 1.0 / std::tgamma(s), 1e-14) << s;
  // 1/Gamma(s) = s + gamma s^2 + O(s^3)
  const double s = 1e-5;
  EXPECT_NEAR(reciprocal_gamma(s), s + std::numbers::egamma * s * s, 1e-15);
}

TEST(GaussLegendre, ExactForPolynomialsAndAccurateForSmooth) {
  EXPECT_NEAR(gauss_legendre([](double x) { return std::pow(x, 9) - 3 * x * x; }, -1.0, 2.0, 16),
              (std::pow(2.0, 10) - 1.0) / 10 - 9.0, 1e-11);
  EXPECT_NEAR(gauss_legendre([](double x) { return std::exp(-x); }, 0.0, 5.0, 64),
              1 - std::exp(-5.0), 1e-15);
}

TEST(MellinTorsion, SpecExamples) {
  EXPECT_NEAR(mellin_torsion(line_model(1), 1.0), 1.2019433, 1e-5);
  EXPECT_NEAR(mellin_torsion(line_model(1), 1.0), oracle(1, 1.0), 1e-4);
  EXPECT_NEAR(mellin_torsion(line_model(2), 4.0), oracle(2, 4.0), 1e-4);
  EXPECT_NEAR(mellin_torsion(line_model(1), 0.25), oracle(1, 0.25), 1e-4);
}

TEST(MellinTorsion, OracleGrid) {
  for (long n : {1L, 2L, 3L, -2L})
    for (double sigma : {0.25, 1.0, 4.0}) {
      const auto d = mellin_torsion_diagnostics(line_model(n), sigma);
      EXPECT_TRUE(d.accurate);
      EXPECT_LE(d.quadrature_error + d.tail_error, kMellinAccuracy);
      EXPECT_NEAR(d.torsion, oracle(n, sigma), 1e-4) << n << " " << sigma;
    }
}

TEST(MellinTorsion, StepSizeRobust) {
  for (long n : {1L, 2L, 3L})
    for (double sigma : {0.25, 1.0, 4.0}) {
      MellinConfig a, b;
      a.h = 2e-3;
      b.h = 1e-3;
      EXPECT_LT(std::abs(mellin_torsion(line_model(n), sigma, a) - mellin_torsion(line_model(n), sigma, b)),
                1e-5);
    }
}

TEST(MellinTorsion, MonotoneTruncation) {
  for (long n : {1L, 3L}) {
    for (double sigma : {0.25, 1.0}) {
      MellinConfig small, large;
      small.lower_nodes = 64;
      small.upper_nodes = 64;
      small.t_max = 4.0;
      large.t_max = 1.0 + 80.0 / sigma;
      large.lower_nodes = 512;
      large.upper_nodes = 256;
      const auto ds = mellin_torsion_diagnostics(line_model(n), sigma, small);
      const auto dm = mellin_torsion_diagnostics(line_model(n), sigma, MellinConfig{});
      const auto dl = mellin_torsion_diagnostics(line_model(n), sigma, large);
      const double es = std::abs(ds.torsion - oracle(n, sigma));
      const double em = std::abs(dm.torsion - oracle(n, sigma));
      const double el = std::abs(dl.torsion - oracle(n, sigma));
      const double slack = dm.quadrature_error + dm.tail_error;
      EXPECT_GE(es + slack, em);
      EXPECT_GE(em + slack, el);
    }
  }
}

TEST(MellinTorsion, Errors) {
  EXPECT_THROW(mellin_torsion(line_model(1), 0.0), DomainError);
  EXPECT_THROW(mellin_torsion(line_model(1), -1.0), DomainError);
  MellinConfig bad;
  bad.h = 0.1;
  EXPECT_THROW(mellin_torsion(line_model(1), 1.0, bad), ValidationError);
  bad = {};
  bad.lower_nodes = 32;
  EXPECT_THROW(mellin_torsion(line_model(1), 1.0, bad), ValidationError);
  MellinConfig coarse;
  coarse.t_max = 1.5;  // cuts the e^{-sigma t} tail far too early
  EXPECT_THROW(mellin_torsion(line_model(1), 0.25, coarse), AccuracyError);
  const auto d = mellin_torsion_diagnostics(line_model(1), 0.25, coarse);
  EXPECT_FALSE(d.accurate);
}
