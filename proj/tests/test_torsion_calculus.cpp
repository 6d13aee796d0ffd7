#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "friedlab/torsion_calculus.hpp"
#include "support/generators.hpp"

using namespace friedlab;
using namespace friedlab::testing;

namespace {

EulerSequence constant_sequence(Complex value, long N) {
  std::map<long, Complex> chi;
  for (long n = -N; n <= N; ++n) chi[n] = value;
  return EulerSequence(chi, std::abs(value));
}

std::map<long, TorsionProfile> weighted_circle_factors(const EulerSequence& chi, long N) {
  std::map<long, TorsionProfile> out;
  for (long n = -N; n <= N; ++n) out.emplace(n, raise(circle_factor_profile(n), chi(n)));
  return out;
}

TorsionProfile profile_of(std::function<Complex(Complex)> f) {
  return TorsionProfile(std::move(f), {TorsionProfile::Variable::sigma, 0.0, false});
}

}  // namespace

TEST(EulerSequenceTest, BoundIsEnforced) {
  EXPECT_THROW(EulerSequence({{1, Complex(3.0)}}, 2.0), ValidationError);
  const EulerSequence chi({{1, Complex(2.0)}}, 2.0);
  EXPECT_EQ(chi(1), Complex(2.0));
  EXPECT_EQ(chi(5), Complex(0.0));
  EXPECT_FALSE(chi.covers(1));
}

TEST(EulerSequenceTest, FromSpectrumAndFixedPoints) {
  const auto chi = euler_sequence_from_spectrum(cyclic_spectrum(3), 9);
  EXPECT_EQ(chi.bound_M(), 3.0);
  const auto cyc = cyclic3_scenario();
  const auto fp = euler_sequence_from_fixed_points(cyc, canonical_cutoffs(cyc), 9);
  for (long n = -9; n <= 9; ++n) {
    EXPECT_LT(std::abs(chi(n) - fp(n)), 1e-12) << n;
    EXPECT_EQ(fp(n), Complex(n % 3 == 0 ? 3.0 : 0.0));
  }
  const auto sph = sphere_scenario(1.0);
  EXPECT_EQ(euler_sequence_from_fixed_points(sph, canonical_cutoffs(sph), 4)(0), Complex(2.0));
  EXPECT_EQ(euler_sequence_from_fixed_points(sph, canonical_cutoffs(sph), 4, Complex(5.0))(0),
            Complex(5.0));
  auto growing = cyc;
  growing.growth = GrowthBound{3.0, 0.5};
  EXPECT_THROW(euler_sequence_from_fixed_points(growing, canonical_cutoffs(cyc), 4),
               PreconditionError);
}

TEST(CircleFactor, Examples) {
  EXPECT_NEAR(circle_factor_torsion(1, 0.0).real(), std::exp(0.5), 1e-15);
  EXPECT_NEAR(circle_factor_torsion(0, 4.0).real(), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(circle_factor_torsion(2, 1.0).real(), std::exp(std::exp(-2.0) / 4), 1e-15);
  EXPECT_NEAR(circle_factor_torsion(-2, 1.0).real(), std::exp(std::exp(-2.0) / 4), 1e-15);
  EXPECT_THROW(circle_factor_torsion(1, -1.0), BranchError);
}

TEST(TorsionProfileTest, DomainIsEnforced) {
  const auto p = profile_of([](Complex s) { return s; });
  EXPECT_THROW(p(Complex(0.0, 1.0)), DomainError);
  EXPECT_EQ(p(Complex(2.0, 1.0)), Complex(2.0, 1.0));
  const auto c = circle_factor_profile(1);
  EXPECT_TRUE(c.in_domain(0.0));
  EXPECT_FALSE(c.in_domain(-1.0));
  EXPECT_THROW(c(-1.0), DomainError);
  EXPECT_EQ(TorsionProfile::constant(3.0)(-7.0), Complex(3.0));
}

TEST(PrincipalPower, Conventions) {
  EXPECT_EQ(principal_power(0.0, 0.0), Complex(1.0));
  EXPECT_EQ(principal_power(0.0, 2.0), Complex(0.0));
  EXPECT_THROW(principal_power(0.0, -1.0), PoleError);
  EXPECT_EQ(principal_power(-2.0, 3.0), Complex(-8.0));
  EXPECT_THROW(principal_power(-2.0, 0.5), BranchError);
  EXPECT_LT(std::abs(principal_power(Complex(0, 1), 0.5) - std::polar(1.0, M_PI / 4)), 1e-15);
}

TEST(SuspensionTorsion, Examples) {
  EXPECT_EQ(suspension_torsion(constant_sequence(0.0, 5), {2.0, 1.0}, 5).value, Complex(1.0));

  const GradedSpectrum minus_one(0, {{0, {{{1, 0}, {-1, 0}, 1}}}});
  std::map<long, Complex> alt;
  for (long n = -300; n <= 300; ++n) alt[n] = n % 2 ? -1.0 : 1.0;
  const auto a = suspension_torsion(EulerSequence(alt, 1.0), 1.0, 300);
  const auto b = torsion_series(minus_one, 1.0, 300);
  EXPECT_LT(std::abs(a.value - b.value), 1e-15);
  EXPECT_LE(std::abs(a.value - std::exp(-0.5) / (1 + std::exp(-1.0))), a.total_error() + 1e-15);

  const auto sph = suspension_torsion(constant_sequence(2.0, 300), 4.0, 300);
  EXPECT_LE(std::abs(sph.value - std::exp(-2.0) * std::pow(1 - std::exp(-2.0), -2)),
            sph.total_error() + 1e-15);
  EXPECT_THROW(suspension_torsion(constant_sequence(1.0, 5), 1.0, 6), PreconditionError);
  EXPECT_THROW(suspension_torsion(constant_sequence(1.0, 5), -1.0, 5), BranchError);
}

TEST(SuspensionTorsion, PositiveForRealNonnegativeChi) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::map<long, Complex> chi;
  for (long n = -40; n <= 40; ++n) chi[n] = u(rng);
  for (double s : {0.1, 1.0, 9.0}) {
    const Complex t = suspension_torsion(EulerSequence(chi, 3.0), s, 40).value;
    EXPECT_GT(t.real(), 0.0);
    EXPECT_EQ(t.imag(), 0.0);
  }
}

TEST(TorsionFixedPointForm, Examples) {
  const auto cyc = cyclic3_scenario();
  const auto a = torsion_fixed_point_form(cyc, canonical_cutoffs(cyc), 4.0, 300);
  EXPECT_LE(std::abs(a.value - std::exp(-3.0) / (1 - std::exp(-6.0))), a.total_error() + 1e-15);

  Scenario circle;
  circle.model = CircleRotation{std::sqrt(2.0), 0.0};
  const auto e = torsion_fixed_point_form(circle, {}, 4.0, 50, Complex(1.0));
  EXPECT_NEAR(e.value.real(), std::exp(-1.0), 1e-15);

  const auto sph = sphere_scenario(1.0);
  const auto z = torsion_fixed_point_form(sph, canonical_cutoffs(sph), 4.0, 300);
  EXPECT_LE(std::abs(z.value - std::exp(-2.0) * std::pow(1 - std::exp(-2.0), -2)),
            z.total_error() + 1e-15);
}

TEST(TorsionFixedPointForm, MatchesSpectralSeries) {
  std::mt19937_64 rng(42);
  for (const auto& cycles : partitions(5)) {
    const auto perm = permutation_with_cycles(cycles);
    std::vector<FiberMatrix> maps;
    for (std::size_t i = 0; i < perm.size(); ++i) maps.push_back({random_unit(rng)});
    const auto s = finite_scenario(perm, maps, random_unit(rng), 1);
    const auto spec = cohomology_spectrum(s);
    const Complex sigma(2.0, 0.5);
    const auto a = torsion_fixed_point_form(s, canonical_cutoffs(s), sigma, 100);
    const auto b = torsion_series(spec, sigma, 100);
    EXPECT_LE(std::abs(a.value - b.value), a.total_error() + b.total_error() + 1e-14);
  }
}

TEST(ProductTorsion, Examples) {
  const auto t1 = circle_factor_profile(1), t2 = circle_factor_profile(2);
  const Complex s(1.3, 0.4);
  EXPECT_LT(std::abs(product_torsion(t1, 2.0, t2, 0.0, s) - std::pow(t2(s), 2)), 1e-15);
  EXPECT_LT(std::abs(product_torsion(t1, 1.0, t1, 1.0, s) - t1(s) * t1(s)), 1e-15);
  // The odd-dimensional line has chi = 0, leaving the circle factor to the power chi_(g,n).
  const auto other = profile_of([](Complex) { return Complex(7.0, 1.0); });
  EXPECT_LT(std::abs(product_torsion(other, Complex(3.0, 0.5), t1, 0.0, s) -
                     principal_power(t1(s), Complex(3.0, 0.5))),
            1e-14);
}

TEST(ProductTorsion, ExactlySymmetric) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto a = circle_factor_profile(i % 4), b = circle_factor_profile(1 + i % 3);
    const Complex x = random_unit(rng) * 2.0, y = random_unit(rng) * 3.0;
    const Complex s(0.5 + i * 0.05, 0.1);
    EXPECT_EQ(product_torsion(a, x, b, y, s), product_torsion(b, y, a, x, s));
  }
}

TEST(QuotientTorsion, Examples) {
  EXPECT_EQ(quotient_torsion(std::vector<TorsionProfile>{TorsionProfile::constant(1.0)}, 2.0),
            Complex(1.0));
  const auto t = circle_factor_profile(3);
  EXPECT_LT(std::abs(quotient_torsion(std::vector<TorsionProfile>{t, t}, 2.0) - t(2.0) * t(2.0)),
            1e-15);
}

TEST(QuotientTorsion, ReassemblesSuspensionTorsion) {
  const auto cyc = cyclic3_scenario();
  const auto sph = sphere_scenario(1.0);
  for (const Scenario* s : {&cyc, &sph}) {
    const auto chi = euler_sequence_from_fixed_points(*s, canonical_cutoffs(*s), 60);
    for (Complex sigma : {Complex(1.0), Complex(4.0), Complex(2.0, 1.0)}) {
      const Complex a = suspension_torsion(chi, sigma, 60).value;
      const Complex b = quotient_torsion(weighted_circle_factors(chi, 60), sigma, 60);
      EXPECT_LT(std::abs(a - b), 1e-12 * std::abs(a));
    }
  }
}

TEST(FibrationTorsion, Examples) {
  const auto chi = constant_sequence(2.0, 30);
  std::map<long, TorsionProfile> tE1, tE2;
  for (long n = -30; n <= 30; ++n) tE2.emplace(n, circle_factor_profile(n));
  const Complex sigma(3.0, 0.0);
  EXPECT_LT(std::abs(fibration_torsion(chi, {}, tE1, tE2, sigma, 30) -
                     suspension_torsion(chi, sigma, 30).value),
            1e-13);
  EXPECT_EQ(fibration_torsion(constant_sequence(0.0, 3), {}, {}, {}, sigma, 3), Complex(1.0));
  const EulerSequence chi0({{0, Complex(5.0)}}, 5.0);
  EXPECT_NEAR(fibration_torsion(chi0, {}, tE1, tE2, 4.0, 0).real(), std::exp(-5.0), 1e-14);
  EXPECT_THROW(fibration_torsion(chi, {}, tE1, {}, sigma, 2), PreconditionError);
}
