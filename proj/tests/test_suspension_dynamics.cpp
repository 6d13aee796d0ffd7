#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "friedlab/suspension_dynamics.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace friedlab;
using namespace friedlab::testing;

namespace {

constexpr double kPi = std::numbers::pi;

Scenario circle_scenario(double alpha, double gamma = 0.0) {
  Scenario s;
  s.model = CircleRotation{alpha, gamma};
  s.chi0 = Complex{0.0, 0.0};
  return s;
}

Scenario identity_product(std::variant<FinitePermutation, SphereRotation> base, int window = 2) {
  Scenario s;
  s.model = DiscreteIdentityProduct{std::move(base), window};
  return s;
}

std::vector<FiberMatrix> random_line_maps(std::mt19937_64& rng, std::size_t n) {
  std::vector<FiberMatrix> maps;
  for (std::size_t i = 0; i < n; ++i) maps.push_back({random_unit(rng)});
  return maps;
}

Complex fixed_point_sum(const Scenario& s, long n) {
  Complex sum{0.0, 0.0};
  for (const auto& d : fixed_point_report(s, n)) sum += static_cast<double>(d.sign) * d.fiber_trace;
  return sum;
}

}  // namespace

TEST(LengthSpectrum, Examples) {
  EXPECT_EQ(length_spectrum(cyclic3_scenario(), 10), (std::set<long>{-9, -6, -3, 3, 6, 9}));
  EXPECT_TRUE(length_spectrum(circle_scenario(std::sqrt(2.0)), 10).empty());
  EXPECT_EQ(length_spectrum(sphere_scenario(std::sqrt(2.0)), 5),
            (std::set<long>{-5, -4, -3, -2, -1, 1, 2, 3, 4, 5}));
}

TEST(FixedPointReport, CyclicThree) {
  const auto data = fixed_point_report(cyclic3_scenario(), 3);
  ASSERT_EQ(data.size(), 3u);
  for (const auto& d : data) {
    EXPECT_EQ(d.sign, 1);
    EXPECT_EQ(d.fiber_trace, Complex(1.0));
    EXPECT_EQ(d.primitive_period, 3);
  }
  EXPECT_TRUE(fixed_point_report(cyclic3_scenario(), 1).empty());
  EXPECT_THROW(fixed_point_report(cyclic3_scenario(), 0), PreconditionError);
}

TEST(FixedPointReport, SpherePoles) {
  const auto data = fixed_point_report(sphere_scenario(2 * kPi / std::sqrt(5.0)), 1);
  ASSERT_EQ(data.size(), 2u);
  for (const auto& d : data) {
    EXPECT_EQ(d.sign, 1);
    EXPECT_EQ(d.fiber_trace, Complex(1.0));
    EXPECT_EQ(d.primitive_period, 1);
    EXPECT_GT(d.det, 0.0);
  }
  EXPECT_EQ(data[0].point_id, "N");
  EXPECT_EQ(data[1].point_id, "S");
}

TEST(FixedPointReport, DegenerateRotationThrows) {
  try {
    fixed_point_report(sphere_scenario(kPi / 2), 4);
    FAIL();
  } catch (const NondegeneracyError& e) {
    EXPECT_EQ(e.n(), 4);
  }
  EXPECT_THROW(fixed_point_report(circle_scenario(kPi), 2), NondegeneracyError);
}

TEST(FixedPointReport, WeylDisjointUnion) {
  Scenario s;
  s.model = WeylProduct{{{"a", FinitePermutation{{0, 1}}},
                         {"b", FinitePermutation{{0, 1}}},
                         {"c", FinitePermutation{{0, 1}}}}};
  const auto data = fixed_point_report(s, 2);
  EXPECT_EQ(data.size(), 6u);
  EXPECT_EQ(data.front().point_id, "a/0");
}

TEST(FixedPointReport, FiberTraceBoundedByRank) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int rank = 1 + trial % 3;
    const auto perm = permutation_with_cycles({2, 3, 1});
    std::vector<FiberMatrix> maps;
    for (std::size_t y = 0; y < perm.size(); ++y) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(rank, rank);
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
      Eigen::MatrixXcd q = qr.householderQ();
      FiberMatrix f;
      for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c) f.push_back(q(r, c));
      maps.push_back(f);
    }
    const auto s = finite_scenario(perm, maps, random_unit(rng), trial % 4, rank);
    for (long n = -8; n <= 8; ++n) {
      if (n == 0) continue;
      for (const auto& d : fixed_point_report(s, n)) EXPECT_LE(std::abs(d.fiber_trace), rank + 1e-12);
      EXPECT_LT(std::abs(fixed_point_sum(s, n) -
                         oracle_permutation_trace(perm, maps, rank, std::get<FinitePermutation>(s.model).g_phase,
                                                  trial % 4, n)),
                1e-11);
    }
  }
}

TEST(FixedPointReport, SignStabilityAlongOrbits) {
  std::mt19937_64 rng(32);
  const auto perm = permutation_with_cycles({4, 2});
  const auto s = finite_scenario(perm, random_line_maps(rng, perm.size()));
  for (long n : {4L, -4L, 8L}) {
    const auto data = fixed_point_report(s, n);
    for (const auto& a : data)
      for (const auto& b : data) {
        if (a.primitive_period != b.primitive_period) continue;
        const int ya = std::stoi(a.point_id), yb = std::stoi(b.point_id);
        if ((ya < 4) != (yb < 4)) continue;
        EXPECT_EQ(a.sign, b.sign);
        EXPECT_LT(std::abs(a.fiber_trace - b.fiber_trace), 1e-12);
      }
  }
}

TEST(PrimitivePeriod, Examples) {
  for (const char* id : {"0", "1", "2"}) EXPECT_EQ(primitive_period(cyclic3_scenario(), id), 3);
  EXPECT_EQ(primitive_period(finite_scenario({0, 1, 2, 3}), "2"), 1);
  const auto s = finite_scenario(permutation_with_cycles({2, 3}));
  EXPECT_EQ(primitive_period(s, "1"), 2);
  EXPECT_EQ(primitive_period(s, "4"), 3);
  EXPECT_THROW(primitive_period(sphere_scenario(std::sqrt(2.0)), "E"), Error);
}

TEST(PrimitivePeriod, DividesEveryReturnTime) {
  const auto perm = permutation_with_cycles({1, 2, 3, 4});
  const auto s = finite_scenario(perm);
  for (int y = 0; y < static_cast<int>(perm.size()); ++y) {
    const long p = primitive_period(s, std::to_string(y));
    for (long k = 1; k <= 24; ++k) {
      int z = y;
      for (long i = 0; i < k; ++i) z = perm[z];
      if (z == y) EXPECT_EQ(k % p, 0);
    }
  }
}

TEST(RuelleDynamical, Examples) {
  const auto cyc = ruelle_dynamical(cyclic3_scenario(), canonical_cutoffs(cyclic3_scenario()), 1.0, 300);
  EXPECT_LE(std::abs(cyc.value - std::pow(1 - std::exp(-3.0), -2)), cyc.total_error() + 1e-15);

  const auto empty = ruelle_dynamical(circle_scenario(std::sqrt(2.0)), {}, 1.0, 300);
  EXPECT_EQ(empty.value, Complex(1.0));
  EXPECT_EQ(empty.tail_bound, 0.0);

  const auto sph = sphere_scenario(std::sqrt(2.0));
  const auto z = ruelle_dynamical(sph, canonical_cutoffs(sph), 1.0, 300);
  EXPECT_LE(std::abs(z.value - std::pow(1 - std::exp(-1.0), -4)), z.total_error() + 1e-14);
}

TEST(RuelleDynamical, DomainErrorNamesGrowthRate) {
  auto s = cyclic3_scenario();
  s.growth = GrowthBound{3.0, 1.0};
  try {
    ruelle_dynamical(s, canonical_cutoffs(s), 0.5, 50);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("c = 1"), std::string::npos);
  }
  EXPECT_NO_THROW(ruelle_dynamical(s, canonical_cutoffs(s), 1.5, 50));
}

TEST(RuelleDynamical, MatchesSpectralSeriesTermByTerm) {
  std::mt19937_64 rng(33);
  for (const auto& cycles : partitions(5)) {
    const auto perm = permutation_with_cycles(cycles);
    const auto s = finite_scenario(perm, random_line_maps(rng, perm.size()), random_unit(rng), 1);
    const auto spec = cohomology_spectrum(s);
    for (double re : {0.7, 1.5}) {
      const Complex sigma(re, 0.2);
      const auto dyn = ruelle_dynamical(s, canonical_cutoffs(s), sigma, 120);
      const auto ser = ruelle_series(spec, sigma, 120);
      EXPECT_LT(std::abs(dyn.value - ser.value), 1e-12 * std::max(1.0, std::abs(ser.value)));
    }
  }
}

TEST(RuelleIdentityDiscrete, LocalizesToBase) {
  const auto base = cyclic3_scenario();
  const auto lifted = identity_product(std::get<FinitePermutation>(base.model));
  for (double s : {1.0, 2.0}) {
    const auto a = ruelle_identity_discrete(lifted, s, 300);
    const auto b = ruelle_dynamical(base, canonical_cutoffs(base), s, 300);
    EXPECT_LT(std::abs(a.value - b.value), 1e-12);
  }
  const auto sph = identity_product(SphereRotation{1.0, 0.0});
  const auto z = ruelle_identity_discrete(sph, 1.0, 300);
  EXPECT_LE(std::abs(z.value - std::pow(1 - std::exp(-1.0), -4)), z.total_error() + 1e-14);
  EXPECT_THROW(ruelle_identity_discrete(base, 1.0, 10), PreconditionError);
}

TEST(RuelleIdentityDiscrete, EmptyFixedSet) {
  // A 2-cycle has no fixed points for n = +-1.
  const auto lifted = identity_product(FinitePermutation{{1, 0}}, 1);
  const auto z = ruelle_identity_discrete(lifted, 1.0, 1);
  EXPECT_EQ(z.value, Complex(1.0));
}

TEST(AtiyahBott, Examples) {
  const auto cyc = cyclic3_scenario();
  const auto spec = cyclic_spectrum(3);
  EXPECT_LT(std::abs(atiyah_bott_residual(cyc, spec, 3)), 1e-12);
  EXPECT_LT(std::abs(atiyah_bott_residual(cyc, spec, 1)), 1e-12);
  EXPECT_EQ(fixed_point_sum(cyc, 1), Complex(0.0));
  const auto sph = sphere_scenario(std::sqrt(3.0));
  for (long n = -7; n <= 7; ++n) {
    if (n == 0) continue;
    EXPECT_EQ(atiyah_bott_residual(sph, sphere_spectrum(), n), Complex(0.0));
    EXPECT_EQ(fixed_point_sum(sph, n), Complex(2.0));
  }
  EXPECT_THROW(atiyah_bott_residual(identity_product(SphereRotation{1.0, 0.0}), sphere_spectrum(), 1),
               PreconditionError);
}

TEST(AtiyahBott, CohomologySpectrumOfTwistedCycles) {
  std::mt19937_64 rng(34);
  for (const auto& cycles : partitions(4)) {
    const auto perm = permutation_with_cycles(cycles);
    const auto maps = random_line_maps(rng, perm.size());
    const auto s = finite_scenario(perm, maps, random_unit(rng), 2);
    const auto spec = cohomology_spectrum(s);
    EXPECT_EQ(spec.total_multiplicity(), static_cast<int>(perm.size()));
    for (long n = -9; n <= 9; ++n)
      if (n != 0) EXPECT_LT(std::abs(atiyah_bott_residual(s, spec, n)), 1e-12);
  }
}

TEST(EulerFromFixedPoints, Examples) {
  const auto cyc = cyclic3_scenario();
  EXPECT_EQ(euler_from_fixed_points(cyc, canonical_cutoffs(cyc), 3), Complex(3.0));
  EXPECT_EQ(euler_from_fixed_points(cyc, canonical_cutoffs(cyc), 1), Complex(0.0));
  EXPECT_EQ(euler_from_fixed_points(cyc, canonical_cutoffs(cyc), 0), Complex(3.0));
  const auto sph = sphere_scenario(1.0);
  for (long n : {-3L, 1L, 4L}) EXPECT_EQ(euler_from_fixed_points(sph, canonical_cutoffs(sph), n), Complex(2.0));
}

TEST(CutoffCompatibility, Examples) {
  const auto cyc = cyclic3_scenario();
  EXPECT_EQ(cutoff_compatibility_residual(cyc, canonical_cutoffs(cyc)), 0.0);
  const auto lifted = identity_product(std::get<FinitePermutation>(cyc.model));
  EXPECT_EQ(cutoff_compatibility_residual(lifted, canonical_cutoffs(lifted)), 0.0);
  const auto sph = identity_product(SphereRotation{1.0, 0.0});
  EXPECT_EQ(cutoff_compatibility_residual(sph, canonical_cutoffs(sph)), 0.0);
  const CutoffProfile skewed{0.0, {{"0", 2.0}}};
  EXPECT_GT(cutoff_compatibility_residual(cyc, skewed), 0.0);
  EXPECT_GT(cutoff_property_defect(cyc, skewed), 0.0);
  EXPECT_EQ(cutoff_property_defect(cyc, canonical_cutoffs(cyc)), 0.0);
  EXPECT_EQ(cutoff_property_defect(lifted, canonical_cutoffs(lifted)), 0.0);
}

TEST(CutoffProfileTest, WildcardLookup) {
  const CutoffProfile p{0.5, {{"0:*", 1.0}, {"1:2", 3.0}}};
  EXPECT_EQ(p.weight("0:7"), 1.0);
  EXPECT_EQ(p.weight("1:2"), 3.0);
  EXPECT_EQ(p.weight("1:3"), 0.5);
  EXPECT_EQ(p.max_weight(), 3.0);
}

TEST(Growth, CertificatesHoldForDefaultBounds) {
  EXPECT_TRUE(growth_violations(cyclic3_scenario()).empty());
  EXPECT_TRUE(growth_violations(sphere_scenario(std::sqrt(2.0))).empty());
  EXPECT_TRUE(growth_violations(circle_scenario(std::sqrt(2.0))).empty());
  EXPECT_TRUE(growth_violations(identity_product(FinitePermutation{{1, 2, 0}})).empty());
  auto tight = cyclic3_scenario();
  tight.growth = GrowthBound{2.0, 0.0};
  EXPECT_EQ(growth_violations(tight, 6), (std::vector<long>{-6, -3, 3, 6}));
  auto degenerate = sphere_scenario(kPi / 2);
  EXPECT_EQ(growth_violations(degenerate, 4), (std::vector<long>{-4, 4}));
}

TEST(Growth, FixedSetSizeWithinDeclaredBound) {
  for (const auto& cycles : partitions(6)) {
    const auto s = finite_scenario(permutation_with_cycles(cycles));
    const auto g = effective_growth(s);
    for (long n = -50; n <= 50; ++n)
      if (n != 0)
        EXPECT_LE(static_cast<double>(fixed_point_report(s, n).size()), g.C * std::exp(g.c * std::abs(n)));
  }
}

TEST(ScenarioValidation, RejectsMalformedModels) {
  EXPECT_THROW(validate_scenario(finite_scenario({0, 0})), ValidationError);
  EXPECT_THROW(validate_scenario(finite_scenario({1, 0}, {{Complex(2.0)}, {Complex(1.0)}})),
               ValidationError);
  auto s = cyclic3_scenario();
  s.rank = 0;
  EXPECT_THROW(validate_scenario(s), ValidationError);
}
