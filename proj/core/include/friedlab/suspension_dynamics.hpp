#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "friedlab/spectra.hpp"
#include "friedlab/zeta_spectral.hpp"

namespace friedlab {

/// r x r matrix, row-major.
using FiberMatrix = std::vector<Complex>;

/// T permutes points 0..size-1 (i -> perm[i]) and lifts to unitary fiber maps
/// A_i : E_i -> E_{perm[i]}. The group element is g = g_phase * T^{g_power}.
/// Empty fiber_maps means the trivial bundle with identity lifts.
struct FinitePermutation {
  std::vector<int> perm;
  std::vector<FiberMatrix> fiber_maps;
  Complex g_phase{1.0, 0.0};
  long g_power = 0;

  friend bool operator==(const FinitePermutation&, const FinitePermutation&) = default;
};

/// Rotations of S^1 by angles (radians): T by alpha, g by gamma. Trivial bundle.
struct CircleRotation {
  double alpha = 0.0;
  double gamma = 0.0;

  friend bool operator==(const CircleRotation&, const CircleRotation&) = default;
};

/// Rotations of S^2 about one axis: T by alpha, g by gamma. Poles are "N" and "S".
struct SphereRotation {
  double alpha = 0.0;
  double gamma = 0.0;

  friend bool operator==(const SphereRotation&, const SphereRotation&) = default;
};

/// Disjoint union of finite models indexed by Weyl labels. Point ids are "label/i".
struct WeylProduct {
  std::map<std::string, FinitePermutation> components;

  friend bool operator==(const WeylProduct&, const WeylProduct&) = default;
};

/// Gamma x X with Gamma = Z acting by translation, T acting on X only and g = e.
/// Copies gamma in [-window, window] are materialized; point ids are "gamma:baseid".
struct DiscreteIdentityProduct {
  std::variant<FinitePermutation, SphereRotation> base;
  int window = 2;

  friend bool operator==(const DiscreteIdentityProduct&, const DiscreteIdentityProduct&) = default;
};

using ScenarioModel = std::variant<FinitePermutation, CircleRotation, SphereRotation, WeylProduct,
                                   DiscreteIdentityProduct>;

/// Declared exponential bound |fixed set of g^{-1}T^n| <= C e^{c|n|}.
struct GrowthBound {
  double C = 1.0;
  double c = 0.0;

  friend bool operator==(const GrowthBound&, const GrowthBound&) = default;
};

struct Scenario {
  ScenarioModel model;
  int rank = 1;
  std::optional<GrowthBound> growth;  // defaulted per kind when absent
  std::optional<Complex> chi0;        // declared chi_{(g,0)} for kinds where g itself is degenerate
  bool novikov_shubin_positive = false;
  bool svarc_milnor = false;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

enum class ScenarioKind {
  finite_permutation,
  circle_rotation,
  sphere_rotation,
  weyl_product,
  discrete_identity_product
};

ScenarioKind kind_of(const Scenario& s);
const char* kind_name(ScenarioKind kind);
bool is_compact_kind(ScenarioKind kind);

/// Throws ValidationError on malformed parameters (bad permutation, non-unitary fiber maps, ...).
void validate_scenario(const Scenario& s);

GrowthBound effective_growth(const Scenario& s);

/// Non-negative weights psi_Y per point id, with a default for unlisted points.
struct CutoffProfile {
  double default_weight = 1.0;
  std::map<std::string, double> weights;

  double weight(const std::string& point_id) const;
  double max_weight() const;

  friend bool operator==(const CutoffProfile&, const CutoffProfile&) = default;
};

/// psi_Y = 1 for compact kinds; the indicator of the copy gamma = 0 for discrete products.
CutoffProfile canonical_cutoffs(const Scenario& s);

struct FixedPointDatum {
  std::string point_id;
  int sign = 1;
  Complex fiber_trace{1.0, 0.0};
  long primitive_period = 1;
  double cutoff_weight = 1.0;  // psi^g(y): average of psi_Y over the <g>-orbit of y
  double orbit_weight = 1.0;   // (1/p) Sum_{j<p} psi_Y(T^j y)
  double det = 1.0;            // det(1 - D_y(g^{-1} T^n)); 1 for isolated points of a 0-dim space
};

/// Fixed points of g^{-1} T^n. n = 0 is rejected (PreconditionError).
std::vector<FixedPointDatum> fixed_point_report(const Scenario& s, const CutoffProfile& cutoffs,
                                                long n);
std::vector<FixedPointDatum> fixed_point_report(const Scenario& s, long n);

/// {n : 0 < |n| <= N, fixed set of g^{-1}T^n non-empty}.
std::set<long> length_spectrum(const Scenario& s, long N);

long primitive_period(const Scenario& s, const std::string& point_id);

/// exp(Sum_{0<|n|<=N} e^{-|n| sigma}/|n| Sum_y sign trace orbit_weight).
/// Requires Re(sigma) > c (DomainError naming c).
ZetaValue ruelle_dynamical(const Scenario& s, const CutoffProfile& cutoffs, Complex sigma, long N);

/// ruelle_dynamical of a discrete_identity_product with the canonical identity-copy cutoff.
ZetaValue ruelle_identity_discrete(const Scenario& s, Complex sigma, long N);

/// Sum_y sign trace - L(spec, -n). Compact kinds only.
Complex atiyah_bott_residual(const Scenario& s, const GradedSpectrum& spec, long n);

/// chi_{(g,n)} = Sum over fixed points of g^{-1}T^{-n} of psi^g sign trace. n = 0 allowed.
Complex euler_from_fixed_points(const Scenario& s, const CutoffProfile& cutoffs, long n);

/// max over fixed points y (0 < |n| <= n_max, nondegenerate n) of |cutoff_weight - orbit_weight|.
/// When n_max is absent a window covering every periodic point is chosen.
double cutoff_compatibility_residual(const Scenario& s, const CutoffProfile& cutoffs,
                                     std::optional<long> n_max = std::nullopt);

/// Largest deviation from the cutoff property: orbit sums of psi_Y under the acting group
/// must equal 1 on the support (normalized average for compact kinds).
double cutoff_property_defect(const Scenario& s, const CutoffProfile& cutoffs);

/// Graded spectrum of g*, T* on H^*(Y, E1) for compact kinds and Weyl products.
GradedSpectrum cohomology_spectrum(const Scenario& s);

/// Values of n in [-max_n, max_n] \ {0} where the fixed set exceeds the declared growth bound
/// or is degenerate.
std::vector<long> growth_violations(const Scenario& s, long max_n = 50);

}  // namespace friedlab
