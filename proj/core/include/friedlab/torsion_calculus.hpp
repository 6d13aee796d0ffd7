#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "friedlab/spectra.hpp"
#include "friedlab/suspension_dynamics.hpp"
#include "friedlab/zeta_spectral.hpp"

namespace friedlab {

/// n -> chi_{(g,n)} with a uniform bound |chi(n)| <= bound_M.
class EulerSequence {
 public:
  EulerSequence() = default;
  /// Throws ValidationError if a stored value exceeds bound_M.
  EulerSequence(std::map<long, Complex> chi, double bound_M);

  /// Missing entries read as 0.
  Complex operator()(long n) const;
  bool covers(long N) const;  // every |n| <= N stored
  double bound_M() const noexcept { return bound_M_; }
  const std::map<long, Complex>& values() const noexcept { return chi_; }

 private:
  std::map<long, Complex> chi_;
  double bound_M_ = 0.0;
};

/// chi(n) = L(spec, n) for |n| <= N; bound_M = total multiplicity.
EulerSequence euler_sequence_from_spectrum(const GradedSpectrum& spec, long N);

/// chi(n) from fixed-point sums for 0 < |n| <= N; chi(0) from `chi0` when given, otherwise from
/// the scenario's declared chi0, otherwise from the fixed points of g^{-1}.
EulerSequence euler_sequence_from_fixed_points(const Scenario& s, const CutoffProfile& cutoffs,
                                               long N, std::optional<Complex> chi0 = std::nullopt);

/// sigma -> T(sigma) with the region where it may be evaluated.
class TorsionProfile {
 public:
  enum class Variable { sqrt_sigma, sigma };

  struct Domain {
    Variable variable = Variable::sqrt_sigma;
    double min_real = 0.0;
    bool inclusive = true;  // allow Re(var) == min_real
  };

  struct Flags {
    bool novikov_shubin_positive = false;
    bool svarc_milnor = false;
  };

  TorsionProfile(std::function<Complex(Complex)> fn, Domain domain);
  TorsionProfile(std::function<Complex(Complex)> fn, Domain domain, Flags flags);

  /// Evaluates the profile; DomainError outside the declared domain.
  Complex operator()(Complex sigma) const;
  bool in_domain(Complex sigma) const;
  const Domain& domain() const noexcept { return domain_; }
  const Flags& flags() const noexcept { return flags_; }

  static TorsionProfile constant(Complex value);

 private:
  std::function<Complex(Complex)> fn_;
  Domain domain_;
  Flags flags_;
};

/// base^exponent = exp(exponent Log base), principal branch. exponent 0 gives 1;
/// base 0 -> PoleError; base on (-inf, 0) with non-integer exponent -> BranchError.
Complex principal_power(Complex base, Complex exponent);

/// Profile raised to a fixed complex power.
TorsionProfile raise(const TorsionProfile& profile, Complex exponent);

/// T_0 = exp(-sqrt(sigma)/2), T_n = exp(e^{-|n| sqrt(sigma)} / (2|n|)).
/// sigma on the negative real axis -> BranchError; sigma = 0 is allowed.
Complex circle_factor_torsion(long n, Complex sigma);
TorsionProfile circle_factor_profile(long n);

/// exp(-chi(0) sqrt(sigma)/2 + Sum_{0<|n|<=N} e^{-|n| sqrt(sigma)} chi(n) / (2|n|)).
ZetaValue suspension_torsion(const EulerSequence& chi, Complex sigma, long N);

/// suspension_torsion of the scenario's fixed-point Euler sequence.
ZetaValue torsion_fixed_point_form(const Scenario& s, const CutoffProfile& cutoffs, Complex sigma,
                                   long N, std::optional<Complex> chi0 = std::nullopt);

/// t1(sigma)^chi2 * t2(sigma)^chi1.
Complex product_torsion(const TorsionProfile& t1, Complex chi1, const TorsionProfile& t2,
                        Complex chi2, Complex sigma);

/// Prod_{|n| <= N} factors[n](sigma); indices outside the window are ignored.
Complex quotient_torsion(const std::map<long, TorsionProfile>& factors, Complex sigma, long N);
/// Product over a finite index set.
Complex quotient_torsion(const std::vector<TorsionProfile>& factors, Complex sigma);

/// Prod_{|n|<=N} tE1(n)(sigma)^{chi_E2(n)} * tE2(n)(sigma)^{chi_E1(n)}.
/// Missing chi entries read as 0; a missing profile with a non-zero exponent is a
/// PreconditionError.
Complex fibration_torsion(const EulerSequence& chi_E1, const std::map<long, Complex>& chi_E2,
                          const std::map<long, TorsionProfile>& tE1,
                          const std::map<long, TorsionProfile>& tE2, Complex sigma, long N);

}  // namespace friedlab
