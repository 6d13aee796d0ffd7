#pragma once

#include <optional>

#include "friedlab/spectra.hpp"

namespace friedlab {

/// An evaluated zeta or torsion value.
///
/// tail_bound bounds the truncation error |exact - value| in exact arithmetic (0 for closed
/// forms). rounding_bound is a floating-point error estimate for the evaluation itself; a
/// verified comparison should use the sum of both.
struct ZetaValue {
  Complex value{1.0, 0.0};
  std::optional<long> truncation_N;  // nullopt for closed-form evaluation
  double tail_bound = 0.0;
  double rounding_bound = 0.0;

  bool closed_form() const noexcept { return !truncation_N.has_value(); }
  double total_error() const noexcept { return tail_bound + rounding_bound; }
};

/// exp(Sum_{0<|n|<=N} e^{-|n| sigma} L(n) / |n|). Requires Re(sigma) > 0 (DomainError).
ZetaValue ruelle_series(const GradedSpectrum& spec, Complex sigma, long N);

/// Prod_q Prod_j exp(-(-1)^q mult mu_g Log[(1 - x mu_T)(1 - x / mu_T)]), x = e^{-sigma}.
/// Zero base -> PoleError; base on the negative real axis -> BranchError.
Complex ruelle_closed_form(const GradedSpectrum& spec, Complex sigma);
ZetaValue ruelle_closed_form_value(const GradedSpectrum& spec, Complex sigma);

/// [Sdet(1 - e^{-sigma} T*) Sdet(1 - e^{-sigma} (T^{-1})*)]^{-1}. Requires every mu_g = 1.
Complex sdet_ruelle_identity(const GradedSpectrum& spec, Complex sigma);

/// exp(-chi0 sqrt(sigma)/2 + Sum_{0<|n|<=N} e^{-|n| sqrt(sigma)} L(n) / (2|n|)).
/// sigma on the closed negative real axis -> BranchError.
ZetaValue torsion_series(const GradedSpectrum& spec, Complex sigma, long N);

/// exp(-chi0 sqrt(sigma)/2) Prod exp(-(-1)^q mult mu_g Log(base) / 2), x = e^{-sqrt(sigma)}.
Complex torsion_closed_form(const GradedSpectrum& spec, Complex sigma);
ZetaValue torsion_closed_form_value(const GradedSpectrum& spec, Complex sigma);

/// Prod exp(-(-1)^q mult mu_g log|1 - mu_T|). Non-acyclic input -> AcyclicityError.
Complex torsion_at_zero(const GradedSpectrum& spec, double tol = kDefaultAcyclicityTol);

/// R(sigma) - exp(sigma chi0) T(sigma^2)^2, both from the closed forms.
Complex fried_residual(const GradedSpectrum& spec, Complex sigma);

}  // namespace friedlab
