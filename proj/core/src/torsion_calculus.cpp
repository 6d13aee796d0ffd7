#include "friedlab/torsion_calculus.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "series.hpp"

namespace friedlab {

namespace {

bool on_negative_axis(Complex sigma) { return sigma.imag() == 0.0 && sigma.real() < 0.0; }

bool lexicographically_less(Complex a, Complex b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

}  // namespace

EulerSequence::EulerSequence(std::map<long, Complex> chi, double bound_M)
    : chi_(std::move(chi)), bound_M_(bound_M) {
  if (!(bound_M_ >= 0.0) || !std::isfinite(bound_M_))
    throw ValidationError("bound_M", "must be finite and >= 0");
  for (const auto& [n, v] : chi_)
    if (!(std::abs(v) <= bound_M_ * (1.0 + 1e-12)))
      throw ValidationError("chi[" + std::to_string(n) + "]",
                            "value exceeds bound_M = " + std::to_string(bound_M_));
}

Complex EulerSequence::operator()(long n) const {
  auto it = chi_.find(n);
  return it == chi_.end() ? Complex{0.0, 0.0} : it->second;
}

bool EulerSequence::covers(long N) const {
  for (long n = -N; n <= N; ++n)
    if (!chi_.count(n)) return false;
  return true;
}

EulerSequence euler_sequence_from_spectrum(const GradedSpectrum& spec, long N) {
  std::map<long, Complex> chi;
  for (long n = -N; n <= N; ++n) chi[n] = lefschetz_number(spec, n);
  return EulerSequence(std::move(chi), spec.total_multiplicity());
}

EulerSequence euler_sequence_from_fixed_points(const Scenario& s, const CutoffProfile& cutoffs,
                                               long N, std::optional<Complex> chi0) {
  const GrowthBound growth = effective_growth(s);
  if (growth.c > 0.0)
    throw PreconditionError("Euler sequence is unbounded for growth constant c > 0");
  std::map<long, Complex> chi;
  for (long n = -N; n <= N; ++n)
    if (n != 0) chi[n] = euler_from_fixed_points(s, cutoffs, n);
  if (chi0)
    chi[0] = *chi0;
  else if (s.chi0)
    chi[0] = *s.chi0;
  else
    chi[0] = euler_from_fixed_points(s, cutoffs, 0);
  double bound = s.rank * cutoffs.max_weight() * growth.C;
  for (const auto& [n, v] : chi) bound = std::max(bound, std::abs(v));
  return EulerSequence(std::move(chi), bound);
}

TorsionProfile::TorsionProfile(std::function<Complex(Complex)> fn, Domain domain)
    : TorsionProfile(std::move(fn), domain, Flags{}) {}

TorsionProfile::TorsionProfile(std::function<Complex(Complex)> fn, Domain domain, Flags flags)
    : fn_(std::move(fn)), domain_(domain), flags_(flags) {
  if (!fn_) throw ValidationError("fn", "profile callable is empty");
}

bool TorsionProfile::in_domain(Complex sigma) const {
  if (!std::isfinite(sigma.real()) || !std::isfinite(sigma.imag())) return false;
  double re = sigma.real();
  if (domain_.variable == Variable::sqrt_sigma) {
    if (on_negative_axis(sigma)) return false;
    re = std::sqrt(sigma).real();
  }
  return domain_.inclusive ? re >= domain_.min_real : re > domain_.min_real;
}

Complex TorsionProfile::operator()(Complex sigma) const {
  if (!in_domain(sigma))
    throw DomainError("torsion profile evaluated outside its domain (Re(" +
                      std::string(domain_.variable == Variable::sqrt_sigma ? "sqrt(sigma)" : "sigma") +
                      ") " + (domain_.inclusive ? ">= " : "> ") + std::to_string(domain_.min_real) +
                      " required)");
  return fn_(sigma);
}

TorsionProfile TorsionProfile::constant(Complex value) {
  return TorsionProfile([value](Complex) { return value; },
                        Domain{Variable::sigma, -std::numeric_limits<double>::infinity(), true});
}

Complex principal_power(Complex base, Complex exponent) {
  if (exponent == Complex{0.0, 0.0}) return {1.0, 0.0};
  if (base == Complex{0.0, 0.0}) {
    if (exponent.real() > 0.0) return {0.0, 0.0};
    throw PoleError("zero base raised to an exponent with non-positive real part", std::nullopt);
  }
  if (on_negative_axis(base)) {
    const bool integral = exponent.imag() == 0.0 && std::round(exponent.real()) == exponent.real();
    if (!integral)
      throw BranchError("negative real base with a non-integer exponent", std::nullopt);
    return std::pow(base, static_cast<int>(exponent.real()));
  }
  return std::exp(exponent * std::log(base));
}

TorsionProfile raise(const TorsionProfile& profile, Complex exponent) {
  return TorsionProfile([profile, exponent](Complex s) { return principal_power(profile(s), exponent); },
                        profile.domain(), profile.flags());
}

Complex circle_factor_torsion(long n, Complex sigma) {
  if (on_negative_axis(sigma))
    throw BranchError("circle factor needs sigma off the negative real axis", std::nullopt);
  const Complex s = std::sqrt(sigma);
  if (n == 0) return std::exp(-s / 2.0);
  const double k = static_cast<double>(std::abs(n));
  return std::exp(std::exp(-k * s) / (2.0 * k));
}

TorsionProfile circle_factor_profile(long n) {
  return TorsionProfile([n](Complex s) { return circle_factor_torsion(n, s); },
                        {TorsionProfile::Variable::sqrt_sigma, 0.0, true});
}

ZetaValue suspension_torsion(const EulerSequence& chi, Complex sigma, long N) {
  if (N < 1) throw ValidationError("N", "truncation must be a positive integer");
  if (!chi.covers(N))
    throw PreconditionError("Euler sequence does not cover |n| <= " + std::to_string(N));
  if (sigma.imag() == 0.0 && sigma.real() <= 0.0)
    throw BranchError("suspension_torsion needs sigma off the closed negative real axis",
                      std::nullopt);
  const Complex s = std::sqrt(sigma);
  detail::SeriesParams p;
  p.decay = s;
  p.scale = 0.5;
  p.N = N;
  p.bound = chi.bound_M();
  p.prefix = -chi(0) * s / 2.0;
  p.prefix_magnitude = std::abs(p.prefix);
  const double m = p.bound;
  return detail::symmetric_log_series(p, [&](long n) { return detail::InnerTerm{chi(n), m}; });
}

ZetaValue torsion_fixed_point_form(const Scenario& s, const CutoffProfile& cutoffs, Complex sigma,
                                   long N, std::optional<Complex> chi0) {
  return suspension_torsion(euler_sequence_from_fixed_points(s, cutoffs, N, chi0), sigma, N);
}

Complex product_torsion(const TorsionProfile& t1, Complex chi1, const TorsionProfile& t2,
                        Complex chi2, Complex sigma) {
  Complex a = principal_power(t1(sigma), chi2);
  Complex b = principal_power(t2(sigma), chi1);
  // fixed multiplication order keeps the result bitwise symmetric
  if (lexicographically_less(b, a)) std::swap(a, b);
  return a * b;
}

Complex quotient_torsion(const std::map<long, TorsionProfile>& factors, Complex sigma, long N) {
  Complex result{1.0, 0.0};
  for (const auto& [n, t] : factors)
    if (std::abs(n) <= N) result *= t(sigma);
  return result;
}

Complex quotient_torsion(const std::vector<TorsionProfile>& factors, Complex sigma) {
  Complex result{1.0, 0.0};
  for (const auto& t : factors) result *= t(sigma);
  return result;
}

Complex fibration_torsion(const EulerSequence& chi_E1, const std::map<long, Complex>& chi_E2,
                          const std::map<long, TorsionProfile>& tE1,
                          const std::map<long, TorsionProfile>& tE2, Complex sigma, long N) {
  auto factor = [&](const std::map<long, TorsionProfile>& profiles, long n, Complex exponent,
                    const char* name) -> Complex {
    if (exponent == Complex{0.0, 0.0}) return {1.0, 0.0};
    auto it = profiles.find(n);
    if (it == profiles.end())
      throw PreconditionError(std::string(name) + " has no profile for n = " + std::to_string(n));
    return principal_power(it->second(sigma), exponent);
  };
  Complex result{1.0, 0.0};
  for (long n = -N; n <= N; ++n) {
    auto e2 = chi_E2.find(n);
    result *= factor(tE1, n, e2 == chi_E2.end() ? Complex{0.0, 0.0} : e2->second, "tE1");
    result *= factor(tE2, n, chi_E1(n), "tE2");
  }
  return result;
}

}  // namespace friedlab
