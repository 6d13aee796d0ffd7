#include "friedlab/zeta_spectral.hpp"

#include <cmath>
#include <string>

#include "series.hpp"

namespace friedlab {

namespace {

constexpr Complex kOne{1.0, 0.0};

struct ClosedLog {
  Complex log{0.0, 0.0};
  double rounding = 0.0;
};

void check_series_args(Complex sigma, long N) {
  if (N < 1) throw ValidationError("N", "truncation must be a positive integer");
  if (!std::isfinite(sigma.real()) || !std::isfinite(sigma.imag()))
    throw DomainError("sigma must be finite");
}

// Sum over pairs of -(-1)^q mult mu_g Log[(1 - x mu)(1 - x/mu)] * exponent_scale.
ClosedLog closed_log(const GradedSpectrum& spec, Complex s, double exponent_scale) {
  using detail::kEps;
  const Complex x = std::exp(-s);
  const double x_rel = kEps * (2.0 + std::abs(x) * (2.0 + std::abs(s)));
  ClosedLog out;
  spec.for_each([&](int q, std::size_t j, const EigenPair& p) {
    const Complex a = kOne - x * p.mu_T;
    const Complex b = kOne - x / p.mu_T;
    const Complex base = a * b;
    if (base == Complex{0.0, 0.0})
      throw PoleError("closed-form factor vanishes", SpectrumLocation{q, j});
    // Within rounding of the cut the sign of Im(Log) is not determined by the input.
    if (base.real() < 0.0 && std::abs(base.imag()) <= 4.0 * kEps * std::abs(base))
      throw BranchError("closed-form base lies on the branch cut (-inf, 0]",
                        SpectrumLocation{q, j});
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    const Complex c = -sign * exponent_scale * static_cast<double>(p.multiplicity) * p.mu_g;
    const Complex lg = std::log(base);
    out.log += c * lg;
    out.rounding += std::abs(c) * (2.0 * x_rel / std::abs(a) + 2.0 * x_rel / std::abs(b) +
                                   4.0 * kEps + 2.0 * kEps * std::abs(lg));
  });
  return out;
}

ZetaValue closed_value(const ClosedLog& cl) {
  ZetaValue out;
  out.value = std::exp(cl.log);
  const double mod = std::abs(out.value);
  out.rounding_bound = mod * (std::expm1(cl.rounding) + 4.0 * detail::kEps);
  return out;
}

Complex chi0(const GradedSpectrum& spec) { return lefschetz_number(spec, 0); }

ClosedLog torsion_log(const GradedSpectrum& spec, Complex sigma) {
  const Complex s = std::sqrt(sigma);
  ClosedLog cl = closed_log(spec, s, 0.5);
  cl.log += -chi0(spec) * s / 2.0;
  cl.rounding += 4.0 * detail::kEps * spec.total_multiplicity() * std::abs(s) / 2.0;
  return cl;
}

}  // namespace

ZetaValue ruelle_series(const GradedSpectrum& spec, Complex sigma, long N) {
  check_series_args(sigma, N);
  if (!(sigma.real() > 0.0))
    throw DomainError("ruelle_series requires Re(sigma) > 0, got Re(sigma) = " +
                      std::to_string(sigma.real()));
  detail::SeriesParams p;
  p.decay = sigma;
  p.N = N;
  p.bound = spec.total_multiplicity();
  const double m = p.bound;
  return detail::symmetric_log_series(
      p, [&](long n) { return detail::InnerTerm{lefschetz_number(spec, n), m}; });
}

Complex ruelle_closed_form(const GradedSpectrum& spec, Complex sigma) {
  return std::exp(closed_log(spec, sigma, 1.0).log);
}

ZetaValue ruelle_closed_form_value(const GradedSpectrum& spec, Complex sigma) {
  return closed_value(closed_log(spec, sigma, 1.0));
}

Complex sdet_ruelle_identity(const GradedSpectrum& spec, Complex sigma) {
  spec.for_each([&](int q, std::size_t j, const EigenPair& p) {
    if (std::abs(p.mu_g - kOne) > kUnitModulusTol)
      throw PreconditionError("sdet_ruelle_identity requires mu_g = 1 for every pair (" +
                              to_string(SpectrumLocation{q, j}) + ")");
  });
  const Complex x = std::exp(-sigma);
  const Complex denom = superdeterminant(spec, OperatorSide::T_forward, x) *
                        superdeterminant(spec, OperatorSide::T_inverse, x);
  if (denom == Complex{0.0, 0.0})
    throw PoleError("superdeterminant vanishes", std::nullopt);
  return kOne / denom;
}

ZetaValue torsion_series(const GradedSpectrum& spec, Complex sigma, long N) {
  check_series_args(sigma, N);
  if (sigma.imag() == 0.0 && sigma.real() <= 0.0)
    throw BranchError("torsion_series needs sigma off the closed negative real axis",
                      std::nullopt);
  const Complex s = std::sqrt(sigma);
  detail::SeriesParams p;
  p.decay = s;
  p.scale = 0.5;
  p.N = N;
  p.bound = spec.total_multiplicity();
  p.prefix = -chi0(spec) * s / 2.0;
  p.prefix_magnitude = p.bound * std::abs(s) / 2.0;
  const double m = p.bound;
  return detail::symmetric_log_series(
      p, [&](long n) { return detail::InnerTerm{lefschetz_number(spec, n), m}; });
}

Complex torsion_closed_form(const GradedSpectrum& spec, Complex sigma) {
  return std::exp(torsion_log(spec, sigma).log);
}

ZetaValue torsion_closed_form_value(const GradedSpectrum& spec, Complex sigma) {
  return closed_value(torsion_log(spec, sigma));
}

Complex torsion_at_zero(const GradedSpectrum& spec, double tol) {
  const auto cert = validate_spectrum(spec, tol);
  if (!cert.acyclic) {
    std::string msg = "spectrum is not acyclic; mu_T = 1 at";
    for (const auto& o : cert.offending_pairs) msg += " degree " + std::to_string(o.degree);
    throw AcyclicityError(msg);
  }
  Complex log_sum{0.0, 0.0};
  spec.for_each([&](int q, std::size_t, const EigenPair& p) {
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    log_sum += -sign * static_cast<double>(p.multiplicity) * p.mu_g *
               std::log(std::abs(kOne - p.mu_T));
  });
  return std::exp(log_sum);
}

Complex fried_residual(const GradedSpectrum& spec, Complex sigma) {
  const Complex r = ruelle_closed_form(spec, sigma);
  const Complex t = torsion_closed_form(spec, sigma * sigma);
  return r - std::exp(sigma * chi0(spec)) * t * t;
}

}  // namespace friedlab
