#pragma once

// Symmetric log-series shared by the spectral and dynamical zeta evaluations:
//   log Z = prefix + scale * Sum_{0<|n|<=N} e^{-|n| s} / |n| * inner(n)
// with |inner(n)| <= bound * e^{c|n|}.

#include <cmath>
#include <complex>
#include <limits>

#include "friedlab/zeta_spectral.hpp"

namespace friedlab::detail {

struct InnerTerm {
  Complex value;
  double magnitude;  // sum of moduli of the summands making up value
};

struct SeriesParams {
  Complex decay;            // s, with Re s > growth
  double scale = 1.0;       // 1 for Ruelle, 1/2 for torsion
  long N = 1;
  double bound = 0.0;       // |inner(n)| <= bound * e^{growth |n|}
  double growth = 0.0;
  Complex prefix{0.0, 0.0};
  double prefix_magnitude = 0.0;
};

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

/// Rigorous bound on scale * Sum_{|n|>N} e^{-|n| a} bound e^{c|n|} / |n|, a = Re s.
inline double log_tail(const SeriesParams& p) {
  const double a = p.decay.real() - p.growth;
  if (p.bound == 0.0) return 0.0;
  const double n1 = static_cast<double>(p.N + 1);
  return 2.0 * p.scale * p.bound * std::exp(-a * n1) / (n1 * -std::expm1(-a));
}

template <class Inner>
ZetaValue symmetric_log_series(const SeriesParams& p, Inner&& inner) {
  Complex log_sum = p.prefix;
  double rounding = 4.0 * kEps * p.prefix_magnitude;
  const double s_abs = std::abs(p.decay);
  for (long k = 1; k <= p.N; ++k) {
    const double kd = static_cast<double>(k);
    const Complex w = p.scale * std::exp(-kd * p.decay) / kd;
    for (long n : {k, -k}) {
      const InnerTerm t = inner(n);
      log_sum += w * t.value;
      // angle and exponent errors grow linearly in |n|
      rounding += kEps * std::abs(w) * t.magnitude * (8.0 + 4.0 * kd * (1.0 + s_abs));
    }
  }
  rounding += kEps * static_cast<double>(2 * p.N) * std::abs(log_sum);

  ZetaValue out;
  out.value = std::exp(log_sum);
  out.truncation_N = p.N;
  const double mod = std::abs(out.value);
  out.tail_bound = mod * std::expm1(log_tail(p));
  out.rounding_bound = mod * (std::expm1(rounding) + 4.0 * kEps);
  return out;
}

}  // namespace friedlab::detail
