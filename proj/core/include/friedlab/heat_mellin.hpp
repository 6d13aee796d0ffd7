#pragma once

#include <functional>
#include <optional>

namespace friedlab {

/// (4 pi t)^{-1/2} e^{-n^2/(4t)}: the n-th Z-translate heat trace on the line.
double heat_trace_line(long n, double t);

/// Degree-alternating trace on the line; only 1-forms carry a sign, so this is -heat_trace_line.
double alternating_heat_trace_line(long n, double t);

struct HeatTraceModel {
  std::function<double(double)> trace;
  double small_t_rate = 0.0;        // trace ~ e^{-rate/t} as t -> 0
  double large_t_power = -0.5;      // |trace(t)| <= large_t_amplitude * t^power for t >= 1
  double large_t_amplitude = 1.0;
};

/// Model for alternating_heat_trace_line(n, .).
HeatTraceModel line_model(long n);

struct MellinConfig {
  int lower_nodes = 256;             // Gauss-Legendre nodes on (0, t0]
  int upper_nodes = 128;             // nodes on [t0, t_max] in the variable u = log t
  double h = 1e-3;                   // central-difference step in s
  std::optional<double> t_max;       // default 1 + 40 / sigma
  static constexpr double t0 = 1.0;

  /// Throws ValidationError unless h in [1e-5, 1e-2] and both node counts >= 64.
  void validate() const;
};

struct MellinDiagnostics {
  double torsion = 1.0;
  double derivative = 0.0;           // d/ds|_0 of the zeta-type function
  double integral_plus = 0.0;        // Mellin integral at s = +h
  double integral_minus = 0.0;       // Mellin integral at s = -h
  double quadrature_error = 0.0;     // |Q_n - Q_{n/2}| on both pieces, worst of s = +-h
  double tail_error = 0.0;           // bound on the integral beyond t_max
  double t_max = 0.0;
  double h = 0.0;
  bool accurate = true;              // quadrature_error + tail_error <= 1e-6
};

inline constexpr double kMellinAccuracy = 1e-6;

/// exp(-1/2 d/ds|_0 [Gamma(s)^{-1} Int_0^inf t^{s-1} e^{-sigma t} trace(t) dt]).
/// sigma <= 0 -> DomainError; estimated quadrature error above 1e-6 -> AccuracyError.
double mellin_torsion(const HeatTraceModel& model, double sigma, const MellinConfig& config = {});

/// Same computation without the accuracy check.
MellinDiagnostics mellin_torsion_diagnostics(const HeatTraceModel& model, double sigma,
                                             const MellinConfig& config = {});

/// 1/Gamma(s); a power series near 0, so s = 0 and the poles of Gamma give 0.
double reciprocal_gamma(double s);

/// Composite Gauss-Legendre rule of `nodes` points (rounded up to whole panels) on [a, b].
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int nodes);

}  // namespace friedlab
