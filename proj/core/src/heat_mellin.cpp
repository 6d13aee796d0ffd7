#include "friedlab/heat_mellin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "friedlab/errors.hpp"

namespace friedlab {

namespace {

constexpr int kPanelOrder = 16;

struct GaussRule {
  std::array<double, kPanelOrder> x{};
  std::array<double, kPanelOrder> w{};
};

// Nodes and weights on [-1, 1] by Newton iteration on P_m.
GaussRule make_rule() {
  GaussRule rule;
  constexpr int m = kPanelOrder;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.x[i] = x;
    rule.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& rule() {
  static const GaussRule r = make_rule();
  return r;
}

double composite(const std::function<double(double)>& f, double a, double b, int panels) {
  const auto& r = rule();
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + width / 2.0;
    double sum = 0.0;
    for (int i = 0; i < kPanelOrder; ++i) sum += r.w[i] * f(mid + width / 2.0 * r.x[i]);
    total += sum * width / 2.0;
  }
  return total;
}

int panels_for(int nodes) { return (nodes + kPanelOrder - 1) / kPanelOrder; }

struct PieceResult {
  double value = 0.0;
  double error = 0.0;
};

PieceResult estimate(const std::function<double(double)>& f, double a, double b, int nodes) {
  const int panels = panels_for(nodes);
  const double fine = composite(f, a, b, panels);
  const double coarse = composite(f, a, b, std::max(1, panels / 2));
  return {fine, std::abs(fine - coarse)};
}

struct IntegralResult {
  double value = 0.0;
  double quadrature_error = 0.0;
  double tail_error = 0.0;
};

IntegralResult mellin_integral(const HeatTraceModel& model, double sigma, double s,
                               const MellinConfig& config, double t_max) {
  const double t0 = MellinConfig::t0;
  auto lower = [&](double t) { return std::pow(t, s - 1.0) * std::exp(-sigma * t) * model.trace(t); };
  auto upper = [&](double u) {
    const double t = std::exp(u);
    return std::pow(t, s) * std::exp(-sigma * t) * model.trace(t);
  };
  const PieceResult lo = estimate(lower, 0.0, t0, config.lower_nodes);
  const PieceResult hi = estimate(upper, std::log(t0), std::log(t_max), config.upper_nodes);
  IntegralResult out;
  out.value = lo.value + hi.value;
  out.quadrature_error = lo.error + hi.error;
  // Int_T^inf A t^q e^{-sigma t} dt <= A T^q e^{-sigma T} / (sigma - max(q, 0) / T)
  const double power = s - 1.0 + model.large_t_power;
  const double rate = sigma - std::max(power, 0.0) / t_max;
  out.tail_error = rate > 0.0 ? model.large_t_amplitude * std::pow(t_max, power) *
                                    std::exp(-sigma * t_max) / rate
                              : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace

double heat_trace_line(long n, double t) {
  if (n == 0) throw ValidationError("n", "must be a nonzero integer");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("heat trace needs t > 0");
  const double nd = static_cast<double>(n);
  return std::exp(-nd * nd / (4.0 * t)) / std::sqrt(4.0 * std::numbers::pi * t);
}

double alternating_heat_trace_line(long n, double t) { return -heat_trace_line(n, t); }

HeatTraceModel line_model(long n) {
  if (n == 0) throw ValidationError("n", "must be a nonzero integer");
  HeatTraceModel model;
  model.trace = [n](double t) { return alternating_heat_trace_line(n, t); };
  model.small_t_rate = static_cast<double>(n) * static_cast<double>(n) / 4.0;
  model.large_t_power = -0.5;
  model.large_t_amplitude = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  return model;
}

void MellinConfig::validate() const {
  if (!(h >= 1e-5 && h <= 1e-2)) throw ValidationError("h", "must lie in [1e-5, 1e-2]");
  if (lower_nodes < 64) throw ValidationError("lower_nodes", "must be >= 64");
  if (upper_nodes < 64) throw ValidationError("upper_nodes", "must be >= 64");
  if (t_max && !(*t_max > t0)) throw ValidationError("t_max", "must exceed the split point 1");
}

double reciprocal_gamma(double s) {
  // Taylor coefficients of 1/Gamma(s) about 0
  static constexpr std::array<double, 27> c = {
      0.0,
      1.0,
      0.5772156649015329,
      -0.6558780715202539,
      -0.04200263503409524,
      0.16653861138229148,
      -0.04219773455554433,
      -0.009621971527876973,
      0.0072189432466631,
      -0.0011651675918590652,
      -0.00021524167411495098,
      0.0001280502823881162,
      -2.013485478078824e-05,
      -1.2504934821426706e-06,
      1.133027231981696e-06,
      -2.056338416977607e-07,
      6.116095104481416e-09,
      5.002007644469223e-09,
      -1.18127457048702e-09,
      1.0434267116911005e-10,
      7.782263439905071e-12,
      -3.696805618642206e-12,
      5.100370287454476e-13,
      -2.0583260535665066e-14,
      -5.348122539423018e-15,
      1.2267786282382608e-15,
      -1.1812593016974588e-16,
  };
  if (std::abs(s) <= 0.5) {
    double acc = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * s + c[k];
    return acc;
  }
  if (s <= 0.0 && std::floor(s) == s) return 0.0;
  return 1.0 / std::tgamma(s);
}

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int nodes) {
  if (nodes < 1) throw ValidationError("nodes", "must be positive");
  return composite(f, a, b, panels_for(nodes));
}

MellinDiagnostics mellin_torsion_diagnostics(const HeatTraceModel& model, double sigma,
                                             const MellinConfig& config) {
  config.validate();
  if (!model.trace) throw ValidationError("model.trace", "callable is empty");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw DomainError("mellin_torsion needs sigma > 0, got " + std::to_string(sigma));
  MellinDiagnostics d;
  d.h = config.h;
  d.t_max = config.t_max ? *config.t_max : 1.0 + 40.0 / sigma;
  const IntegralResult plus = mellin_integral(model, sigma, config.h, config, d.t_max);
  const IntegralResult minus = mellin_integral(model, sigma, -config.h, config, d.t_max);
  d.integral_plus = plus.value;
  d.integral_minus = minus.value;
  d.quadrature_error = std::max(plus.quadrature_error, minus.quadrature_error);
  d.tail_error = std::max(plus.tail_error, minus.tail_error);
  const double f_plus = reciprocal_gamma(config.h) * plus.value;
  const double f_minus = reciprocal_gamma(-config.h) * minus.value;
  d.derivative = (f_plus - f_minus) / (2.0 * config.h);
  d.torsion = std::exp(-0.5 * d.derivative);
  d.accurate = d.quadrature_error + d.tail_error <= kMellinAccuracy;
  return d;
}

double mellin_torsion(const HeatTraceModel& model, double sigma, const MellinConfig& config) {
  const MellinDiagnostics d = mellin_torsion_diagnostics(model, sigma, config);
  if (!d.accurate)
    throw AccuracyError("Mellin quadrature did not converge (t_max = " + std::to_string(d.t_max) +
                            ", h = " + std::to_string(d.h) + ")",
                        d.quadrature_error + d.tail_error);
  return d.torsion;
}

}  // namespace friedlab
