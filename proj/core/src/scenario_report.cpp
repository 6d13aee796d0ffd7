#include "friedlab/scenario_report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "friedlab/heat_mellin.hpp"
#include "friedlab/suspension_dynamics.hpp"
#include "friedlab/torsion_calculus.hpp"
#include "friedlab/zeta_spectral.hpp"

namespace friedlab {

namespace {

constexpr long kAtiyahBottWindow = 12;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cplx(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.10g%+.10gi", z.real(), z.imag());
  return buf;
}

std::string verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

CheckOutcome input_error(const std::string& what) {
  return {{"input error: " + what}, kExitInputError};
}

std::vector<Complex> fried_grid(const ScenarioFile& file) {
  if (file.sweep && file.sweep->count > 0) return file.sweep->grid();
  std::vector<Complex> grid;
  for (double re : {0.5, 1.0, 2.0})
    for (double im : {0.0, 0.3, -0.3}) grid.emplace_back(re, im);
  return grid;
}

CheckOutcome check_fried(const ScenarioFile& file, const CheckOptions& opt) {
  if (!file.spectrum) return input_error("fried check needs a spectrum block");
  const GradedSpectrum& spec = *file.spectrum;
  const auto cert = validate_spectrum(spec, file.tolerances.acyclicity);
  if (!cert.acyclic)
    return input_error("spectrum is not acyclic (" + std::to_string(cert.offending_pairs.size()) +
                       " eigenpair(s) with mu_T = 1); torsion at 0 is undefined");
  const double tol = opt.tolerance.value_or(file.tolerances.fried);
  const long N = opt.N.value_or(file.truncation_N);
  CheckOutcome out;
  bool ok = true;
  double worst = 0.0;
  for (Complex sigma : fried_grid(file)) {
    try {
      const Complex r = ruelle_closed_form(spec, sigma);
      const double rel = std::abs(fried_residual(spec, sigma)) / std::abs(r);
      worst = std::max(worst, rel);
      const bool pass = rel <= tol;
      ok = ok && pass;
      out.lines.push_back("sigma=" + cplx(sigma) + " |residual|/|R|=" + sci(rel) + " " +
                          verdict(pass));
    } catch (const SpectralError& e) {
      ok = false;
      out.lines.push_back("sigma=" + cplx(sigma) + " error: " + e.what());
    }
  }
  const Complex r0 = ruelle_closed_form(spec, 0.0);
  const Complex t0 = torsion_at_zero(spec, file.tolerances.acyclicity);
  const double rel0 = std::abs(r0 - t0 * t0) / std::abs(r0);
  const bool pass0 = rel0 <= tol;
  ok = ok && pass0;
  out.lines.push_back("R(0)=" + cplx(r0) + " T(0)^2=" + cplx(t0 * t0) + " rel=" + sci(rel0) + " " +
                      verdict(pass0));

  if (file.dynamics) {
    const auto& dyn = *file.dynamics;
    const Complex chi0 = lefschetz_number(spec, 0);
    const double c = effective_growth(dyn.scenario).c;
    for (Complex sigma : fried_grid(file)) {
      if (!(sigma.real() > c)) continue;
      try {
        const ZetaValue rd = ruelle_dynamical(dyn.scenario, dyn.cutoffs, sigma, N);
        const ZetaValue tf =
            torsion_fixed_point_form(dyn.scenario, dyn.cutoffs, sigma * sigma, N, chi0);
        const Complex rhs = std::exp(sigma * chi0) * tf.value * tf.value;
        const double slack = rd.total_error() +
                             std::abs(std::exp(sigma * chi0)) * 2.0 * std::abs(tf.value) *
                                 tf.total_error() * (1.0 + 1e-12);
        const double diff = std::abs(rd.value - rhs);
        const bool pass = diff <= tol * std::abs(rd.value) + slack;
        ok = ok && pass;
        out.lines.push_back("dynamical sigma=" + cplx(sigma) + " |R_dyn - e^{sigma chi0} T_fp^2|=" +
                            sci(diff) + " " + verdict(pass));
      } catch (const NondegeneracyError& e) {
        return input_error(e.what());
      }
    }
  }
  out.lines.push_back("fried: max relative residual " + sci(worst) + " tolerance " + sci(tol) +
                      " -> " + verdict(ok));
  out.exit_code = ok ? kExitPass : kExitFail;
  return out;
}

CheckOutcome check_atiyah_bott(const ScenarioFile& file, const CheckOptions& opt) {
  if (!file.spectrum || !file.dynamics)
    return input_error("atiyah-bott check needs both spectrum and dynamics blocks");
  const Scenario& s = file.dynamics->scenario;
  if (!is_compact_kind(kind_of(s)))
    return input_error(std::string("atiyah-bott check needs a compact scenario, got ") +
                       kind_name(kind_of(s)));
  const double tol = opt.tolerance.value_or(file.tolerances.atiyah_bott);
  CheckOutcome out;
  double worst = 0.0;
  for (long n = -kAtiyahBottWindow; n <= kAtiyahBottWindow; ++n) {
    if (n == 0) continue;
    try {
      const double r = std::abs(atiyah_bott_residual(s, *file.spectrum, n));
      worst = std::max(worst, r);
      out.lines.push_back("n=" + std::to_string(n) + " fixed-point sum=" +
                          cplx(lefschetz_number(*file.spectrum, -n) +
                               atiyah_bott_residual(s, *file.spectrum, n)) +
                          " L(-n)=" + cplx(lefschetz_number(*file.spectrum, -n)) +
                          " |residual|=" + sci(r));
    } catch (const NondegeneracyError& e) {
      return input_error(e.what());
    }
  }
  const bool ok = worst <= tol;
  out.lines.push_back("atiyah-bott: max |residual| " + sci(worst) + " tolerance " + sci(tol) +
                      " -> " + verdict(ok));
  out.exit_code = ok ? kExitPass : kExitFail;
  return out;
}

CheckOutcome check_cutoff(const ScenarioFile& file, const CheckOptions& opt) {
  if (!file.dynamics) return input_error("cutoff check needs a dynamics block");
  const auto& dyn = *file.dynamics;
  const double tol = opt.tolerance.value_or(file.tolerances.cutoff);
  const double r = cutoff_compatibility_residual(dyn.scenario, dyn.cutoffs);
  const double defect = cutoff_property_defect(dyn.scenario, dyn.cutoffs);
  const bool ok = r <= tol;
  CheckOutcome out;
  out.lines.push_back("cutoff property defect " + sci(defect));
  out.lines.push_back("cutoff: compatibility residual " + sci(r) + " tolerance " + sci(tol) +
                      " -> " + verdict(ok));
  out.exit_code = ok ? kExitPass : kExitFail;
  return out;
}

CheckOutcome check_abel(const ScenarioFile& file, const CheckOptions& opt) {
  if (!file.spectrum) return input_error("abel check needs a spectrum block");
  const GradedSpectrum& spec = *file.spectrum;
  if (!validate_spectrum(spec, file.tolerances.acyclicity).acyclic)
    return input_error("spectrum is not acyclic; torsion at 0 is undefined");
  const double tol = opt.tolerance.value_or(file.tolerances.abel);
  const Complex t0 = torsion_at_zero(spec, file.tolerances.acyclicity);
  CheckOutcome out;
  std::vector<double> gaps;
  for (int k = 1; k <= 4; ++k) {
    const double sigma = std::pow(10.0, -k);
    gaps.push_back(std::abs(ruelle_closed_form(spec, sigma) - t0 * t0));
    out.lines.push_back("sigma=1e-" + std::to_string(k) + " |R(sigma) - T(0)^2|=" + sci(gaps.back()));
  }
  const bool small = gaps[3] <= tol;
  const bool decreasing = gaps[3] < gaps[2];
  const bool ok = small && decreasing;
  out.lines.push_back(std::string("abel: gap at 1e-4 ") + sci(gaps[3]) + " tolerance " + sci(tol) +
                      (decreasing ? ", decreasing" : ", NOT decreasing") + " -> " + verdict(ok));
  out.exit_code = ok ? kExitPass : kExitFail;
  return out;
}

CheckOutcome check_mellin(const ScenarioFile& file, const CheckOptions& opt) {
  const double tol = opt.tolerance.value_or(file.tolerances.mellin);
  CheckOutcome out;
  bool ok = true;
  for (long n : {1L, 2L, 3L}) {
    for (double sigma : {0.25, 1.0, 4.0}) {
      const double oracle = circle_factor_torsion(n, sigma).real();
      try {
        const double v = mellin_torsion(line_model(n), sigma);
        const double err = std::abs(v - oracle);
        const bool pass = err <= tol;
        ok = ok && pass;
        out.lines.push_back("n=" + std::to_string(n) + " sigma=" + full(sigma) + " mellin=" +
                            full(v) + " closed=" + full(oracle) + " |diff|=" + sci(err) + " " +
                            verdict(pass));
      } catch (const AccuracyError& e) {
        ok = false;
        out.lines.push_back("n=" + std::to_string(n) + " sigma=" + full(sigma) + " " + e.what());
      }
    }
  }
  out.lines.push_back("mellin: tolerance " + sci(tol) + " -> " + verdict(ok));
  out.exit_code = ok ? kExitPass : kExitFail;
  return out;
}

// Runs f, mapping library errors to a status label (first failure wins).
template <class F>
void guarded(ReportRow& row, F&& f) {
  auto mark = [&](const char* label) {
    if (row.status == "ok") row.status = label;
  };
  try {
    f();
  } catch (const DomainError&) {
    mark("domain");
  } catch (const PoleError&) {
    mark("pole");
  } catch (const BranchError&) {
    mark("branch");
  } catch (const NondegeneracyError&) {
    mark("degenerate");
  }
}

void put(std::string& line, const std::optional<Complex>& z) {
  line += ',';
  if (z) line += full(z->real());
  line += ',';
  if (z) line += full(z->imag());
}

void put(std::string& line, const std::optional<double>& v) {
  line += ',';
  if (v) line += full(*v);
}

}  // namespace

CheckKind parse_check_kind(const std::string& text) {
  if (text == "fried") return CheckKind::fried;
  if (text == "atiyah-bott" || text == "atiyah_bott") return CheckKind::atiyah_bott;
  if (text == "cutoff") return CheckKind::cutoff;
  if (text == "abel") return CheckKind::abel;
  if (text == "mellin") return CheckKind::mellin;
  throw ValidationError("kind", "unknown check '" + text + "'");
}

const char* check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::fried: return "fried";
    case CheckKind::atiyah_bott: return "atiyah-bott";
    case CheckKind::cutoff: return "cutoff";
    case CheckKind::abel: return "abel";
    case CheckKind::mellin: return "mellin";
  }
  return "unknown";
}

CheckOutcome run_check(const ScenarioFile& file, CheckKind kind, const CheckOptions& options) {
  if (options.tolerance && !(*options.tolerance > 0.0))
    return input_error("--tol must be positive");
  if (options.N && *options.N < 1) return input_error("--N must be positive");
  switch (kind) {
    case CheckKind::fried: return check_fried(file, options);
    case CheckKind::atiyah_bott: return check_atiyah_bott(file, options);
    case CheckKind::cutoff: return check_cutoff(file, options);
    case CheckKind::abel: return check_abel(file, options);
    case CheckKind::mellin: return check_mellin(file, options);
  }
  return input_error("unknown check");
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {
      "sigma_re",       "sigma_im",       "R_series_re",        "R_series_im",
      "R_closed_re",    "R_closed_im",    "T_series_re",        "T_series_im",
      "T_closed_re",    "T_closed_im",    "fried_residual_re",  "fried_residual_im",
      "atiyah_bott_max_residual",         "R_series_tail",      "T_series_tail",
      "R_dynamical_re", "R_dynamical_im", "R_dynamical_tail",   "status"};
  return cols;
}

std::vector<ReportRow> sweep_rows(const ScenarioFile& file) {
  if (!file.sweep) throw PreconditionError("scenario has no sweep block");
  const long N = file.truncation_N;

  std::optional<double> ab_max;
  bool ab_degenerate = false;
  if (file.spectrum && file.dynamics && is_compact_kind(kind_of(file.dynamics->scenario))) {
    double worst = 0.0;
    try {
      for (long n = -kAtiyahBottWindow; n <= kAtiyahBottWindow; ++n)
        if (n != 0)
          worst = std::max(worst, std::abs(atiyah_bott_residual(file.dynamics->scenario,
                                                                *file.spectrum, n)));
      ab_max = worst;
    } catch (const NondegeneracyError&) {
      ab_degenerate = true;
    }
  }

  std::vector<ReportRow> rows;
  for (Complex sigma : file.sweep->grid()) {
    ReportRow row;
    row.sigma = sigma;
    if (file.spectrum) {
      const GradedSpectrum& spec = *file.spectrum;
      guarded(row, [&] {
        const ZetaValue r = ruelle_series(spec, sigma, N);
        row.R_series = r.value;
        row.R_series_tail = r.tail_bound;
      });
      guarded(row, [&] { row.R_closed = ruelle_closed_form(spec, sigma); });
      guarded(row, [&] {
        const ZetaValue t = torsion_series(spec, sigma * sigma, N);
        row.T_series = t.value;
        row.T_series_tail = t.tail_bound;
      });
      guarded(row, [&] { row.T_closed = torsion_closed_form(spec, sigma * sigma); });
      guarded(row, [&] { row.fried_residual = fried_residual(spec, sigma); });
    }
    row.atiyah_bott_max_residual = ab_max;
    if (ab_degenerate && row.status == "ok") row.status = "degenerate";
    if (file.dynamics) {
      guarded(row, [&] {
        const ZetaValue d =
            ruelle_dynamical(file.dynamics->scenario, file.dynamics->cutoffs, sigma, N);
        row.R_dynamical = d.value;
        row.R_dynamical_tail = d.tail_bound;
      });
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string sweep_csv(const std::vector<ReportRow>& rows) {
  std::string out;
  const auto& cols = sweep_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += '\n';
  for (const auto& r : rows) {
    std::string line = full(r.sigma.real()) + "," + full(r.sigma.imag());
    put(line, r.R_series);
    put(line, r.R_closed);
    put(line, r.T_series);
    put(line, r.T_closed);
    put(line, r.fried_residual);
    put(line, r.atiyah_bott_max_residual);
    put(line, r.R_series_tail);
    put(line, r.T_series_tail);
    put(line, r.R_dynamical);
    put(line, r.R_dynamical_tail);
    line += "," + r.status + "\n";
    out += line;
  }
  return out;
}

std::vector<ReportRow> run_sweep(const ScenarioFile& file, const std::filesystem::path& out) {
  auto rows = sweep_rows(file);
  const std::string csv = sweep_csv(rows);
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write '" + out.string() + "'");
  f << csv;
  f.flush();
  if (!f) throw IoError("failed writing '" + out.string() + "'");
  return rows;
}

}  // namespace friedlab
