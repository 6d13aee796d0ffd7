#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "friedlab/scenario_file.hpp"

namespace friedlab {

enum class CheckKind { fried, atiyah_bott, cutoff, abel, mellin };

/// Accepts "fried", "atiyah-bott" (or "atiyah_bott"), "cutoff", "abel", "mellin".
CheckKind parse_check_kind(const std::string& text);
const char* check_name(CheckKind kind);

struct CheckOptions {
  std::optional<double> tolerance;  // overrides the file tolerance of the selected check
  std::optional<long> N;            // overrides truncation_N
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

struct CheckOutcome {
  std::vector<std::string> lines;
  int exit_code = kExitPass;
};

/// Runs one check and reports residuals against the file tolerances. Missing blocks and
/// inputs outside a check's hypotheses (e.g. a non-acyclic spectrum for `fried`) give exit 2.
CheckOutcome run_check(const ScenarioFile& file, CheckKind kind, const CheckOptions& options = {});

struct ReportRow {
  Complex sigma;
  std::optional<Complex> R_series;
  std::optional<Complex> R_closed;
  std::optional<Complex> T_series;  // evaluated at sigma^2
  std::optional<Complex> T_closed;  // evaluated at sigma^2
  std::optional<Complex> fried_residual;
  std::optional<double> atiyah_bott_max_residual;
  std::optional<double> R_series_tail;
  std::optional<double> T_series_tail;
  std::optional<Complex> R_dynamical;
  std::optional<double> R_dynamical_tail;
  std::string status = "ok";  // ok | domain | pole | branch | degenerate
};

/// Column names in output order.
const std::vector<std::string>& sweep_columns();

/// One row per point of the sweep grid; PreconditionError if the file has no sweep block.
std::vector<ReportRow> sweep_rows(const ScenarioFile& file);

std::string sweep_csv(const std::vector<ReportRow>& rows);

/// Writes sweep_csv(sweep_rows(file)) to `out`; IoError if the path is not writable.
std::vector<ReportRow> run_sweep(const ScenarioFile& file, const std::filesystem::path& out);

}  // namespace friedlab
