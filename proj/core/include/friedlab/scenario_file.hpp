#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "friedlab/spectra.hpp"
#include "friedlab/suspension_dynamics.hpp"

namespace friedlab {

/// sigma grid: count real parts evenly spaced on [start, stop], each combined with every
/// imaginary offset (real part major).
struct SweepSpec {
  double start = 0.5;
  double stop = 3.0;
  int count = 0;
  std::vector<double> imag_offsets{0.0};

  std::vector<Complex> grid() const;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct Tolerances {
  double fried = 1e-9;  // relative to |R(sigma)|
  double atiyah_bott = 1e-12;
  double cutoff = 1e-12;
  double abel = 1e-3;
  double mellin = 1e-4;
  double acyclicity = kDefaultAcyclicityTol;

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

struct DynamicsBlock {
  Scenario scenario;
  CutoffProfile cutoffs;  // canonical cutoffs when the file gives none

  friend bool operator==(const DynamicsBlock&, const DynamicsBlock&) = default;
};

struct ScenarioFile {
  std::string name;
  std::optional<GradedSpectrum> spectrum;
  std::optional<DynamicsBlock> dynamics;
  std::optional<SweepSpec> sweep;
  long truncation_N = 200;
  Tolerances tolerances;

  friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

/// Reads and validates a scenario file. Malformed JSON -> ParseError with line and column;
/// bad or missing fields -> ValidationError naming the field; unreadable file -> IoError.
ScenarioFile parse_scenario(const std::filesystem::path& path);
ScenarioFile parse_scenario_text(const std::string& text, const std::string& source = "<text>");

/// JSON text that parse_scenario_text maps back to an equal ScenarioFile.
std::string serialize_scenario(const ScenarioFile& file);

}  // namespace friedlab
