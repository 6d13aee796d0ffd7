#include "friedlab/errors.hpp"

namespace friedlab {

std::string to_string(const SpectrumLocation& loc) {
  return "degree " + std::to_string(loc.degree) + ", pair " + std::to_string(loc.index);
}

ValidationError::ValidationError(std::string field, const std::string& what)
    : Error(field + ": " + what), field_(std::move(field)) {}

SpectralError::SpectralError(const std::string& what, std::optional<SpectrumLocation> where)
    : Error(where ? what + " (" + to_string(*where) + ")" : what), where_(where) {}

NondegeneracyError::NondegeneracyError(const std::string& what, long n)
    : Error(what + " (n = " + std::to_string(n) + ")"), n_(n) {}

AccuracyError::AccuracyError(const std::string& what, double estimated_error)
    : Error(what + " (estimated error " + std::to_string(estimated_error) + ")"),
      estimated_error_(estimated_error) {}

}  // namespace friedlab
