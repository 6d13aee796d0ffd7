#pragma once

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "friedlab/errors.hpp"

namespace friedlab {

using Complex = std::complex<double>;

inline constexpr double kUnitModulusTol = 1e-12;
inline constexpr double kDefaultAcyclicityTol = 1e-9;

/// Joint eigenvalue of the commuting isometries g* and T* on one cohomology eigenspace.
struct EigenPair {
  Complex mu_g{1.0, 0.0};
  Complex mu_T{1.0, 0.0};
  int multiplicity = 1;

  friend bool operator==(const EigenPair&, const EigenPair&) = default;
};

/// Eigenvalue data of g*, T* on H^q(Y, E1), q = 0..top_degree. Immutable; validated on construction.
class GradedSpectrum {
 public:
  using DegreeMap = std::map<int, std::vector<EigenPair>>;

  GradedSpectrum() = default;

  /// Throws ValidationError if a degree lies outside [0, top_degree], an eigenvalue is off the
  /// unit circle by more than kUnitModulusTol, a multiplicity is < 1, or a declared dimension
  /// disagrees with the summed multiplicities of its degree.
  GradedSpectrum(int top_degree, DegreeMap degrees,
                 std::optional<std::map<int, int>> declared_dimensions = std::nullopt);

  int top_degree() const noexcept { return top_degree_; }
  const DegreeMap& degrees() const noexcept { return degrees_; }
  const std::optional<std::map<int, int>>& declared_dimensions() const noexcept {
    return declared_dimensions_;
  }

  /// Sum of all multiplicities; bounds |L(n)| for every n.
  int total_multiplicity() const noexcept;
  int dimension(int degree) const;
  bool empty() const noexcept { return total_multiplicity() == 0; }

  /// True if every mu_g equals 1 exactly.
  bool trivial_group_action() const noexcept;

  /// Iterate (degree, index, pair) over all eigenpairs.
  template <class F>
  void for_each(F&& f) const {
    for (const auto& [q, pairs] : degrees_)
      for (std::size_t j = 0; j < pairs.size(); ++j) f(q, j, pairs[j]);
  }

  friend bool operator==(const GradedSpectrum&, const GradedSpectrum&) = default;

 private:
  int top_degree_ = 0;
  DegreeMap degrees_;
  std::optional<std::map<int, int>> declared_dimensions_;
};

/// Concatenates degree lists; top degree is the larger of the two.
GradedSpectrum disjoint_union(const GradedSpectrum& a, const GradedSpectrum& b);

/// Every multiplicity scaled by `factor` (>= 1).
GradedSpectrum scale_multiplicities(const GradedSpectrum& spec, int factor);

struct AcyclicityCertificate {
  struct Offender {
    int degree;
    EigenPair pair;
  };
  bool acyclic = true;
  std::vector<Offender> offending_pairs;
};

/// Reports every pair with |mu_T - 1| <= tol. Throws ValidationError if tol is not positive.
AcyclicityCertificate validate_spectrum(const GradedSpectrum& spec,
                                        double tol = kDefaultAcyclicityTol);

/// mu^n for |mu| close to 1, computed in polar form so that large |n| stays accurate.
Complex unit_power(Complex mu, long n);

/// Sum_q Sum_j (-1)^q mult mu_g mu_T^n.
Complex lefschetz_number(const GradedSpectrum& spec, long n);

enum class OperatorSide { T_forward, T_inverse };

/// Prod_q det(1 - scale A|_{H^q})^{(-1)^q} with A = T* or (T^{-1})*.
/// A vanishing odd-degree factor throws PoleError with its location.
Complex superdeterminant(const GradedSpectrum& spec, OperatorSide side, Complex scale);

}  // namespace friedlab
