#include "friedlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace friedlab {

namespace {

std::string pair_field(int q, std::size_t j, const char* member) {
  return "degrees[" + std::to_string(q) + "][" + std::to_string(j) + "]." + member;
}

void check_unit(Complex mu, int q, std::size_t j, const char* member) {
  if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()))
    throw ValidationError(pair_field(q, j, member), "eigenvalue is not finite");
  const double off = std::abs(std::abs(mu) - 1.0);
  if (off > kUnitModulusTol)
    throw ValidationError(pair_field(q, j, member),
                          "eigenvalue modulus " + std::to_string(std::abs(mu)) +
                              " is not 1 (tolerance 1e-12)");
}

Complex ipow(Complex z, int k) {
  bool invert = k < 0;
  unsigned e = invert ? static_cast<unsigned>(-k) : static_cast<unsigned>(k);
  Complex result{1.0, 0.0};
  while (e != 0) {
    if (e & 1U) result *= z;
    z *= z;
    e >>= 1U;
  }
  return invert ? Complex{1.0, 0.0} / result : result;
}

}  // namespace

GradedSpectrum::GradedSpectrum(int top_degree, DegreeMap degrees,
                               std::optional<std::map<int, int>> declared_dimensions)
    : top_degree_(top_degree),
      degrees_(std::move(degrees)),
      declared_dimensions_(std::move(declared_dimensions)) {
  if (top_degree_ < 0) throw ValidationError("top_degree", "must be non-negative");
  for (const auto& [q, pairs] : degrees_) {
    if (q < 0 || q > top_degree_)
      throw ValidationError("degrees[" + std::to_string(q) + "]",
                            "degree outside [0, " + std::to_string(top_degree_) + "]");
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      check_unit(pairs[j].mu_g, q, j, "mu_g");
      check_unit(pairs[j].mu_T, q, j, "mu_T");
      if (pairs[j].multiplicity < 1)
        throw ValidationError(pair_field(q, j, "multiplicity"), "must be >= 1");
    }
  }
  if (declared_dimensions_) {
    for (const auto& [q, dim] : *declared_dimensions_) {
      if (q < 0 || q > top_degree_)
        throw ValidationError("dimensions[" + std::to_string(q) + "]", "degree out of range");
      if (dim != dimension(q))
        throw ValidationError("dimensions[" + std::to_string(q) + "]",
                              "declared " + std::to_string(dim) + " but eigenpairs sum to " +
                                  std::to_string(dimension(q)));
    }
    for (const auto& [q, pairs] : degrees_)
      if (!pairs.empty() && !declared_dimensions_->count(q))
        throw ValidationError("dimensions[" + std::to_string(q) + "]",
                              "missing for a degree with eigenpairs");
  }
}

int GradedSpectrum::total_multiplicity() const noexcept {
  int total = 0;
  for (const auto& [q, pairs] : degrees_)
    for (const auto& p : pairs) total += p.multiplicity;
  return total;
}

int GradedSpectrum::dimension(int degree) const {
  auto it = degrees_.find(degree);
  if (it == degrees_.end()) return 0;
  int total = 0;
  for (const auto& p : it->second) total += p.multiplicity;
  return total;
}

bool GradedSpectrum::trivial_group_action() const noexcept {
  for (const auto& [q, pairs] : degrees_)
    for (const auto& p : pairs)
      if (p.mu_g != Complex{1.0, 0.0}) return false;
  return true;
}

GradedSpectrum disjoint_union(const GradedSpectrum& a, const GradedSpectrum& b) {
  GradedSpectrum::DegreeMap merged = a.degrees();
  for (const auto& [q, pairs] : b.degrees()) {
    auto& dst = merged[q];
    dst.insert(dst.end(), pairs.begin(), pairs.end());
  }
  return GradedSpectrum(std::max(a.top_degree(), b.top_degree()), std::move(merged));
}

GradedSpectrum scale_multiplicities(const GradedSpectrum& spec, int factor) {
  if (factor < 1) throw ValidationError("factor", "must be >= 1");
  GradedSpectrum::DegreeMap scaled = spec.degrees();
  for (auto& [q, pairs] : scaled)
    for (auto& p : pairs) p.multiplicity *= factor;
  return GradedSpectrum(spec.top_degree(), std::move(scaled));
}

AcyclicityCertificate validate_spectrum(const GradedSpectrum& spec, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw ValidationError("tol", "must be positive");
  AcyclicityCertificate cert;
  spec.for_each([&](int q, std::size_t, const EigenPair& p) {
    if (std::abs(p.mu_T - Complex{1.0, 0.0}) <= tol) cert.offending_pairs.push_back({q, p});
  });
  cert.acyclic = cert.offending_pairs.empty();
  return cert;
}

Complex unit_power(Complex mu, long n) {
  if (n == 0) return {1.0, 0.0};
  if (mu == Complex{1.0, 0.0}) return mu;
  const double nd = static_cast<double>(n);
  return std::polar(std::pow(std::abs(mu), nd), nd * std::arg(mu));
}

Complex lefschetz_number(const GradedSpectrum& spec, long n) {
  Complex sum{0.0, 0.0};
  spec.for_each([&](int q, std::size_t, const EigenPair& p) {
    const double sign = (q % 2 == 0) ? 1.0 : -1.0;
    sum += sign * static_cast<double>(p.multiplicity) * p.mu_g * unit_power(p.mu_T, n);
  });
  return sum;
}

Complex superdeterminant(const GradedSpectrum& spec, OperatorSide side, Complex scale) {
  Complex result{1.0, 0.0};
  spec.for_each([&](int q, std::size_t j, const EigenPair& p) {
    const Complex a = side == OperatorSide::T_forward ? p.mu_T : Complex{1.0, 0.0} / p.mu_T;
    const Complex factor = Complex{1.0, 0.0} - scale * a;
    const bool odd = q % 2 != 0;
    if (odd && factor == Complex{0.0, 0.0})
      throw PoleError("superdeterminant has a vanishing odd-degree factor",
                      SpectrumLocation{q, j});
    result *= ipow(factor, odd ? -p.multiplicity : p.multiplicity);
  });
  return result;
}

}  // namespace friedlab
