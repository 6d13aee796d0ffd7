#include "friedlab/suspension_dynamics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "series.hpp"

namespace friedlab {

namespace {

using Mat = Eigen::MatrixXcd;

constexpr double kAngleTol = 1e-9;
constexpr double kUnitaryTol = 1e-10;
constexpr long kMaxRotationPeriod = 100000;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool angle_is_zero(double theta) {
  return std::abs(std::remainder(theta, 2.0 * std::numbers::pi)) <= kAngleTol;
}

struct RawPoint {
  std::string id;
  int sign = 1;
  Complex trace{1.0, 0.0};
  long period = 1;
  double det = 1.0;
  std::vector<std::string> g_orbit;
  std::vector<std::string> t_orbit;
};

// ---- finite permutation -------------------------------------------------------------------

struct CycleInfo {
  std::vector<int> cycle_of;                // point -> cycle index
  std::vector<int> position;                // point -> index inside its cycle
  std::vector<std::vector<int>> cycles;     // points in T-order
};

CycleInfo cycles_of(const std::vector<int>& perm) {
  CycleInfo info;
  const int size = static_cast<int>(perm.size());
  info.cycle_of.assign(size, -1);
  info.position.assign(size, 0);
  for (int start = 0; start < size; ++start) {
    if (info.cycle_of[start] != -1) continue;
    std::vector<int> cyc;
    for (int y = start; info.cycle_of[y] == -1; y = perm[y]) {
      info.cycle_of[y] = static_cast<int>(info.cycles.size());
      info.position[y] = static_cast<int>(cyc.size());
      cyc.push_back(y);
    }
    info.cycles.push_back(std::move(cyc));
  }
  return info;
}

Mat fiber_map(const FinitePermutation& m, int rank, int point) {
  if (m.fiber_maps.empty()) return Mat::Identity(rank, rank);
  Mat a(rank, rank);
  const auto& f = m.fiber_maps[point];
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < rank; ++c) a(r, c) = f[r * rank + c];
  return a;
}

// Holonomy A_{T^{p-1}y} ... A_y around the full cycle through y.
Mat holonomy(const FinitePermutation& m, int rank, const CycleInfo& info, int y) {
  const auto& cyc = info.cycles[info.cycle_of[y]];
  const int p = static_cast<int>(cyc.size());
  Mat h = Mat::Identity(rank, rank);
  for (int j = 0; j < p; ++j) h = fiber_map(m, rank, cyc[(info.position[y] + j) % p]) * h;
  return h;
}

Mat matrix_power(Mat base, long e) {
  Mat result = Mat::Identity(base.rows(), base.cols());
  while (e > 0) {
    if (e & 1L) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

// tr(T_E^{j} restricted to E_y) for T^j y = y; negative j uses the adjoint of a unitary.
Complex bundle_power_trace(const FinitePermutation& m, int rank, const CycleInfo& info, int y,
                           long j) {
  if (j == 0) return static_cast<double>(rank);
  const long p = static_cast<long>(info.cycles[info.cycle_of[y]].size());
  if (m.fiber_maps.empty()) return static_cast<double>(rank);
  const Mat h = holonomy(m, rank, info, y);
  const Complex tr = matrix_power(h, std::abs(j) / p).trace();
  return j > 0 ? tr : std::conj(tr);
}

long mod_positive(long a, long m) { return ((a % m) + m) % m; }

void finite_raw(const FinitePermutation& m, int rank, long n, const std::string& prefix,
                std::vector<RawPoint>& out) {
  const CycleInfo info = cycles_of(m.perm);
  const long shift = n - m.g_power;  // g^{-1} T^n = T^{shift} on points
  for (std::size_t y = 0; y < m.perm.size(); ++y) {
    const auto& cyc = info.cycles[info.cycle_of[y]];
    const long p = static_cast<long>(cyc.size());
    if (mod_positive(shift, p) != 0) continue;
    RawPoint pt;
    pt.id = prefix + std::to_string(y);
    pt.period = p;
    pt.trace = m.g_phase * bundle_power_trace(m, rank, info, static_cast<int>(y), -shift);
    const int pos = info.position[y];
    for (long j = 0; j < p; ++j) pt.t_orbit.push_back(prefix + std::to_string(cyc[(pos + j) % p]));
    const long step = mod_positive(m.g_power, p);
    long off = 0;
    do {
      pt.g_orbit.push_back(prefix + std::to_string(cyc[(pos + off) % p]));
      off = (off + step) % p;
    } while (off != 0);
    out.push_back(std::move(pt));
  }
}

bool finite_nonempty(const FinitePermutation& m, long n) {
  const CycleInfo info = cycles_of(m.perm);
  const long shift = n - m.g_power;
  return std::any_of(info.cycles.begin(), info.cycles.end(), [&](const auto& cyc) {
    return mod_positive(shift, static_cast<long>(cyc.size())) == 0;
  });
}

GradedSpectrum finite_spectrum(const FinitePermutation& m, int rank) {
  const CycleInfo info = cycles_of(m.perm);
  std::vector<EigenPair> pairs;
  for (const auto& cyc : info.cycles) {
    const long p = static_cast<long>(cyc.size());
    Eigen::ComplexEigenSolver<Mat> solver(holonomy(m, rank, info, cyc.front()), false);
    for (Eigen::Index e = 0; e < solver.eigenvalues().size(); ++e) {
      const double phase = std::arg(solver.eigenvalues()(e));
      for (long j = 0; j < p; ++j) {
        const Complex mu_T = std::polar(1.0, (phase + 2.0 * std::numbers::pi * j) / p);
        pairs.push_back({m.g_phase * unit_power(mu_T, m.g_power), mu_T, 1});
      }
    }
  }
  GradedSpectrum::DegreeMap deg;
  if (!pairs.empty()) deg[0] = std::move(pairs);
  return GradedSpectrum(0, std::move(deg));
}

// ---- rotations ----------------------------------------------------------------------------

void sphere_raw(const SphereRotation& m, int rank, long n, const std::string& prefix,
                std::vector<RawPoint>& out) {
  const double theta = static_cast<double>(n) * m.alpha - m.gamma;
  if (angle_is_zero(theta))
    throw NondegeneracyError("sphere rotation angle is a multiple of 2 pi; whole sphere fixed", n);
  for (const char* pole : {"N", "S"}) {
    RawPoint pt;
    pt.id = prefix + pole;
    pt.trace = static_cast<double>(rank);
    pt.det = 2.0 - 2.0 * std::cos(theta);
    pt.g_orbit = {pt.id};
    pt.t_orbit = {pt.id};
    out.push_back(std::move(pt));
  }
}

void circle_raw(const CircleRotation& m, long n) {
  const double theta = static_cast<double>(n) * m.alpha - m.gamma;
  if (angle_is_zero(theta))
    throw NondegeneracyError("circle rotation angle is a multiple of 2 pi; whole circle fixed", n);
}

long rotation_period(double alpha) {
  for (long k = 1; k <= kMaxRotationPeriod; ++k)
    if (angle_is_zero(static_cast<double>(k) * alpha)) return k;
  throw PreconditionError("point is not T-periodic (rotation angle is aperiodic up to " +
                          std::to_string(kMaxRotationPeriod) + ")");
}

// ---- dispatch -----------------------------------------------------------------------------

std::vector<RawPoint> raw_fixed(const Scenario& s, long n) {
  std::vector<RawPoint> out;
  std::visit(overloaded{
                 [&](const FinitePermutation& m) { finite_raw(m, s.rank, n, "", out); },
                 [&](const CircleRotation& m) { circle_raw(m, n); },
                 [&](const SphereRotation& m) { sphere_raw(m, s.rank, n, "", out); },
                 [&](const WeylProduct& m) {
                   for (const auto& [label, comp] : m.components)
                     finite_raw(comp, s.rank, n, label + "/", out);
                 },
                 [&](const DiscreteIdentityProduct& m) {
                   for (int c = -m.window; c <= m.window; ++c) {
                     const std::string prefix = std::to_string(c) + ":";
                     std::visit(overloaded{
                                    [&](const FinitePermutation& b) {
                                      finite_raw(b, s.rank, n, prefix, out);
                                    },
                                    [&](const SphereRotation& b) {
                                      sphere_raw(b, s.rank, n, prefix, out);
                                    },
                                },
                                m.base);
                   }
                 },
             },
             s.model);
  return out;
}

bool fixed_set_nonempty(const Scenario& s, long n) {
  return std::visit(
      overloaded{
          [&](const FinitePermutation& m) { return finite_nonempty(m, n); },
          [&](const CircleRotation& m) {
            return angle_is_zero(static_cast<double>(n) * m.alpha - m.gamma);
          },
          [&](const SphereRotation&) { return true; },
          [&](const WeylProduct& m) {
            return std::any_of(m.components.begin(), m.components.end(),
                               [&](const auto& kv) { return finite_nonempty(kv.second, n); });
          },
          [&](const DiscreteIdentityProduct& m) {
            return std::visit(overloaded{
                                  [&](const FinitePermutation& b) { return finite_nonempty(b, n); },
                                  [&](const SphereRotation&) { return true; },
                              },
                              m.base);
          },
      },
      s.model);
}

double mean_weight(const CutoffProfile& cutoffs, const std::vector<std::string>& ids) {
  if (ids.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& id : ids) sum += cutoffs.weight(id);
  return sum / static_cast<double>(ids.size());
}

std::vector<FixedPointDatum> to_data(const std::vector<RawPoint>& raw,
                                     const CutoffProfile& cutoffs) {
  std::vector<FixedPointDatum> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    FixedPointDatum d;
    d.point_id = r.id;
    d.sign = r.det > 0.0 ? 1 : -1;
    d.fiber_trace = r.trace;
    d.primitive_period = r.period;
    d.det = r.det;
    d.cutoff_weight = mean_weight(cutoffs, r.g_orbit);
    d.orbit_weight = mean_weight(cutoffs, r.t_orbit);
    out.push_back(std::move(d));
  }
  return out;
}

void validate_finite(const FinitePermutation& m, int rank, const std::string& field) {
  const auto size = m.perm.size();
  std::vector<bool> hit(size, false);
  for (std::size_t i = 0; i < size; ++i) {
    const int t = m.perm[i];
    if (t < 0 || static_cast<std::size_t>(t) >= size || hit[t])
      throw ValidationError(field + ".perm", "not a permutation of 0.." + std::to_string(size - 1));
    hit[t] = true;
  }
  if (std::abs(std::abs(m.g_phase) - 1.0) > kUnitModulusTol)
    throw ValidationError(field + ".g_phase", "must have modulus 1");
  if (m.fiber_maps.empty()) return;
  if (m.fiber_maps.size() != size)
    throw ValidationError(field + ".fiber_maps", "need one map per point");
  for (std::size_t i = 0; i < size; ++i) {
    const std::string f = field + ".fiber_maps[" + std::to_string(i) + "]";
    if (m.fiber_maps[i].size() != static_cast<std::size_t>(rank * rank))
      throw ValidationError(f, "expected a " + std::to_string(rank) + "x" +
                                   std::to_string(rank) + " matrix");
    const Mat a = fiber_map(m, rank, static_cast<int>(i));
    if (!a.allFinite()) throw ValidationError(f, "entries must be finite");
    const double defect = (a.adjoint() * a - Mat::Identity(rank, rank)).cwiseAbs().maxCoeff();
    if (defect > kUnitaryTol) throw ValidationError(f, "matrix is not unitary");
  }
}

void validate_angle(double v, const std::string& field) {
  if (!std::isfinite(v)) throw ValidationError(field, "angle must be finite");
}

std::vector<std::string> base_point_ids(const std::variant<FinitePermutation, SphereRotation>& b) {
  return std::visit(overloaded{
                        [](const FinitePermutation& m) {
                          std::vector<std::string> ids;
                          for (std::size_t i = 0; i < m.perm.size(); ++i)
                            ids.push_back(std::to_string(i));
                          return ids;
                        },
                        [](const SphereRotation&) { return std::vector<std::string>{"N", "S"}; },
                    },
                    b);
}

long lcm_of_cycles(const FinitePermutation& m) {
  long l = 1;
  for (const auto& cyc : cycles_of(m.perm).cycles) {
    l = std::lcm(l, static_cast<long>(cyc.size()));
    if (l > 10000) return 10000;
  }
  return l;
}

long auto_window(const Scenario& s) {
  return std::visit(
      overloaded{
          [](const FinitePermutation& m) { return std::abs(m.g_power) + lcm_of_cycles(m); },
          [](const CircleRotation&) { return 12L; },
          [](const SphereRotation&) { return 12L; },
          [](const WeylProduct& m) {
            long w = 1;
            for (const auto& [label, c] : m.components)
              w = std::max(w, std::abs(c.g_power) + lcm_of_cycles(c));
            return w;
          },
          [](const DiscreteIdentityProduct& m) {
            return std::visit(overloaded{
                                  [](const FinitePermutation& b) { return lcm_of_cycles(b); },
                                  [](const SphereRotation&) { return 12L; },
                              },
                              m.base);
          },
      },
      s.model);
}

}  // namespace

ScenarioKind kind_of(const Scenario& s) { return static_cast<ScenarioKind>(s.model.index()); }

const char* kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::finite_permutation: return "finite_permutation";
    case ScenarioKind::circle_rotation: return "circle_rotation";
    case ScenarioKind::sphere_rotation: return "sphere_rotation";
    case ScenarioKind::weyl_product: return "weyl_product";
    case ScenarioKind::discrete_identity_product: return "discrete_identity_product";
  }
  return "unknown";
}

bool is_compact_kind(ScenarioKind kind) {
  return kind == ScenarioKind::finite_permutation || kind == ScenarioKind::circle_rotation ||
         kind == ScenarioKind::sphere_rotation;
}

void validate_scenario(const Scenario& s) {
  if (s.rank < 1) throw ValidationError("rank", "must be >= 1");
  if (s.growth) {
    if (!(s.growth->C >= 0.0) || !std::isfinite(s.growth->C))
      throw ValidationError("growth.C", "must be finite and >= 0");
    if (!(s.growth->c >= 0.0) || !std::isfinite(s.growth->c))
      throw ValidationError("growth.c", "must be finite and >= 0");
  }
  if (s.chi0 && (!std::isfinite(s.chi0->real()) || !std::isfinite(s.chi0->imag())))
    throw ValidationError("chi0", "must be finite");
  std::visit(overloaded{
                 [&](const FinitePermutation& m) { validate_finite(m, s.rank, "model"); },
                 [&](const CircleRotation& m) {
                   validate_angle(m.alpha, "model.alpha");
                   validate_angle(m.gamma, "model.gamma");
                 },
                 [&](const SphereRotation& m) {
                   validate_angle(m.alpha, "model.alpha");
                   validate_angle(m.gamma, "model.gamma");
                 },
                 [&](const WeylProduct& m) {
                   for (const auto& [label, comp] : m.components) {
                     if (label.empty() || label.find('/') != std::string::npos)
                       throw ValidationError("model.components", "bad label '" + label + "'");
                     validate_finite(comp, s.rank, "model.components." + label);
                   }
                 },
                 [&](const DiscreteIdentityProduct& m) {
                   if (m.window < 0) throw ValidationError("model.window", "must be >= 0");
                   std::visit(overloaded{
                                  [&](const FinitePermutation& b) {
                                    validate_finite(b, s.rank, "model.base");
                                    if (b.g_power != 0 || b.g_phase != Complex{1.0, 0.0})
                                      throw ValidationError("model.base",
                                                            "group element must be the identity");
                                  },
                                  [&](const SphereRotation& b) {
                                    validate_angle(b.alpha, "model.base.alpha");
                                    if (b.gamma != 0.0)
                                      throw ValidationError("model.base.gamma",
                                                            "group element must be the identity");
                                  },
                              },
                              m.base);
                 },
             },
             s.model);
}

GrowthBound effective_growth(const Scenario& s) {
  if (s.growth) return *s.growth;
  const double C = std::visit(
      overloaded{
          [](const FinitePermutation& m) { return static_cast<double>(m.perm.size()); },
          [](const CircleRotation&) { return 0.0; },
          [](const SphereRotation&) { return 2.0; },
          [](const WeylProduct& m) {
            double total = 0.0;
            for (const auto& [label, c] : m.components) total += static_cast<double>(c.perm.size());
            return total;
          },
          [](const DiscreteIdentityProduct& m) {
            const double base = std::visit(
                overloaded{
                    [](const FinitePermutation& b) { return static_cast<double>(b.perm.size()); },
                    [](const SphereRotation&) { return 2.0; },
                },
                m.base);
            return (2.0 * m.window + 1.0) * base;
          },
      },
      s.model);
  return {C, 0.0};
}

double CutoffProfile::weight(const std::string& point_id) const {
  if (auto it = weights.find(point_id); it != weights.end()) return it->second;
  if (auto colon = point_id.find(':'); colon != std::string::npos) {
    if (auto it = weights.find(point_id.substr(0, colon + 1) + "*"); it != weights.end())
      return it->second;
  }
  return default_weight;
}

double CutoffProfile::max_weight() const {
  double w = default_weight;
  for (const auto& [id, v] : weights) w = std::max(w, v);
  return w;
}

CutoffProfile canonical_cutoffs(const Scenario& s) {
  if (kind_of(s) == ScenarioKind::discrete_identity_product) return {0.0, {{"0:*", 1.0}}};
  return {1.0, {}};
}

std::vector<FixedPointDatum> fixed_point_report(const Scenario& s, const CutoffProfile& cutoffs,
                                                long n) {
  if (n == 0) throw PreconditionError("fixed_point_report requires n != 0");
  validate_scenario(s);
  return to_data(raw_fixed(s, n), cutoffs);
}

std::vector<FixedPointDatum> fixed_point_report(const Scenario& s, long n) {
  return fixed_point_report(s, canonical_cutoffs(s), n);
}

std::set<long> length_spectrum(const Scenario& s, long N) {
  validate_scenario(s);
  std::set<long> out;
  for (long n = -N; n <= N; ++n)
    if (n != 0 && fixed_set_nonempty(s, n)) out.insert(n);
  return out;
}

long primitive_period(const Scenario& s, const std::string& point_id) {
  validate_scenario(s);
  auto parse_index = [&](const std::string& text, std::size_t size) {
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty() || v < 0 || static_cast<std::size_t>(v) >= size)
      throw ValidationError("point_id", "unknown point '" + point_id + "'");
    return static_cast<int>(v);
  };
  auto finite_period = [&](const FinitePermutation& m, const std::string& local) {
    const int y = parse_index(local, m.perm.size());
    const CycleInfo info = cycles_of(m.perm);
    return static_cast<long>(info.cycles[info.cycle_of[y]].size());
  };
  auto rotation_point_period = [&](double alpha, const std::string& local, bool poles) {
    if (poles && (local == "N" || local == "S")) return 1L;
    std::size_t used = 0;
    try {
      (void)std::stod(local, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (local.empty() || used != local.size())
      throw ValidationError("point_id", "unknown point '" + point_id + "'");
    return rotation_period(alpha);
  };
  return std::visit(
      overloaded{
          [&](const FinitePermutation& m) { return finite_period(m, point_id); },
          [&](const CircleRotation& m) { return rotation_point_period(m.alpha, point_id, false); },
          [&](const SphereRotation& m) { return rotation_point_period(m.alpha, point_id, true); },
          [&](const WeylProduct& m) {
            const auto slash = point_id.find('/');
            if (slash == std::string::npos)
              throw ValidationError("point_id", "expected 'label/i', got '" + point_id + "'");
            auto it = m.components.find(point_id.substr(0, slash));
            if (it == m.components.end())
              throw ValidationError("point_id", "unknown label in '" + point_id + "'");
            return finite_period(it->second, point_id.substr(slash + 1));
          },
          [&](const DiscreteIdentityProduct& m) {
            const auto colon = point_id.find(':');
            if (colon == std::string::npos)
              throw ValidationError("point_id", "expected 'copy:id', got '" + point_id + "'");
            const std::string local = point_id.substr(colon + 1);
            return std::visit(
                overloaded{
                    [&](const FinitePermutation& b) { return finite_period(b, local); },
                    [&](const SphereRotation& b) { return rotation_point_period(b.alpha, local, true); },
                },
                m.base);
          },
      },
      s.model);
}

ZetaValue ruelle_dynamical(const Scenario& s, const CutoffProfile& cutoffs, Complex sigma,
                           long N) {
  validate_scenario(s);
  if (N < 1) throw ValidationError("N", "truncation must be a positive integer");
  const GrowthBound growth = effective_growth(s);
  if (!(sigma.real() > growth.c))
    throw DomainError("ruelle_dynamical requires Re(sigma) > c = " + std::to_string(growth.c) +
                      ", got Re(sigma) = " + std::to_string(sigma.real()));
  detail::SeriesParams p;
  p.decay = sigma;
  p.N = N;
  p.bound = s.rank * cutoffs.max_weight() * growth.C;
  p.growth = growth.c;
  return detail::symmetric_log_series(p, [&](long n) {
    detail::InnerTerm t{{0.0, 0.0}, 0.0};
    for (const auto& d : to_data(raw_fixed(s, n), cutoffs)) {
      const Complex c = static_cast<double>(d.sign) * d.fiber_trace * d.orbit_weight;
      t.value += c;
      t.magnitude += std::abs(c);
    }
    return t;
  });
}

ZetaValue ruelle_identity_discrete(const Scenario& s, Complex sigma, long N) {
  if (kind_of(s) != ScenarioKind::discrete_identity_product)
    throw PreconditionError("ruelle_identity_discrete needs a discrete_identity_product scenario");
  return ruelle_dynamical(s, canonical_cutoffs(s), sigma, N);
}

Complex atiyah_bott_residual(const Scenario& s, const GradedSpectrum& spec, long n) {
  if (n == 0) throw PreconditionError("atiyah_bott_residual requires n != 0");
  if (!is_compact_kind(kind_of(s)))
    throw PreconditionError(std::string("atiyah_bott_residual needs a compact scenario, got ") +
                            kind_name(kind_of(s)));
  validate_scenario(s);
  Complex sum{0.0, 0.0};
  for (const auto& r : raw_fixed(s, n)) sum += (r.det > 0.0 ? 1.0 : -1.0) * r.trace;
  return sum - lefschetz_number(spec, -n);
}

Complex euler_from_fixed_points(const Scenario& s, const CutoffProfile& cutoffs, long n) {
  validate_scenario(s);
  Complex sum{0.0, 0.0};
  for (const auto& d : to_data(raw_fixed(s, -n), cutoffs))
    sum += d.cutoff_weight * static_cast<double>(d.sign) * d.fiber_trace;
  return sum;
}

double cutoff_compatibility_residual(const Scenario& s, const CutoffProfile& cutoffs,
                                     std::optional<long> n_max) {
  validate_scenario(s);
  const long W = n_max ? *n_max : auto_window(s);
  double worst = 0.0;
  for (long n = -W; n <= W; ++n) {
    if (n == 0) continue;
    std::vector<RawPoint> raw;
    try {
      raw = raw_fixed(s, n);
    } catch (const NondegeneracyError&) {
      continue;
    }
    for (const auto& d : to_data(raw, cutoffs))
      worst = std::max(worst, std::abs(d.cutoff_weight - d.orbit_weight));
  }
  return worst;
}

double cutoff_property_defect(const Scenario& s, const CutoffProfile& cutoffs) {
  validate_scenario(s);
  double worst = 0.0;
  auto check = [&](double v) {
    if (v < 0.0) worst = std::max(worst, std::abs(v));
  };
  check(cutoffs.default_weight);
  for (const auto& [id, w] : cutoffs.weights) check(w);
  if (const auto* m = std::get_if<DiscreteIdentityProduct>(&s.model)) {
    auto ids = base_point_ids(m->base);
    ids.push_back("*");
    for (const auto& b : ids) {
      double sum = 0.0;
      for (int c = -m->window; c <= m->window; ++c) sum += cutoffs.weight(std::to_string(c) + ":" + b);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
  }
  worst = std::max(worst, std::abs(cutoffs.default_weight - 1.0));
  for (const auto& [id, w] : cutoffs.weights) worst = std::max(worst, std::abs(w - 1.0));
  return worst;
}

GradedSpectrum cohomology_spectrum(const Scenario& s) {
  validate_scenario(s);
  const int r = s.rank;
  return std::visit(
      overloaded{
          [&](const FinitePermutation& m) { return finite_spectrum(m, r); },
          [&](const CircleRotation&) {
            return GradedSpectrum(1, {{0, {{{1, 0}, {1, 0}, r}}}, {1, {{{1, 0}, {1, 0}, r}}}});
          },
          [&](const SphereRotation&) {
            return GradedSpectrum(2, {{0, {{{1, 0}, {1, 0}, r}}}, {2, {{{1, 0}, {1, 0}, r}}}});
          },
          [&](const WeylProduct& m) {
            GradedSpectrum total;
            for (const auto& [label, c] : m.components)
              total = disjoint_union(total, finite_spectrum(c, r));
            return total;
          },
          [&](const DiscreteIdentityProduct&) -> GradedSpectrum {
            throw PreconditionError(
                "cohomology_spectrum is not defined for discrete_identity_product");
          },
      },
      s.model);
}

std::vector<long> growth_violations(const Scenario& s, long max_n) {
  validate_scenario(s);
  const GrowthBound g = effective_growth(s);
  std::vector<long> bad;
  for (long n = -max_n; n <= max_n; ++n) {
    if (n == 0) continue;
    try {
      const double count = static_cast<double>(raw_fixed(s, n).size());
      if (count > g.C * std::exp(g.c * static_cast<double>(std::abs(n))) * (1.0 + 1e-12))
        bad.push_back(n);
    } catch (const NondegeneracyError&) {
      bad.push_back(n);
    }
  }
  return bad;
}

}  // namespace friedlab
