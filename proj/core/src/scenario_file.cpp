#include "friedlab/scenario_file.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace friedlab {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ValidationError(path, what);
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) bad(path + "." + key, "unknown field");
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path + "." + key, "missing required field");
  return *it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) bad(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad(path, "must be finite");
  return d;
}

long as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  return v.get<long>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) bad(path, "expected true or false");
  return v.get<bool>();
}

Complex as_complex(const json& v, const std::string& path) {
  if (v.is_number()) return {as_number(v, path), 0.0};
  if (!v.is_array() || v.size() != 2) bad(path, "expected a complex number [re, im]");
  return {as_number(v[0], path + "[0]"), as_number(v[1], path + "[1]")};
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// ---- spectrum -----------------------------------------------------------------------------

int degree_key(const std::string& key, const std::string& path) {
  std::size_t used = 0;
  int q = -1;
  try {
    q = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size()) bad(path + "." + key, "degree keys must be integers");
  return q;
}

GradedSpectrum parse_spectrum(const json& j, const std::string& path) {
  check_keys(j, {"top_degree", "degrees", "dimensions"}, path);
  const long top = as_integer(require(j, "top_degree", path), path + ".top_degree");
  const json& deg = require(j, "degrees", path);
  if (!deg.is_object()) bad(path + ".degrees", "expected an object keyed by degree");
  GradedSpectrum::DegreeMap degrees;
  for (const auto& [key, list] : deg.items()) {
    const std::string dpath = path + ".degrees." + key;
    const int q = degree_key(key, path + ".degrees");
    if (!list.is_array()) bad(dpath, "expected a list of [mu_g, mu_T, multiplicity]");
    auto& pairs = degrees[q];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string ppath = index_path(dpath, i);
      const json& e = list[i];
      if (!e.is_array() || e.size() != 3) bad(ppath, "expected [mu_g, mu_T, multiplicity]");
      const long mult = as_integer(e[2], ppath + ".multiplicity");
      if (mult < 1 || mult > 1'000'000) bad(ppath + ".multiplicity", "must be in [1, 1e6]");
      pairs.push_back({as_complex(e[0], ppath + ".mu_g"), as_complex(e[1], ppath + ".mu_T"),
                       static_cast<int>(mult)});
    }
  }
  std::optional<std::map<int, int>> dims;
  if (auto it = j.find("dimensions"); it != j.end()) {
    if (!it->is_object()) bad(path + ".dimensions", "expected an object keyed by degree");
    dims.emplace();
    for (const auto& [key, v] : it->items())
      (*dims)[degree_key(key, path + ".dimensions")] =
          static_cast<int>(as_integer(v, path + ".dimensions." + key));
  }
  try {
    return GradedSpectrum(static_cast<int>(top), std::move(degrees), std::move(dims));
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    // re-anchor the field at the file path; degrees[q][j] becomes degrees.q[j]
    std::string field = e.field();
    if (field.rfind("degrees[", 0) == 0) {
      const auto close = field.find(']');
      field = "degrees." + field.substr(8, close - 8) + field.substr(close + 1);
    }
    throw ValidationError(path + "." + field, what.substr(e.field().size() + 2));
  }
}

json spectrum_json(const GradedSpectrum& s) {
  json deg = json::object();
  for (const auto& [q, pairs] : s.degrees()) {
    json list = json::array();
    for (const auto& p : pairs)
      list.push_back(json::array({complex_json(p.mu_g), complex_json(p.mu_T), p.multiplicity}));
    deg[std::to_string(q)] = list;
  }
  json out = {{"top_degree", s.top_degree()}, {"degrees", deg}};
  if (s.declared_dimensions()) {
    json dims = json::object();
    for (const auto& [q, d] : *s.declared_dimensions()) dims[std::to_string(q)] = d;
    out["dimensions"] = dims;
  }
  return out;
}

// ---- dynamics -----------------------------------------------------------------------------

const std::set<std::string> kFiniteKeys = {"perm", "fiber_maps", "g_phase", "g_power"};

FiberMatrix parse_matrix(const json& v, int rank, const std::string& path) {
  if (!v.is_array()) bad(path, "expected a matrix (list of rows)");
  if (rank == 1 && v.size() == 2 && v[0].is_number()) return {as_complex(v, path)};
  if (v.size() != static_cast<std::size_t>(rank))
    bad(path, "expected " + std::to_string(rank) + " rows");
  FiberMatrix m;
  for (std::size_t r = 0; r < v.size(); ++r) {
    const json& row = v[r];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(rank))
      bad(index_path(path, r), "expected " + std::to_string(rank) + " entries");
    for (std::size_t c = 0; c < row.size(); ++c)
      m.push_back(as_complex(row[c], index_path(index_path(path, r), c)));
  }
  return m;
}

FinitePermutation parse_finite(const json& j, int rank, const std::string& path,
                               const std::set<std::string>& extra_keys = {}) {
  std::set<std::string> allowed = kFiniteKeys;
  allowed.insert(extra_keys.begin(), extra_keys.end());
  check_keys(j, allowed, path);
  FinitePermutation m;
  const json& perm = require(j, "perm", path);
  if (!perm.is_array()) bad(path + ".perm", "expected a list of point images");
  for (std::size_t i = 0; i < perm.size(); ++i)
    m.perm.push_back(static_cast<int>(as_integer(perm[i], index_path(path + ".perm", i))));
  if (auto it = j.find("fiber_maps"); it != j.end()) {
    if (!it->is_array()) bad(path + ".fiber_maps", "expected a list of matrices");
    for (std::size_t i = 0; i < it->size(); ++i)
      m.fiber_maps.push_back(parse_matrix((*it)[i], rank, index_path(path + ".fiber_maps", i)));
  }
  if (auto it = j.find("g_phase"); it != j.end()) m.g_phase = as_complex(*it, path + ".g_phase");
  if (auto it = j.find("g_power"); it != j.end()) m.g_power = as_integer(*it, path + ".g_power");
  return m;
}

void finite_json(const FinitePermutation& m, int rank, json& out) {
  out["perm"] = m.perm;
  if (!m.fiber_maps.empty()) {
    json maps = json::array();
    for (const auto& f : m.fiber_maps) {
      json rows = json::array();
      for (int r = 0; r < rank; ++r) {
        json row = json::array();
        for (int c = 0; c < rank; ++c) row.push_back(complex_json(f[r * rank + c]));
        rows.push_back(row);
      }
      maps.push_back(rows);
    }
    out["fiber_maps"] = maps;
  }
  out["g_phase"] = complex_json(m.g_phase);
  out["g_power"] = m.g_power;
}

template <class Rotation>
Rotation parse_rotation(const json& j, const std::string& path, std::set<std::string> allowed) {
  allowed.insert({"alpha", "gamma"});
  check_keys(j, allowed, path);
  Rotation r;
  r.alpha = as_number(require(j, "alpha", path), path + ".alpha");
  if (auto it = j.find("gamma"); it != j.end()) r.gamma = as_number(*it, path + ".gamma");
  return r;
}

CutoffProfile parse_cutoffs(const json& j, const std::string& path) {
  check_keys(j, {"default", "weights"}, path);
  CutoffProfile c;
  c.default_weight = 0.0;
  if (auto it = j.find("default"); it != j.end()) c.default_weight = as_number(*it, path + ".default");
  if (c.default_weight < 0.0) bad(path + ".default", "weights must be non-negative");
  if (auto it = j.find("weights"); it != j.end()) {
    if (!it->is_object()) bad(path + ".weights", "expected an object keyed by point id");
    for (const auto& [id, w] : it->items()) {
      const double v = as_number(w, path + ".weights." + id);
      if (v < 0.0) bad(path + ".weights." + id, "weights must be non-negative");
      c.weights[id] = v;
    }
  }
  return c;
}

DynamicsBlock parse_dynamics(const json& j, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const json& kind_j = require(j, "kind", path);
  if (!kind_j.is_string()) bad(path + ".kind", "expected a string");
  const std::string kind = kind_j.get<std::string>();
  const std::set<std::string> common = {"kind", "rank", "growth", "chi0", "flags", "cutoffs"};

  Scenario s;
  if (auto it = j.find("rank"); it != j.end()) {
    const long r = as_integer(*it, path + ".rank");
    if (r < 1 || r > 64) bad(path + ".rank", "must be in [1, 64]");
    s.rank = static_cast<int>(r);
  }

  if (kind == "finite_permutation") {
    s.model = parse_finite(j, s.rank, path, common);
  } else if (kind == "circle_rotation") {
    s.model = parse_rotation<CircleRotation>(j, path, common);
  } else if (kind == "sphere_rotation") {
    s.model = parse_rotation<SphereRotation>(j, path, common);
  } else if (kind == "weyl_product") {
    std::set<std::string> allowed = common;
    allowed.insert("components");
    check_keys(j, allowed, path);
    const json& comps = require(j, "components", path);
    if (!comps.is_object()) bad(path + ".components", "expected an object keyed by Weyl label");
    WeylProduct w;
    for (const auto& [label, c] : comps.items())
      w.components[label] = parse_finite(c, s.rank, path + ".components." + label);
    s.model = std::move(w);
  } else if (kind == "discrete_identity_product") {
    std::set<std::string> allowed = common;
    allowed.insert({"base", "window"});
    check_keys(j, allowed, path);
    DiscreteIdentityProduct d;
    if (auto it = j.find("window"); it != j.end()) {
      const long w = as_integer(*it, path + ".window");
      if (w < 0 || w > 1000) bad(path + ".window", "must be in [0, 1000]");
      d.window = static_cast<int>(w);
    }
    const json& base = require(j, "base", path);
    const std::string bpath = path + ".base";
    if (!base.is_object()) bad(bpath, "expected an object");
    const json& bk = require(base, "kind", bpath);
    if (bk == "finite_permutation")
      d.base = parse_finite(base, s.rank, bpath, {"kind"});
    else if (bk == "sphere_rotation")
      d.base = parse_rotation<SphereRotation>(base, bpath, {"kind"});
    else
      bad(bpath + ".kind", "must be finite_permutation or sphere_rotation");
    s.model = std::move(d);
  } else {
    bad(path + ".kind", "unknown scenario kind '" + kind + "'");
  }

  if (auto it = j.find("growth"); it != j.end()) {
    check_keys(*it, {"C", "c"}, path + ".growth");
    s.growth = GrowthBound{as_number(require(*it, "C", path + ".growth"), path + ".growth.C"),
                           as_number(require(*it, "c", path + ".growth"), path + ".growth.c")};
  }
  if (auto it = j.find("chi0"); it != j.end()) s.chi0 = as_complex(*it, path + ".chi0");
  if (auto it = j.find("flags"); it != j.end()) {
    check_keys(*it, {"novikov_shubin_positive", "svarc_milnor"}, path + ".flags");
    if (auto f = it->find("novikov_shubin_positive"); f != it->end())
      s.novikov_shubin_positive = as_bool(*f, path + ".flags.novikov_shubin_positive");
    if (auto f = it->find("svarc_milnor"); f != it->end())
      s.svarc_milnor = as_bool(*f, path + ".flags.svarc_milnor");
  }

  try {
    validate_scenario(s);
  } catch (const ValidationError& e) {
    std::string field = e.field();
    if (field.rfind("model", 0) == 0) field = field.substr(5);
    else field = "." + field;
    const std::string what = e.what();
    throw ValidationError(path + field, what.substr(e.field().size() + 2));
  }

  DynamicsBlock block{s, canonical_cutoffs(s)};
  if (auto it = j.find("cutoffs"); it != j.end()) block.cutoffs = parse_cutoffs(*it, path + ".cutoffs");
  return block;
}

json dynamics_json(const DynamicsBlock& block) {
  const Scenario& s = block.scenario;
  json out;
  out["kind"] = kind_name(kind_of(s));
  out["rank"] = s.rank;
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, FinitePermutation>) {
          finite_json(m, s.rank, out);
        } else if constexpr (std::is_same_v<M, CircleRotation> || std::is_same_v<M, SphereRotation>) {
          out["alpha"] = m.alpha;
          out["gamma"] = m.gamma;
        } else if constexpr (std::is_same_v<M, WeylProduct>) {
          json comps = json::object();
          for (const auto& [label, c] : m.components) {
            json cj;
            finite_json(c, s.rank, cj);
            comps[label] = cj;
          }
          out["components"] = comps;
        } else {
          out["window"] = m.window;
          json base;
          if (const auto* f = std::get_if<FinitePermutation>(&m.base)) {
            base["kind"] = "finite_permutation";
            finite_json(*f, s.rank, base);
          } else {
            const auto& r = std::get<SphereRotation>(m.base);
            base["kind"] = "sphere_rotation";
            base["alpha"] = r.alpha;
            base["gamma"] = r.gamma;
          }
          out["base"] = base;
        }
      },
      s.model);
  if (s.growth) out["growth"] = {{"C", s.growth->C}, {"c", s.growth->c}};
  if (s.chi0) out["chi0"] = complex_json(*s.chi0);
  out["flags"] = {{"novikov_shubin_positive", s.novikov_shubin_positive},
                  {"svarc_milnor", s.svarc_milnor}};
  out["cutoffs"] = {{"default", block.cutoffs.default_weight},
                    {"weights", block.cutoffs.weights}};
  return out;
}

// ---- whole file ---------------------------------------------------------------------------

SweepSpec parse_sweep(const json& j, const std::string& path) {
  check_keys(j, {"start", "stop", "count", "imag_offsets"}, path);
  SweepSpec s;
  s.start = as_number(require(j, "start", path), path + ".start");
  s.stop = as_number(require(j, "stop", path), path + ".stop");
  const long count = as_integer(require(j, "count", path), path + ".count");
  if (count < 0 || count > 100000) bad(path + ".count", "must be in [0, 100000]");
  s.count = static_cast<int>(count);
  if (auto it = j.find("imag_offsets"); it != j.end()) {
    if (!it->is_array()) bad(path + ".imag_offsets", "expected a list of numbers");
    s.imag_offsets.clear();
    for (std::size_t i = 0; i < it->size(); ++i)
      s.imag_offsets.push_back(as_number((*it)[i], index_path(path + ".imag_offsets", i)));
  }
  return s;
}

Tolerances parse_tolerances(const json& j, const std::string& path) {
  check_keys(j, {"fried", "atiyah_bott", "cutoff", "abel", "mellin", "acyclicity"}, path);
  Tolerances t;
  auto read = [&](const char* key, double& dst) {
    if (auto it = j.find(key); it != j.end()) {
      dst = as_number(*it, path + "." + key);
      if (!(dst > 0.0)) bad(path + "." + key, "tolerance must be positive");
    }
  };
  read("fried", t.fried);
  read("atiyah_bott", t.atiyah_bott);
  read("cutoff", t.cutoff);
  read("abel", t.abel);
  read("mellin", t.mellin);
  read("acyclicity", t.acyclicity);
  return t;
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace

std::vector<Complex> SweepSpec::grid() const {
  std::vector<Complex> out;
  for (int i = 0; i < count; ++i) {
    const double re = count == 1 ? start : start + (stop - start) * i / (count - 1);
    for (double im : imag_offsets) out.emplace_back(re, im);
  }
  return out;
}

ScenarioFile parse_scenario_text(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ":" + line_column(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": malformed JSON (" + e.what() + ")");
  }
  const std::string root = "scenario";
  check_keys(j, {"name", "spectrum", "dynamics", "sweep", "truncation_N", "tolerances"}, root);
  ScenarioFile f;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) bad(root + ".name", "expected a string");
    f.name = it->get<std::string>();
  }
  if (auto it = j.find("tolerances"); it != j.end()) f.tolerances = parse_tolerances(*it, "tolerances");
  if (auto it = j.find("spectrum"); it != j.end()) {
    f.spectrum = parse_spectrum(*it, "spectrum");
    (void)validate_spectrum(*f.spectrum, f.tolerances.acyclicity);
  }
  if (auto it = j.find("dynamics"); it != j.end()) f.dynamics = parse_dynamics(*it, "dynamics");
  if (!f.spectrum && !f.dynamics)
    bad("spectrum/dynamics", "a scenario needs a spectrum block, a dynamics block, or both");
  if (auto it = j.find("sweep"); it != j.end()) f.sweep = parse_sweep(*it, "sweep");
  if (auto it = j.find("truncation_N"); it != j.end()) {
    f.truncation_N = as_integer(*it, "truncation_N");
    if (f.truncation_N < 1 || f.truncation_N > 1'000'000)
      bad("truncation_N", "must be in [1, 1e6]");
  }
  return f;
}

ScenarioFile parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open scenario file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path.string());
}

std::string serialize_scenario(const ScenarioFile& f) {
  json j;
  j["name"] = f.name;
  if (f.spectrum) j["spectrum"] = spectrum_json(*f.spectrum);
  if (f.dynamics) j["dynamics"] = dynamics_json(*f.dynamics);
  if (f.sweep)
    j["sweep"] = {{"start", f.sweep->start},
                  {"stop", f.sweep->stop},
                  {"count", f.sweep->count},
                  {"imag_offsets", f.sweep->imag_offsets}};
  j["truncation_N"] = f.truncation_N;
  j["tolerances"] = {{"fried", f.tolerances.fried},
                     {"atiyah_bott", f.tolerances.atiyah_bott},
                     {"cutoff", f.tolerances.cutoff},
                     {"abel", f.tolerances.abel},
                     {"mellin", f.tolerances.mellin},
                     {"acyclicity", f.tolerances.acyclicity}};
  return j.dump(2) + "\n";
}

}  // namespace friedlab
