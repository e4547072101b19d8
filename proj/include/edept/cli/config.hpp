#pragma once

// Run configuration: a versioned JSON document. Every section and key is
// optional (defaults below); unknown keys, wrong types and out-of-range
// values raise ConfigError naming the dotted key path.

#include <array>
#include <cmath>
#include <type_traits>
#include <utility>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "edept/asymptotics/scan.hpp"
#include "edept/constants.hpp"
#include "edept/errors.hpp"
#include "edept/field/params.hpp"

namespace edept::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct FieldsConfig {
  double rho_max = 5.0;  // units of the length scale
  double z_max = 5.0;
  std::size_t n_rho = 21;
  std::size_t n_z = 41;
  friend bool operator==(const FieldsConfig&, const FieldsConfig&) = default;
};

struct QuadratureConfig {
  std::size_t n_rho = 401;
  std::size_t n_z = 801;
  friend bool operator==(const QuadratureConfig&, const QuadratureConfig&) = default;
};

struct SpectrumConfig {
  double transform_step = 0.05;  // units of the length scale
  double transform_extent = 50.0;
  double dk = 0.1;  // units of 1 / length scale
  double k_max = 25.0;
  std::array<double, 3> seam_axis = {0.0, 0.0, 1.0};
  double round_trip_time = 2.0;  // absolute t1 of the evolved round trip
  std::size_t cloud_points = 1000;
  double cloud_half_width = 4.0;
  bool check_convergence = true;
  friend bool operator==(const SpectrumConfig&, const SpectrumConfig&) = default;
};

struct DirectionConfig {
  std::string name;
  double theta = 0.0;
  bool report_only = false;
  friend bool operator==(const DirectionConfig&, const DirectionConfig&) = default;
};

struct FalloffConfig {
  std::vector<int> alphas = {1, 2, 3, 4};
  std::vector<double> times = {0.0, 1.0};
  std::array<double, 2> window = {50.0, 500.0};
  std::array<double, 2> check_window = {100.0, 1000.0};
  std::size_t samples = 41;
  double r2_floor = 0.99;
  std::vector<DirectionConfig> directions = [] {
    std::vector<DirectionConfig> d;
    for (const auto& x : asymptotics::default_directions()) d.push_back({x.name, x.theta, x.report_only});
    return d;
  }();
  friend bool operator==(const FalloffConfig&, const FalloffConfig&) = default;
};

struct EnergyConfig {
  std::vector<double> times = {0.0, 1.0, 2.0};
  bool spectral = true;
  friend bool operator==(const EnergyConfig&, const EnergyConfig&) = default;
};

struct ValidationConfig {
  std::vector<int> alphas = {1, 2, 3, 4};  // Maxwell residual sweep
  std::size_t maxwell_points = 1000;
  double r_min = 1e-2;
  double r_max = 1e3;
  double t_span = 10.0;
  friend bool operator==(const ValidationConfig&, const ValidationConfig&) = default;
};

struct Tolerances {
  double maxwell = 1e-8;
  double transversality = 1e-6;
  double relation = 1e-4;
  double round_trip = 1e-3;
  double positive_frequency = 1e-3;
  double amplitude_floor = 1e-8;
  double norm_convergence = 5e-3;
  double parseval = 1e-2;
  double conservation = 5e-3;
  double potential_exponent = 0.15;
  double rate_exponent = 0.3;
  double linearity = 0.3;
  double window_stability = 0.1;
  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

struct OutputConfig {
  std::string directory = "edept_out";
  friend bool operator==(const OutputConfig&, const OutputConfig&) = default;
};

struct RunConfig {
  int schema_version = kSchemaVersion;
  field::EdeptParams params = field::EdeptParams::make(1);
  /// "default" follows the parity rule and tracks alpha overrides.
  std::string branch = "default";
  double time = 0.0;
  std::array<double, 3> units = {1.0, 1.0, 1.0};  // c, eps0, hbar
  unsigned threads = 0;
  unsigned seed = 12345;
  FieldsConfig fields;
  QuadratureConfig quadrature;
  SpectrumConfig spectrum;
  FalloffConfig falloff;
  EnergyConfig energy;
  ValidationConfig validation;
  Tolerances tolerances;
  OutputConfig output;

  PhysicalConstants constants() const { return {units[0], units[1], units[2]}; }

  /// params with the branch resolved.
  field::EdeptParams resolved_params() const {
    field::EdeptParams p = params;
    p.branch = field::branch_from_string(branch, p.alpha);
    return p;
  }

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

namespace detail {

/// Walks one JSON object, remembering the dotted path for diagnostics and
/// rejecting keys that were never asked for.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  std::string key(const std::string& k) const { return path_.empty() ? k : path_ + "." + k; }

  template <class T>
  void get(const std::string& k, T& out) {
    known_.push_back(k);
    if (!j_.contains(k)) return;
    out = convert<T>(j_.at(k), key(k));
  }

  template <class F>
  void section(const std::string& k, F&& body) {
    known_.push_back(k);
    if (!j_.contains(k)) return;
    Section s(j_.at(k), key(k));
    body(s);
    s.finish();
  }

  const json* raw(const std::string& k) {
    known_.push_back(k);
    return j_.contains(k) ? &j_.at(k) : nullptr;
  }

  void finish() const {
    for (const auto& [k, v] : j_.items()) {
      bool ok = false;
      for (const auto& n : known_) ok = ok || n == k;
      if (!ok) throw ConfigError(key(k), "unknown key");
    }
  }

  template <class T>
  static T convert(const json& v, const std::string& where) {
    try {
      if constexpr (std::is_same_v<T, bool>) {
        if (!v.is_boolean()) throw ConfigError(where, "expected true or false");
        return v.get<bool>();
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!v.is_string()) throw ConfigError(where, "expected a string");
        return v.get<std::string>();
      } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) throw ConfigError(where, "expected an integer");
        if constexpr (std::is_unsigned_v<T>)
          if (v.get<long long>() < 0) throw ConfigError(where, "expected a nonnegative integer");
        return v.get<T>();
      } else if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) throw ConfigError(where, "expected a number");
        return v.get<T>();
      } else {
        // std::vector / std::array of the above
        if (!v.is_array()) throw ConfigError(where, "expected an array");
        T out{};
        if constexpr (requires { out.resize(0); }) {
          out.resize(v.size());
        } else if (v.size() != out.size()) {
          throw ConfigError(where, "expected " + std::to_string(out.size()) + " elements");
        }
        for (std::size_t i = 0; i < v.size(); ++i)
          out[i] = convert<typename T::value_type>(v[i], where + "[" + std::to_string(i) + "]");
        return out;
      }
    } catch (const json::exception& e) {
      throw ConfigError(where, e.what());
    }
  }

 private:
  const json& j_;
  std::string path_;
  std::vector<std::string> known_;
};

inline void require(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw ConfigError(key, what);
}

}  // namespace detail

inline void validate(const RunConfig& c) {
  using detail::require;
  require(c.schema_version == kSchemaVersion, "schema_version",
          "unsupported version " + std::to_string(c.schema_version) + " (expected " +
              std::to_string(kSchemaVersion) + ")");
  try {
    c.params.validate();
    (void)c.resolved_params();
    (void)c.constants();
  } catch (const InvalidArgument& e) {
    throw ConfigError("params", e.what());
  }
  require(std::isfinite(c.time), "time", "must be finite");
  require(c.fields.rho_max > 0.0 && c.fields.z_max > 0.0, "fields", "rho_max and z_max must be positive");
  require(c.fields.n_rho >= 2 && c.fields.n_z >= 2, "fields", "n_rho and n_z must be >= 2");
  require(c.quadrature.n_rho >= 8 && c.quadrature.n_z >= 9, "quadrature", "grid too small");
  const auto& s = c.spectrum;
  require(s.transform_step > 0.0 && s.transform_extent >= 4.0 * s.transform_step, "spectrum.transform_step",
          "need 0 < step and extent >= 4 steps");
  require(s.dk > 0.0 && s.k_max > s.dk, "spectrum.dk", "need 0 < dk < k_max");
  require(s.cloud_points > 0 && s.cloud_half_width > 0.0, "spectrum.cloud_points", "cloud must be nonempty");
  require(s.seam_axis[0] != 0.0 || s.seam_axis[1] != 0.0 || s.seam_axis[2] != 0.0, "spectrum.seam_axis",
          "must be nonzero");
  const auto& f = c.falloff;
  require(!f.alphas.empty(), "falloff.alphas", "must not be empty");
  for (int a : f.alphas) require(a >= 1, "falloff.alphas", "every alpha must be >= 1");
  require(!f.times.empty(), "falloff.times", "must not be empty");
  require(f.window[0] > 0.0 && f.window[1] > f.window[0], "falloff.window", "need 0 < r_min < r_max");
  require(f.check_window[0] > 0.0 && f.check_window[1] > f.check_window[0], "falloff.check_window",
          "need 0 < r_min < r_max");
  require(f.samples >= asymptotics::kMinFitSamples, "falloff.samples", "need at least 8 samples");
  require(f.r2_floor >= 0.0 && f.r2_floor <= 1.0, "falloff.r2_floor", "must lie in [0, 1]");
  require(!f.directions.empty(), "falloff.directions", "must not be empty");
  require(!c.energy.times.empty(), "energy.times", "must not be empty");
  require(!c.validation.alphas.empty(), "validation.alphas", "must not be empty");
  for (int a : c.validation.alphas) require(a >= 1, "validation.alphas", "every alpha must be >= 1");
  require(c.validation.maxwell_points > 0, "validation.maxwell_points", "must be positive");
  require(c.validation.r_min > 0.0 && c.validation.r_max > c.validation.r_min, "validation.r_min",
          "need 0 < r_min < r_max");
  const auto& t = c.tolerances;
  for (double x : {t.maxwell, t.transversality, t.relation, t.round_trip, t.positive_frequency, t.amplitude_floor,
                   t.norm_convergence, t.parseval, t.conservation, t.potential_exponent, t.rate_exponent,
                   t.linearity, t.window_stability})
    require(x > 0.0, "tolerances", "every tolerance must be > 0");
  require(!c.output.directory.empty(), "output.directory", "must not be empty");
}

inline RunConfig parse_config(const json& j) {
  RunConfig c;
  detail::Section root(j, "");
  root.get("schema_version", c.schema_version);
  if (!j.contains("schema_version")) throw ConfigError("schema_version", "missing");
  detail::require(c.schema_version == kSchemaVersion, "schema_version",
                  "unsupported version " + std::to_string(c.schema_version));
  root.section("params", [&](detail::Section& s) {
    s.get("alpha", c.params.alpha);
    s.get("g0", c.params.g0);
    s.get("g1", c.params.g1);
    s.get("g2", c.params.g2);
    s.get("branch", c.branch);
  });
  root.get("time", c.time);
  root.section("units", [&](detail::Section& s) {
    s.get("c", c.units[0]);
    s.get("epsilon0", c.units[1]);
    s.get("hbar", c.units[2]);
  });
  root.get("threads", c.threads);
  root.get("seed", c.seed);
  root.section("fields", [&](detail::Section& s) {
    s.get("rho_max", c.fields.rho_max);
    s.get("z_max", c.fields.z_max);
    s.get("n_rho", c.fields.n_rho);
    s.get("n_z", c.fields.n_z);
  });
  root.section("quadrature", [&](detail::Section& s) {
    s.get("n_rho", c.quadrature.n_rho);
    s.get("n_z", c.quadrature.n_z);
  });
  root.section("spectrum", [&](detail::Section& s) {
    s.get("transform_step", c.spectrum.transform_step);
    s.get("transform_extent", c.spectrum.transform_extent);
    s.get("dk", c.spectrum.dk);
    s.get("k_max", c.spectrum.k_max);
    s.get("seam_axis", c.spectrum.seam_axis);
    s.get("round_trip_time", c.spectrum.round_trip_time);
    s.get("cloud_points", c.spectrum.cloud_points);
    s.get("cloud_half_width", c.spectrum.cloud_half_width);
    s.get("check_convergence", c.spectrum.check_convergence);
  });
  root.section("falloff", [&](detail::Section& s) {
    s.get("alphas", c.falloff.alphas);
    s.get("times", c.falloff.times);
    s.get("window", c.falloff.window);
    s.get("check_window", c.falloff.check_window);
    s.get("samples", c.falloff.samples);
    s.get("r2_floor", c.falloff.r2_floor);
    if (const json* d = s.raw("directions")) {
      const std::string where = s.key("directions");
      if (!d->is_array()) throw ConfigError(where, "expected an array");
      c.falloff.directions.clear();
      for (std::size_t i = 0; i < d->size(); ++i) {
        DirectionConfig dc;
        detail::Section e((*d)[i], where + "[" + std::to_string(i) + "]");
        e.get("name", dc.name);
        e.get("theta", dc.theta);
        e.get("report_only", dc.report_only);
        e.finish();
        if (dc.name.empty()) throw ConfigError(e.key("name"), "missing");
        c.falloff.directions.push_back(dc);
      }
    }
  });
  root.section("energy", [&](detail::Section& s) {
    s.get("times", c.energy.times);
    s.get("spectral", c.energy.spectral);
  });
  root.section("validation", [&](detail::Section& s) {
    s.get("alphas", c.validation.alphas);
    s.get("maxwell_points", c.validation.maxwell_points);
    s.get("r_min", c.validation.r_min);
    s.get("r_max", c.validation.r_max);
    s.get("t_span", c.validation.t_span);
  });
  root.section("tolerances", [&](detail::Section& s) {
    auto& t = c.tolerances;
    s.get("maxwell", t.maxwell);
    s.get("transversality", t.transversality);
    s.get("relation", t.relation);
    s.get("round_trip", t.round_trip);
    s.get("positive_frequency", t.positive_frequency);
    s.get("amplitude_floor", t.amplitude_floor);
    s.get("norm_convergence", t.norm_convergence);
    s.get("parseval", t.parseval);
    s.get("conservation", t.conservation);
    s.get("potential_exponent", t.potential_exponent);
    s.get("rate_exponent", t.rate_exponent);
    s.get("linearity", t.linearity);
    s.get("window_stability", t.window_stability);
  });
  root.section("output", [&](detail::Section& s) {
    s.get("directory", c.output.directory);
  });
  root.finish();
  validate(c);
  return c;
}

inline json to_json(const RunConfig& c) {
  json dirs = json::array();
  for (const auto& d : c.falloff.directions)
    dirs.push_back({{"name", d.name}, {"theta", d.theta}, {"report_only", d.report_only}});
  const auto& t = c.tolerances;
  return {
      {"schema_version", c.schema_version},
      {"params",
       {{"alpha", c.params.alpha}, {"g0", c.params.g0}, {"g1", c.params.g1}, {"g2", c.params.g2}, {"branch", c.branch}}},
      {"time", c.time},
      {"units", {{"c", c.units[0]}, {"epsilon0", c.units[1]}, {"hbar", c.units[2]}}},
      {"threads", c.threads},
      {"seed", c.seed},
      {"fields",
       {{"rho_max", c.fields.rho_max}, {"z_max", c.fields.z_max}, {"n_rho", c.fields.n_rho}, {"n_z", c.fields.n_z}}},
      {"quadrature", {{"n_rho", c.quadrature.n_rho}, {"n_z", c.quadrature.n_z}}},
      {"spectrum",
       {{"transform_step", c.spectrum.transform_step},
        {"transform_extent", c.spectrum.transform_extent},
        {"dk", c.spectrum.dk},
        {"k_max", c.spectrum.k_max},
        {"seam_axis", c.spectrum.seam_axis},
        {"round_trip_time", c.spectrum.round_trip_time},
        {"cloud_points", c.spectrum.cloud_points},
        {"cloud_half_width", c.spectrum.cloud_half_width},
        {"check_convergence", c.spectrum.check_convergence}}},
      {"falloff",
       {{"alphas", c.falloff.alphas},
        {"times", c.falloff.times},
        {"window", c.falloff.window},
        {"check_window", c.falloff.check_window},
        {"samples", c.falloff.samples},
        {"r2_floor", c.falloff.r2_floor},
        {"directions", dirs}}},
      {"energy", {{"times", c.energy.times}, {"spectral", c.energy.spectral}}},
      {"validation",
       {{"alphas", c.validation.alphas},
        {"maxwell_points", c.validation.maxwell_points},
        {"r_min", c.validation.r_min},
        {"r_max", c.validation.r_max},
        {"t_span", c.validation.t_span}}},
      {"tolerances",
       {{"maxwell", t.maxwell},
        {"transversality", t.transversality},
        {"relation", t.relation},
        {"round_trip", t.round_trip},
        {"positive_frequency", t.positive_frequency},
        {"amplitude_floor", t.amplitude_floor},
        {"norm_convergence", t.norm_convergence},
        {"parseval", t.parseval},
        {"conservation", t.conservation},
        {"potential_exponent", t.potential_exponent},
        {"rate_exponent", t.rate_exponent},
        {"linearity", t.linearity},
        {"window_stability", t.window_stability}}},
      {"output", {{"directory", c.output.directory}}},
  };
}

inline RunConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(j);
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("", "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace edept::cli
