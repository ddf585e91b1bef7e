#pragma once

// Run configuration for the command-line front end.
//
// Config file grammar, one entry per line:
//   key = value      (whitespace around key and value is ignored)
//   # comment        (full-line; blank lines are skipped)
// Keys are the RunConfig field names below. Unknown keys and malformed
// values are errors. Command-line flags are applied after the file.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "../constants.hpp"
#include "../quadrature.hpp"
#include "../system.hpp"

namespace latvdw::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct RunConfig {
  // Atoms.
  double dipole = CaesiumRubidium::dipole;                    // C m
  double wavelength = CaesiumRubidium::wavelength;            // m
  double alpha_b_angstrom3 = CaesiumRubidium::alpha_b_angstrom3;
  double mass_a_u = constants::caesium_mass_u;
  double mass_b_u = constants::rubidium_mass_u;
  Handedness handedness = Handedness::right;

  // Separation sweep.
  double r_min = 50e-9;   // m
  double r_max = 2e-6;    // m
  int points = 400;
  bool log_scale = false;

  // Emission spectrum.
  double r = 632e-9;      // m
  int phi_points = 360;

  // Drive.
  double p1 = 1e-2;
  double delta_t = 10e-3;  // s

  // Output.
  std::string output;  // empty: stdout
  Format format = Format::csv;
  bool timestamp = true;

  // Oracle quadrature used by validate.
  quadrature::QuadratureConfig quadrature{1e-11, 0.0, 4000, 40.0, 1 << 16};

  // Scales f3 by (1 + perturb_f3) inside validate; a sensitivity hook.
  double perturb_f3 = 0.0;

  TwoAtomSystem system(double separation) const {
    TwoAtomSystem s = caesium_rubidium(separation, handedness);
    s.omega_a = angular_frequency_from_wavelength(wavelength);
    s.dipole = dipole;
    s.alpha_b = 4.0 * constants::pi * constants::epsilon0 * alpha_b_angstrom3 * constants::angstrom *
                constants::angstrom * constants::angstrom;
    s.mass_a = mass_a_u * constants::atomic_mass_unit;
    s.mass_b = mass_b_u * constants::atomic_mass_unit;
    return s;
  }

  void validate() const {
    auto positive = [](double v, const char* name) {
      if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(name) + " must be > 0");
    };
    positive(dipole, "dipole");
    positive(wavelength, "wavelength");
    positive(mass_a_u, "mass_a_u");
    positive(mass_b_u, "mass_b_u");
    positive(r_min, "r_min");
    positive(r, "r");
    if (!std::isfinite(alpha_b_angstrom3)) throw ConfigError("alpha_b_angstrom3 must be finite");
    if (points < 1) throw ConfigError("points must be >= 1");
    if (points > 1 && !(r_max > r_min)) throw ConfigError("r_max must exceed r_min when points > 1");
    if (phi_points < 8) throw ConfigError("phi_points must be >= 8");
    if (!(p1 >= 0.0 && p1 <= 1.0)) throw ConfigError("p1 must lie in [0, 1]");
    if (!(delta_t >= 0.0) || !std::isfinite(delta_t)) throw ConfigError("delta_t must be >= 0");
    try {
      quadrature.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }

  /// Separations of the sweep, linear or logarithmic, endpoints included.
  std::vector<double> separations() const {
    std::vector<double> out;
    out.reserve(points);
    if (points == 1) return {r_min};
    for (int i = 0; i < points; ++i) {
      const double t = static_cast<double>(i) / (points - 1);
      out.push_back(log_scale ? r_min * std::pow(r_max / r_min, t) : r_min + t * (r_max - r_min));
    }
    out.back() = r_max;
    return out;
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

inline double parse_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError("invalid number for " + key + ": '" + v + "'");
  return out;
}

inline int parse_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError("invalid integer for " + key + ": '" + v + "'");
  return out;
}

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("invalid boolean for " + key + ": '" + v + "'");
}

}  // namespace detail

inline Handedness parse_handedness(const std::string& v) {
  if (v == "right") return Handedness::right;
  if (v == "left") return Handedness::left;
  throw ConfigError("handedness must be 'left' or 'right', got '" + v + "'");
}

inline Format parse_format(const std::string& v) {
  if (v == "csv") return Format::csv;
  if (v == "json") return Format::json;
  throw ConfigError("format must be 'csv' or 'json', got '" + v + "'");
}

/// Parses `key = value` lines into a map; later duplicates win.
inline std::map<std::string, std::string> parse_key_values(std::istream& in) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = detail::trim(std::string_view(t).substr(0, eq));
    std::string value = detail::trim(std::string_view(t).substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    out[std::move(key)] = std::move(value);
  }
  return out;
}

/// Applies parsed entries to cfg; throws ConfigError on unknown keys.
inline void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
  using detail::parse_bool;
  using detail::parse_double;
  using detail::parse_int;
  for (const auto& [k, v] : kv) {
    if (k == "dipole") cfg.dipole = parse_double(k, v);
    else if (k == "wavelength") cfg.wavelength = parse_double(k, v);
    else if (k == "alpha_b_angstrom3") cfg.alpha_b_angstrom3 = parse_double(k, v);
    else if (k == "mass_a_u") cfg.mass_a_u = parse_double(k, v);
    else if (k == "mass_b_u") cfg.mass_b_u = parse_double(k, v);
    else if (k == "handedness") cfg.handedness = parse_handedness(v);
    else if (k == "r_min") cfg.r_min = parse_double(k, v);
    else if (k == "r_max") cfg.r_max = parse_double(k, v);
    else if (k == "points") cfg.points = parse_int(k, v);
    else if (k == "log_scale") cfg.log_scale = parse_bool(k, v);
    else if (k == "r") cfg.r = parse_double(k, v);
    else if (k == "phi_points") cfg.phi_points = parse_int(k, v);
    else if (k == "p1") cfg.p1 = parse_double(k, v);
    else if (k == "rabi_ratio") {
      const double ratio = parse_double(k, v);
      cfg.p1 = ratio * ratio / 4.0;
    }
    else if (k == "delta_t") cfg.delta_t = parse_double(k, v);
    else if (k == "output") cfg.output = v;
    else if (k == "format") cfg.format = parse_format(v);
    else if (k == "timestamp") cfg.timestamp = parse_bool(k, v);
    else if (k == "rel_tol") cfg.quadrature.rel_tol = parse_double(k, v);
    else if (k == "abs_tol") cfg.quadrature.abs_tol = parse_double(k, v);
    else if (k == "max_subdivisions") cfg.quadrature.max_subdivisions = parse_int(k, v);
    else if (k == "tail_cutoff_decades") cfg.quadrature.tail_cutoff_decades = parse_double(k, v);
    else throw ConfigError("unknown config key '" + k + "'");
  }
}

inline void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  apply_key_values(cfg, parse_key_values(in));
}

}  // namespace latvdw::cli
