// latvdw: force curves, emission spectra, velocity tables and a
// self-validation report for the excited-atom / ground-atom pair.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <latvdw/cli/commands.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation_failed = 1;
constexpr int exit_usage = 2;

struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> output;
  std::optional<std::string> format;
  std::optional<double> r_min;
  std::optional<double> r_max;
  std::optional<int> points;
  bool log_scale = false;
  std::optional<int> phi_points;
  std::optional<double> r;
  std::optional<double> delta_t;
  std::optional<double> p1;
  std::optional<std::string> handedness;
  bool no_timestamp = false;
  std::optional<double> perturb_f3;
};

latvdw::cli::RunConfig build_config(const Flags& f) {
  using namespace latvdw::cli;
  RunConfig cfg;
  if (f.config) load_config_file(cfg, *f.config);
  if (f.output) cfg.output = *f.output;
  if (f.format) cfg.format = parse_format(*f.format);
  if (f.r_min) cfg.r_min = *f.r_min;
  if (f.r_max) cfg.r_max = *f.r_max;
  if (f.points) cfg.points = *f.points;
  if (f.log_scale) cfg.log_scale = true;
  if (f.phi_points) cfg.phi_points = *f.phi_points;
  if (f.r) cfg.r = *f.r;
  if (f.delta_t) cfg.delta_t = *f.delta_t;
  if (f.p1) cfg.p1 = *f.p1;
  if (f.handedness) cfg.handedness = parse_handedness(*f.handedness);
  if (f.no_timestamp) cfg.timestamp = false;
  if (f.perturb_f3) cfg.perturb_f3 = *f.perturb_f3;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lateral van der Waals forces and recoil spectra of an excited circular-dipole atom"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", latvdw::cli::version);

  Flags f;
  app.add_option("--config", f.config, "Flat key = value config file");
  app.add_option("--output", f.output, "Output file (default: stdout)");
  app.add_option("--format", f.format, "csv or json");
  app.add_option("--r-min", f.r_min, "Smallest separation, m");
  app.add_option("--r-max", f.r_max, "Largest separation, m");
  app.add_option("--points", f.points, "Number of separations");
  app.add_flag("--log-scale", f.log_scale, "Logarithmic separation grid");
  app.add_option("--phi-points", f.phi_points, "Number of emission angles");
  app.add_option("--r", f.r, "Separation for the emission spectrum, m");
  app.add_option("--delta-t", f.delta_t, "Driving duration, s");
  app.add_option("--p1", f.p1, "Steady-state excited population");
  app.add_option("--handedness", f.handedness, "left or right");
  app.add_flag("--no-timestamp", f.no_timestamp, "Omit the generation time from metadata");
  app.add_option("--perturb-f3", f.perturb_f3, "Scale f3 by (1 + value) in validate")->group("");

  auto* force = app.add_subcommand("force-curve", "Resonant forces on both atoms versus separation");
  auto* spectrum = app.add_subcommand("emission-spectrum", "Angle-resolved recoil rate at one separation");
  auto* velocity = app.add_subcommand("velocity", "Lateral velocity gained under steady driving");
  auto* validate = app.add_subcommand("validate", "Cross-check closed forms against quadrature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    const auto cfg = build_config(f);
    using namespace latvdw::cli;
    if (*validate) {
      const auto report = cmd_validate(cfg);
      write_atomically(cfg.output, render(report.table, cfg.format));
      return report.passed ? exit_ok : exit_validation_failed;
    }
    Table table;
    if (*force) table = cmd_force_curve(cfg);
    else if (*spectrum) table = cmd_emission_spectrum(cfg);
    else if (*velocity) table = cmd_velocity(cfg);
    write_atomically(cfg.output, render(table, cfg.format));
    return exit_ok;
  } catch (const latvdw::cli::ConfigError& e) {
    std::cerr << "latvdw: " << e.what() << '\n';
    return exit_usage;
  } catch (const latvdw::cli::OutputError& e) {
    std::cerr << "latvdw: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "latvdw: error: " << e.what() << '\n';
    return exit_validation_failed;
  }
}
