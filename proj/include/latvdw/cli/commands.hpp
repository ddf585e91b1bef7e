#pragma once

// The four CLI verbs, each turning a RunConfig into a Table.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <string>
#include <vector>

#include "../dynamics.hpp"
#include "../emission.hpp"
#include "../forces.hpp"
#include "../greens.hpp"
#include "../quadrature.hpp"
#include "config.hpp"
#include "table.hpp"

namespace latvdw::cli {

inline constexpr const char* version = "0.1.0";

namespace detail {

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline void common_meta(Table& t, const RunConfig& cfg, const std::string& command) {
  t.meta.emplace_back("command", command);
  t.meta.emplace_back("version", std::string(version));
  if (cfg.timestamp) t.meta.emplace_back("generated", utc_timestamp());
  t.meta.emplace_back("dipole_Cm", cfg.dipole);
  t.meta.emplace_back("wavelength_m", cfg.wavelength);
  t.meta.emplace_back("alpha_b_angstrom3", cfg.alpha_b_angstrom3);
  t.meta.emplace_back("mass_a_u", cfg.mass_a_u);
  t.meta.emplace_back("mass_b_u", cfg.mass_b_u);
  t.meta.emplace_back("handedness", std::string(cfg.handedness == Handedness::right ? "right" : "left"));
}

}  // namespace detail

/// Columns r, xi, F_x, F_z_A, F_z_B, shape_factor (SI units, p1 = 1).
inline Table cmd_force_curve(const RunConfig& cfg) {
  cfg.validate();
  Table t;
  t.columns = {"r_m", "xi", "F_x_N", "F_z_A_N", "F_z_B_N", "shape_factor"};
  detail::common_meta(t, cfg, "force-curve");
  t.meta.emplace_back("population", 1.0);
  for (double r : cfg.separations()) {
    const TwoAtomSystem sys = cfg.system(r);
    const auto fa = forces::resonant_force_on_a(sys, 1.0);
    const auto fb = forces::resonant_force_on_b(sys, 1.0);
    t.add_row({r, sys.xi(), fa.force.x(), fa.force.z(), fb.force.z(), fa.shape_factor()});
  }
  return t;
}

/// Columns phi, R, R_normalized at separation cfg.r; f1, f2, f3 in the metadata.
inline Table cmd_emission_spectrum(const RunConfig& cfg) {
  cfg.validate();
  const TwoAtomSystem sys = cfg.system(cfg.r);
  const auto spec = emission::emission_spectrum(sys, cfg.phi_points);
  const double norm = spec.normalization();
  Table t;
  t.columns = {"phi_rad", "R_N_per_rad", "R_normalized"};
  detail::common_meta(t, cfg, "emission-spectrum");
  t.meta.emplace_back("r_m", spec.r);
  t.meta.emplace_back("xi", spec.xi);
  t.meta.emplace_back("prefactor_N_per_rad", spec.prefactor);
  t.meta.emplace_back("f1", spec.coefficients.f1);
  t.meta.emplace_back("f2", spec.coefficients.f2);
  t.meta.emplace_back("f3", spec.coefficients.f3);
  t.meta.emplace_back("normalization", std::string("max R = 1"));
  for (const auto& s : spec.samples)
    t.add_row({s.phi, s.recoil_rate, norm > 0.0 ? s.recoil_rate / norm : 0.0});
  return t;
}

/// Columns r, F_x (p1 = 1), v after delta_t at steady-state population p1.
inline Table cmd_velocity(const RunConfig& cfg) {
  cfg.validate();
  Table t;
  t.columns = {"r_m", "F_x_N", "v_m_per_s"};
  detail::common_meta(t, cfg, "velocity");
  t.meta.emplace_back("p1", cfg.p1);
  t.meta.emplace_back("delta_t_s", cfg.delta_t);
  for (double r : cfg.separations()) {
    const TwoAtomSystem sys = cfg.system(r);
    const double fx = forces::resonant_force_on_a(sys, 1.0).force.x();
    t.add_row({r, fx, dynamics::lateral_velocity(sys, cfg.p1, cfg.delta_t)});
  }
  return t;
}

struct ValidationReport {
  Table table;
  bool passed = true;
};

/// Runs the cross-validation identities; each row carries the achieved
/// error, its tolerance and a pass flag.
inline ValidationReport cmd_validate(const RunConfig& cfg) {
  cfg.validate();
  ValidationReport rep;
  Table& t = rep.table;
  t.columns = {"identity", "parameter", "error", "tolerance", "pass"};
  detail::common_meta(t, cfg, "validate");
  t.meta.emplace_back("perturb_f3", cfg.perturb_f3);
  t.meta.emplace_back("quadrature_rel_tol", cfg.quadrature.rel_tol);

  auto record = [&](const std::string& name, const std::string& param, double err, double tol) {
    const bool ok = std::isfinite(err) && err <= tol;
    rep.passed = rep.passed && ok;
    t.add_row({name, param, err, tol, ok});
  };
  auto perturbed = [&](double xi) {
    auto f = emission::spectrum_coefficients(xi);
    f.f3 *= 1.0 + cfg.perturb_f3;
    return f;
  };
  const double wavelength = cfg.wavelength;
  auto at_xi = [&](double xi) { return cfg.system(xi * wavelength / (2.0 * constants::pi)); };

  // Lateral force from the Green's gradient against the recoil integral of
  // the closed-form spectrum, and against the full momentum quadrature.
  for (double xi : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const TwoAtomSystem sys = at_xi(xi);
    const double fx = forces::resonant_force_on_a(sys, 1.0).force.x();
    const auto coeffs = perturbed(xi);
    const double pref = emission::recoil_prefactor(sys);
    const int h = *circular_handedness_sign(sys.polarization);
    auto moment = [&](double phi) { return emission::recoil_rate(pref, coeffs, h, phi) * std::cos(phi); };
    const double recoil = -quadrature::integrate_angle(moment, {1e-13, 0.0, 1, 1.0, 1 << 12}).value;
    record("recoil_force_closed_form", "xi=" + format_double(xi), std::abs(recoil - fx) / std::abs(fx), 1e-8);
    const double quad = emission::lateral_recoil_force_quadrature(sys, 1.0, cfg.quadrature);
    record("recoil_force_quadrature", "xi=" + format_double(xi), std::abs(quad - fx) / std::abs(fx), 1e-8);
  }

  // Lateral bracket against -f3 / 8.
  {
    double worst = 0.0;
    for (int i = 1; i <= 500; ++i) {
      const double xi = 0.1 * i;
      const double b = forces::lateral_bracket(xi);
      worst = std::max(worst, std::abs(b + perturbed(xi).f3 / 8.0) / std::abs(b));
    }
    record("bracket_identity", "xi=0.1..50", worst, 1e-12);
  }

  // Angular-spectrum reconstruction of G.
  for (double xi : {0.5, 2.0, 8.0}) {
    for (const Vec3& dir : {Vec3(0.0, 0.0, 1.0), Vec3(0.3, -0.2, 0.8)}) {
      const Vec3 sep = xi * dir;
      const ComplexMat3 g = greens::scaled::greens(sep);
      const ComplexMat3 q = greens::scaled::cylindrical_quadrature(sep, cfg.quadrature).value;
      const double floor = 1e-9 * max_abs(g);
      double worst = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          worst = std::max(worst, std::abs(q(i, j) - g(i, j)) / std::max(std::abs(g(i, j)), floor));
      record("cylindrical_decomposition", "xi=" + format_double(xi) + (dir.x() == 0.0 ? " on-axis" : " off-axis"),
             worst, 1e-6);
    }
  }

  // Near-field expansion at xi = 1e-3.
  {
    const TwoAtomSystem sys = at_xi(1e-3);
    double worst = 0.0;
    for (int j = 0; j <= 4; ++j) {
      const double phi = j * constants::pi / 4.0;
      const double full = emission::recoil_rate(emission::recoil_prefactor(sys), perturbed(1e-3),
                                                *circular_handedness_sign(sys.polarization), phi);
      const double approx = emission::near_field_recoil_rate(sys, phi);
      worst = std::max(worst, std::abs(approx - full) / std::abs(full));
    }
    record("near_field_expansion", "xi=0.001", worst, 1e-2);
  }

  // Lateral force on the ground-state atom.
  {
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double r = 100e-9 * std::pow(50.0, i / 100.0);
      const TwoAtomSystem sys = cfg.system(r);
      const double fa = forces::resonant_force_on_a(sys, 1.0).force.x();
      const double fb = forces::resonant_force_on_b(sys, 1.0).force.x();
      if (fa != 0.0) worst = std::max(worst, std::abs(fb) / std::abs(fa));
    }
    record("ground_atom_lateral_force", "r=100nm..5um", worst, 1e-12);
  }

  // Assisted-rate correction: closed-form Born sandwich against the rate density.
  {
    const TwoAtomSystem sys = at_xi(1.0);
    const double closed = emission::assisted_rate_closed_form(sys);
    const double quad = emission::assisted_rate_quadrature(sys, cfg.quadrature);
    record("assisted_rate", "xi=1", std::abs(quad - closed) / std::abs(closed), 1e-7);
  }

  t.meta.emplace_back("all_passed", rep.passed);
  return rep;
}

}  // namespace latvdw::cli
