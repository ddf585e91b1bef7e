#pragma once

// Excited-state population, decay rates and the lateral velocity picked up
// by atom A at fixed separation.

#include <cmath>
#include <stdexcept>

#include "constants.hpp"
#include "emission.hpp"
#include "forces.hpp"
#include "greens.hpp"
#include "system.hpp"

namespace latvdw::dynamics {

struct DecayRates {
  double gamma_free = 0.0;                 // s^-1
  double gamma_assisted_correction = 0.0;  // s^-1
  double gamma_total = 0.0;                // s^-1
};

/// Free-space rate (2 mu0 w^2 / hbar) Im G(r, r) |d|^2 with |d|^2 = d10 . d01.
inline double free_decay_rate(const TwoAtomSystem& sys) {
  if (!(sys.omega_a > 0.0)) throw std::invalid_argument("free_decay_rate: omega_a must be > 0");
  const double w = sys.omega_a;
  const double d2 = sys.d10().squaredNorm();
  return 2.0 * constants::mu0 * w * w / constants::hbar * greens::coincident_imaginary_part(w) * d2;
}

/// Free rate plus the correction induced by atom B.
inline DecayRates assisted_decay_rate(const TwoAtomSystem& sys) {
  DecayRates out;
  out.gamma_free = free_decay_rate(sys);
  out.gamma_assisted_correction = emission::assisted_rate_closed_form(sys);
  out.gamma_total = out.gamma_free + out.gamma_assisted_correction;
  return out;
}

/// p1(t) = exp(-Gamma_total t).
inline double population(double t, const DecayRates& rates) {
  if (!(t >= 0.0)) throw std::invalid_argument("population: t must be >= 0");
  return std::exp(-rates.gamma_total * t);
}

struct DrivingParams {
  double rabi = 0.0;       // Omega, rad/s
  double detuning = 0.0;   // Delta, rad/s
  double duration = 0.0;   // Delta t, s
};

/// Omega^2 / (4 Delta^2), the weak-excitation steady state.
inline double steady_state_population(const DrivingParams& drive) {
  if (drive.detuning == 0.0 || !std::isfinite(drive.detuning))
    throw std::invalid_argument("steady_state_population: detuning must be finite and nonzero");
  return drive.rabi * drive.rabi / (4.0 * drive.detuning * drive.detuning);
}

/// True when gamma << Omega << |Delta|, taking "<<" as a factor of ten.
inline bool weak_excitation(const DrivingParams& drive, double gamma) {
  constexpr double margin = 10.0;
  return margin * gamma <= std::abs(drive.rabi) && margin * std::abs(drive.rabi) <= std::abs(drive.detuning);
}

/// v = F_x(p1 = 1) p1 Delta t / m_A at fixed separation.
inline double lateral_velocity(const TwoAtomSystem& sys, double p1, double duration) {
  if (!(sys.mass_a > 0.0)) throw std::invalid_argument("lateral_velocity: mass_a must be > 0");
  if (!(duration >= 0.0)) throw std::invalid_argument("lateral_velocity: duration must be >= 0");
  forces::detail::check_population(p1);
  const double fx = forces::resonant_force_on_a(sys, 1.0).force.x();
  return fx * p1 * duration / sys.mass_a;
}

inline double lateral_velocity(const TwoAtomSystem& sys, const DrivingParams& drive) {
  return lateral_velocity(sys, steady_state_population(drive), drive.duration);
}

/// int_0^inf F_x exp(-Gamma t) dt / m_A for a single excitation.
inline double impulse_velocity_single_shot(const TwoAtomSystem& sys, const DecayRates& rates) {
  if (!(sys.mass_a > 0.0)) throw std::invalid_argument("impulse_velocity_single_shot: mass_a must be > 0");
  if (!(rates.gamma_total > 0.0))
    throw std::invalid_argument("impulse_velocity_single_shot: gamma_total must be > 0");
  const double fx = forces::resonant_force_on_a(sys, 1.0).force.x();
  return fx / (sys.mass_a * rates.gamma_total);
}

}  // namespace latvdw::dynamics
