#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include <latvdw/dynamics.hpp>
#include <latvdw/emission.hpp>
#include <latvdw/quadrature.hpp>

namespace {

using namespace latvdw;
namespace c = latvdw::constants;
constexpr double pi = std::numbers::pi;

// Angular emission pattern w^3 |d_perp|^2 / (8 pi^2 eps0 hbar c^3) integrated over the sphere.
double solid_angle_rate(const TwoAtomSystem& sys) {
  const double w = sys.omega_a;
  const ComplexVec3 d = sys.d10();
  auto polar = [&](double theta) {
    auto azimuthal = [&](double phi) {
      const Vec3 n(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
      const complex nd = n(0) * d(0) + n(1) * d(1) + n(2) * d(2);
      return (d.squaredNorm() - std::norm(nd)) * std::sin(theta);
    };
    return quadrature::integrate_angle(azimuthal, {1e-13, 0.0, 1, 1.0, 1 << 12}).value;
  };
  const double integral = quadrature::integrate_interval(polar, 0.0, pi, {1e-13, 0.0, 200, 40.0, 1 << 16}).value;
  return w * w * w / (8.0 * pi * pi * c::epsilon0 * c::hbar * c::c * c::c * c::c) * integral;
}

TEST(Dynamics, FreeRateMatchesSolidAngleIntegral) {
  for (Handedness h : {Handedness::right, Handedness::left}) {
    const auto sys = caesium_rubidium(500e-9, h);
    const double g = dynamics::free_decay_rate(sys);
    EXPECT_NEAR(g, solid_angle_rate(sys), 1e-10 * g);
  }
  auto linear = caesium_rubidium(500e-9);
  linear.polarization = ComplexVec3(0.3, 0.0, 0.9);
  EXPECT_NEAR(dynamics::free_decay_rate(linear), solid_angle_rate(linear), 1e-10 * solid_angle_rate(linear));
}

TEST(Dynamics, CaesiumFreeRate) {
  EXPECT_NEAR(dynamics::free_decay_rate(caesium_rubidium(1e-6)), 3.29e7, 0.02 * 3.29e7);
}

TEST(Dynamics, FreeRateScaling) {
  auto sys = caesium_rubidium(1e-6);
  const double g = dynamics::free_decay_rate(sys);
  sys.omega_a *= 2.0;
  EXPECT_NEAR(dynamics::free_decay_rate(sys), 8.0 * g, 1e-12 * 8.0 * g);
  sys.dipole = 0.0;
  EXPECT_EQ(dynamics::free_decay_rate(sys), 0.0);
}

TEST(Dynamics, CorrectionVanishesWithoutScatterer) {
  auto sys = caesium_rubidium(300e-9);
  sys.alpha_b = 0.0;
  const auto r = dynamics::assisted_decay_rate(sys);
  EXPECT_EQ(r.gamma_assisted_correction, 0.0);
  EXPECT_EQ(r.gamma_total, r.gamma_free);
}

TEST(Dynamics, CorrectionOscillatesInSeparation) {
  const double lambda = CaesiumRubidium::wavelength;
  int changes = 0;
  double previous = dynamics::assisted_decay_rate(caesium_rubidium(0.3 * lambda)).gamma_assisted_correction;
  for (int i = 1; i <= 400; ++i) {
    const double r = lambda * (0.3 + 1.7 * i / 400.0);
    const double g = dynamics::assisted_decay_rate(caesium_rubidium(r)).gamma_assisted_correction;
    if ((g > 0.0) != (previous > 0.0)) ++changes;
    previous = g;
  }
  EXPECT_GE(changes, 2);
}

TEST(Dynamics, CorrectionMatchesMomentumQuadrature) {
  for (double r : {200e-9, 632e-9, 1.5e-6}) {
    const auto sys = caesium_rubidium(r);
    const double g = dynamics::assisted_decay_rate(sys).gamma_assisted_correction;
    EXPECT_NEAR(emission::assisted_rate_quadrature(sys), g, 1e-7 * std::abs(g)) << r;
  }
}

TEST(Dynamics, CorrectionSmallBeyondQuarterWavelength) {
  for (int i = 0; i <= 100; ++i) {
    const double r = CaesiumRubidium::wavelength * (0.25 + 9.75 * i / 100.0);
    const auto rates = dynamics::assisted_decay_rate(caesium_rubidium(r));
    EXPECT_LT(std::abs(rates.gamma_assisted_correction), 1e-3 * rates.gamma_free) << r;
  }
}

TEST(Dynamics, TotalRatePositive) {
  for (int i = 0; i <= 200; ++i) {
    const double r = 50e-9 * std::pow(200.0, i / 200.0);
    EXPECT_GT(dynamics::assisted_decay_rate(caesium_rubidium(r)).gamma_total, 0.0) << r;
  }
}

TEST(Dynamics, Population) {
  const auto rates = dynamics::assisted_decay_rate(caesium_rubidium(400e-9));
  EXPECT_EQ(dynamics::population(0.0, rates), 1.0);
  EXPECT_NEAR(dynamics::population(std::log(2.0) / rates.gamma_total, rates), 0.5, 1e-14);
  double previous = 1.0;
  for (int i = 1; i <= 50; ++i) {
    const double p = dynamics::population(i * 1e-9, rates);
    EXPECT_LT(p, previous);
    previous = p;
  }
  EXPECT_THROW(dynamics::population(-1e-9, rates), std::invalid_argument);
}

TEST(Dynamics, SteadyStatePopulation) {
  EXPECT_NEAR(dynamics::steady_state_population({0.2e9, 1e9, 0.0}), 0.01, 1e-16);
  EXPECT_NEAR(dynamics::steady_state_population({0.2e9, -1e9, 0.0}), 0.01, 1e-16);
  EXPECT_EQ(dynamics::steady_state_population({0.0, 1e9, 0.0}), 0.0);
  EXPECT_THROW(dynamics::steady_state_population({1e8, 0.0, 0.0}), std::invalid_argument);
}

TEST(Dynamics, WeakExcitationRegime) {
  const double gamma = 3.3e7;
  EXPECT_TRUE(dynamics::weak_excitation({1e9, 1e10, 0.0}, gamma));
  EXPECT_FALSE(dynamics::weak_excitation({1e8, 1e10, 0.0}, gamma));
  EXPECT_FALSE(dynamics::weak_excitation({1e9, 5e9, 0.0}, gamma));
}

TEST(Dynamics, VelocityAtHundredNanometres) {
  const auto sys = caesium_rubidium(100e-9);
  const double v = dynamics::lateral_velocity(sys, 1e-2, 10e-3);
  EXPECT_NEAR(std::abs(v), 800e-9, 0.25 * 800e-9);
  EXPECT_NEAR(dynamics::lateral_velocity(sys, {2e9, 1e10, 10e-3}), v, 1e-14 * std::abs(v));
}

TEST(Dynamics, VelocityLinearity) {
  const auto sys = caesium_rubidium(632e-9);
  const double v = dynamics::lateral_velocity(sys, 1e-2, 10e-3);
  EXPECT_EQ(dynamics::lateral_velocity(sys, 0.0, 10e-3), 0.0);
  EXPECT_NEAR(dynamics::lateral_velocity(sys, 1e-2, 20e-3), 2.0 * v, 1e-15 * std::abs(v));
  EXPECT_NEAR(dynamics::lateral_velocity(sys, 2e-2, 10e-3), 2.0 * v, 1e-15 * std::abs(v));
  EXPECT_EQ(dynamics::lateral_velocity(sys.flipped_handedness(), 1e-2, 10e-3), -v);
  EXPECT_THROW(dynamics::lateral_velocity(sys, 1e-2, -1.0), std::invalid_argument);
  EXPECT_THROW(dynamics::lateral_velocity(sys, 1.5, 1.0), std::invalid_argument);
}

TEST(Dynamics, SingleShotImpulse) {
  const auto sys = caesium_rubidium(632e-9);
  const auto rates = dynamics::assisted_decay_rate(sys);
  const double v = dynamics::impulse_velocity_single_shot(sys, rates);
  const double fx = forces::resonant_force_on_a(sys, 1.0).force.x();
  const double tau = 1.0 / rates.gamma_total;
  auto impulse = [&](double t) { return fx * dynamics::population(t, rates) / sys.mass_a; };
  const double integral =
      quadrature::integrate_interval(impulse, 0.0, 60.0 * tau, {1e-12, 0.0, 400, 40.0, 1 << 16}).value;
  EXPECT_NEAR(v, integral, 1e-10 * std::abs(v));
  EXPECT_LT(std::abs(v), std::abs(dynamics::lateral_velocity(sys, 1e-2, 10e-3)));

  auto fast = rates;
  fast.gamma_total *= 1e6;
  EXPECT_LT(std::abs(dynamics::impulse_velocity_single_shot(sys, fast)), 1e-5 * std::abs(v));
}

}  // namespace
