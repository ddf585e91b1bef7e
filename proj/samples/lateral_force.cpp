// Prints the lateral force on an excited Cs atom next to a ground-state Rb
// atom, its recoil-spectrum coefficients and the driven lateral velocity.

#include <cstdio>

#include <latvdw/latvdw.hpp>

int main() {
  using namespace latvdw;
  std::printf("%10s %8s %14s %14s %14s\n", "r [nm]", "xi", "F_x [N]", "F_z(A) [N]", "asymmetry");
  for (double r_nm : {100.0, 200.0, 400.0, 632.0, 800.0, 1000.0, 1500.0}) {
    const TwoAtomSystem sys = caesium_rubidium(r_nm * 1e-9);
    const auto f = forces::resonant_force_on_a(sys, 1.0);
    std::printf("%10.1f %8.4f %14.6e %14.6e %14.6e\n", r_nm, sys.xi(), f.force.x(), f.force.z(),
                emission::asymmetry(sys));
  }

  const TwoAtomSystem near = caesium_rubidium(100e-9);
  const dynamics::DrivingParams drive{0.2e9, 1e9, 10e-3};
  const double p1 = dynamics::steady_state_population(drive);
  const double v = dynamics::lateral_velocity(near, drive);
  const auto rates = dynamics::assisted_decay_rate(near);
  std::printf("\nr = 100 nm, p1 = %g, dt = %g s: v = %.1f nm/s\n", p1, drive.duration, v * 1e9);
  std::printf("free decay rate %.4e 1/s, correction from atom B %.4e 1/s\n", rates.gamma_free,
              rates.gamma_assisted_correction);
  std::printf("single excitation: v = %.3e nm/s\n", dynamics::impulse_velocity_single_shot(near, rates) * 1e9);
  return 0;
}
