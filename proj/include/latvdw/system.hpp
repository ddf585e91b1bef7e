#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "constants.hpp"
#include "linalg.hpp"

namespace latvdw {

enum class Handedness { right, left };

/// Circular polarisation in the x-z plane: (i, 0, 1) for right-handed
/// rotation, its conjugate for left-handed.
inline ComplexVec3 circular_polarization(Handedness h) {
  const double s = h == Handedness::right ? 1.0 : -1.0;
  return ComplexVec3(complex(0.0, s), 0.0, 1.0);
}

/// +1 for (i, 0, 1), -1 for (-i, 0, 1), empty for anything else.
inline std::optional<int> circular_handedness_sign(const ComplexVec3& e) {
  if (e(1) != 0.0 || e(2) != 1.0 || e(0).real() != 0.0) return std::nullopt;
  if (e(0).imag() == 1.0) return 1;
  if (e(0).imag() == -1.0) return -1;
  return std::nullopt;
}

/// An excited two-level atom A with complex transition dipole
/// d10 = dipole * polarization (d01 = conj(d10)) and a ground-state isotropic
/// atom B. A sits at the origin and B at -separation * z_hat, so the
/// separation vector r_A - r_B points along +z.
struct TwoAtomSystem {
  double omega_a = 0.0;          // transition angular frequency, rad/s
  double dipole = 0.0;           // |d_A| scale, C m
  ComplexVec3 polarization = circular_polarization(Handedness::right);
  double alpha_b = 0.0;          // polarizability of B at omega_a, C m^2 / V
  double separation = 0.0;       // m
  double mass_a = 0.0;           // kg
  double mass_b = 0.0;           // kg

  ComplexVec3 d10() const { return dipole * polarization; }
  ComplexVec3 d01() const { return d10().conjugate(); }

  Vec3 position_a() const { return Vec3::Zero(); }
  Vec3 position_b() const { return Vec3(0.0, 0.0, -separation); }

  double wavenumber() const { return omega_a / constants::c; }
  double wavelength() const { return 2.0 * constants::pi / wavenumber(); }
  /// Retardation parameter xi = omega_a r / c.
  double xi() const { return wavenumber() * separation; }

  void validate() const {
    if (!(omega_a > 0.0)) throw std::invalid_argument("TwoAtomSystem: omega_a must be > 0");
    if (!(separation > 0.0)) throw std::invalid_argument("TwoAtomSystem: separation must be > 0");
    if (!(dipole >= 0.0)) throw std::invalid_argument("TwoAtomSystem: dipole must be >= 0");
    if (!std::isfinite(alpha_b)) throw std::invalid_argument("TwoAtomSystem: alpha_b must be finite");
    if (!polarization.allFinite())
      throw std::invalid_argument("TwoAtomSystem: polarization must be finite");
  }

  TwoAtomSystem with_separation(double r) const {
    TwoAtomSystem s = *this;
    s.separation = r;
    return s;
  }

  /// Mirror x -> -x of the rotating dipole.
  TwoAtomSystem flipped_handedness() const {
    TwoAtomSystem s = *this;
    s.polarization = polarization.conjugate();
    return s;
  }
};

/// Parameters of the excited Cs / ground-state Rb pair at the Cs D2 line.
struct CaesiumRubidium {
  static constexpr double wavelength = 852e-9;                  // m
  static constexpr double dipole = 1.9e-29;                     // C m
  static constexpr double alpha_b_angstrom3 = 293.0;            // alpha_B / (4 pi eps0), A^3
  static constexpr double rb_resonance_wavelength = 780.241e-9;  // Rb D2, m

  static double alpha_b() {
    return 4.0 * constants::pi * constants::epsilon0 * alpha_b_angstrom3 * constants::angstrom *
           constants::angstrom * constants::angstrom;
  }
};

inline double angular_frequency_from_wavelength(double wavelength) {
  if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be > 0");
  return 2.0 * constants::pi * constants::c / wavelength;
}

inline TwoAtomSystem caesium_rubidium(double separation, Handedness h = Handedness::right) {
  TwoAtomSystem s;
  s.omega_a = angular_frequency_from_wavelength(CaesiumRubidium::wavelength);
  s.dipole = CaesiumRubidium::dipole;
  s.polarization = circular_polarization(h);
  s.alpha_b = CaesiumRubidium::alpha_b();
  s.separation = separation;
  s.mass_a = constants::caesium_mass_u * constants::atomic_mass_unit;
  s.mass_b = constants::rubidium_mass_u * constants::atomic_mass_unit;
  return s;
}

}  // namespace latvdw
