#pragma once

// Resonant and non-resonant van der Waals forces between an excited atom A
// and a ground-state isotropic atom B.
//
// Resonant force on A (gradient acts on the first argument of the first G):
//   F_A = 2 mu0^2 p1 w^4 Re grad_r [d10 . G(r, r_B) alpha_B G(r_B, r_A) . d01] at r = r_A
// Resonant force on B (conjugated return propagator):
//   F_B = 2 mu0^2 p1 w^4 Re grad_r [d10 . G*(r_A, r_B) alpha_B G(r, r_A) . d01] at r = r_B
//
// For the two-atom system these are assembled as
//   F = p1 * prefactor * shape,   prefactor = d^2 alpha_B / (8 pi^2 eps0^2 r^7)
// with a dimensionless shape vector evaluated from the scaled Green's
// tensor, so no SI intermediate ever leaves double range.

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "constants.hpp"
#include "greens.hpp"
#include "linalg.hpp"
#include "quadrature.hpp"
#include "system.hpp"

namespace latvdw::forces {

struct ForceResult {
  Vec3 force = Vec3::Zero();   // N
  Vec3 shape = Vec3::Zero();   // dimensionless
  double prefactor = 0.0;      // N
  double population = 0.0;

  /// The lateral bracket value; equals the closed-form shape for a circular dipole.
  double shape_factor() const { return shape.x(); }
};

/// d^2 alpha_B / (8 pi^2 eps0^2 r^7), the scale of the resonant force.
inline double force_prefactor(const TwoAtomSystem& sys) {
  const double r = sys.separation;
  const double r2 = r * r;
  const double r7 = r2 * r2 * r2 * r;
  const double e0 = constants::epsilon0;
  return sys.dipole * sys.dipole * sys.alpha_b / (8.0 * constants::pi * constants::pi * e0 * e0 * r7);
}

namespace detail {

inline void check_population(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw std::invalid_argument("population must lie in [0, 1]");
}

inline ForceResult assemble(const TwoAtomSystem& sys, double p1, const Vec3& shape) {
  ForceResult out;
  out.shape = shape;
  out.prefactor = force_prefactor(sys);
  out.population = p1;
  out.force = (p1 * out.prefactor) * shape;
  return out;
}

// Taylor coefficients (odd powers 1, 3, 5, ...) of
//   6 x (3 - x^2) cos 2x - (9 - 15 x^2 + x^4) sin 2x.
// cos 2x = sum c_m x^{2m}, sin 2x = sum s_m x^{2m+1}.
inline constexpr int bracket_terms = 24;

inline const std::array<long double, bracket_terms>& trig_cos_coefficients() {
  static const auto table = [] {
    std::array<long double, bracket_terms> c{};
    long double v = 1.0L;
    for (int m = 0; m < bracket_terms; ++m) {
      c[m] = v;
      v *= -4.0L / ((2.0L * m + 1.0L) * (2.0L * m + 2.0L));
    }
    return c;
  }();
  return table;
}

inline const std::array<long double, bracket_terms>& trig_sin_coefficients() {
  static const auto table = [] {
    std::array<long double, bracket_terms> s{};
    long double v = 2.0L;
    for (int m = 0; m < bracket_terms; ++m) {
      s[m] = v;
      v *= -4.0L / ((2.0L * m + 2.0L) * (2.0L * m + 3.0L));
    }
    return s;
  }();
  return table;
}

// Below this xi the bracket is summed from its Taylor series; the direct
// form cancels its O(xi) and O(xi^3) terms.
inline constexpr double small_xi = 0.5;

}  // namespace detail

/// 6 xi (3 - xi^2) cos 2xi - (9 - 15 xi^2 + xi^4) sin 2xi, the dimensionless
/// lateral-force shape of a right-handed circular dipole.
inline double lateral_bracket(double xi) {
  if (!(xi > 0.0)) throw std::invalid_argument("lateral_bracket: xi must be > 0");
  const long double x = xi;
  const long double x2 = x * x;
  if (xi < detail::small_xi) {
    const auto& c = detail::trig_cos_coefficients();
    const auto& s = detail::trig_sin_coefficients();
    long double sum = 0.0L;
    long double power = x;  // x^{2m+1}
    for (int m = 0; m < detail::bracket_terms; ++m) {
      long double coeff = 18.0L * c[m] - 9.0L * s[m];
      if (m >= 1) coeff += -6.0L * c[m - 1] + 15.0L * s[m - 1];
      if (m >= 2) coeff += -1.0L * s[m - 2];
      sum += coeff * power;
      power *= x2;
    }
    return static_cast<double>(sum);
  }
  const long double cos2 = std::cos(2.0L * x);
  const long double sin2 = std::sin(2.0L * x);
  return static_cast<double>(6.0L * x * (3.0L - x2) * cos2 - (9.0L - 15.0L * x2 + x2 * x2) * sin2);
}

/// Dimensionless resonant-force shape on A: 16 pi^2 xi^7 Re[e10 . grad G . G . e01]
/// in units k = 1, for a general polarization.
inline Vec3 resonant_shape_on_a(const ComplexVec3& e10, double xi) {
  const Vec3 sep_ab(0.0, 0.0, xi);  // k (r_A - r_B)
  const ComplexMat3 back = greens::scaled::greens(-sep_ab);
  const GradientTensor grad = greens::scaled::gradient(sep_ab);
  const ComplexVec3 e01 = e10.conjugate();
  const double scale = 16.0 * constants::pi * constants::pi * std::pow(xi, 7);
  Vec3 shape;
  for (int a = 0; a < 3; ++a) shape[a] = scale * sandwich(e10, grad[a] * back, e01).real();
  return shape;
}

/// Dimensionless resonant-force shape on B.
inline Vec3 resonant_shape_on_b(const ComplexVec3& e10, double xi) {
  const Vec3 sep_ab(0.0, 0.0, xi);
  const ComplexMat3 outbound = greens::scaled::greens(sep_ab).conjugate();
  const GradientTensor grad = greens::scaled::gradient(-sep_ab);  // d/dr_B of G(r_B, r_A)
  const ComplexVec3 e01 = e10.conjugate();
  const double scale = 16.0 * constants::pi * constants::pi * std::pow(xi, 7);
  Vec3 shape;
  for (int a = 0; a < 3; ++a) shape[a] = scale * sandwich(e10, outbound * grad[a], e01).real();
  return shape;
}

/// Full resonant force vector on the excited atom A.
inline ForceResult resonant_force_on_a(const TwoAtomSystem& sys, double p1) {
  sys.validate();
  detail::check_population(p1);
  return detail::assemble(sys, p1, resonant_shape_on_a(sys.polarization, sys.xi()));
}

/// Full resonant force vector on the ground-state atom B.
inline ForceResult resonant_force_on_b(const TwoAtomSystem& sys, double p1) {
  sys.validate();
  detail::check_population(p1);
  return detail::assemble(sys, p1, resonant_shape_on_b(sys.polarization, sys.xi()));
}

/// Closed-form lateral force on A for a circular dipole d (+-i, 0, 1).
inline double lateral_force_closed_form(const TwoAtomSystem& sys, double p1) {
  sys.validate();
  detail::check_population(p1);
  const auto h = circular_handedness_sign(sys.polarization);
  if (!h) throw std::invalid_argument("lateral_force_closed_form: polarization must be (+-i, 0, 1)");
  return *h * p1 * force_prefactor(sys) * lateral_bracket(sys.xi());
}

/// One downward transition n -> k of atom A in a multi-level resonant sum.
struct ResonantChannel {
  double population;      // p_n
  double omega;           // w_nk, rad/s
  ComplexVec3 dipole;     // d_nk, C m (d_kn = conj)
  double alpha_b;         // alpha_B(w_nk), C m^2 / V
};

/// Resonant force on A summed over channels, evaluated directly in SI units
/// for arbitrary positions.
inline Vec3 resonant_force_on_a(std::span<const ResonantChannel> channels, const Vec3& r_a,
                                const Vec3& r_b) {
  Vec3 total = Vec3::Zero();
  for (const auto& ch : channels) {
    const double w2 = ch.omega * ch.omega;
    const double mu2 = constants::mu0 * constants::mu0;
    const ComplexMat3 back = greens::greens_free(r_b, r_a, ch.omega);
    const GradientTensor grad = greens::greens_free_gradient(r_a, r_b, ch.omega);
    const ComplexVec3 d_kn = ch.dipole.conjugate();
    for (int a = 0; a < 3; ++a)
      total[a] += 2.0 * mu2 * ch.population * w2 * w2 * ch.alpha_b *
                  sandwich(ch.dipole, grad[a] * back, d_kn).real();
  }
  return total;
}

/// Single-resonance model of atom B used off the real axis:
///   alpha_B(i zeta) = alpha_0 w_B^2 / (w_B^2 + zeta^2),
/// with alpha_0 fixed so that the real-frequency model reproduces
/// alpha_B(omega_A).
struct SingleResonanceModel {
  double omega_b;

  double static_polarizability(const TwoAtomSystem& sys) const {
    const double wb2 = omega_b * omega_b;
    const double wa2 = sys.omega_a * sys.omega_a;
    if (!(wb2 > wa2))
      throw std::invalid_argument("SingleResonanceModel: omega_b must exceed omega_a");
    return sys.alpha_b * (wb2 - wa2) / wb2;
  }

  double at_imaginary(const TwoAtomSystem& sys, double zeta) const {
    const double wb2 = omega_b * omega_b;
    return static_polarizability(sys) * wb2 / (wb2 + zeta * zeta);
  }

  static SingleResonanceModel rubidium_d2() {
    return {angular_frequency_from_wavelength(CaesiumRubidium::rb_resonance_wavelength)};
  }
};

/// Non-resonant (imaginary-frequency) force on A:
///   F = (hbar mu0^2 / pi) int_0^inf dzeta zeta^4
///       Re grad Tr[alpha_A(i zeta) . G(r, r_B, i zeta) alpha_B(i zeta) G(r_B, r_A, i zeta)]
/// with the two-level effective polarizability of A
///   alpha_A(i zeta) = 2 w_A / (hbar (w_A^2 + zeta^2)) [(1 - p1) d10 d01 - p1 d01 d10].
inline Vec3 nonresonant_force(const TwoAtomSystem& sys, const SingleResonanceModel& model,
                              double p1 = 0.0,
                              const quadrature::QuadratureConfig& cfg = {1e-10, 0.0, 2000, 40.0, 1 << 16}) {
  sys.validate();
  detail::check_population(p1);
  const Vec3 r_a = sys.position_a();
  const Vec3 r_b = sys.position_b();
  const ComplexVec3 d10 = sys.d10();
  const ComplexVec3 d01 = sys.d01();
  const double wa = sys.omega_a;
  model.static_polarizability(sys);  // validates the model

  auto integrand = [&](double theta) -> Vec3 {
    const double zeta = wa * std::tan(theta);
    const double jac = wa / (std::cos(theta) * std::cos(theta));
    if (!(zeta > 0.0) || !std::isfinite(jac)) return Vec3::Zero();
    const double alpha_b = model.at_imaginary(sys, zeta);
    const double alpha_a = 2.0 * wa / (constants::hbar * (wa * wa + zeta * zeta));
    const ComplexMat3 back = greens::greens_imaginary(r_b, r_a, zeta);
    const GradientTensor grad = greens::greens_imaginary_gradient(r_a, r_b, zeta);
    const double z2 = zeta * zeta;
    Vec3 v;
    for (int a = 0; a < 3; ++a) {
      const ComplexMat3 m = grad[a] * back;
      // Tr[(u v^T) M] = v . M . u
      const complex tr = (1.0 - p1) * sandwich(d01, m, d10) - p1 * sandwich(d10, m, d01);
      v[a] = z2 * z2 * alpha_a * alpha_b * tr.real() * jac;
    }
    return v;
  };
  const auto res = quadrature::integrate_interval(integrand, 0.0, 0.5 * constants::pi, cfg);
  const double mu2 = constants::mu0 * constants::mu0;
  return (constants::hbar * mu2 / constants::pi) * res.value;
}

/// Torque of the resonant forces about the two-atom centre of mass.
inline Vec3 torque_about_com(const TwoAtomSystem& sys, double p1) {
  if (!(sys.mass_a > 0.0) || !(sys.mass_b > 0.0))
    throw std::invalid_argument("torque_about_com: masses must be > 0");
  const Vec3 fa = resonant_force_on_a(sys, p1).force;
  const Vec3 fb = resonant_force_on_b(sys, p1).force;
  const Vec3 ra = sys.position_a();
  const Vec3 rb = sys.position_b();
  const Vec3 com = (sys.mass_a * ra + sys.mass_b * rb) / (sys.mass_a + sys.mass_b);
  return (ra - com).cross(fa) + (rb - com).cross(fb);
}

}  // namespace latvdw::forces
