#pragma once

// Lateral-momentum-resolved emission of atom A next to atom B.
//
// Rate density per k_par dk_par dphi:
//   gamma = (2 mu0^2 w^4 / hbar) alpha_B Im[d10 . G(r_A, r_B; k_par, phi) . G(r_B, r_A) . d01]
// Recoil rate per unit azimuth:
//   R(phi) = int k_par dk_par (hbar k_par) gamma
//          = d^2 alpha_B / (64 pi^3 eps0^2 r^7) [f1 + f2 cos 2phi + h f3 cos phi]
// with h = +1 (-1) for a right (left) handed circular dipole.

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "constants.hpp"
#include "forces.hpp"
#include "greens.hpp"
#include "linalg.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"
#include "system.hpp"

namespace latvdw::emission {

struct SpectrumCoefficients {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
};

namespace detail {

inline double f3_value(long double x) {
  const long double x2 = x * x;
  if (x < forces::detail::small_xi) {
    const auto& c = forces::detail::trig_cos_coefficients();
    const auto& s = forces::detail::trig_sin_coefficients();
    long double sum = 0.0L;
    long double power = x;
    for (int m = 0; m < forces::detail::bracket_terms; ++m) {
      long double coeff = -144.0L * c[m] + 72.0L * s[m];
      if (m >= 1) coeff += 48.0L * c[m - 1] - 120.0L * s[m - 1];
      if (m >= 2) coeff += 8.0L * s[m - 2];
      sum += coeff * power;
      power *= x2;
    }
    return static_cast<double>(sum);
  }
  const long double cos2 = std::cos(2.0L * x);
  const long double sin2 = std::sin(2.0L * x);
  return static_cast<double>(48.0L * x * (x2 - 3.0L) * cos2 + 8.0L * (9.0L - 15.0L * x2 + x2 * x2) * sin2);
}

inline int require_circular(const TwoAtomSystem& sys, const char* who) {
  const auto h = circular_handedness_sign(sys.polarization);
  if (!h) throw std::invalid_argument(std::string(who) + ": polarization must be (+-i, 0, 1)");
  return *h;
}

}  // namespace detail

/// f1, f2, f3 of the closed-form recoil rate. Evaluated in long double since
/// f1 and f2 cancel their O(1) terms down to O(xi^3) in the near field.
inline SpectrumCoefficients spectrum_coefficients(double xi) {
  if (!(xi > 0.0)) throw std::invalid_argument("spectrum_coefficients: xi must be > 0");
  using L = long double;
  constexpr L pi = std::numbers::pi_v<L>;
  const L x = xi;
  const L x2 = x * x;
  const L j1 = specfun::bessel_j<L>(1, x);
  const L j2 = specfun::bessel_j<L>(2, x);
  const L y1 = specfun::bessel_y<L>(1, x);
  const L y2 = specfun::bessel_y<L>(2, x);
  const L c = std::cos(x);
  const L s = std::sin(x);
  const L f1 = pi * x2 *
               (2 * x * j1 * ((x2 - 1) * c - x * s) + 3 * j2 * (5 * x * s - (x2 - 5) * c) -
                2 * x * y1 * ((x2 - 1) * s + x * c) + 3 * y2 * ((x2 - 5) * s + 5 * x * c));
  const L f2 = 3 * pi * x2 * (j2 * ((1 - x2) * c + x * s) + y2 * (x * (x * s + c) - s));
  return {static_cast<double>(f1), static_cast<double>(f2), detail::f3_value(x)};
}

/// d^2 alpha_B / (64 pi^3 eps0^2 r^7), in N per radian.
inline double recoil_prefactor(const TwoAtomSystem& sys) {
  return forces::force_prefactor(sys) / (8.0 * constants::pi);
}

/// Closed-form angular recoil rate from precomputed coefficients.
inline double recoil_rate(double prefactor, const SpectrumCoefficients& f, int handedness, double phi) {
  return prefactor * (f.f1 + f.f2 * std::cos(2.0 * phi) + handedness * f.f3 * std::cos(phi));
}

/// Closed-form recoil rate R(r, phi) for a circular dipole.
inline double recoil_rate(const TwoAtomSystem& sys, double phi) {
  sys.validate();
  const int h = detail::require_circular(sys, "recoil_rate");
  return recoil_rate(recoil_prefactor(sys), spectrum_coefficients(sys.xi()), h, phi);
}

/// Three-term near-field expansion of R(r, phi), valid for xi << 1.
inline double near_field_recoil_rate(const TwoAtomSystem& sys, double phi) {
  sys.validate();
  const int h = detail::require_circular(sys, "near_field_recoil_rate");
  const double xi = sys.xi();
  const double x3 = xi * xi * xi;
  const double s = std::sin(phi);
  const double c2 = std::cos(2.0 * phi);
  const double bracket = 16.0 * x3 * s * s + constants::pi * x3 * xi / 8.0 * (7.0 + 3.0 * c2) +
                         2.0 * x3 * xi * xi / 15.0 * (35.0 + 24.0 * h * std::cos(phi) - 3.0 * c2);
  return recoil_prefactor(sys) * bracket;
}

/// Emission into the +x half plane minus emission into the -x half plane.
inline double asymmetry(const TwoAtomSystem& sys) {
  sys.validate();
  const int h = detail::require_circular(sys, "asymmetry");
  return 4.0 * recoil_prefactor(sys) * h * spectrum_coefficients(sys.xi()).f3;
}

namespace detail {

// Im[e10 . M(xi z, s, phi) . G(-xi z) . e01] in units k = 1.
inline double scaled_density(const ComplexVec3& e10, const ComplexMat3& back, double xi, double s,
                             complex s_perp, double phi) {
  const ComplexMat3 mode = greens::scaled::cylindrical_mode(Vec3(0.0, 0.0, xi), s, s_perp, phi);
  return sandwich(e10, mode * back, e10.conjugate()).imag();
}

// On the z axis the density is a trigonometric polynomial of degree 2 in phi,
// so a 16-node periodic rule integrates it (times cos phi) exactly.
template <class F>
double azimuthal_integral(F&& f) {
  constexpr int n = 16;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += f(2.0 * constants::pi * j / n);
  return sum * (2.0 * constants::pi / n);
}

inline quadrature::QuadratureConfig oracle_config() { return {1e-11, 0.0, 4000, 40.0, 1 << 16}; }

}  // namespace detail

/// Rate density gamma(k_par, phi) in s^-1 m^2 (per k_par dk_par dphi).
inline double rate_density(const TwoAtomSystem& sys, double k_par, double phi) {
  sys.validate();
  const double w = sys.omega_a;
  const Vec3 sep = sys.position_a() - sys.position_b();
  const ComplexMat3 mode = greens::greens_cylindrical_mode(sep, w, k_par, phi);
  const ComplexMat3 back = greens::greens_free(sys.position_b(), sys.position_a(), w);
  const double mu2w4 = constants::mu0 * constants::mu0 * w * w * w * w;
  return 2.0 * mu2w4 / constants::hbar * sys.alpha_b * sandwich(sys.d10(), mode * back, sys.d01()).imag();
}

/// R(r, phi) by quadrature of hbar k_par gamma over k_par; any polarization.
inline double recoil_rate_quadrature(const TwoAtomSystem& sys, double phi,
                                     const quadrature::QuadratureConfig& cfg = detail::oracle_config()) {
  sys.validate();
  const double xi = sys.xi();
  const ComplexVec3 e10 = sys.polarization;
  const ComplexMat3 back = greens::scaled::greens(Vec3(0.0, 0.0, -xi));
  auto f = [&](double s, complex s_perp) { return s * s * detail::scaled_density(e10, back, xi, s, s_perp, phi); };
  const auto res = quadrature::integrate_lateral_momentum(f, quadrature::BranchSplitDomain(1.0), xi, cfg);
  return recoil_prefactor(sys) * 128.0 * std::pow(constants::pi, 3) * std::pow(xi, 7) * res.value;
}

/// -p1 int dphi cos(phi) int k_par dk_par (hbar k_par) gamma: the lateral
/// force on A assembled from the momentum carried off by emitted photons.
inline double lateral_recoil_force_quadrature(const TwoAtomSystem& sys, double p1,
                                              const quadrature::QuadratureConfig& cfg = detail::oracle_config()) {
  sys.validate();
  forces::detail::check_population(p1);
  const double xi = sys.xi();
  const ComplexVec3 e10 = sys.polarization;
  const ComplexMat3 back = greens::scaled::greens(Vec3(0.0, 0.0, -xi));
  auto f = [&](double s, complex s_perp) {
    auto moment = [&](double phi) { return std::cos(phi) * detail::scaled_density(e10, back, xi, s, s_perp, phi); };
    return s * s * detail::azimuthal_integral(moment);
  };
  const auto res = quadrature::integrate_lateral_momentum(f, quadrature::BranchSplitDomain(1.0), xi, cfg);
  return -p1 * recoil_prefactor(sys) * 128.0 * std::pow(constants::pi, 3) * std::pow(xi, 7) * res.value;
}

/// Assisted-rate correction from the closed-form Born sandwich:
///   (2 mu0^2 w^4 / hbar) alpha_B Im[d10 . G(r_A, r_B) . G(r_B, r_A) . d01].
inline double assisted_rate_closed_form(const TwoAtomSystem& sys) {
  sys.validate();
  const double xi = sys.xi();
  const double k = sys.wavenumber();
  const ComplexMat3 out = greens::scaled::greens(Vec3(0.0, 0.0, xi));
  const ComplexMat3 back = greens::scaled::greens(Vec3(0.0, 0.0, -xi));
  const double k2 = k * k;
  const double scale = 2.0 * k2 * k2 * k2 * sys.dipole * sys.dipole * sys.alpha_b /
                       (constants::epsilon0 * constants::epsilon0 * constants::hbar);
  const ComplexVec3 e10 = sys.polarization;
  return scale * sandwich(e10, out * back, e10.conjugate()).imag();
}

/// Assisted-rate correction as int int gamma k_par dk_par dphi.
inline double assisted_rate_quadrature(const TwoAtomSystem& sys,
                                       const quadrature::QuadratureConfig& cfg = detail::oracle_config()) {
  sys.validate();
  const double xi = sys.xi();
  const double k = sys.wavenumber();
  const ComplexVec3 e10 = sys.polarization;
  const ComplexMat3 back = greens::scaled::greens(Vec3(0.0, 0.0, -xi));
  auto f = [&](double s, complex s_perp) {
    auto density = [&](double phi) { return detail::scaled_density(e10, back, xi, s, s_perp, phi); };
    return s * detail::azimuthal_integral(density);
  };
  const auto res = quadrature::integrate_lateral_momentum(f, quadrature::BranchSplitDomain(1.0), xi, cfg);
  const double k2 = k * k;
  const double scale = 2.0 * k2 * k2 * k2 * sys.dipole * sys.dipole * sys.alpha_b /
                       (constants::epsilon0 * constants::epsilon0 * constants::hbar);
  return scale * res.value;
}

struct EmissionSample {
  double phi;
  double recoil_rate;
};

struct EmissionSpectrum {
  double r = 0.0;
  double xi = 0.0;
  double prefactor = 0.0;
  int handedness = 1;
  SpectrumCoefficients coefficients;
  std::vector<EmissionSample> samples;

  /// Scale that maps the largest sample to 1: max R if any sample is
  /// positive, else max |R|. R itself turns negative for xi above about 2.
  double normalization() const {
    double top = 0.0;
    double mag = 0.0;
    for (const auto& s : samples) {
      top = std::max(top, s.recoil_rate);
      mag = std::max(mag, std::abs(s.recoil_rate));
    }
    return top > 0.0 ? top : mag;
  }
};

/// R(phi) on n_phi equispaced angles phi_j = 2 pi j / n_phi.
inline EmissionSpectrum emission_spectrum(const TwoAtomSystem& sys, int n_phi,
                                          std::optional<SpectrumCoefficients> override_coefficients = {}) {
  sys.validate();
  if (n_phi < 8) throw std::invalid_argument("emission_spectrum: n_phi must be >= 8");
  EmissionSpectrum out;
  out.r = sys.separation;
  out.xi = sys.xi();
  out.prefactor = recoil_prefactor(sys);
  out.handedness = detail::require_circular(sys, "emission_spectrum");
  out.coefficients = override_coefficients.value_or(spectrum_coefficients(out.xi));
  out.samples.reserve(n_phi);
  for (int j = 0; j < n_phi; ++j) {
    const double phi = 2.0 * constants::pi * j / n_phi;
    out.samples.push_back({phi, recoil_rate(out.prefactor, out.coefficients, out.handedness, phi)});
  }
  return out;
}

}  // namespace latvdw::emission
