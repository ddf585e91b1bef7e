#pragma once

// Free-space dyadic Green's tensor
//   G(r, r', w) = (I + grad grad / k^2) exp(i k R) / (4 pi R),  R = |r - r'|,  k = w / c
// in the closed form
//   G = exp(i xi) / (4 pi R) [A(xi) I + B(xi) u u],  xi = k R,  u = (r - r') / R
//   A = 1 + i/xi - 1/xi^2,   B = -1 - 3i/xi + 3/xi^2
// together with its gradient with respect to the first argument and the
// angular-spectrum (cylindrical) decomposition
//   G = int_0^{2pi} dphi int_0^inf dk_par k_par G(k_par, phi).
//
// The kernel accepts a complex wavenumber, so imaginary frequencies
// (k = i zeta / c) go through the same code. The `scaled` namespace works in
// units of 1/k: positions are xi vectors and G / k is returned.

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>

#include "constants.hpp"
#include "linalg.hpp"
#include "quadrature.hpp"

namespace latvdw::greens {

template <std::floating_point Real>
using Vec3T = Eigen::Matrix<Real, 3, 1>;
template <std::floating_point Real>
using Mat3T = Eigen::Matrix<std::complex<Real>, 3, 3>;
template <std::floating_point Real>
using GradientT = std::array<Mat3T<Real>, 3>;

namespace detail {

template <std::floating_point Real>
Real checked_norm(const Vec3T<Real>& sep) {
  const Real r = sep.norm();
  if (!(r > 0)) throw std::invalid_argument("greens: coincident points");
  return r;
}

}  // namespace detail

/// G(sep) for separation sep = r_from - r_to and complex wavenumber k.
template <std::floating_point Real>
Mat3T<Real> kernel(const Vec3T<Real>& sep, std::complex<Real> k) {
  using C = std::complex<Real>;
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real r = detail::checked_norm(sep);
  const Vec3T<Real> u = sep / r;
  const C xi = k * r;
  const C i(0, 1);
  const C inv = Real(1) / xi;
  const C a = Real(1) + i * inv - inv * inv;
  const C b = Real(-1) - Real(3) * i * inv + Real(3) * inv * inv;
  const C pref = std::exp(i * xi) / (Real(4) * pi * r);

  Mat3T<Real> g = (b * pref) * (u * u.transpose()).template cast<C>();
  for (int j = 0; j < 3; ++j) g(j, j) += a * pref;
  return g;
}

/// dG_ij / d(sep)_a for separation sep = r_from - r_to.
template <std::floating_point Real>
GradientT<Real> kernel_gradient(const Vec3T<Real>& sep, std::complex<Real> k) {
  using C = std::complex<Real>;
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real r = detail::checked_norm(sep);
  const Vec3T<Real> u = sep / r;
  const C xi = k * r;
  const C i(0, 1);
  const C inv = Real(1) / xi;
  const C inv2 = inv * inv;
  const C e = std::exp(i * xi);

  // Radial profiles g1 (identity part) and g2 (u u part) and their R-derivatives.
  const C g2 = e / (Real(4) * pi * r) * (Real(-1) - Real(3) * i * inv + Real(3) * inv2);
  const C d_pref = k * k * e / (Real(4) * pi);
  const C dg1 = d_pref * (i * inv - Real(2) * inv2 - Real(3) * i * inv2 * inv + Real(3) * inv2 * inv2);
  const C dg2 = d_pref * (-i * inv + Real(4) * inv2 + Real(9) * i * inv2 * inv - Real(9) * inv2 * inv2);

  GradientT<Real> out;
  for (int a = 0; a < 3; ++a) {
    Mat3T<Real>& m = out[a];
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) {
        const Real dap = (a == p) ? Real(1) : Real(0);
        const Real daq = (a == q) ? Real(1) : Real(0);
        const Real dpq = (p == q) ? Real(1) : Real(0);
        const Real duu = ((dap - u[a] * u[p]) * u[q] + u[p] * (daq - u[a] * u[q])) / r;
        m(p, q) = dg1 * (u[a] * dpq) + dg2 * (u[a] * u[p] * u[q]) + g2 * duu;
      }
    }
  }
  return out;
}

/// Angular-spectrum density of G at lateral wavevector k_par (cos phi, sin phi):
///   (i / 8 pi^2) (I - q q / k^2) exp(i q . sep) / k_perp,
///   q = (k_par cos phi, k_par sin phi, k_perp sgn(sep_z)).
/// k_perp must lie on the branch Im k_perp >= 0; sep_z must be nonzero.
inline ComplexMat3 cylindrical_kernel(const Vec3& sep, double k, double k_par, complex k_perp,
                                      double phi) {
  if (sep.z() == 0.0) throw std::invalid_argument("greens: cylindrical mode requires dz != 0");
  if (k_perp.imag() < 0.0 || (k_perp.imag() == 0.0 && k_perp.real() < 0.0))
    throw std::invalid_argument("greens: k_perp off the outgoing/decaying branch");
  constexpr double pi = std::numbers::pi;
  const double sgn = sep.z() > 0.0 ? 1.0 : -1.0;
  const ComplexVec3 q(k_par * std::cos(phi), k_par * std::sin(phi), k_perp * sgn);
  // Unconjugated q . sep (Eigen's dot() would conjugate q).
  const complex qr = q(0) * sep.x() + q(1) * sep.y() + q(2) * sep.z();
  const complex pref = complex(0.0, 1.0) / (8.0 * pi * pi * k_perp) * std::exp(complex(0.0, 1.0) * qr);
  ComplexMat3 m = -(q * q.transpose()) / (k * k);
  for (int j = 0; j < 3; ++j) m(j, j) += 1.0;
  return pref * m;
}

/// Free-space Green's tensor G(r_from, r_to, omega), units 1/m.
inline ComplexMat3 greens_free(const Vec3& r_from, const Vec3& r_to, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("greens_free: omega must be > 0");
  return kernel<double>(r_from - r_to, complex(omega / constants::c, 0.0));
}

/// Gradient of greens_free with respect to r_from, units 1/m^2.
inline GradientTensor greens_free_gradient(const Vec3& r_from, const Vec3& r_to, double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("greens_free_gradient: omega must be > 0");
  return kernel_gradient<double>(r_from - r_to, complex(omega / constants::c, 0.0));
}

/// G(r_from, r_to, i zeta): real-valued, exponentially decaying.
inline ComplexMat3 greens_imaginary(const Vec3& r_from, const Vec3& r_to, double zeta) {
  if (!(zeta > 0.0)) throw std::invalid_argument("greens_imaginary: zeta must be > 0");
  return kernel<double>(r_from - r_to, complex(0.0, zeta / constants::c));
}

inline GradientTensor greens_imaginary_gradient(const Vec3& r_from, const Vec3& r_to, double zeta) {
  if (!(zeta > 0.0)) throw std::invalid_argument("greens_imaginary_gradient: zeta must be > 0");
  return kernel_gradient<double>(r_from - r_to, complex(0.0, zeta / constants::c));
}

/// Im G(r, r, omega) = omega / (6 pi c) times the identity.
inline double coincident_imaginary_part(double omega) {
  return omega / (6.0 * constants::pi * constants::c);
}

/// Angular-spectrum density of G per unit k_par dk_par dphi, units 1/m^3.
inline ComplexMat3 greens_cylindrical_mode(const Vec3& displacement, double omega, double k_par,
                                           double phi) {
  if (!(omega > 0.0)) throw std::invalid_argument("greens_cylindrical_mode: omega must be > 0");
  if (!(k_par >= 0.0)) throw std::invalid_argument("greens_cylindrical_mode: k_par must be >= 0");
  const double k = omega / constants::c;
  const double d2 = (k - k_par) * (k + k_par);
  const complex k_perp = d2 >= 0.0 ? complex(std::sqrt(d2), 0.0) : complex(0.0, std::sqrt(-d2));
  if (k_perp == 0.0) throw std::invalid_argument("greens_cylindrical_mode: k_par on the light line");
  return cylindrical_kernel(displacement, k, k_par, k_perp, phi);
}

/// Single-scatterer Born term mu0 w^2 G(r, r_B) alpha_B G(r_B, r') for an
/// isotropic polarizability alpha_B (C m^2 / V).
inline ComplexMat3 born_expanded_greens(const Vec3& r, const Vec3& r_prime, const Vec3& r_b,
                                        double omega, double alpha_b) {
  if ((r - r_prime).norm() == 0.0)
    throw std::invalid_argument("born_expanded_greens: coincident points");
  return (constants::mu0 * omega * omega * alpha_b) * greens_free(r, r_b, omega) *
         greens_free(r_b, r_prime, omega);
}

namespace scaled {

/// G / k as a function of the dimensionless separation xi = k (r_from - r_to).
inline ComplexMat3 greens(const Vec3& xi) { return kernel<double>(xi, complex(1.0, 0.0)); }

/// (grad G) / k^2 in units where k = 1.
inline GradientTensor gradient(const Vec3& xi) { return kernel_gradient<double>(xi, complex(1.0, 0.0)); }

/// k * G(k_par, phi) with k_par = s k and k_perp = s_perp k.
inline ComplexMat3 cylindrical_mode(const Vec3& xi, double s, complex s_perp, double phi) {
  return cylindrical_kernel(xi, 1.0, s, s_perp, phi);
}

/// G / k rebuilt from its angular spectrum: the phi integral (periodic rule)
/// nested inside the k_par integral (split at the light line). xi_z != 0.
inline quadrature::Result<ComplexMat3> cylindrical_quadrature(const Vec3& xi,
                                                              const quadrature::QuadratureConfig& cfg) {
  if (xi.z() == 0.0) throw std::invalid_argument("greens: cylindrical mode requires dz != 0");
  quadrature::QuadratureConfig angular = cfg;
  angular.abs_tol = 0.0;
  int evaluations = 0;
  auto radial = [&](double s, complex s_perp) -> ComplexMat3 {
    auto mode = [&](double phi) -> ComplexMat3 { return cylindrical_mode(xi, s, s_perp, phi); };
    const auto inner = quadrature::integrate_angle(mode, angular);
    evaluations += inner.evaluations;
    return s * inner.value;
  };
  auto res = quadrature::integrate_lateral_momentum(radial, quadrature::BranchSplitDomain(1.0),
                                                    std::abs(xi.z()), cfg);
  res.evaluations = evaluations;
  return res;
}

}  // namespace scaled

}  // namespace latvdw::greens
