#pragma once

// Integer-order cylindrical Bessel functions J_n, Y_n and Hankel H^(1)_n for
// n in {0,1,2,3} on positive real arguments.
//
// Ascending series up to `series_limit`, Hankel asymptotic expansion above.
// Both branches run in at least long double precision, which keeps the
// series cancellation and the asymptotic truncation error near 1e-13 of
// |H_n(x)| at the switchover. The emission coefficients call the long double
// instantiation directly since their small-argument combinations cancel
// several leading orders.

#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace latvdw::specfun {

/// Arguments at or below this value use the ascending series.
inline constexpr double series_limit = 14.0;

inline constexpr int max_order = 3;

namespace detail {

inline void check_args(int order, double x, const char* who) {
  if (order < 0 || order > max_order)
    throw std::domain_error(std::string(who) + ": unsupported order " + std::to_string(order));
  if (!(x > 0.0))
    throw std::domain_error(std::string(who) + ": argument must be positive, got " + std::to_string(x));
}

template <std::floating_point Real>
Real factorial(int n) {
  Real f = 1;
  for (int i = 2; i <= n; ++i) f *= Real(i);
  return f;
}

template <std::floating_point Real>
Real j_series(int n, Real x) {
  const Real q = -x * x / 4;
  Real term = std::pow(x / 2, Real(n)) / factorial<Real>(n);
  Real sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (Real(k) * Real(k + n));
    sum += term;
    if (std::abs(term) <= std::numeric_limits<Real>::epsilon() * std::abs(sum) * Real(0.01) &&
        Real(k) > x / 2)
      break;
  }
  return sum;
}

// Y_n(x) = (2/pi) ln(x/2) J_n(x) - (1/pi) (x/2)^-n sum_{k<n} (n-k-1)!/k! (x^2/4)^k
//          - (1/pi) (x/2)^n sum_k [psi(k+1) + psi(n+k+1)] (-x^2/4)^k / (k! (n+k)!)
template <std::floating_point Real>
Real y_series(int n, Real x) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  constexpr Real euler = std::numbers::egamma_v<Real>;
  const Real half = x / 2;
  const Real q = half * half;

  Real finite = 0;
  for (int k = 0; k < n; ++k)
    finite += factorial<Real>(n - k - 1) / factorial<Real>(k) * std::pow(q, Real(k));
  finite *= std::pow(half, Real(-n));

  // psi(m+1) = -gamma + H_m
  Real h_k = 0;
  Real h_nk = 0;
  for (int m = 1; m <= n; ++m) h_nk += Real(1) / Real(m);
  Real term = Real(1) / factorial<Real>(n);  // (-q)^k / (k! (n+k)!)
  Real sum = (h_k + h_nk - 2 * euler) * term;
  for (int k = 1; k < 500; ++k) {
    term *= -q / (Real(k) * Real(k + n));
    h_k += Real(1) / Real(k);
    h_nk += Real(1) / Real(k + n);
    const Real contrib = (h_k + h_nk - 2 * euler) * term;
    sum += contrib;
    if (std::abs(contrib) <= std::numeric_limits<Real>::epsilon() * std::abs(sum) * Real(0.01) &&
        Real(k) > half)
      break;
  }
  sum *= std::pow(half, Real(n));

  return (2 / pi) * std::log(half) * j_series(n, x) - finite / pi - sum / pi;
}

// Hankel large-argument expansion; returns {J_n, Y_n}. The series is summed
// until its terms stop decreasing.
template <std::floating_point Real>
std::pair<Real, Real> jy_asymptotic(int n, Real x) {
  constexpr Real pi = std::numbers::pi_v<Real>;
  const Real mu = Real(4 * n * n);
  Real p = 1;
  Real q = 0;
  Real a = 1;
  Real prev = std::numeric_limits<Real>::max();
  for (int k = 1; k < 200; ++k) {
    const Real odd = Real(2 * k - 1);
    a *= (mu - odd * odd) / (Real(k) * 8 * x);
    const Real mag = std::abs(a);
    if (mag == 0 || mag >= prev) break;
    prev = mag;
    // k = 1,3,5,... feed Q with signs +,-,+; k = 2,4,... feed P with -,+,...
    const Real sign = ((k / 2) % 2 == 0) ? Real(1) : Real(-1);
    if (k % 2 == 1)
      q += sign * a;
    else
      p += sign * a;
    if (mag < std::numeric_limits<Real>::epsilon() * Real(1e-3)) break;
  }
  const Real chi = x - (Real(n) / 2 + Real(0.25)) * pi;
  const Real amp = std::sqrt(2 / (pi * x));
  const Real c = std::cos(chi);
  const Real s = std::sin(chi);
  return {amp * (p * c - q * s), amp * (p * s + q * c)};
}

template <std::floating_point Real>
using work_t = std::conditional_t<(sizeof(Real) < sizeof(long double)), long double, Real>;

}  // namespace detail

/// Bessel function of the first kind J_n(x).
template <std::floating_point Real>
Real bessel_j(int order, Real x) {
  detail::check_args(order, static_cast<double>(x), "bessel_j");
  using W = detail::work_t<Real>;
  const W w = x;
  if (w <= W(series_limit)) return static_cast<Real>(detail::j_series(order, w));
  return static_cast<Real>(detail::jy_asymptotic(order, w).first);
}

/// Bessel function of the second kind Y_n(x).
template <std::floating_point Real>
Real bessel_y(int order, Real x) {
  detail::check_args(order, static_cast<double>(x), "bessel_y");
  using W = detail::work_t<Real>;
  const W w = x;
  if (w <= W(series_limit)) return static_cast<Real>(detail::y_series(order, w));
  return static_cast<Real>(detail::jy_asymptotic(order, w).second);
}

/// Hankel function of the first kind H^(1)_n(x) = J_n(x) + i Y_n(x).
template <std::floating_point Real>
std::complex<Real> hankel1(int order, Real x) {
  return {bessel_j(order, x), bessel_y(order, x)};
}

}  // namespace latvdw::specfun
