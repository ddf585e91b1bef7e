#pragma once

// Adaptive quadrature over lateral momentum and azimuth.
//
// The lateral-momentum half line is split at the light line k_par = k:
//   propagating  k_par = k sin(theta), theta in [0, pi/2]   (k_perp =  k cos theta)
//   evanescent   k_par = k cosh(u),    u in [0, u_max]      (k_perp = i k sinh u)
// Both maps cancel the 1/k_perp branch-point singularity against the
// Jacobian, so integrands are handed an exactly computed k_perp instead of
// recomputing sqrt(k^2 - k_par^2) near the branch point.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace latvdw::quadrature {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  /// e-folds of evanescent decay exp(-kappa r) kept before the tail is cut.
  double tail_cutoff_decades = 40.0;
  /// Upper bound on the number of nodes used by the periodic rule.
  int max_angle_points = 1 << 16;

  void validate() const {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureConfig: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw std::invalid_argument("QuadratureConfig: abs_tol must be >= 0");
    if (max_subdivisions < 1)
      throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
    if (!(tail_cutoff_decades > 0.0))
      throw std::invalid_argument("QuadratureConfig: tail_cutoff_decades must be > 0");
    if (max_angle_points < 16)
      throw std::invalid_argument("QuadratureConfig: max_angle_points must be >= 16");
  }
};

/// Raised when a rule exhausts its budget; carries the best estimate reached.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double error_estimate, double tolerance)
      : std::runtime_error(what + " (error estimate " + std::to_string(error_estimate) +
                           ", requested " + std::to_string(tolerance) + ")"),
        error_estimate_(error_estimate),
        tolerance_(tolerance) {}

  double error_estimate() const noexcept { return error_estimate_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  double error_estimate_;
  double tolerance_;
};

template <class T>
struct Result {
  T value;
  double error = 0.0;
  int evaluations = 0;
};

/// Lateral-momentum domain split at the light line k_light = omega / c.
struct BranchSplitDomain {
  double k_light;

  explicit BranchSplitDomain(double k) : k_light(k) {
    if (!(k > 0.0)) throw std::invalid_argument("BranchSplitDomain: k_light must be > 0");
  }

  /// Transverse wavenumber with the outgoing/decaying branch Im k_perp >= 0.
  std::complex<double> k_perp(double k_par) const {
    if (k_par <= k_light) return {std::sqrt((k_light - k_par) * (k_light + k_par)), 0.0};
    return {0.0, std::sqrt((k_par - k_light) * (k_par + k_light))};
  }
};

namespace detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }
template <class Derived>
double magnitude(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

template <class T>
T zero_like(const T& x) {
  if constexpr (std::is_arithmetic_v<T>) {
    return T(0);
  } else if constexpr (std::is_same_v<T, std::complex<double>>) {
    return T(0.0, 0.0);
  } else {
    return T::Zero(x.rows(), x.cols());
  }
}

// Kronrod 15-point abscissae (descending) and weights; Gauss 7-point weights
// belong to the odd-indexed abscissae and the centre.
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Segment {
  double a;
  double b;
  T value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

// One 15-point panel; error estimate follows QUADPACK's qk15.
template <class F>
auto kronrod15(F& f, double a, double b) {
  using T = std::decay_t<decltype(f(a))>;
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<T, 15> values;
  values[7] = f(centre);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    values[j] = f(centre - dx);
    values[14 - j] = f(centre + dx);
  }

  T kronrod = values[7] * wgk[7];
  T gauss = values[7] * wg[3];
  double resabs = magnitude(values[7]) * wgk[7];
  for (int j = 0; j < 7; ++j) {
    kronrod += (values[j] + values[14 - j]) * wgk[j];
    resabs += (magnitude(values[j]) + magnitude(values[14 - j])) * wgk[j];
    if (j % 2 == 1) gauss += (values[j] + values[14 - j]) * wg[j / 2];
  }
  const T mean = kronrod * 0.5;
  double resasc = magnitude(values[7] - mean) * wgk[7];
  for (int j = 0; j < 7; ++j)
    resasc += (magnitude(values[j] - mean) + magnitude(values[14 - j] - mean)) * wgk[j];

  kronrod *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = magnitude(T(kronrod - gauss * half));
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
  return Segment<T>{a, b, kronrod, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// f may return double, std::complex<double> or a fixed-size Eigen matrix.
template <class F>
auto integrate_interval(F&& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  using T = std::decay_t<decltype(f(a))>;
  std::priority_queue<detail::Segment<T>> heap;
  auto first = detail::kronrod15(f, a, b);
  T total = first.value;
  double total_err = first.error;
  int evaluations = 15;
  heap.push(std::move(first));

  auto tolerance = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * detail::magnitude(total)); };
  while (total_err > tolerance()) {
    if (static_cast<int>(heap.size()) >= cfg.max_subdivisions)
      throw QuadratureError("integrate_interval: no convergence within max_subdivisions", total_err,
                            tolerance());
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      throw QuadratureError("integrate_interval: interval collapsed to machine precision", total_err,
                            tolerance());
    auto left = detail::kronrod15(f, worst.a, mid);
    auto right = detail::kronrod15(f, mid, worst.b);
    evaluations += 30;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
  }

  // Re-sum to shed the drift accumulated by incremental updates.
  T sum = detail::zero_like(total);
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return Result<T>{sum, err, evaluations};
}

/// Integral over the propagating band k_par in [0, k_light]. The integrand
/// f(k_par, k_perp) is the density per dk_par and may carry a 1/k_perp factor.
template <class F>
auto integrate_propagating(F&& f, const BranchSplitDomain& domain, const QuadratureConfig& cfg) {
  using T = std::decay_t<std::invoke_result_t<F&, double, std::complex<double>>>;
  const double k = domain.k_light;
  auto mapped = [&](double theta) -> T {
    const double kp = k * std::cos(theta);
    return f(k * std::sin(theta), std::complex<double>(kp, 0.0)) * kp;
  };
  return integrate_interval(mapped, 0.0, 0.5 * std::numbers::pi, cfg);
}

/// Integral over the evanescent band k_par > k_light for an integrand decaying
/// like exp(-kappa * decay_length); truncated where kappa * decay_length
/// reaches cfg.tail_cutoff_decades.
template <class F>
auto integrate_evanescent(F&& f, const BranchSplitDomain& domain, double decay_length,
                          const QuadratureConfig& cfg) {
  if (!(decay_length > 0.0))
    throw std::invalid_argument("integrate_evanescent: decay_length must be > 0");
  const double k = domain.k_light;
  const double u_max = std::asinh(cfg.tail_cutoff_decades / (k * decay_length));
  using T = std::decay_t<std::invoke_result_t<F&, double, std::complex<double>>>;
  auto mapped = [&](double u) -> T {
    const double s = std::sinh(u);
    return f(k * std::cosh(u), std::complex<double>(0.0, k * s)) * (k * s);
  };
  return integrate_interval(mapped, 0.0, u_max, cfg);
}

/// Whole half line k_par in [0, inf): propagating plus evanescent bands.
template <class F>
auto integrate_lateral_momentum(F&& f, const BranchSplitDomain& domain, double decay_length,
                                const QuadratureConfig& cfg) {
  auto prop = integrate_propagating(f, domain, cfg);
  auto evan = integrate_evanescent(f, domain, decay_length, cfg);
  using T = decltype(prop.value);
  return Result<T>{T(prop.value + evan.value), prop.error + evan.error,
                   prop.evaluations + evan.evaluations};
}

/// Periodic trapezoid rule over phi in [0, 2 pi), doubling the node count
/// until two successive levels agree. Spectrally accurate for smooth
/// periodic integrands.
template <class F>
auto integrate_angle(F&& f, const QuadratureConfig& cfg) {
  cfg.validate();
  using T = std::decay_t<decltype(f(0.0))>;
  constexpr double two_pi = 2.0 * std::numbers::pi;

  int n = 8;
  T sum = f(0.0);
  for (int j = 1; j < n; ++j) sum += f(two_pi * j / n);
  T previous = sum * (two_pi / n);
  int evaluations = n;

  while (true) {
    // Add the midpoints of the current level.
    for (int j = 0; j < n; ++j) sum += f(two_pi * (j + 0.5) / n);
    evaluations += n;
    n *= 2;
    const T current = sum * (two_pi / n);
    const double diff = detail::magnitude(T(current - previous));
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * detail::magnitude(current));
    if (n >= 16 && diff <= tol) return Result<T>{current, diff, evaluations};
    if (2 * n > cfg.max_angle_points)
      throw QuadratureError("integrate_angle: no convergence within max_angle_points", diff, tol);
    previous = current;
  }
}

}  // namespace latvdw::quadrature
