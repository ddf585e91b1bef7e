#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include <latvdw/quadrature.hpp>
#include <latvdw/specfun.hpp>

namespace {

using latvdw::specfun::bessel_j;
using latvdw::specfun::bessel_y;
using latvdw::specfun::hankel1;
constexpr double pi = std::numbers::pi;

struct Frozen {
  int order;
  double x;
  double value;
};

// Reference values from 30-digit arbitrary-precision evaluation.
constexpr Frozen frozen_j[] = {
    {0, 1.0, 0.76519768655796655145},   {1, 1.0, 0.44005058574493351596},
    {2, 5.0, 0.046565116277752215532},  {2, 3.0, 0.48609126058589107691},
    {3, 2.5, 0.21660039103911352477},   {1, 0.001, 0.00049999993750000261457},
    {0, 10.0, -0.2459357644513483352},  {1, 11.5, -0.22837862066532347461},
    {1, 30.0, -0.11875106261662293652}, {2, 77.7, -0.0027415502048365961417},
    {3, 50.0, 0.092734804061634432021},
};
constexpr Frozen frozen_y[] = {
    {0, 1.0, 0.088256964215676957983},  {1, 1.0, -0.78121282130028871655},
    {2, 3.0, -0.16040039348492372968},  {1, 0.001, -636.62216723113941482},
    {3, 2.5, -0.75605549675367099684},  {2, 12.5, 0.14660018579866909854},
    {1, 30.0, 0.084425570661747234891}, {2, 77.7, -0.090489412155408343835},
};

// J_n(x) = (1 / 2 pi) int_0^{2 pi} cos(n t - x sin t) dt; the periodic
// trapezoid rule converges geometrically once the node count exceeds x.
double j_integral(int n, double x) {
  constexpr int nodes = 1024;
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double t = 2.0 * pi * i / nodes;
    sum += std::cos(n * t - x * std::sin(t));
  }
  return sum / nodes;
}

// Y_n(x) = (1/pi) int_0^pi sin(x sin t - n t) dt
//          - (1/pi) int_0^inf (e^{n t} + (-1)^n e^{-n t}) e^{-x sinh t} dt
double y_integral(int n, double x) {
  latvdw::quadrature::QuadratureConfig cfg{1e-12, 1e-13, 4000, 40.0, 1 << 16};
  auto oscillatory = [&](double t) { return std::sin(x * std::sin(t) - n * t); };
  const double first = latvdw::quadrature::integrate_interval(oscillatory, 0.0, pi, cfg).value;
  double upper = 1.0;
  while (x * std::sinh(upper) - n * upper < 80.0) upper *= 1.25;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  auto decaying = [&](double t) {
    return (std::exp(n * t - x * std::sinh(t)) + sign * std::exp(-n * t - x * std::sinh(t)));
  };
  const double second = latvdw::quadrature::integrate_interval(decaying, 0.0, upper, cfg).value;
  return (first - second) / pi;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

TEST(Specfun, FrozenFirstKindValues) {
  for (const auto& f : frozen_j)
    EXPECT_NEAR(bessel_j(f.order, f.x), f.value, 1e-12 * std::abs(f.value)) << "J" << f.order << "(" << f.x << ")";
}

TEST(Specfun, FrozenSecondKindValues) {
  for (const auto& f : frozen_y)
    EXPECT_NEAR(bessel_y(f.order, f.x), f.value, 1e-12 * std::abs(f.value)) << "Y" << f.order << "(" << f.x << ")";
}

TEST(Specfun, FirstKindMatchesIntegralRepresentation) {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    const double x = log_uniform(rng, 1e-3, 100.0);
    for (int n = 0; n <= 3; ++n) {
      const double scale = std::abs(hankel1(n, x));
      EXPECT_NEAR(bessel_j(n, x), j_integral(n, x), 1e-10 * scale) << "n=" << n << " x=" << x;
    }
  }
}

TEST(Specfun, SecondKindMatchesIntegralRepresentation) {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 60; ++i) {
    const double x = log_uniform(rng, 1e-2, 100.0);
    for (int n = 0; n <= 3; ++n) {
      const double scale = std::abs(hankel1(n, x));
      EXPECT_NEAR(bessel_y(n, x), y_integral(n, x), 1e-10 * scale) << "n=" << n << " x=" << x;
    }
  }
}

TEST(Specfun, SmallArgumentLimits) {
  const double x = 1e-6;
  EXPECT_NEAR(bessel_j(1, x), x / 2.0, 1e-12 * x);
  EXPECT_NEAR(bessel_y(1, x), -2.0 / (pi * x), 1e-6 * 2.0 / (pi * x));
  EXPECT_NEAR(bessel_j(1, 1e-3), 1e-3 / 2.0 - 1e-9 / 16.0 + 1e-15 / 384.0, 1e-19);
}

TEST(Specfun, HankelIsJPlusIY) {
  for (double x : {0.01, 0.7, 3.0, 14.0, 14.5, 60.0}) {
    for (int n = 0; n <= 3; ++n) {
      const auto h = hankel1(n, x);
      EXPECT_EQ(h.real(), bessel_j(n, x));
      EXPECT_EQ(h.imag(), bessel_y(n, x));
    }
  }
}

TEST(Specfun, HankelAsymptoticModulus) {
  const double x = 50.0;
  EXPECT_NEAR(std::abs(hankel1(1, x)), std::sqrt(2.0 / (pi * x)), 0.01 * std::sqrt(2.0 / (pi * x)));
}

TEST(Specfun, HankelAtThree) {
  const auto h = hankel1(2, 3.0);
  EXPECT_NEAR(h.real(), 0.48609126058589107691, 1e-14);
  EXPECT_NEAR(h.imag(), -0.16040039348492372968, 1e-14);
}

TEST(Specfun, WronskianAtSevenTenths) {
  const double x = 0.7;
  const double w = bessel_j(2, x) * bessel_y(1, x) - bessel_j(1, x) * bessel_y(2, x);
  EXPECT_NEAR(w, 2.0 / (pi * x), 1e-12 * 2.0 / (pi * x));
}

TEST(SpecfunProperty, Wronskian) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    const double x = log_uniform(rng, 1e-3, 100.0);
    for (int n = 0; n <= 2; ++n) {
      const double w = bessel_j(n + 1, x) * bessel_y(n, x) - bessel_j(n, x) * bessel_y(n + 1, x);
      const double expected = 2.0 / (pi * x);
      ASSERT_NEAR(w, expected, 1e-10 * expected) << "n=" << n << " x=" << x;
    }
  }
}

TEST(SpecfunProperty, ThreeTermRecurrence) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 2000; ++i) {
    const double x = log_uniform(rng, 0.01, 80.0);
    for (int n = 1; n <= 2; ++n) {
      const double lhs_j = bessel_j(n - 1, x) + bessel_j(n + 1, x);
      const double rhs_j = 2.0 * n / x * bessel_j(n, x);
      const double scale_j = std::max({std::abs(bessel_j(n - 1, x)), std::abs(bessel_j(n + 1, x)), std::abs(rhs_j)});
      ASSERT_NEAR(lhs_j, rhs_j, 1e-9 * scale_j) << "J n=" << n << " x=" << x;
      const double lhs_y = bessel_y(n - 1, x) + bessel_y(n + 1, x);
      const double rhs_y = 2.0 * n / x * bessel_y(n, x);
      const double scale_y = std::max({std::abs(bessel_y(n - 1, x)), std::abs(bessel_y(n + 1, x)), std::abs(rhs_y)});
      ASSERT_NEAR(lhs_y, rhs_y, 1e-9 * scale_y) << "Y n=" << n << " x=" << x;
    }
  }
}

TEST(SpecfunProperty, SeriesAndAsymptoticAgreeInOverlap) {
  namespace d = latvdw::specfun::detail;
  for (int i = 0; i <= 60; ++i) {
    const long double x = 13.0L + 3.0L * i / 60.0L;
    for (int n = 0; n <= 3; ++n) {
      const auto [ja, ya] = d::jy_asymptotic<long double>(n, x);
      const long double js = d::j_series<long double>(n, x);
      const long double ys = d::y_series<long double>(n, x);
      const double scale = std::sqrt(static_cast<double>(js * js + ys * ys));
      EXPECT_NEAR(static_cast<double>(ja), static_cast<double>(js), 1e-9 * scale) << "n=" << n << " x=" << static_cast<double>(x);
      EXPECT_NEAR(static_cast<double>(ya), static_cast<double>(ys), 1e-9 * scale) << "n=" << n << " x=" << static_cast<double>(x);
    }
  }
}

TEST(SpecfunProperty, ContinuousAcrossSwitchover) {
  const double x = latvdw::specfun::series_limit;
  const double below = std::nextafter(x, 0.0);
  const double above = std::nextafter(x, 100.0);
  for (int n = 0; n <= 3; ++n) {
    EXPECT_NEAR(bessel_j(n, below), bessel_j(n, above), 1e-12);
    EXPECT_NEAR(bessel_y(n, below), bessel_y(n, above), 1e-12);
  }
}

TEST(Specfun, DomainErrors) {
  EXPECT_THROW(bessel_j(1, 0.0), std::domain_error);
  EXPECT_THROW(bessel_j(1, -1.0), std::domain_error);
  EXPECT_THROW(bessel_y(2, 0.0), std::domain_error);
  EXPECT_THROW(bessel_j(4, 1.0), std::domain_error);
  EXPECT_THROW(bessel_y(-1, 1.0), std::domain_error);
  EXPECT_THROW(hankel1(1, -2.0), std::domain_error);
  EXPECT_THROW(bessel_j(0, std::nan("")), std::domain_error);
}

TEST(Specfun, LongDoubleInstantiation) {
  EXPECT_NEAR(static_cast<double>(bessel_j<long double>(1, 1.0L)), 0.44005058574493351596, 1e-15);
  EXPECT_NEAR(static_cast<double>(bessel_y<long double>(1, 1.0L)), -0.78121282130028871655, 1e-15);
}

}  // namespace
