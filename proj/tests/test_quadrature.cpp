#include <cmath>
#include <limits>
#include <numbers>

#include <doctest.h>

#include "weberosc/errors.hpp"
#include "weberosc/quadrature.hpp"

using namespace weberosc;
using quad::integrate_adaptive;

TEST_CASE("single Kronrod panel is exact up to degree 31") {
  const quad::QuadratureOptions one_panel{1.0, 1.0, 1};
  for (int deg = 0; deg <= 31; ++deg) {
    const auto r = integrate_adaptive(
        [deg](double x) { return std::pow(x, deg); }, -1.0, 1.0, one_panel);
    const double want = deg % 2 == 0 ? 2.0 / (deg + 1) : 0.0;
    INFO("degree " << deg);
    CHECK(std::fabs(r.value - want) < 1e-14);
  }
}

TEST_CASE("embedded Gauss rule is exact up to degree 19") {
  // The error estimate compares Kronrod with Gauss; it collapses to the
  // roundoff floor only when both rules are exact.
  for (int deg : {18, 19}) {
    const auto r = integrate_adaptive(
        [deg](double x) { return std::pow(x, deg); }, 0.0, 1.0, {1e-16, 0, 1});
    CHECK(r.abs_error < 1e-13);
  }
  const auto r = integrate_adaptive([](double x) { return std::pow(x, 20); },
                                    -1.0, 1.0, {1.0, 1.0, 1});
  CHECK(r.abs_error > 1e-12);
}

TEST_CASE("smooth and singular integrands") {
  auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                              std::numbers::pi);
  CHECK(std::fabs(r.value - 2.0) < 1e-13);
  r = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0);
  CHECK(std::fabs(r.value - 2.0 / 3.0) < 1e-11);
  r = integrate_adaptive([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
  CHECK(std::fabs(r.value - std::sqrt(std::numbers::pi)) < 1e-13);
  r = integrate_adaptive([](double x) { return std::cos(200 * x); }, 0.0, 1.0);
  CHECK(std::fabs(r.value - std::sin(200.0) / 200) < 1e-13);
}

TEST_CASE("reversed and empty intervals") {
  const auto f = [](double x) { return x * x; };
  CHECK(integrate_adaptive(f, 2.0, 2.0).value == 0.0);
  CHECK(integrate_adaptive(f, 1.0, 0.0).value ==
        doctest::Approx(-1.0 / 3).epsilon(1e-14));
}

TEST_CASE("failures are reported") {
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1 / x; }, 0.0, 1.0),
                  QuadratureError);
  CHECK_THROWS_AS(
      integrate_adaptive([](double x) { return std::sin(1 / x); }, 1e-9, 1.0,
                         {1e-14, 0.0, 20}),
      QuadratureError);
  CHECK_THROWS_AS(integrate_adaptive([](double) { return 1.0; }, 0.0, 1.0,
                                     {-1.0, 0.0, 10}),
                  DomainError);
}
