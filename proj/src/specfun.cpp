#include "weberosc/specfun.hpp"

#include <cmath>
#include <optional>

#include "series.hpp"
#include "weberosc/errors.hpp"

namespace weberosc::specfun {

using detail::CompensatedSum;
using detail::kEps;
using detail::real;
using detail::SeriesValue;

void SeriesControl::validate() const {
  if (max_terms < 1) {
    throw DomainError("SeriesControl: max_terms must be >= 1");
  }
  if (!(rel_tol > 0 && rel_tol < 1)) {
    throw DomainError("SeriesControl: rel_tol must lie in (0, 1)");
  }
}

double ln_gamma(double x) {
  if (!(x > 0)) {
    throw DomainError("ln_gamma: argument must be positive");
  }
  return std::lgamma(x);
}

double recip_gamma(double x) {
  return static_cast<double>(detail::recip_gamma(x));
}

namespace {

SeriesValue kummer_eval(real a, real b, real z, const SeriesControl& ctl) {
  if (detail::is_nonpositive_integer(b)) {
    throw PoleError("kummer_1f1: b is a non-positive integer");
  }
  if (z >= 0) {
    return detail::kummer_series(a, b, z, ctl);
  }
  const SeriesValue s = detail::kummer_series(b - a, b, -z, ctl);
  const real scale = std::exp(z);
  return {scale * s.value, scale * s.error};
}

struct HermiteEval {
  real value;
  real error;
};

HermiteEval hermite_series(real nu, real z, const SeriesControl& ctl) {
  const real z2 = z * z;
  const real g_even = detail::recip_gamma((1 - nu) / 2);
  const real g_odd = detail::recip_gamma(-nu / 2);
  real value = 0;
  real error = 0;
  if (g_even != 0) {
    const SeriesValue s = detail::kummer_series(-nu / 2, 0.5L, z2, ctl);
    value += g_even * s.value;
    error += std::fabs(g_even) * s.error;
  }
  if (g_odd != 0 && z != 0) {
    const SeriesValue s = detail::kummer_series((1 - nu) / 2, 1.5L, z2, ctl);
    value -= 2 * z * g_odd * s.value;
    error += std::fabs(2 * z * g_odd) * s.error;
  }
  const real scale = detail::kSqrtPi * std::exp2(nu);
  return {scale * value, scale * error};
}

// (2z)^nu sum_n (-nu/2)_n ((1-nu)/2)_n / n! (-1/z^2)^n for z > 0. The
// expansion terminates for non-negative integer nu and is otherwise
// asymptotic; the smallest term reached bounds its truncation error.
std::optional<HermiteEval> hermite_asymptotic(real nu, real z) {
  const real w = -1 / (z * z);
  const real turn = std::fabs(nu) / 2 + 1;
  real term = 1;
  CompensatedSum sum(1);
  real magnitude = 1;
  real truncation = 0;
  bool done = false;
  for (int n = 0; n < 2000; ++n) {
    const real next =
        term * (n - nu / 2) * (n + (1 - nu) / 2) / (n + 1) * w;
    if (next == 0) {
      done = true;
      break;
    }
    if (n > turn && std::fabs(next) > std::fabs(term)) {
      truncation = std::fabs(term);
      done = true;
      break;
    }
    term = next;
    sum.add(term);
    magnitude += std::fabs(term);
    if (std::fabs(term) < kEps * std::fabs(sum.value())) {
      done = true;
      break;
    }
  }
  if (!done) {
    return std::nullopt;
  }
  const real scale = std::pow(2 * z, nu);
  return HermiteEval{scale * sum.value(),
                     scale * (truncation + kEps * magnitude)};
}

real hermite_eval(real nu, real z, const SeriesControl& ctl) {
  std::optional<HermiteEval> best;
  if (z > 0 && z * z >= 4) {
    best = hermite_asymptotic(nu, z);
    if (best && best->error <= 4 * kEps * std::fabs(best->value)) {
      return best->value;
    }
  }
  try {
    const HermiteEval s = hermite_series(nu, z, ctl);
    if (!best || s.error < best->error) {
      best = s;
    }
  } catch (const ConvergenceError&) {
    if (!best) {
      throw;
    }
  }
  return best->value;
}

}  // namespace

double kummer_1f1(double a, double b, double z, const SeriesControl& ctl) {
  ctl.validate();
  return static_cast<double>(kummer_eval(a, b, z, ctl).value);
}

double kummer_1f1_dz(double a, double b, double z, const SeriesControl& ctl) {
  ctl.validate();
  if (detail::is_nonpositive_integer(b)) {
    throw PoleError("kummer_1f1_dz: b is a non-positive integer");
  }
  if (a == 0) {
    return 0.0;
  }
  const real ra = a;
  const real rb = b;
  return static_cast<double>(ra / rb * kummer_eval(ra + 1, rb + 1, z, ctl).value);
}

double hermite_h(double nu, double z, const SeriesControl& ctl) {
  ctl.validate();
  return static_cast<double>(hermite_eval(nu, z, ctl));
}

double hermite_h_dz(double nu, double z, const SeriesControl& ctl) {
  ctl.validate();
  if (nu == 0) {
    return 0.0;
  }
  const real rnu = nu;
  return static_cast<double>(2 * rnu * hermite_eval(rnu - 1, z, ctl));
}

namespace {

// Below this x the power series of the J0 integral keeps ~15 digits.
constexpr double kJ0IntegralSeriesLimit = 8.0;

// Estimated relative error above which hyp_1f2 refuses to answer.
constexpr real kPrecisionFloor = 1e-8L;

bool is_j0_integral_family(double a, double b1, double b2) {
  return a == 0.5 && ((b1 == 1.0 && b2 == 1.5) || (b1 == 1.5 && b2 == 1.0));
}

}  // namespace

double hyp_1f2(double a, double b1, double b2, double z,
               const SeriesControl& ctl) {
  ctl.validate();
  if (detail::is_nonpositive_integer(b1) ||
      detail::is_nonpositive_integer(b2)) {
    throw PoleError("hyp_1f2: lower parameter is a non-positive integer");
  }
  if (z < 0 && is_j0_integral_family(a, b1, b2)) {
    const double x = 2 * std::sqrt(-z);
    if (x > kJ0IntegralSeriesLimit) {
      return bessel_j0_integral(x) / x;
    }
  }
  const real ra = a;
  const real rb1 = b1;
  const real rb2 = b2;
  const real rz = z;
  const SeriesValue s = detail::sum_hypergeometric(
      [=](auto n) {
        using T = decltype(n);
        return (T(ra) + n) * T(rz) / ((T(rb1) + n) * (T(rb2) + n) * (n + 1));
      },
      ctl, "hyp_1f2");
  if (s.error > kPrecisionFloor * std::fabs(s.value)) {
    throw ConvergenceError("hyp_1f2: cancellation exceeds working precision");
  }
  return static_cast<double>(s.value);
}

}  // namespace weberosc::specfun
