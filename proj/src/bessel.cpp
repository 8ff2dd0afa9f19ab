#include <cmath>
#include <numbers>

#include "series.hpp"
#include "weberosc/errors.hpp"
#include "weberosc/specfun.hpp"

namespace weberosc::specfun {

using detail::CompensatedSum;
using detail::real;

namespace {

// Power series below, Hankel expansion above. At x = 15 the largest series
// term is ~7e4 (harmless in extended precision) and the smallest Hankel term
// is ~e^{-2x} ~ 1e-13.
constexpr double kSeriesLimit = 15.0;

// J_order(x) = (x/2)^order sum_k (-x^2/4)^k / (k! (k+order)!), order 0 or 1.
double bessel_series(int order, double x) {
  const real q = -static_cast<real>(x) * x / 4;
  real term = order == 0 ? 1 : static_cast<real>(x) / 2;
  CompensatedSum sum(term);
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<real>(k) * (k + order));
    sum.add(term);
    if (std::fabs(term) < 1e-21L) {
      break;
    }
  }
  return static_cast<double>(sum.value());
}

// Hankel asymptotic expansion, x >= kSeriesLimit.
double bessel_hankel(int order, double x) {
  const double mu = 4.0 * order * order;
  double p = 1.0;
  double q = 0.0;
  double coeff = 1.0;  // a_k(order) / x^k
  double last = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    coeff *= (mu - odd * odd) / (8.0 * k * x);
    const double mag = std::fabs(coeff);
    if (mag > last) {
      break;
    }
    last = mag;
    // k even contributes to P with sign (-1)^{k/2}; k odd to Q with
    // sign (-1)^{(k-1)/2}.
    switch (k % 4) {
      case 0: p += coeff; break;
      case 1: q += coeff; break;
      case 2: p -= coeff; break;
      case 3: q -= coeff; break;
    }
    if (mag < 1e-17) {
      break;
    }
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  // cos/sin of x - pi/4 (order 0) and x - 3pi/4 (order 1), without forming
  // the shifted argument.
  double cos_chi;
  double sin_chi;
  if (order == 0) {
    cos_chi = (c + s) * std::numbers::sqrt2 / 2;
    sin_chi = (s - c) * std::numbers::sqrt2 / 2;
  } else {
    cos_chi = (s - c) * std::numbers::sqrt2 / 2;
    sin_chi = -(s + c) * std::numbers::sqrt2 / 2;
  }
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

double bessel_j0(double x) {
  const double ax = std::fabs(x);
  return ax < kSeriesLimit ? bessel_series(0, ax) : bessel_hankel(0, ax);
}

double bessel_j1(double x) {
  const double ax = std::fabs(x);
  const double v =
      ax < kSeriesLimit ? bessel_series(1, ax) : bessel_hankel(1, ax);
  return x < 0 ? -v : v;
}

double bessel_j0_zero(int k) {
  if (k < 1) {
    throw DomainError("bessel_j0_zero: k must be >= 1");
  }
  const double beta = (k - 0.25) * std::numbers::pi;
  const double ib = 1.0 / (8.0 * beta);
  const double ib2 = ib * ib;
  // McMahon: beta + 1/(8b) - 124/(3 (8b)^3) + 120928/(15 (8b)^5) - ...
  double alpha = beta + ib * (1.0 - ib2 * (124.0 / 3.0 - ib2 * (120928.0 / 15.0)));
  for (int it = 0; it < 20; ++it) {
    const double step = bessel_j0(alpha) / bessel_j1(alpha);
    alpha += step;
    if (std::fabs(step) <= 1e-15 * alpha) {
      break;
    }
  }
  return alpha;
}

double bessel_j0_integral(double x) {
  const double ax = std::fabs(x);
  double value;
  if (ax <= 8.0) {
    // x sum_k (-x^2/4)^k / ((k!)^2 (2k+1))
    const real q = -static_cast<real>(ax) * ax / 4;
    real term = 1;
    CompensatedSum sum(1);
    for (int k = 1; k < 200; ++k) {
      term *= q / (static_cast<real>(k) * k);
      const real contribution = term / (2 * k + 1);
      sum.add(contribution);
      if (std::fabs(contribution) < 1e-21L) {
        break;
      }
    }
    value = static_cast<double>(ax * sum.value());
  } else {
    // Neumann series: \int_0^x J0 = 2 sum_k J_{2k+1}(x). All orders come from
    // one Miller backward recurrence normalized by J0 + 2 sum_k J_{2k} = 1.
    const int top =
        2 * (static_cast<int>(ax + 15.0 * std::cbrt(ax) + 20.0) / 2 + 1);
    const double two_over_x = 2.0 / ax;
    double j_next = 0.0;  // J_{n+1}
    double j = 1e-300;    // J_n, n = top
    double odd = 0.0;
    double even = 0.0;
    for (int n = top; n > 0; --n) {
      const double j_prev = n * two_over_x * j - j_next;  // J_{n-1}
      j_next = j;
      j = j_prev;
      // j now holds J_{n-1}
      if ((n - 1) % 2 == 1) {
        odd += j;
      } else if (n - 1 > 0) {
        even += j;
      }
      if (std::fabs(j) > 1e250) {
        j *= 1e-250;
        j_next *= 1e-250;
        odd *= 1e-250;
        even *= 1e-250;
      }
    }
    const double norm = j + 2.0 * even;
    value = 2.0 * odd / norm;
  }
  return x < 0 ? -value : value;
}

}  // namespace weberosc::specfun
