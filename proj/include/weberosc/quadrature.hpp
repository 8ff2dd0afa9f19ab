#pragma once

/// \file
/// Globally adaptive Gauss-Kronrod (10/21 point) quadrature.

#include <functional>

namespace weberosc::quad {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  int max_intervals = 4000;
};

struct QuadratureResult {
  double value;
  double abs_error;
  int evaluations;
};

/// Integrates f over [lo, hi], always splitting the interval with the largest
/// error estimate. Converges once the summed error estimate is below
/// max(abs_tol, rel_tol * |I|); a floor of 100 eps times the integral of |f|
/// keeps roundoff-limited integrals from being reported as failures.
/// Throws QuadratureError when max_intervals is reached or f is not finite.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    const QuadratureOptions& opts = {});

}  // namespace weberosc::quad
