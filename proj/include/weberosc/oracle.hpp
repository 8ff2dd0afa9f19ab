#pragma once

/// \file
/// Reference integrator for x'' + A x' - (a t^2 + b t + c) x = mu, kept free
/// of any special-function code so it can validate the closed forms.

#include <functional>
#include <vector>

#include "weberosc/coefficients.hpp"

namespace weberosc::oracle {

struct OdeOptions {
  double rel_tol = 1e-10;
  /// Integration stops (without error) once |x| exceeds this bound.
  double amplitude_limit = 10.0;
};

struct OdeResult {
  std::vector<double> grid;
  std::vector<double> x;
  std::vector<double> xdot;
  /// Sum of the local error estimates of all accepted steps.
  double est_error = 0.0;
  int steps = 0;
  /// True when the amplitude guard ended the run before the last grid point.
  bool stopped = false;
};

/// Dormand-Prince 5(4) with step-end landing on every point of the uniform
/// grid t_i = i t_end / (n_points - 1). Throws StepUnderflowError carrying
/// the last reached t when the step size collapses.
OdeResult integrate_ode(const WeberCoefficients& k, double mu, double x0,
                        double v0, double t_end, int n_points,
                        const OdeOptions& opts = {});

/// Same, on a caller-supplied strictly increasing grid starting at 0.
OdeResult integrate_ode(const WeberCoefficients& k, double mu, double x0,
                        double v0, const std::vector<double>& grid,
                        const OdeOptions& opts = {});

struct CompareReport {
  double max_rel_err = 0.0;
  double argmax_t = 0.0;
};

/// max_i |x_analytic(t_i) - x_i| / max(1, max_i |x_i|) over the points the
/// numeric run actually reached.
CompareReport compare(const std::function<double(double)>& analytic,
                      const OdeResult& numeric);

}  // namespace weberosc::oracle
