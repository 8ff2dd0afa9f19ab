#pragma once

/// \file
/// Closed-form solution of x'' + A x' - (a t^2 + b t + c) x = 0.
///
/// For a > 0 the fundamental pair is
///   x1 = E(t) H_{beta-1/2}(u),   x2 = E(t) 1F1(1/4 - beta/2; 1/2; u^2),
/// with E(t) = exp(-(a t^2 + t (b + sqrt(a) A)) / (2 sqrt(a))) and
/// u = (b + 2 a t) / (2 a^{3/4}). For a = 0 the equation has constant
/// coefficients and is solved by the classical damped-oscillator formulas.

#include "weberosc/coefficients.hpp"

namespace weberosc::weber {

WeberCoefficients map_params(const PhysicalConfig& config);

/// Hermite and Kummer arguments at time t.
double hermite_argument(const WeberCoefficients& k, double t);
double kummer_argument(const WeberCoefficients& k, double t);

struct BasisValues {
  double x1;
  double x2;
  double x1dot;
  double x2dot;
};

/// Basis pair and exact derivatives. Requires a > 0; throws OverflowError
/// with the failing t when a value leaves the double range.
BasisValues evaluate_basis(const WeberCoefficients& k, double t);

/// W = x1 x2' - x2 x1'. Satisfies W(t) = W(0) e^{-A t}.
double wronskian(const WeberCoefficients& k, double t);

struct ClosedFormSolution {
  WeberCoefficients coeffs;
  double C1 = 0.0;
  double C2 = 0.0;
  Branch branch = Branch::constant_q;
};

struct State {
  double x;
  double xdot;
};

/// Fits C1, C2 to x(0) = x0, x'(0) = v0. On the Hermite/Kummer branch this
/// solves the 2x2 system at t = 0 and throws DegenerateBasisError when
/// |W(0)| < 1e-300. On the constant branch C1, C2 are the constants of the
/// over-, under- or critically damped form, chosen by the sign of A^2 + 4c
/// (|A^2 + 4c| < 1e-12 counts as critical).
ClosedFormSolution solve_ivp(const WeberCoefficients& k, double x0, double v0);

State eval_solution(const ClosedFormSolution& sol, double t);

}  // namespace weberosc::weber
