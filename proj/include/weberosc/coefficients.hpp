#pragma once

/// \file
/// Physical inputs and the coefficients of x'' + A x' - (a t^2 + b t + c) x = mu
/// they induce. Shared by the analytic solver and the numerical oracle.

#include <optional>

namespace weberosc {

/// SI units throughout. Defaults describe the desk-scale sample problem.
struct PhysicalConfig {
  double m = 1.0;
  double k1 = 10.0;
  double k2 = 10.0;
  double omega0 = 3.0;
  double q = 0.1;
  double A = 0.5;
  double mu = 0.0;
  double L = 1.0;
  double H = 3.0;
  double g = 9.81;
  double x0 = 0.5;
  double v0 = 0.0;
  double z0 = 0.0;
  double zdot0 = 0.0;
  double t_end = 10.0;

  /// Throws ConfigError unless m, k1, omega0, L, t_end > 0 and k2, A >= 0
  /// and every field is finite.
  void validate() const;
};

enum class Branch { hermite_kummer, constant_q };

struct WeberCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double A = 0.0;
  /// Order parameter of the Hermite/Kummer basis; empty when a = 0.
  std::optional<double> beta;

  Branch branch() const {
    return a > 0 ? Branch::hermite_kummer : Branch::constant_q;
  }
};

template <class T>
struct CoefficientTerms {
  T a;
  T b;
  T c;
};

/// a = omega0^2 q^2, b = -2 q omega0^2, c = omega0^2 - k2/m, in any field type.
template <class T>
CoefficientTerms<T> coefficient_terms(const T& omega0, const T& q, const T& k2,
                                      const T& m) {
  const T w2 = omega0 * omega0;
  return {w2 * q * q, -(T(2) * q * w2), w2 - k2 / m};
}

/// beta = (b^2 - a (A^2 + 4c)) / (8 a^{3/2}); sqrt_a is passed in so exact
/// arithmetic types can supply it.
template <class T>
T beta_of(const CoefficientTerms<T>& k, const T& sqrt_a, const T& A) {
  return (k.b * k.b - k.a * (A * A + T(4) * k.c)) / (T(8) * k.a * sqrt_a);
}

}  // namespace weberosc
