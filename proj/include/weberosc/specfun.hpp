#pragma once

/// \file
/// Scalar special functions: gamma, Kummer 1F1, Hermite functions of real
/// order, 1F2, Bessel J0/J1 and the zeros of J0.
///
/// All functions are pure and thread-safe.

namespace weberosc::specfun {

/// Truncation policy for the hypergeometric power series.
///
/// A series stops once three consecutive terms fall below
/// `rel_tol * |partial sum|` while the term ratio is below one.
struct SeriesControl {
  int max_terms = 500;
  double rel_tol = 1e-14;

  /// Throws DomainError unless max_terms >= 1 and 0 < rel_tol < 1.
  void validate() const;
};

/// ln Γ(x) for x > 0.
double ln_gamma(double x);

/// 1/Γ(x) as an entire function: exactly zero at 0, -1, -2, ...
double recip_gamma(double x);

/// Kummer's confluent hypergeometric function 1F1(a; b; z).
///
/// Negative z is mapped through 1F1(a;b;z) = e^z 1F1(b-a;b;-z) so the
/// summed tail never alternates. Accumulation is compensated and carried in
/// extended precision.
double kummer_1f1(double a, double b, double z, const SeriesControl& ctl = {});

/// d/dz 1F1(a; b; z) = (a/b) 1F1(a+1; b+1; z).
double kummer_1f1_dz(double a, double b, double z,
                     const SeriesControl& ctl = {});

/// Hermite function H_nu(z) of arbitrary real order.
///
/// Uses the two-Kummer representation with reciprocal gammas, so it reduces
/// to the Hermite polynomials at non-negative integer order. For large
/// positive z, where both Kummer terms grow like e^{z^2} and cancel, the
/// large-argument expansion of (2z)^nu is used instead whenever its error
/// estimate is smaller.
double hermite_h(double nu, double z, const SeriesControl& ctl = {});

/// dH_nu/dz = 2 nu H_{nu-1}(z).
double hermite_h_dz(double nu, double z, const SeriesControl& ctl = {});

/// Generalized hypergeometric 1F2(a; b1, b2; z).
///
/// For the parameter set (1/2; 1, 3/2) at large negative argument the value
/// is taken from the stable J0 integral, since
/// x 1F2(1/2; 1, 3/2; -x^2/4) = \int_0^x J0(s) ds.
/// Elsewhere the power series is used; it throws ConvergenceError when
/// cancellation leaves fewer than about eight significant digits.
double hyp_1f2(double a, double b1, double b2, double z,
               const SeriesControl& ctl = {});

double bessel_j0(double x);
double bessel_j1(double x);

/// \int_0^x J0(s) ds.
double bessel_j0_integral(double x);

/// k-th positive zero of J0 (k >= 1): McMahon seed refined by Newton.
double bessel_j0_zero(int k);

}  // namespace weberosc::specfun
