#pragma once

/// \file
/// Forced oscillation x'' + A x' - (a t^2 + b t + c) x = mu by variation of
/// constants, with the integrands of c1 and c2 expanded in Fourier-Bessel
/// series so that they integrate termwise in closed form.

#include <functional>
#include <vector>

#include "weberosc/coefficients.hpp"
#include "weberosc/quadrature.hpp"
#include "weberosc/weber.hpp"

namespace weberosc::forced {

/// x2(t) / W(t), so that c1' = -mu x2 / W.
double integrand_c1(const WeberCoefficients& k, double t);
/// x1(t) / W(t), so that c2' = mu x1 / W.
double integrand_c2(const WeberCoefficients& k, double t);

/// First root of fn in (t_end, t_end + 5], bracketed on a 0.01 grid and
/// refined by bisection to 1e-10. Throws RootNotFoundError without a sign
/// change.
double find_tbar(const std::function<double(double)>& fn, double t_end);

/// Root of integrand_c1 beyond t_end.
double find_tbar(const WeberCoefficients& k, double t_end);

struct FourierBesselExpansion {
  double t_bar = 0.0;
  std::vector<double> alphas;
  std::vector<double> B;

  int n_terms() const { return static_cast<int>(B.size()); }
};

/// B_k = 2 / (t_bar^2 J1(alpha_k)^2) \int_0^t_bar t fn(t) J0(alpha_k t / t_bar) dt
/// for k = 1..n_terms, alpha_k the zeros of J0.
FourierBesselExpansion fourier_bessel_fit(
    const std::function<double(double)>& fn, double t_bar, int n_terms,
    const quad::QuadratureOptions& opts = {});

/// sum_k B_k J0(alpha_k t / t_bar), 0 <= t <= t_bar.
double eval_expansion(const FourierBesselExpansion& e, double t);

/// \int_0^t of the partial sum: t sum_k B_k 1F2(1/2; 1, 3/2; -(alpha_k t / t_bar)^2 / 4).
double integrate_expansion(const FourierBesselExpansion& e, double t);

/// Relative L2 error of the expansion against fn on n_grid uniform points of
/// [0, 0.95 t_bar].
double reconstruction_error(const FourierBesselExpansion& e,
                            const std::function<double(double)>& fn,
                            int n_grid = 400);

/// Particular integral xbar = c1 x1 + c2 x2 with c1(0) = c2(0) = 0.
///
/// The expansions approximate integrand / scale with scale = |integrand(0)|,
/// keeping B_k of order one; prefactor1 = -mu scale1 and
/// prefactor2 = mu scale2 restore the physical constants.
struct ParticularSolution {
  WeberCoefficients coeffs;
  double mu = 0.0;
  FourierBesselExpansion exp1;
  FourierBesselExpansion exp2;
  double prefactor1 = 0.0;
  double prefactor2 = 0.0;

  double c1(double t) const;
  double c2(double t) const;
  /// xbar and xbar' = c1 x1' + c2 x2'.
  weber::State eval(double t) const;
  /// Largest t at which both expansions are valid.
  double t_max() const;
};

ParticularSolution variation_constants(const WeberCoefficients& k, double mu,
                                       int n_terms, double t_end);

/// c1 and c2 by direct adaptive quadrature of the integrands, for checking
/// the expansion path.
struct DirectConstants {
  double c1;
  double c2;
};
DirectConstants direct_constants(const WeberCoefficients& k, double mu,
                                 double t);

/// Default number of Fourier-Bessel terms: 200 with damping, 30 without.
int default_terms(const WeberCoefficients& k);

struct ForcedSolution {
  ParticularSolution particular;
  weber::ClosedFormSolution homogeneous;

  weber::State eval(double t) const;
};

/// Homogeneous part fitted to (x0 - xbar(0), v0 - xbar'(0)). n_terms <= 0
/// selects default_terms.
ForcedSolution solve_forced_ivp(const PhysicalConfig& config, int n_terms = 0);

}  // namespace weberosc::forced
