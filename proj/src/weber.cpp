#include "weberosc/weber.hpp"

#include <cmath>
#include <string>

#include "weberosc/errors.hpp"
#include "weberosc/specfun.hpp"

namespace weberosc {

void PhysicalConfig::validate() const {
  const double fields[] = {m,  k1, k2, omega0, q,  A,  mu,    L,
                           H,  g,  x0, v0,     z0, zdot0, t_end};
  for (double v : fields) {
    if (!std::isfinite(v)) {
      throw ConfigError("config: all parameters must be finite");
    }
  }
  auto require = [](bool ok, const char* msg) {
    if (!ok) {
      throw ConfigError(std::string("config: ") + msg);
    }
  };
  require(m > 0, "m must be > 0");
  require(k1 > 0, "k1 must be > 0");
  require(k2 >= 0, "k2 must be >= 0");
  require(omega0 > 0, "omega0 must be > 0");
  require(A >= 0, "A must be >= 0");
  require(L > 0, "L must be > 0");
  require(t_end > 0, "t_end must be > 0");
}

namespace weber {

namespace {

constexpr double kCriticalTol = 1e-12;
constexpr double kMinWronskian = 1e-300;

void require_hermite(const WeberCoefficients& k, const char* name) {
  if (k.branch() != Branch::hermite_kummer || !k.beta) {
    throw DomainError(std::string(name) + ": requires a > 0");
  }
}

}  // namespace

WeberCoefficients map_params(const PhysicalConfig& config) {
  const auto terms =
      coefficient_terms(config.omega0, config.q, config.k2, config.m);
  WeberCoefficients k;
  k.a = terms.a;
  k.b = terms.b;
  k.c = terms.c;
  k.A = config.A;
  if (k.a > 0) {
    k.beta = beta_of(terms, std::fabs(config.omega0 * config.q), config.A);
  }
  return k;
}

double hermite_argument(const WeberCoefficients& k, double t) {
  return (k.b + 2 * k.a * t) / (2 * std::pow(k.a, 0.75));
}

double kummer_argument(const WeberCoefficients& k, double t) {
  const double s = k.b + 2 * k.a * t;
  return s * s / (4 * std::pow(k.a, 1.5));
}

constexpr double kMaxKummerArgument = 700.0;

BasisValues evaluate_basis(const WeberCoefficients& k, double t) {
  require_hermite(k, "evaluate_basis");
  const double sqrt_a = std::sqrt(k.a);
  const double quarter_a = std::sqrt(sqrt_a);
  const double nu = *k.beta - 0.5;
  const double u = hermite_argument(k, t);
  const double u2 = kummer_argument(k, t);
  const double alpha = 0.25 - *k.beta / 2;

  const double e = std::exp(-(k.a * t * t + t * (k.b + sqrt_a * k.A)) /
                            (2 * sqrt_a));
  const double de = -(2 * k.a * t + k.b + sqrt_a * k.A) / (2 * sqrt_a);

  double h = 0;
  double dh = 0;
  double mk = 0;
  double dmk = 0;
  try {
    h = specfun::hermite_h(nu, u);
    dh = specfun::hermite_h_dz(nu, u);
    mk = specfun::kummer_1f1(alpha, 0.5, u2);
    dmk = specfun::kummer_1f1_dz(alpha, 0.5, u2);
  } catch (const ConvergenceError&) {
    // 1F1 grows like e^{u^2}; past this the series cannot be represented.
    if (u2 > kMaxKummerArgument) {
      throw OverflowError("evaluate_basis: value out of double range", t);
    }
    throw;
  }

  BasisValues v;
  v.x1 = e * h;
  v.x2 = e * mk;
  v.x1dot = e * (de * h + quarter_a * dh);
  v.x2dot = e * (de * mk + 2 * u * quarter_a * dmk);
  if (!std::isfinite(v.x1) || !std::isfinite(v.x2) || !std::isfinite(v.x1dot) ||
      !std::isfinite(v.x2dot)) {
    throw OverflowError("evaluate_basis: value out of double range", t);
  }
  return v;
}

double wronskian(const WeberCoefficients& k, double t) {
  const BasisValues v = evaluate_basis(k, t);
  return v.x1 * v.x2dot - v.x2 * v.x1dot;
}

ClosedFormSolution solve_ivp(const WeberCoefficients& k, double x0,
                             double v0) {
  ClosedFormSolution sol;
  sol.coeffs = k;
  sol.branch = k.branch();
  if (sol.branch == Branch::hermite_kummer) {
    const BasisValues v = evaluate_basis(k, 0.0);
    const double w = v.x1 * v.x2dot - v.x2 * v.x1dot;
    if (!(std::fabs(w) >= kMinWronskian)) {
      throw DegenerateBasisError("solve_ivp: Wronskian vanishes at t = 0");
    }
    sol.C1 = (x0 * v.x2dot - v.x2 * v0) / w;
    sol.C2 = (v.x1 * v0 - v.x1dot * x0) / w;
    return sol;
  }
  const double disc = k.A * k.A + 4 * k.c;
  if (std::fabs(disc) < kCriticalTol) {
    sol.C1 = x0;
    sol.C2 = v0 + k.A * x0 / 2;
  } else if (disc > 0) {
    const double root = std::sqrt(disc);
    const double r1 = (-k.A + root) / 2;
    const double r2 = (-k.A - root) / 2;
    sol.C1 = (v0 - r2 * x0) / (r1 - r2);
    sol.C2 = (r1 * x0 - v0) / (r1 - r2);
  } else {
    const double omega = std::sqrt(-disc) / 2;
    sol.C1 = x0;
    sol.C2 = (v0 + k.A * x0 / 2) / omega;
  }
  return sol;
}

State eval_solution(const ClosedFormSolution& sol, double t) {
  const WeberCoefficients& k = sol.coeffs;
  if (sol.branch == Branch::hermite_kummer) {
    const BasisValues v = evaluate_basis(k, t);
    return {sol.C1 * v.x1 + sol.C2 * v.x2,
            sol.C1 * v.x1dot + sol.C2 * v.x2dot};
  }
  const double disc = k.A * k.A + 4 * k.c;
  State s;
  if (std::fabs(disc) < kCriticalTol) {
    const double e = std::exp(-k.A * t / 2);
    s.x = (sol.C1 + sol.C2 * t) * e;
    s.xdot = (sol.C2 - k.A / 2 * (sol.C1 + sol.C2 * t)) * e;
  } else if (disc > 0) {
    const double root = std::sqrt(disc);
    const double r1 = (-k.A + root) / 2;
    const double r2 = (-k.A - root) / 2;
    const double e1 = std::exp(r1 * t);
    const double e2 = std::exp(r2 * t);
    s.x = sol.C1 * e1 + sol.C2 * e2;
    s.xdot = sol.C1 * r1 * e1 + sol.C2 * r2 * e2;
  } else {
    const double omega = std::sqrt(-disc) / 2;
    const double e = std::exp(-k.A * t / 2);
    const double cs = std::cos(omega * t);
    const double sn = std::sin(omega * t);
    const double y = sol.C1 * cs + sol.C2 * sn;
    const double dy = omega * (sol.C2 * cs - sol.C1 * sn);
    s.x = e * y;
    s.xdot = e * (dy - k.A / 2 * y);
  }
  if (!std::isfinite(s.x) || !std::isfinite(s.xdot)) {
    throw OverflowError("eval_solution: value out of double range", t);
  }
  return s;
}

}  // namespace weber
}  // namespace weberosc
