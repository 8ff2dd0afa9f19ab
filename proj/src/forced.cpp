#include "weberosc/forced.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "weberosc/errors.hpp"
#include "weberosc/specfun.hpp"

namespace weberosc::forced {

namespace {

constexpr double kScanWindow = 5.0;
constexpr double kScanStep = 0.01;
constexpr double kRootTol = 1e-10;

void require_hermite(const WeberCoefficients& k, const char* name) {
  if (k.branch() != Branch::hermite_kummer) {
    throw DomainError(std::string(name) + ": requires q != 0");
  }
}

void check_range(const FourierBesselExpansion& e, double t, const char* name) {
  if (!(t >= 0 && t <= e.t_bar * (1 + 1e-12))) {
    throw DomainError(std::string(name) + ": t outside [0, t_bar]");
  }
}

struct BasisRatio {
  double x1_over_w;
  double x2_over_w;
};

BasisRatio basis_ratio(const WeberCoefficients& k, double t) {
  const weber::BasisValues v = weber::evaluate_basis(k, t);
  const double w = v.x1 * v.x2dot - v.x2 * v.x1dot;
  if (!(std::fabs(w) >= 1e-300)) {
    throw DegenerateBasisError("integrand: Wronskian vanishes");
  }
  return {v.x1 / w, v.x2 / w};
}

}  // namespace

double integrand_c1(const WeberCoefficients& k, double t) {
  require_hermite(k, "integrand_c1");
  return basis_ratio(k, t).x2_over_w;
}

double integrand_c2(const WeberCoefficients& k, double t) {
  require_hermite(k, "integrand_c2");
  return basis_ratio(k, t).x1_over_w;
}

double find_tbar(const std::function<double(double)>& fn, double t_end) {
  const int steps = static_cast<int>(std::lround(kScanWindow / kScanStep));
  double lo = t_end;
  double f_lo = fn(lo);
  for (int i = 1; i <= steps; ++i) {
    const double hi = t_end + i * kScanStep;
    const double f_hi = fn(hi);
    if (f_hi == 0) {
      return hi;
    }
    if ((f_lo < 0) != (f_hi < 0) && f_lo != 0) {
      double a = lo;
      double b = hi;
      double fa = f_lo;
      while (b - a > kRootTol) {
        const double mid = 0.5 * (a + b);
        const double fm = fn(mid);
        if (fm == 0) {
          return mid;
        }
        if ((fm < 0) == (fa < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    lo = hi;
    f_lo = f_hi;
  }
  throw RootNotFoundError("find_tbar: no sign change in [" +
                          std::to_string(t_end) + ", " +
                          std::to_string(t_end + kScanWindow) + "]");
}

double find_tbar(const WeberCoefficients& k, double t_end) {
  return find_tbar([&](double t) { return integrand_c1(k, t); }, t_end);
}

FourierBesselExpansion fourier_bessel_fit(
    const std::function<double(double)>& fn, double t_bar, int n_terms,
    const quad::QuadratureOptions& opts) {
  if (n_terms < 1) {
    throw DomainError("fourier_bessel_fit: n_terms must be >= 1");
  }
  if (!(t_bar > 0)) {
    throw DomainError("fourier_bessel_fit: t_bar must be > 0");
  }
  // The adaptive subdivisions for different k share most nodes.
  std::unordered_map<double, double> cache;
  auto f = [&](double t) {
    auto it = cache.find(t);
    if (it != cache.end()) {
      return it->second;
    }
    const double v = fn(t);
    cache.emplace(t, v);
    return v;
  };
  FourierBesselExpansion e;
  e.t_bar = t_bar;
  e.alphas.reserve(n_terms);
  e.B.reserve(n_terms);
  for (int k = 1; k <= n_terms; ++k) {
    const double alpha = specfun::bessel_j0_zero(k);
    const double scale = alpha / t_bar;
    const auto r = quad::integrate_adaptive(
        [&](double t) { return t * f(t) * specfun::bessel_j0(scale * t); },
        0.0, t_bar, opts);
    const double j1 = specfun::bessel_j1(alpha);
    e.alphas.push_back(alpha);
    e.B.push_back(2 * r.value / (t_bar * t_bar * j1 * j1));
  }
  return e;
}

double eval_expansion(const FourierBesselExpansion& e, double t) {
  check_range(e, t, "eval_expansion");
  double sum = 0.0;
  for (std::size_t k = 0; k < e.B.size(); ++k) {
    sum += e.B[k] * specfun::bessel_j0(e.alphas[k] * t / e.t_bar);
  }
  return sum;
}

double integrate_expansion(const FourierBesselExpansion& e, double t) {
  check_range(e, t, "integrate_expansion");
  if (t == 0) {
    return 0.0;
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < e.B.size(); ++k) {
    const double x = e.alphas[k] * t / e.t_bar;
    sum += e.B[k] * specfun::hyp_1f2(0.5, 1.0, 1.5, -x * x / 4);
  }
  return t * sum;
}

double reconstruction_error(const FourierBesselExpansion& e,
                            const std::function<double(double)>& fn,
                            int n_grid) {
  if (n_grid < 2) {
    throw DomainError("reconstruction_error: n_grid must be >= 2");
  }
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < n_grid; ++i) {
    const double t = 0.95 * e.t_bar * i / (n_grid - 1);
    const double ref = fn(t);
    const double d = eval_expansion(e, t) - ref;
    num += d * d;
    den += ref * ref;
  }
  return den > 0 ? std::sqrt(num / den) : std::sqrt(num);
}

double ParticularSolution::c1(double t) const {
  return prefactor1 == 0 ? 0.0 : prefactor1 * integrate_expansion(exp1, t);
}

double ParticularSolution::c2(double t) const {
  return prefactor2 == 0 ? 0.0 : prefactor2 * integrate_expansion(exp2, t);
}

weber::State ParticularSolution::eval(double t) const {
  if (mu == 0) {
    return {0.0, 0.0};
  }
  const weber::BasisValues v = weber::evaluate_basis(coeffs, t);
  const double k1 = c1(t);
  const double k2 = c2(t);
  return {k1 * v.x1 + k2 * v.x2, k1 * v.x1dot + k2 * v.x2dot};
}

double ParticularSolution::t_max() const {
  return std::min(exp1.t_bar, exp2.t_bar);
}

ParticularSolution variation_constants(const WeberCoefficients& k, double mu,
                                       int n_terms, double t_end) {
  require_hermite(k, "variation_constants");
  if (std::fabs(weber::wronskian(k, 0.0)) < 1e-300) {
    throw DegenerateBasisError("variation_constants: W(0) vanishes");
  }
  auto f1 = [&](double t) { return integrand_c1(k, t); };
  auto f2 = [&](double t) { return integrand_c2(k, t); };
  const double s1 = std::fabs(f1(0.0));
  const double s2 = std::fabs(f2(0.0));
  if (!(s1 > 0) || !(s2 > 0)) {
    throw DomainError("variation_constants: integrand vanishes at t = 0");
  }

  ParticularSolution p;
  p.coeffs = k;
  p.mu = mu;
  p.exp1 = fourier_bessel_fit([&](double t) { return f1(t) / s1; },
                              find_tbar(f1, t_end), n_terms);
  p.exp2 = fourier_bessel_fit([&](double t) { return f2(t) / s2; },
                              find_tbar(f2, t_end), n_terms);
  p.prefactor1 = -mu * s1;
  p.prefactor2 = mu * s2;
  return p;
}

DirectConstants direct_constants(const WeberCoefficients& k, double mu,
                                 double t) {
  require_hermite(k, "direct_constants");
  const quad::QuadratureOptions opts{1e-12, 1e-300, 4000};
  const double i1 =
      quad::integrate_adaptive([&](double s) { return integrand_c1(k, s); },
                               0.0, t, opts)
          .value;
  const double i2 =
      quad::integrate_adaptive([&](double s) { return integrand_c2(k, s); },
                               0.0, t, opts)
          .value;
  return {-mu * i1, mu * i2};
}

int default_terms(const WeberCoefficients& k) { return k.A != 0 ? 200 : 30; }

weber::State ForcedSolution::eval(double t) const {
  const weber::State h = weber::eval_solution(homogeneous, t);
  const weber::State p = particular.eval(t);
  return {h.x + p.x, h.xdot + p.xdot};
}

ForcedSolution solve_forced_ivp(const PhysicalConfig& config, int n_terms) {
  config.validate();
  const WeberCoefficients k = weber::map_params(config);
  require_hermite(k, "solve_forced_ivp");
  ForcedSolution s;
  s.particular = variation_constants(
      k, config.mu, n_terms > 0 ? n_terms : default_terms(k), config.t_end);
  const weber::State p0 = s.particular.eval(0.0);
  s.homogeneous =
      weber::solve_ivp(k, config.x0 - p0.x, config.v0 - p0.xdot);
  return s;
}

}  // namespace weberosc::forced
