#include "weberosc/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "weberosc/errors.hpp"

namespace weberosc::oracle {

namespace {

using Vec = std::array<double, 2>;

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

class System {
 public:
  System(const WeberCoefficients& k, double mu) : k_{k}, mu_{mu} {}

  Vec operator()(double t, const Vec& y) const {
    const double p = (k_.a * t + k_.b) * t + k_.c;
    return {y[1], mu_ + p * y[0] - k_.A * y[1]};
  }

 private:
  WeberCoefficients k_;
  double mu_;
};

Vec axpy(const Vec& y, double h, std::initializer_list<std::pair<double, const Vec*>> terms) {
  Vec out = y;
  for (const auto& [coef, v] : terms) {
    out[0] += h * coef * (*v)[0];
    out[1] += h * coef * (*v)[1];
  }
  return out;
}

}  // namespace

OdeResult integrate_ode(const WeberCoefficients& k, double mu, double x0,
                        double v0, double t_end, int n_points,
                        const OdeOptions& opts) {
  if (n_points < 2 || !(t_end > 0)) {
    throw DomainError("integrate_ode: need n_points >= 2 and t_end > 0");
  }
  std::vector<double> grid(n_points);
  for (int i = 0; i < n_points; ++i) {
    grid[i] = t_end * i / (n_points - 1);
  }
  grid.back() = t_end;
  return integrate_ode(k, mu, x0, v0, grid, opts);
}

OdeResult integrate_ode(const WeberCoefficients& k, double mu, double x0,
                        double v0, const std::vector<double>& grid,
                        const OdeOptions& opts) {
  if (!(opts.rel_tol >= 1e-12 && opts.rel_tol <= 1e-3)) {
    throw DomainError("integrate_ode: rel_tol must lie in [1e-12, 1e-3]");
  }
  if (grid.empty() || grid.front() != 0.0) {
    throw DomainError("integrate_ode: grid must start at 0");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw DomainError("integrate_ode: grid must be strictly increasing");
    }
  }
  const System f(k, mu);
  const double tol = opts.rel_tol;
  OdeResult out;
  out.grid.push_back(0.0);
  out.x.push_back(x0);
  out.xdot.push_back(v0);

  double t = 0.0;
  Vec y = {x0, v0};
  Vec k1 = f(t, y);
  double h = std::min(1e-3, grid.back() / 16);
  for (std::size_t target = 1; target < grid.size(); ++target) {
    const double t_next = grid[target];
    while (t < t_next) {
      bool landing = false;
      double step = h;
      if (t + step >= t_next) {
        step = t_next - t;
        landing = true;
      }
      if (step < 1e-14 * std::max(1.0, std::fabs(t))) {
        throw StepUnderflowError("integrate_ode: step size underflow", t);
      }
      const Vec k2 = f(t + c2 * step, axpy(y, step, {{a21, &k1}}));
      const Vec k3 = f(t + c3 * step, axpy(y, step, {{a31, &k1}, {a32, &k2}}));
      const Vec k4 = f(t + c4 * step,
                       axpy(y, step, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
      const Vec k5 = f(t + c5 * step, axpy(y, step,
                                           {{a51, &k1},
                                            {a52, &k2},
                                            {a53, &k3},
                                            {a54, &k4}}));
      const Vec k6 = f(t + step, axpy(y, step,
                                      {{a61, &k1},
                                       {a62, &k2},
                                       {a63, &k3},
                                       {a64, &k4},
                                       {a65, &k5}}));
      const Vec y_new = axpy(
          y, step,
          {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
      const double t_new = landing ? t_next : t + step;
      const Vec k7 = f(t_new, y_new);

      double err = 0.0;
      for (int i = 0; i < 2; ++i) {
        const double ei = step * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                  e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double scale =
            tol + tol * std::max(std::fabs(y[i]), std::fabs(y_new[i]));
        err = std::max(err, std::fabs(ei) / scale);
      }
      if (!std::isfinite(err) || !std::isfinite(y_new[0]) ||
          !std::isfinite(y_new[1])) {
        err = std::numeric_limits<double>::max();
      }
      if (err <= 1.0) {
        t = t_new;
        y = y_new;
        k1 = k7;
        out.est_error += err * tol;
        ++out.steps;
        const double grow =
            err == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(err, -0.2));
        // A landing step is usually shortened; do not let it shrink h.
        if (!landing || step * grow > h) {
          h = step * grow;
        }
        if (std::fabs(y[0]) > opts.amplitude_limit) {
          out.stopped = true;
          return out;
        }
      } else {
        h = step * std::max(0.2, 0.9 * std::pow(err, -0.2));
      }
    }
    out.grid.push_back(t_next);
    out.x.push_back(y[0]);
    out.xdot.push_back(y[1]);
  }
  return out;
}

CompareReport compare(const std::function<double(double)>& analytic,
                      const OdeResult& numeric) {
  double scale = 1.0;
  for (double v : numeric.x) {
    scale = std::max(scale, std::fabs(v));
  }
  CompareReport report;
  for (std::size_t i = 0; i < numeric.grid.size(); ++i) {
    const double err =
        std::fabs(analytic(numeric.grid[i]) - numeric.x[i]) / scale;
    if (err > report.max_rel_err) {
      report.max_rel_err = err;
      report.argmax_t = numeric.grid[i];
    }
  }
  return report;
}

}  // namespace weberosc::oracle
