#include "weberosc/dynamics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "weberosc/errors.hpp"

namespace weberosc::dynamics {

VerticalMotion vertical_motion(const PhysicalConfig& config) {
  const double omega_bar = std::sqrt(config.k1 / config.m);
  const double shift = config.m * config.g / config.k1;
  VerticalMotion v;
  v.omega_bar = omega_bar;
  v.offset = -shift;
  v.C3 = std::hypot(config.z0 + shift, config.zdot0 / omega_bar);
  v.C4 = std::atan2(omega_bar * (config.k1 * config.z0 + config.m * config.g),
                    config.zdot0 * config.k1);
  return v;
}

ZState z_motion(const PhysicalConfig& config, double t) {
  const VerticalMotion v = vertical_motion(config);
  const double phase = v.omega_bar * t + v.C4;
  return {v.C3 * std::sin(phase) + v.offset,
          v.C3 * v.omega_bar * std::cos(phase)};
}

double reaction_z(const PhysicalConfig& config, double t) {
  const VerticalMotion v = vertical_motion(config);
  return config.m * (config.g - v.C3 * v.omega_bar * v.omega_bar *
                                    std::sin(v.omega_bar * t + v.C4));
}

double reaction_y(const PhysicalConfig& config, double t, double x,
                  double xdot) {
  const double mw = config.m * config.omega0;
  return 2 * mw * (1 - config.q * t) * xdot - mw * config.q * x;
}

double reaction_y(const PhysicalConfig& config,
                  const weber::ClosedFormSolution& sol, double t) {
  const weber::State s = weber::eval_solution(sol, t);
  return reaction_y(config, t, s.x, s.xdot);
}

double theta_of_t(const PhysicalConfig& config, double t) {
  return config.omega0 * (t - config.q * t * t / 2);
}

double t_of_theta(const PhysicalConfig& config, double theta) {
  if (!(theta >= 0)) {
    throw DomainError("t_of_theta: theta must be >= 0");
  }
  const double s = 2 * theta / config.omega0;
  const double radicand = 1 - config.q * s;
  if (radicand < 0) {
    // Allow the rounding of theta_max = omega0 / (2q) itself.
    if (radicand > -1e-12) {
      return 1 / config.q;
    }
    throw DomainError("t_of_theta: theta beyond omega0 / (2q)");
  }
  // (1 - sqrt(1 - q s)) / q rewritten without cancellation.
  return s / (1 + std::sqrt(radicand));
}

double polar_curve(const PhysicalConfig& config,
                   const weber::ClosedFormSolution& sol, double theta) {
  return weber::eval_solution(sol, t_of_theta(config, theta)).x;
}

TransientPreset preset(TransientId id) {
  switch (id) {
    case TransientId::I: return {id, 0.1, 10.0};
    case TransientId::II: return {id, 0.1, 8.0};
    case TransientId::III: return {id, -0.1, 30.0};
    case TransientId::IV: return {id, -0.1, 8.0};
    case TransientId::V: return {id, 0.0, 10.0};
  }
  throw DomainError("preset: unknown transient");
}

const std::array<TransientId, 5>& all_transients() {
  static const std::array<TransientId, 5> ids = {
      TransientId::I, TransientId::II, TransientId::III, TransientId::IV,
      TransientId::V};
  return ids;
}

std::string to_string(TransientId id) {
  static const char* names[] = {"I", "II", "III", "IV", "V"};
  return names[static_cast<int>(id)];
}

TransientId parse_transient(const std::string& name) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return std::toupper(ch); });
  for (TransientId id : all_transients()) {
    if (to_string(id) == upper) {
      return id;
    }
  }
  throw ConfigError("unknown preset '" + name + "' (expected I..V)");
}

PhysicalConfig apply_preset(const PhysicalConfig& config,
                            const TransientPreset& p, double A) {
  PhysicalConfig out = config;
  out.q = p.q;
  out.k2 = p.k2;
  out.A = A;
  return out;
}

double horizon(const PhysicalConfig& config) {
  return config.q > 0 ? 1 / config.q : config.t_end;
}

TransientRun run_transient(const PhysicalConfig& config, int n_samples) {
  if (n_samples < 2) {
    throw DomainError("run_transient: n_samples must be >= 2");
  }
  config.validate();
  TransientRun run;
  run.horizon = horizon(config);
  run.solution =
      weber::solve_ivp(weber::map_params(config), config.x0, config.v0);
  run.samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double t =
        i == n_samples - 1 ? run.horizon : run.horizon * i / (n_samples - 1);
    const weber::State s = weber::eval_solution(run.solution, t);
    if (std::fabs(s.x) > config.L) {
      run.truncated = true;
      run.t_trunc = t;
      break;
    }
    const ZState z = z_motion(config, t);
    run.samples.push_back({t, s.x, s.xdot, z.z, z.zdot, theta_of_t(config, t),
                           s.x, reaction_y(config, t, s.x, s.xdot),
                           reaction_z(config, t)});
  }
  return run;
}

}  // namespace weberosc::dynamics
