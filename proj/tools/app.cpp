#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "csv.hpp"
#include "weberosc/dynamics.hpp"
#include "weberosc/errors.hpp"
#include "weberosc/forced.hpp"
#include "weberosc/oracle.hpp"
#include "weberosc/specfun.hpp"
#include "weberosc/weber.hpp"

namespace weberosc::cli {

namespace {

constexpr double kTransientTol = 1e-6;
constexpr double kForcedTol = 1e-4;
constexpr double kZeroResidual = 1e-11;

struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> preset;
  std::optional<std::string> drag;
  std::optional<double> mu;
  std::optional<int> samples;
  std::optional<int> terms;
  std::optional<double> theta_max;
  std::optional<int> n;
  std::optional<std::string> out;
  bool oracle = false;
};

RunConfig resolve(const Flags& flags, RunConfig cfg) {
  if (flags.config) {
    apply_file(cfg, *flags.config);
  }
  if (flags.preset) cfg.preset = *flags.preset;
  if (flags.drag) cfg.drag = parse_list(*flags.drag);
  if (flags.mu) cfg.phys.mu = *flags.mu;
  if (flags.samples) cfg.samples = *flags.samples;
  if (flags.terms) cfg.terms = *flags.terms;
  if (flags.theta_max) cfg.theta_max = *flags.theta_max;
  if (flags.n) cfg.n = *flags.n;
  if (flags.out) cfg.out = *flags.out;
  if (flags.oracle) cfg.oracle = true;

  cfg.phys.validate();
  if (cfg.samples < 2) {
    throw ConfigError("samples must be >= 2");
  }
  if (cfg.terms < 0) {
    throw ConfigError("terms must be >= 0");
  }
  for (double a : cfg.drag) {
    if (!(a >= 0)) {
      throw ConfigError("drag values must be >= 0");
    }
  }
  return cfg;
}

struct Regime {
  std::string label;
  dynamics::TransientPreset preset;
  bool custom = false;
};

Regime regime_of(const RunConfig& cfg, const std::string& fallback) {
  const std::string name = cfg.preset.value_or(fallback);
  if (name == "custom") {
    return {"custom", {dynamics::TransientId::I, cfg.phys.q, cfg.phys.k2, {}},
            true};
  }
  const auto id = dynamics::parse_transient(name);
  return {dynamics::to_string(id), dynamics::preset(id), false};
}

std::vector<double> drags_of(const RunConfig& cfg, const Regime& r) {
  if (!cfg.drag.empty()) {
    return cfg.drag;
  }
  if (r.custom || r.preset.drag_set.empty()) {
    return {cfg.phys.A};
  }
  return r.preset.drag_set;
}

PhysicalConfig physics_for(const RunConfig& cfg, const Regime& r, double A) {
  PhysicalConfig p = cfg.phys;
  if (!r.custom) {
    p = dynamics::apply_preset(p, r.preset, A);
  }
  p.A = A;
  return p;
}

std::filesystem::path output_file(const RunConfig& cfg,
                                  const std::string& stem, double A) {
  std::filesystem::create_directories(cfg.out);
  return cfg.out / (stem + "_A" + format_double(A) + ".csv");
}

template <class Seq>
int sign_changes(const Seq& values) {
  int count = 0;
  int last = 0;
  for (double v : values) {
    const int s = (v > 0) - (v < 0);
    if (s != 0) {
      if (last != 0 && s != last) {
        ++count;
      }
      last = s;
    }
  }
  return count;
}

std::string fmt(double v) { return format_double(v); }

int cmd_transient(const RunConfig& cfg, std::ostream& out) {
  const Regime regime = regime_of(cfg, "I");
  const double tol = comparison_tolerance(kTransientTol);
  bool oracle_failed = false;
  for (double A : drags_of(cfg, regime)) {
    const PhysicalConfig phys = physics_for(cfg, regime, A);
    const dynamics::TransientRun run =
        dynamics::run_transient(phys, cfg.samples);

    Table table;
    table.header = {"t", "x", "xdot", "z", "zdot", "theta", "rho", "Ry", "Rz"};
    std::vector<double> xs;
    double max_x = 0.0;
    double max_ry = 0.0;
    for (const auto& s : run.samples) {
      table.rows.push_back(
          {s.t, s.x, s.xdot, s.z, s.zdot, s.theta, s.rho, s.Ry, s.Rz});
      xs.push_back(s.x);
      max_x = std::max(max_x, std::fabs(s.x));
      max_ry = std::max(max_ry, std::fabs(s.Ry));
    }
    write_csv(output_file(cfg, "transient_" + regime.label, A), table);

    out << "transient preset=" << regime.label << " A=" << fmt(A)
        << " truncated=" << (run.truncated ? "yes" : "no")
        << " t_trunc=" << (run.truncated ? fmt(run.t_trunc) : "nan")
        << " zero_crossings=" << sign_changes(xs) << " max_abs_x=" << fmt(max_x)
        << " max_abs_Ry=" << fmt(max_ry);
    if (cfg.oracle) {
      const auto numeric = oracle::integrate_ode(
          run.solution.coeffs, 0.0, phys.x0, phys.v0, run.horizon,
          cfg.samples, {1e-10, 10 * phys.L});
      const auto report = oracle::compare(
          [&](double t) { return weber::eval_solution(run.solution, t).x; },
          numeric);
      const bool ok = report.max_rel_err <= tol;
      oracle_failed |= !ok;
      out << " max_rel_err=" << fmt(report.max_rel_err)
          << " oracle=" << (ok ? "ok" : "FAIL");
    }
    out << '\n';
  }
  return oracle_failed ? kNumericError : kOk;
}

double particular_residual(const forced::ParticularSolution& p,
                           double t_hi) {
  const WeberCoefficients& k = p.coeffs;
  constexpr double h = 1e-3;
  double worst = 0.0;
  const int n = 200;
  for (int i = 0; i <= n; ++i) {
    const double t = h + (t_hi - 2 * h) * i / n;
    const double xm = p.eval(t - h).x;
    const double x0 = p.eval(t).x;
    const double xp = p.eval(t + h).x;
    const double xdd = (xp - 2 * x0 + xm) / (h * h);
    const double xd = (xp - xm) / (2 * h);
    const double r = xdd + k.A * xd - ((k.a * t + k.b) * t + k.c) * x0 - p.mu;
    worst = std::max(worst, std::fabs(r));
  }
  return worst;
}

int cmd_forced(const RunConfig& cfg, std::ostream& out) {
  Regime regime{"custom", {}, true};
  if (cfg.preset) {
    regime = regime_of(cfg, "I");
  }
  const double tol = comparison_tolerance(kForcedTol);
  bool oracle_failed = false;
  for (double A : drags_of(cfg, regime)) {
    const PhysicalConfig phys = physics_for(cfg, regime, A);
    const forced::ForcedSolution sol =
        forced::solve_forced_ivp(phys, cfg.terms);
    const forced::ParticularSolution& p = sol.particular;
    const double t_hi = std::min(phys.t_end, p.t_max());

    Table table;
    table.header = {"t", "x", "xdot", "c1", "c2", "x_particular"};
    std::vector<double> late_xdot;
    for (int i = 0; i < cfg.samples; ++i) {
      const double t =
          i == cfg.samples - 1 ? t_hi : t_hi * i / (cfg.samples - 1);
      const weber::State s = sol.eval(t);
      table.rows.push_back({t, s.x, s.xdot, p.c1(t), p.c2(t), p.eval(t).x});
      if (t > 1) {
        late_xdot.push_back(s.xdot);
      }
    }
    write_csv(output_file(cfg, "forced", A), table);

    const int turns = sign_changes(late_xdot);
    out << "forced A=" << fmt(A) << " mu=" << fmt(phys.mu)
        << " tbar1=" << fmt(p.exp1.t_bar) << " tbar2=" << fmt(p.exp2.t_bar)
        << " n_terms=" << p.exp1.n_terms()
        << " residual_max=" << fmt(particular_residual(p, 0.9 * phys.t_end))
        << " xdot_sign_changes_after_1=" << turns
        << " oscillatory=" << (turns <= 1 ? "no" : "yes");
    if (cfg.oracle) {
      const auto numeric =
          oracle::integrate_ode(p.coeffs, phys.mu, phys.x0, phys.v0,
                                0.9 * phys.t_end, cfg.samples, {1e-10, 1e300});
      const auto report = oracle::compare(
          [&](double t) { return sol.eval(t).x; }, numeric);
      const bool ok = report.max_rel_err <= tol;
      oracle_failed |= !ok;
      out << " max_rel_err=" << fmt(report.max_rel_err)
          << " oracle=" << (ok ? "ok" : "FAIL");
    }
    out << '\n';
  }
  return oracle_failed ? kNumericError : kOk;
}

int cmd_polar(const RunConfig& cfg, std::ostream& out) {
  const Regime regime = regime_of(cfg, "I");
  for (double A : drags_of(cfg, regime)) {
    const PhysicalConfig phys = physics_for(cfg, regime, A);
    double theta_max;
    if (cfg.theta_max) {
      theta_max = *cfg.theta_max;
    } else if (phys.q > 0) {
      theta_max = phys.omega0 / (2 * phys.q);
    } else {
      throw ConfigError("polar: q <= 0 needs an explicit theta_max");
    }
    if (!(theta_max > 0)) {
      throw ConfigError("polar: theta_max must be > 0");
    }
    const auto sol =
        weber::solve_ivp(weber::map_params(phys), phys.x0, phys.v0);
    Table table;
    table.header = {"theta", "rho"};
    double max_rho = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const double theta =
          i == cfg.samples - 1 ? theta_max : theta_max * i / (cfg.samples - 1);
      const double rho = dynamics::polar_curve(phys, sol, theta);
      table.rows.push_back({theta, rho});
      max_rho = std::max(max_rho, std::fabs(rho));
    }
    write_csv(output_file(cfg, "polar_" + regime.label, A), table);
    out << "polar preset=" << regime.label << " A=" << fmt(A)
        << " theta_max=" << fmt(theta_max) << " max_abs_rho=" << fmt(max_rho)
        << '\n';
  }
  return kOk;
}

int cmd_zeros(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 1) {
    throw ConfigError("zeros: n must be >= 1");
  }
  bool ok = true;
  out << "k,alpha,J0\n";
  for (int k = 1; k <= cfg.n; ++k) {
    const double alpha = specfun::bessel_j0_zero(k);
    const double residual = specfun::bessel_j0(alpha);
    ok &= std::fabs(residual) <= kZeroResidual;
    out << k << ',' << fmt(alpha) << ',' << fmt(residual) << '\n';
  }
  return ok ? kOk : kNumericError;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON config file (flat object)");
  sub->add_option("--out", f.out, "Output directory for CSV files");
  sub->add_option("--samples", f.samples, "Number of grid points");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Damped oscillator on a rotating arm: closed-form solutions",
               "weberosc"};
  app.require_subcommand(1);
  Flags f;

  auto* transient = app.add_subcommand("transient", "Homogeneous transients");
  add_common(transient, f);
  transient->add_option("--preset", f.preset, "I..V or custom");
  transient->add_option("--drag", f.drag, "Comma-separated A values");
  transient->add_flag("--oracle", f.oracle, "Compare with numerical ODE");

  auto* forced_cmd = app.add_subcommand("forced", "Forced case (dry friction)");
  add_common(forced_cmd, f);
  forced_cmd->add_option("--preset", f.preset, "Take q, k2 from I..V");
  forced_cmd->add_option("--drag", f.drag, "Comma-separated A values");
  forced_cmd->add_option("--mu", f.mu, "Forcing acceleration");
  forced_cmd->add_option("--terms", f.terms, "Fourier-Bessel terms");
  forced_cmd->add_flag("--oracle", f.oracle, "Compare with numerical ODE");

  auto* polar = app.add_subcommand("polar", "Polar projection rho(theta)");
  add_common(polar, f);
  polar->add_option("--preset", f.preset, "I..V or custom");
  polar->add_option("--drag", f.drag, "Comma-separated A values");
  polar->add_option("--theta-max", f.theta_max, "Upper end of the theta grid");

  auto* zeros = app.add_subcommand("zeros", "Zeros of J0");
  zeros->add_option("--n", f.n, "Number of zeros");
  zeros->add_option("--config", f.config, "JSON config file (flat object)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (zeros->parsed()) {
      RunConfig cfg;
      return cmd_zeros(resolve(f, cfg), out);
    }
    if (forced_cmd->parsed()) {
      RunConfig cfg;
      cfg.phys.mu = 1.0;
      cfg.phys.A = 1.0;
      cfg.phys.x0 = 0.0;
      cfg.phys.v0 = 1.0;
      return cmd_forced(resolve(f, cfg), out);
    }
    const RunConfig cfg = resolve(f, RunConfig{});
    return transient->parsed() ? cmd_transient(cfg, out) : cmd_polar(cfg, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const RootNotFoundError& e) {
    err << "root not found: " << e.what() << '\n';
    return kRootNotFound;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kNumericError;
  } catch (const Error& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericError;
  }
}

}  // namespace weberosc::cli
