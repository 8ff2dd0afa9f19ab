#pragma once

/// \file
/// Bead kinematics on the rotating arm: vertical oscillation, constraint
/// reactions, rotation angle, polar projection and the five transient presets.

#include <array>
#include <string>
#include <vector>

#include "weberosc/coefficients.hpp"
#include "weberosc/weber.hpp"

namespace weberosc::dynamics {

/// z(t) = C3 sin(omega_bar t + C4) + offset, offset = -m g / k1.
struct VerticalMotion {
  double C3;
  double C4;
  double omega_bar;
  double offset;
};

VerticalMotion vertical_motion(const PhysicalConfig& config);

struct ZState {
  double z;
  double zdot;
};

ZState z_motion(const PhysicalConfig& config, double t);

/// R_z = m g + m z'' = m (g - C3 omega_bar^2 sin(omega_bar t + C4)).
double reaction_z(const PhysicalConfig& config, double t);

/// R_y = 2 m omega0 (1 - q t) x' - m omega0 q x.
double reaction_y(const PhysicalConfig& config,
                  const weber::ClosedFormSolution& sol, double t);

/// Same, from an already evaluated state.
double reaction_y(const PhysicalConfig& config, double t, double x,
                  double xdot);

/// theta(t) = omega0 (t - q t^2 / 2).
double theta_of_t(const PhysicalConfig& config, double t);

/// Inverse of theta_of_t on its increasing branch. For q > 0 theta must lie
/// in [0, omega0 / (2q)]; for q < 0 any theta >= 0 is accepted; for q = 0 the
/// result is theta / omega0. Throws DomainError otherwise.
double t_of_theta(const PhysicalConfig& config, double theta);

/// rho(theta) = x(t_of_theta(theta)).
double polar_curve(const PhysicalConfig& config,
                   const weber::ClosedFormSolution& sol, double theta);

enum class TransientId { I, II, III, IV, V };

struct TransientPreset {
  TransientId id;
  double q;
  double k2;
  std::vector<double> drag_set = {0.2, 0.5, 1.0, 2.0};
};

TransientPreset preset(TransientId id);
const std::array<TransientId, 5>& all_transients();
std::string to_string(TransientId id);
/// Accepts "I".."V" (case-insensitive); throws ConfigError otherwise.
TransientId parse_transient(const std::string& name);

/// Copy of config with the preset's q and k2 and the given drag.
PhysicalConfig apply_preset(const PhysicalConfig& config,
                            const TransientPreset& preset, double A);

struct TrajectorySample {
  double t;
  double x;
  double xdot;
  double z;
  double zdot;
  double theta;
  double rho;
  double Ry;
  double Rz;
};

struct TransientRun {
  std::vector<TrajectorySample> samples;
  bool truncated = false;
  /// First grid time with |x| > L; only meaningful when truncated.
  double t_trunc = 0.0;
  double horizon = 0.0;
  weber::ClosedFormSolution solution;
};

/// Time horizon of a run: 1/q for q > 0, config.t_end otherwise.
double horizon(const PhysicalConfig& config);

/// Samples the homogeneous solution on a uniform grid of n_samples points
/// over [0, horizon], stopping before the first point with |x| > L.
TransientRun run_transient(const PhysicalConfig& config, int n_samples = 1001);

}  // namespace weberosc::dynamics
