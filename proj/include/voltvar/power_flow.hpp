#pragma once

#include <string>
#include <vector>

#include "voltvar/grid_model.hpp"

namespace voltvar {

/// One load/generation condition. Sign convention: injections into the grid
/// are positive, absorptions negative (loads carry negative p).
struct Scenario {
  Vector p;    // active injections, buses 1..N
  Vector q_l;  // reactive injections at load buses, ordered as model.load_buses
  int index = 0;
};

struct VoltageSolution {
  ComplexVector u;     // complex voltages, buses 1..N
  Vector v;            // magnitudes |u|
  bool converged = false;
  int iterations = 0;
  double residual = 0.0;  // max per-bus complex power mismatch
};

struct AcOptions {
  double tolerance = 1e-10;  // on max power mismatch
  int max_iterations = 200;
  const ComplexVector* warm_start = nullptr;  // default flat start at u_hat
};

/// Full reactive injection vector over buses 1..N from the controlled part
/// q_c (DER buses) and the load part q_l.
Vector assemble_reactive(const SensitivityModel& model, const Vector& q_c, const Vector& q_l);

/// Nonlinear AC power flow by Z-bus fixed point:
///   u <- Z~ conj(s / u) + u_hat
/// Never throws on non-convergence; the caller inspects `converged`.
VoltageSolution solve_ac(const SensitivityModel& model, const Scenario& scenario,
                         const Vector& q_c, const AcOptions& options = {});

/// Linearized voltage magnitudes v = R~ p + X~ q + |u_hat|, exact evaluation.
Vector solve_linearized(const SensitivityModel& model, const Scenario& scenario,
                        const Vector& q_c);

/// Constant offset v_hat of the linear model in v(q_c) = [X; X_L^T] q_c + v_hat.
Vector linear_offset(const SensitivityModel& model, const Scenario& scenario);

/// Time series of scenarios, as stored in a profiles CSV (rows = steps,
/// columns = per-bus p and per-load-bus q_L, header row with bus ids).
struct ScenarioSet {
  std::vector<Scenario> scenarios;
};

ScenarioSet load_profiles(const std::string& path, const SensitivityModel& model);
void save_profiles(const ScenarioSet& set, const SensitivityModel& model,
                   const std::string& path);

}  // namespace voltvar
