#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "voltvar/monotone_nn.hpp"

namespace voltvar {

/// Largest stepsize with a global stability guarantee for the incremental
/// rule: min{1, 2 / (x_norm * L + 1)^2}.
double stepsize_bound(double x_norm, double lipschitz);

/// One incremental update: q + epsilon * (phi(v) - q), element-wise.
Vector control_step(const Vector& q, const Vector& v_measured,
                    const std::vector<EquilibriumFunction>& phis, double epsilon);

/// Saturating linear droop: q_max at or below v_min, q_min at or above v_max,
/// one straight ramp between.
double droop_standard(double v, double q_min, double q_max, double v_min, double v_max);

/// Droop with a deadband: saturation outside [v_min, v_max], zero output
/// inside [band_lo, band_hi], linear ramps between.
struct OptimizedDroop {
  double q_min = 0.0, q_max = 0.0;
  double v_min = 0.0, v_max = 0.0;
  double band_lo = 0.0, band_hi = 0.0;

  void validate() const;  // requires v_min < band_lo <= band_hi < v_max
};

double droop_optimized(double v, const OptimizedDroop& params);

/// Steepest slope magnitude of the deadband droop curve (its Lipschitz
/// constant), for feeding the same stability bound the learned rules use.
double droop_lipschitz(const OptimizedDroop& params);

/// Per-DER grid search for the deadband minimizing the mean squared setpoint
/// error on the real points of each dataset. Candidate edges are `resolution`
/// equispaced interior points; ties go to the smallest band_lo, then the
/// smallest band_hi.
std::vector<OptimizedDroop> optimize_droop_params(const std::vector<LocalDataset>& datasets,
                                                  int resolution = 41);

enum class ControllerKind { incremental, non_incremental, droop_standard, droop_optimized, none };
enum class FlowModel { linearized, ac };

std::string to_string(ControllerKind kind);
ControllerKind controller_kind_from_string(const std::string& s);
std::string to_string(FlowModel flow);
FlowModel flow_model_from_string(const std::string& s);

struct Controller {
  ControllerKind kind = ControllerKind::incremental;
  std::vector<EquilibriumFunction> phis;  // data-driven kinds, one per DER
  std::vector<OptimizedDroop> droops;     // droop_optimized only
};

/// Setpoint commanded by the controller given measured DER voltages. The
/// incremental and droop kinds blend toward their target curve by epsilon;
/// non_incremental jumps straight to phi(v); `none` holds q.
Vector apply_controller(const Controller& controller, const SensitivityModel& model,
                        const Vector& q, const Vector& v_measured, double epsilon);

struct ControllerConfig {
  double epsilon = 0.5;  // (0, 1]
  int steps = 120;       // control updates per scenario
  FlowModel flow = FlowModel::linearized;
  double noise = 0.0;    // multiplicative measurement noise half-width
  std::uint64_t seed = 0;
  bool warm_start = true;      // carry q across scenarios
  double residual_tol = 1e-8;  // fixed-point declaration threshold
  double oscillation_residual = 1e-3;
  double ac_tolerance = 1e-10;
  int ac_max_iterations = 200;

  void validate() const;
};

struct SimulationTrace {
  int scenario_index = -1;
  Matrix q_history;  // steps x C, setpoints after each update
  Matrix v_history;  // steps x N, voltages re-solved after each update
  Vector residuals;  // steps, ||q(t) - q(t-1)||_inf
  bool converged = false;
  bool ac_failed = false;    // flow solve broke down; trace ends early
  bool oscillating = false;  // stuck high residual with alternating increments
  Vector q_final, v_final;

  int steps() const { return static_cast<int>(residuals.size()); }
};

/// Closed-loop run over the scenario sequence: solve the configured flow,
/// measure DER voltages (with noise), update setpoints, repeat `steps` times
/// per scenario. Setpoints persist across scenarios when warm_start is on.
std::vector<SimulationTrace> simulate(const SensitivityModel& model,
                                      const Controller& controller,
                                      const ScenarioSet& scenarios,
                                      const ControllerConfig& config);

struct Equilibrium {
  Vector q;  // C
  Vector v;  // N
  int iterations = 0;
};

/// Fixed point of the closed loop under the linearized flow for one scenario,
/// found by iterating at a safely contractive stepsize until
/// ||phi(v(q)) - q||_inf <= tol. The start point (clamped to the box,
/// defaulting to zero) must not change the answer: the fixed point is unique.
/// Failing the iteration cap is a defect, not an expected outcome, and
/// raises a numeric error.
Equilibrium find_equilibrium(const SensitivityModel& model,
                             const std::vector<EquilibriumFunction>& phis,
                             const Scenario& scenario, double tol = 1e-10,
                             const Vector& start = Vector());

/// Mean squared setpoint error of a rule over the real dataset points,
/// normalized by total point count: sum_k (q_k - rule(der, v_k))^2 / total.
double avg_loss(const std::vector<LocalDataset>& datasets,
                const std::function<double(int der, double v)>& rule);

struct DistanceReport {
  std::vector<double> per_step;  // ||q(t) - q_ref||_2, scenario-major order
  double day_average = 0.0;
};

/// Distance between simulated setpoints and the per-scenario dispatch
/// references; traces and references must align one-to-one.
DistanceReport distance_metric(const std::vector<SimulationTrace>& traces,
                               const std::vector<ORPFSolution>& references);

void save_traces(const std::vector<SimulationTrace>& traces, const SensitivityModel& model,
                 const std::string& path);
std::vector<SimulationTrace> load_traces(const std::string& path, const SensitivityModel& model);

}  // namespace voltvar
