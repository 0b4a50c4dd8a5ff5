#pragma once

#include <string>

#include "voltvar/power_flow.hpp"

namespace voltvar {

enum class OrpfStatus { optimal, infeasible, max_iter };

std::string to_string(OrpfStatus status);

/// One reactive-dispatch problem: pick DER setpoints q_C minimizing
///   alpha * ||v(q_C) - 1||_2 + (1 - alpha) * (q' R q + p' R p)
/// over the setpoint box, subject to voltage bounds, with v(q_C) given by
/// the linearized flow around the zero-injection profile.
struct ORPFInstance {
  const SensitivityModel* model = nullptr;
  Scenario scenario;
  double alpha = 0.5;
  Vector q_min, q_max;  // setpoint box, C
  Vector v_min, v_max;  // bus voltage bounds, N

  void validate() const;
};

ORPFInstance make_orpf_instance(const SensitivityModel& model, const Scenario& scenario,
                                double alpha);

struct ORPFSolution {
  Vector q_star;             // C
  Vector v_star;             // N, linearized voltages at q_star
  double objective = 0.0;
  OrpfStatus status = OrpfStatus::max_iter;
  double kkt_residual = 0.0;
  int iterations = 0;
  double min_violation = 0.0;  // phase-1 certificate: least attainable bound violation
};

struct OrpfOptions {
  double tolerance = 1e-8;          // primal/dual residual threshold
  int max_iterations = 50000;
  double infeasibility_tol = 1e-8;  // phase-1 violation above this means infeasible
};

/// Primal-dual splitting solve. Runs a phase-1 violation minimization first;
/// instances whose least bound violation exceeds the tolerance come back with
/// status infeasible and the certificate in min_violation.
ORPFSolution solve_orpf(const ORPFInstance& instance, const OrpfOptions& options = {});

/// Objective value at q_c, ignoring constraints.
double evaluate_cost(const ORPFInstance& instance, const Vector& q_c);

/// Exhaustive reference: evaluates the objective on a resolution^C grid over
/// the box, discards points breaking the voltage bounds, returns the best
/// (earliest grid index wins ties). Rejects C > 3.
ORPFSolution grid_search_oracle(const ORPFInstance& instance, int resolution);

}  // namespace voltvar
