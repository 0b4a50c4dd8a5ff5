#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "voltvar/dataset.hpp"

namespace voltvar {

/// Slack for the nonpositive-cumulative-sum check: clip-and-difference then
/// floating re-summation can leave positive values an ulp or so above zero.
inline constexpr double kMonotoneTol = 1e-12;

/// Clamped nonincreasing piecewise-linear map from local voltage to setpoint:
///   N(v) = beta + sum_h w_h max(0, v - b_h),   phi(v) = clamp(N(v), q_min, q_max)
/// Nonincreasing iff every prefix sum of w is <= 0; the steepest prefix sum
/// magnitude is the Lipschitz constant of N (and bounds phi's).
struct EquilibriumFunction {
  std::vector<double> b;  // kink positions, ascending
  std::vector<double> w;  // kink slope increments
  double beta = 0.0;      // output level left of the first kink
  double q_min = 0.0;
  double q_max = 0.0;
  double lipschitz = 0.0;  // cached; maintained by the constructors below

  int hidden_count() const { return static_cast<int>(b.size()); }
  void validate() const;
};

double evaluate(const EquilibriumFunction& phi, double v);

/// Pre-clamp response beta + sum_h w_h max(0, v - b_h).
double evaluate_preclamp(const EquilibriumFunction& phi, double v);

double lipschitz_constant(const EquilibriumFunction& phi);

/// Clips every prefix sum of w to min(., 0) and recovers weights by
/// differencing. Returns feasible input unchanged.
EquilibriumFunction restore_feasibility(const EquilibriumFunction& phi);

struct TrainConfig {
  int episodes = 2000;
  double learning_rate = 0.01;
  double decay_factor = 0.5;  // learning rate multiplier applied every decay_interval
  int decay_interval = 500;
  std::uint64_t seed = 0;
  double beta1 = 0.9;  // first/second moment retention of the adaptive optimizer
  double beta2 = 0.999;
  double epsilon = 1e-8;

  void validate() const;
};

/// Full-batch adaptive-moment descent on mean squared setpoint error, with
/// kinks re-sorted and the nonincreasing shape restored after every step.
/// Deterministic given config.seed.
EquilibriumFunction train(const LocalDataset& dataset, int hidden_count,
                          double q_min, double q_max, const TrainConfig& config = {});

/// Builds the exact piecewise-linear interpolant of a nonincreasing g sampled
/// at samples.size() - 1 equal intervals over [x_lo, x_hi]. Kinks sit at the
/// sample abscissae; each segment takes the sampled secant slope, so the
/// sup-norm error against g is at most L_g * (x_hi - x_lo) / H. The clamp box
/// is widened past the sample range so it never binds.
EquilibriumFunction construct_interpolant(const std::vector<double>& samples,
                                          double x_lo, double x_hi);

void save_function(const EquilibriumFunction& phi, const std::string& path);
EquilibriumFunction load_function(const std::string& path);

}  // namespace voltvar
