#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "voltvar/controller.hpp"

namespace voltvar {

/// One experiment description: inputs, stage knobs, output directory. Every
/// stage is a pure function of this struct plus the referenced files, so
/// reruns reproduce artifacts byte for byte.
struct RunConfig {
  std::string feeder_path;
  std::string profiles_path;
  std::string out_dir = "out";

  double alpha = 0.5;
  int scenario_count = 0;  // 0 = one scenario per base profile row

  double dataset_perturbation = 0.0;    // forecast wiggle when building the dataset
  double simulate_perturbation = 0.05;  // realization wiggle when simulating

  int pseudo_low = 700;
  int pseudo_high = 700;
  double pseudo_low_span = 0.10;   // pseudo-low voltages span [v_min - span, v_min]
  double pseudo_high_span = 0.10;  // pseudo-high voltages span [v_max, v_max + span]

  int hidden = 100;
  TrainConfig train;
  int droop_resolution = 41;

  bool epsilon_auto = true;  // 0.9 * stepsize bound from the trained functions
  double epsilon = 0.0;      // used when epsilon_auto is false
  ControllerKind controller = ControllerKind::incremental;
  FlowModel flow = FlowModel::ac;
  double noise = 0.0;
  int steps = 120;

  std::uint64_t seed = 1;
  int workers = 0;

  void validate() const;
};

RunConfig load_run_config(const std::string& path);
void save_run_config(const RunConfig& config, const std::string& path);

/// Applies a CLI-style override. Accepted keys: alpha, epsilon (number or
/// "auto"), noise, seed, steps, workers, scenarios, hidden, out, controller,
/// flow, feeder, profiles.
void apply_override(RunConfig& config, const std::string& key, const std::string& value);

struct BuildDatasetReport {
  int scenarios = 0;
  int feasible = 0;
  int skipped = 0;
  int points_per_der = 0;  // real + pseudo
  std::vector<double> inconsistency;  // per DER, fraction of wrongly ordered pairs
  std::string text;
};

struct TrainReport {
  struct PerDer {
    int bus = 0;
    double mse = 0.0;
    double lipschitz = 0.0;
  };
  std::vector<PerDer> per_der;
  double max_lipschitz = 0.0;
  double x_norm = 0.0;
  double eps_max = 0.0;
  double loss_learned = 0.0;
  double loss_droop_standard = 0.0;
  double loss_droop_optimized = 0.0;
  std::string text;
};

struct BoundReport {
  double x_norm = 0.0;
  double max_lipschitz = 0.0;
  double eps_max = 0.0;
  double eps_used = 0.0;
  std::string text;
};

struct SimulateReport {
  int scenarios = 0;
  int converged = 0;
  int oscillating = 0;
  int ac_failed = 0;
  double epsilon_used = 0.0;
  double mean_final_residual = 0.0;
  double mean_voltage_deviation = 0.0;  // mean over scenarios of ||v_final - 1||_inf
  std::string text;
};

struct EvaluateReport {
  struct Row {
    std::string controller;
    double alpha = 0.0;
    double noise = 0.0;
    double epsilon = 0.0;
    double day_avg_distance = 0.0;
    int scenarios = 0;
    int converged = 0;
    int oscillating = 0;
    int ac_failed = 0;
  };
  std::vector<Row> rows;
  std::string text;
};

/// Stage 1: scenarios -> per-scenario dispatch -> per-DER datasets with
/// pseudo points. Writes datasets/der_<bus>.csv, skip_log.csv,
/// orpf_reference.csv, and the effective config.
BuildDatasetReport cmd_build_dataset(const RunConfig& config);

/// Stage 2: fits the per-DER response functions and the optimized droop
/// parameters; writes functions/*.json, train_report.csv, losses.csv.
TrainReport cmd_train(const RunConfig& config);

/// Reports the stability stepsize bound for the trained functions; writes
/// bound.csv.
BoundReport cmd_bound(const RunConfig& config);

/// Stage 3: closed-loop day run for the configured controller; writes
/// traces/<kind>.csv and summary/<kind>.csv.
SimulateReport cmd_simulate(const RunConfig& config);

/// Stage 4: compares every simulated controller against freshly computed
/// per-scenario dispatch references; writes evaluation.csv.
EvaluateReport cmd_evaluate(const RunConfig& config);

}  // namespace voltvar
