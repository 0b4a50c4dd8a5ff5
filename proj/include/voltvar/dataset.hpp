#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "voltvar/orpf.hpp"

namespace voltvar {

enum class PointKind { real, pseudo_low, pseudo_high };

std::string to_string(PointKind kind);
PointKind point_kind_from_string(const std::string& s);

struct DataPoint {
  double v = 0.0;
  double q = 0.0;
  PointKind kind = PointKind::real;
  int scenario_id = -1;  // -1 for pseudo points
};

/// Per-DER training set of (voltage, optimal setpoint) pairs, together with
/// the limits needed to validate it standalone.
struct LocalDataset {
  int der_bus = 0;
  double q_min = 0.0, q_max = 0.0;  // setpoint limits of this DER
  double v_min = 0.0, v_max = 0.0;  // voltage limits at this DER's bus
  std::vector<DataPoint> points;

  int real_count() const;
  int pseudo_low_count() const;
  int pseudo_high_count() const;
  void validate() const;
};

/// Perturbs base profiles entrywise by independent uniform factors in
/// [1 - perturbation, 1 + perturbation]. Scenario k derives from base entry
/// k mod |base|; output indices run 0..count-1. Deterministic given seed.
ScenarioSet generate_scenarios(const ScenarioSet& base, int count, double perturbation,
                               std::uint64_t seed);

struct SkipEntry {
  int scenario_index = -1;
  OrpfStatus status = OrpfStatus::infeasible;
  double min_violation = 0.0;
};

struct DatasetBuildConfig {
  double alpha = 0.5;
  OrpfOptions orpf;
  int workers = 0;  // 0 = hardware count
};

struct DatasetBuild {
  std::vector<LocalDataset> datasets;    // one per DER, feeder order
  std::vector<SkipEntry> skipped;        // non-optimal scenarios
  std::vector<ORPFSolution> solutions;   // per scenario, input order
};

/// Solves the dispatch problem for every scenario, in input order.
std::vector<ORPFSolution> solve_scenarios(const SensitivityModel& model,
                                          const ScenarioSet& scenarios,
                                          const DatasetBuildConfig& config);

/// Splits per-scenario minimizers into per-DER (v*, q*) points; non-optimal
/// scenarios go to the skip list. Tolerates an empty yield.
DatasetBuild assemble_datasets(const SensitivityModel& model, const ScenarioSet& scenarios,
                               std::vector<ORPFSolution> solutions);

/// solve_scenarios + assemble_datasets; errors out if nothing remains.
DatasetBuild build_dataset(const SensitivityModel& model, const ScenarioSet& scenarios,
                           const DatasetBuildConfig& config);

/// Appends uniformly spaced saturation points: count_low pairs (v, q_max)
/// over v_low_range (which must sit at or below v_min) and count_high pairs
/// (v, q_min) over v_high_range (at or above v_max).
LocalDataset add_pseudo_points(const LocalDataset& dataset, int count_low, int count_high,
                               std::pair<double, double> v_low_range,
                               std::pair<double, double> v_high_range);

/// Fraction of point pairs ordered the wrong way (v_i < v_j and q_i < q_j)
/// among all pairs; quantifies how far the data is from a nonincreasing
/// relationship. Reported, not enforced.
double monotone_inconsistency(const LocalDataset& dataset);

void save_dataset(const LocalDataset& dataset, const std::string& path);
LocalDataset load_dataset(const std::string& path);

}  // namespace voltvar
