#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgroup/attack.hpp"
#include "fgroup/json_io.hpp"

namespace fgroup {

// A Monte Carlo run: `kSingle` attacks one equation per trial with one
// distance function (the per-function success-rate experiments);
// `kCombined` attacks all four equations per trial with a per-side
// function choice (the full-break experiments).
enum class ExperimentMode { kSingle, kCombined };

std::string experiment_mode_name(ExperimentMode mode);
ExperimentMode parse_experiment_mode(std::string_view name);

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::kCombined;
  std::uint32_t s = 3;
  std::size_t length = 256;
  std::size_t trials = 1000;
  // Iteration bound N for every descent; 0 means the default 2 * length.
  std::size_t max_iterations = 0;
  // Single mode: the function under test, and optionally the equation to
  // attack (defaults to U1 for dB/dBw, U1_INV for dA/dAw/dAmax).
  std::optional<DistanceFunctionId> distance_fn;
  std::optional<EquationId> equation;
  // Combined mode: the per-side function pairing.
  DistanceChoice distance_choice;
  std::uint64_t master_seed = 0;
  // 0 = one worker per hardware thread.
  unsigned worker_count = 1;
  std::string csv_path;   // empty = do not write
  std::string json_path;  // empty = do not write

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;

  std::size_t effective_iterations() const {
    return max_iterations == 0 ? 2 * length : max_iterations;
  }
};

// One equation's outcome inside a trial, as recorded in the CSV.
struct EquationResult {
  EquationId equation = EquationId::kU1;
  DistanceFunctionId distance_fn = DistanceFunctionId::kB;
  bool success = false;
  std::size_t iterations_used = 0;
  std::uint64_t final_distance = 0;
  double time_ms = 0.0;
};

// Everything measured about one trial.  All fields except the wall-time
// measurements are a pure function of (config, trial_index).
struct TrialRecord {
  std::size_t trial_index = 0;
  std::uint64_t derived_seed = 0;
  std::vector<EquationResult> equations;
  bool overall_success = false;
  bool key_recovered_correctly = false;
};

struct RateEstimate {
  std::string name;
  std::uint64_t successes = 0;
  std::uint64_t attempts = 0;
  double rate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;

  friend bool operator==(const RateEstimate&, const RateEstimate&) = default;
};

struct SummaryReport {
  ExperimentConfig config;
  // Per-equation rates, plus the pooled "p_a" (U1 and U2_INV attempts)
  // and "p_b" (U2 and U1_INV) in combined mode.
  std::vector<RateEstimate> targets;
  RateEstimate observed;  // the headline rate (overall success per trial)
  // Combined mode only: 1 - (1-p_a)^2 (1-p_b)^2 and its gap to observed.
  std::optional<double> predicted_combined_rate;
  std::optional<double> prediction_gap;
  double total_runtime_ms = 0.0;

  friend bool operator==(const SummaryReport&, const SummaryReport&) = default;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;  // sorted by trial_index
  SummaryReport summary;
};

// The independence heuristic for the expected whole-instance break rate
// given per-element rates.  Inputs must lie in [0, 1].
double estimate_combined_rate(double p_a, double p_b);

// Wilson score interval for a binomial proportion at the given
// confidence level (e.g. 0.95).
struct Interval {
  double low = 0.0;
  double high = 0.0;
};

Interval binomial_ci(std::uint64_t successes, std::uint64_t trials,
                     double level);

// Run the configured experiment.  Trials are independent work items
// distributed over worker_count threads; every field of every record
// except the wall-time measurements is identical regardless of the
// worker count.
ExperimentResult run_single_function_experiment(const ExperimentConfig& cfg);
ExperimentResult run_combined_experiment(const ExperimentConfig& cfg);
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Serialization.  CSV columns, in order:
//   trial,derived_seed,equation,distance_fn,success,iterations_used,
//   final_distance,time_ms
// with one row per equation result.  The JSON summary round-trips
// through parse via summary_from_json.
std::string records_to_csv(const std::vector<TrialRecord>& records);
Json summary_to_json(const SummaryReport& summary);
SummaryReport summary_from_json(const Json& j);

// Writes the CSV and/or JSON files for non-empty paths in the result's
// config, byte-stable for identical inputs.  I/O failures raise
// std::runtime_error naming the path.
void write_reports(const ExperimentResult& result);

}  // namespace fgroup
