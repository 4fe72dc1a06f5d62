#include "fgroup/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "fgroup/rng.hpp"

namespace fgroup {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start, Clock::time_point end) {
  return std::chrono::duration<double, std::milli>(end - start).count();
}

// Standard normal quantile by bisection on the CDF (via erfc); plenty of
// precision for confidence bounds and free of platform-specific tables.
double normal_quantile(double prob) {
  double lo = -40.0;
  double hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double cdf = 0.5 * std::erfc(-mid / std::sqrt(2.0));
    (cdf < prob ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

RateEstimate make_rate(std::string name, std::uint64_t successes,
                       std::uint64_t attempts) {
  RateEstimate est;
  est.name = std::move(name);
  est.successes = successes;
  est.attempts = attempts;
  est.rate = attempts == 0 ? 0.0
                           : static_cast<double>(successes) /
                                 static_cast<double>(attempts);
  const Interval ci = binomial_ci(successes, attempts, 0.95);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  return est;
}

// Runs trial_fn(i) for i in [0, trials) across the requested number of
// threads, writing each record into its own slot; slots make the output
// independent of scheduling.
template <typename TrialFn>
void run_trials(std::size_t trials, unsigned worker_count, TrialFn&& trial_fn,
                std::vector<TrialRecord>& out) {
  out.resize(trials);
  unsigned workers =
      worker_count == 0
          ? std::max(1u, std::thread::hardware_concurrency())
          : worker_count;
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, std::max<std::size_t>(trials, 1)));

  if (workers <= 1) {
    for (std::size_t i = 0; i < trials; ++i) out[i] = trial_fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      if (stop.load(std::memory_order_relaxed)) return;
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= trials) return;
      try {
        out[i] = trial_fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

EquationResult attack_one(const PublicView& view, EquationId eq,
                          DistanceFunctionId fn, std::size_t n,
                          AttackOutcome& outcome_out) {
  const DecompositionProblem problem = equation_problem(view, eq, fn, n);
  const auto start = Clock::now();
  outcome_out = greedy_descent(problem);
  const auto end = Clock::now();
  EquationResult res;
  res.equation = eq;
  res.distance_fn = fn;
  res.success = outcome_out.success;
  res.iterations_used = outcome_out.iterations_used;
  res.final_distance = outcome_out.final_distance;
  res.time_ms = elapsed_ms(start, end);
  return res;
}

void validate_common(const ExperimentConfig& cfg) {
  validate_subgroup_parameter(cfg.s);
  if (cfg.trials < 1)
    throw std::invalid_argument("experiment needs at least one trial");
  if (cfg.length < 2 || cfg.length % 2 != 0)
    throw std::invalid_argument("instance length must be even and >= 2");
}

std::uint64_t count_equation_successes(const std::vector<TrialRecord>& records,
                                       EquationId eq) {
  std::uint64_t successes = 0;
  for (const TrialRecord& r : records)
    for (const EquationResult& e : r.equations)
      if (e.equation == eq && e.success) ++successes;
  return successes;
}

Json config_to_json(const ExperimentConfig& c) {
  Json j;
  j["mode"] = experiment_mode_name(c.mode);
  j["s"] = c.s;
  j["length"] = c.length;
  j["trials"] = c.trials;
  j["max_iterations"] = c.max_iterations;
  j["effective_iterations"] = c.effective_iterations();
  j["distance_fn"] =
      c.distance_fn ? Json(distance_fn_name(*c.distance_fn)) : Json(nullptr);
  j["equation"] = c.equation ? Json(equation_name(*c.equation)) : Json(nullptr);
  Json choice;
  choice["a_side"] = distance_fn_name(c.distance_choice.a_side);
  choice["b_side"] = distance_fn_name(c.distance_choice.b_side);
  j["distance_choice"] = std::move(choice);
  j["master_seed"] = c.master_seed;
  j["worker_count"] = c.worker_count;
  j["csv_path"] = c.csv_path;
  j["json_path"] = c.json_path;
  return j;
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  c.mode = parse_experiment_mode(j.at("mode").get<std::string>());
  c.s = j.at("s").get<std::uint32_t>();
  c.length = j.at("length").get<std::size_t>();
  c.trials = j.at("trials").get<std::size_t>();
  c.max_iterations = j.at("max_iterations").get<std::size_t>();
  if (!j.at("distance_fn").is_null())
    c.distance_fn = parse_distance_fn(j.at("distance_fn").get<std::string>());
  if (!j.at("equation").is_null())
    c.equation = parse_equation(j.at("equation").get<std::string>());
  c.distance_choice.a_side =
      parse_distance_fn(j.at("distance_choice").at("a_side").get<std::string>());
  c.distance_choice.b_side =
      parse_distance_fn(j.at("distance_choice").at("b_side").get<std::string>());
  c.master_seed = j.at("master_seed").get<std::uint64_t>();
  c.worker_count = j.at("worker_count").get<unsigned>();
  c.csv_path = j.at("csv_path").get<std::string>();
  c.json_path = j.at("json_path").get<std::string>();
  return c;
}

Json rate_to_json(const RateEstimate& r) {
  Json j;
  j["name"] = r.name;
  j["successes"] = r.successes;
  j["attempts"] = r.attempts;
  j["rate"] = r.rate;
  j["ci_low"] = r.ci_low;
  j["ci_high"] = r.ci_high;
  return j;
}

RateEstimate rate_from_json(const Json& j) {
  RateEstimate r;
  r.name = j.at("name").get<std::string>();
  r.successes = j.at("successes").get<std::uint64_t>();
  r.attempts = j.at("attempts").get<std::uint64_t>();
  r.rate = j.at("rate").get<double>();
  r.ci_low = j.at("ci_low").get<double>();
  r.ci_high = j.at("ci_high").get<double>();
  return r;
}

}  // namespace

std::string experiment_mode_name(ExperimentMode mode) {
  return mode == ExperimentMode::kSingle ? "single" : "combined";
}

ExperimentMode parse_experiment_mode(std::string_view name) {
  if (name == "single") return ExperimentMode::kSingle;
  if (name == "combined") return ExperimentMode::kCombined;
  throw std::invalid_argument("unknown mode (expected single or combined)");
}

double estimate_combined_rate(double p_a, double p_b) {
  if (!(p_a >= 0.0 && p_a <= 1.0) || !(p_b >= 0.0 && p_b <= 1.0))
    throw std::invalid_argument("probabilities must lie in [0, 1]");
  const double miss_a = 1.0 - p_a;
  const double miss_b = 1.0 - p_b;
  return 1.0 - miss_a * miss_a * miss_b * miss_b;
}

Interval binomial_ci(std::uint64_t successes, std::uint64_t trials,
                     double level) {
  if (trials < 1) throw std::invalid_argument("interval needs at least one trial");
  if (successes > trials)
    throw std::invalid_argument("successes cannot exceed trials");
  if (!(level > 0.0 && level < 1.0))
    throw std::invalid_argument("confidence level must lie in (0, 1)");

  const double z = normal_quantile(1.0 - (1.0 - level) / 2.0);
  const double n = static_cast<double>(trials);
  const double p_hat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p_hat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p_hat * (1.0 - p_hat) / n + z2 / (4.0 * n * n)) / denom;
  Interval out;
  out.low = std::max(0.0, center - half);
  out.high = std::min(1.0, center + half);
  return out;
}

ExperimentResult run_single_function_experiment(const ExperimentConfig& cfg) {
  const auto t_start = Clock::now();
  if (cfg.mode != ExperimentMode::kSingle)
    throw std::invalid_argument("config is not in single-function mode");
  validate_common(cfg);
  if (!cfg.distance_fn)
    throw std::invalid_argument("single-function mode needs a distance function");
  const DistanceFunctionId fn = *cfg.distance_fn;

  // Which equation this function attacks: B-targeting functions score
  // A-side attacks (default U1), A-targeting ones B-side attacks
  // (default U1_INV).
  const GeneratorSetId attacked =
      distance_fn_target(fn) == GeneratorSetId::kB ? GeneratorSetId::kA
                                                   : GeneratorSetId::kB;
  const EquationId eq = cfg.equation.value_or(
      attacked == GeneratorSetId::kA ? EquationId::kU1 : EquationId::kU1Inv);
  if (equation_attacked_side(eq) != attacked)
    throw std::invalid_argument(
        "equation does not pair with the distance function (dB family -> "
        "U1/U2_INV, dA family -> U2/U1_INV)");

  const std::size_t n = cfg.effective_iterations();
  ExperimentResult result;
  run_trials(
      cfg.trials, cfg.worker_count,
      [&](std::size_t i) {
        TrialRecord rec;
        rec.trial_index = i;
        rec.derived_seed = derive_trial_seed(cfg.master_seed, i);
        Rng rng(rec.derived_seed);
        const ProtocolInstance inst = generate_instance(cfg.s, cfg.length, rng);
        const PublicView view = public_view(inst);
        AttackOutcome outcome;
        rec.equations.push_back(attack_one(view, eq, fn, n, outcome));
        rec.overall_success = outcome.success;
        rec.key_recovered_correctly =
            outcome.success &&
            recover_shared_key(eq, outcome.x_tilde, outcome.y_tilde, view) ==
                inst.shared_key;
        return rec;
      },
      result.records);

  const std::uint64_t successes = count_equation_successes(result.records, eq);
  SummaryReport& summary = result.summary;
  summary.config = cfg;
  summary.targets.push_back(make_rate(equation_name(eq), successes, cfg.trials));
  summary.observed = make_rate("overall", successes, cfg.trials);
  summary.total_runtime_ms = elapsed_ms(t_start, Clock::now());
  return result;
}

ExperimentResult run_combined_experiment(const ExperimentConfig& cfg) {
  const auto t_start = Clock::now();
  if (cfg.mode != ExperimentMode::kCombined)
    throw std::invalid_argument("config is not in combined mode");
  validate_common(cfg);
  if (distance_fn_target(cfg.distance_choice.a_side) != GeneratorSetId::kB ||
      distance_fn_target(cfg.distance_choice.b_side) != GeneratorSetId::kA)
    throw std::invalid_argument(
        "combined mode needs a dB-family A-side function and a dA-family "
        "B-side function");

  const std::size_t n = cfg.effective_iterations();
  ExperimentResult result;
  run_trials(
      cfg.trials, cfg.worker_count,
      [&](std::size_t i) {
        TrialRecord rec;
        rec.trial_index = i;
        rec.derived_seed = derive_trial_seed(cfg.master_seed, i);
        Rng rng(rec.derived_seed);
        const ProtocolInstance inst = generate_instance(cfg.s, cfg.length, rng);
        const PublicView view = public_view(inst);
        std::optional<NormalForm> recovered;
        for (const EquationId eq : kAllEquations) {
          const DistanceFunctionId fn =
              equation_attacked_side(eq) == GeneratorSetId::kA
                  ? cfg.distance_choice.a_side
                  : cfg.distance_choice.b_side;
          AttackOutcome outcome;
          rec.equations.push_back(attack_one(view, eq, fn, n, outcome));
          if (outcome.success && !recovered)
            recovered = recover_shared_key(eq, outcome.x_tilde,
                                           outcome.y_tilde, view);
        }
        rec.overall_success = recovered.has_value();
        rec.key_recovered_correctly =
            recovered.has_value() && *recovered == inst.shared_key;
        return rec;
      },
      result.records);

  SummaryReport& summary = result.summary;
  summary.config = cfg;
  std::uint64_t overall = 0;
  for (const TrialRecord& r : result.records)
    if (r.overall_success) ++overall;
  const std::uint64_t u1 = count_equation_successes(result.records, EquationId::kU1);
  const std::uint64_t u2 = count_equation_successes(result.records, EquationId::kU2);
  const std::uint64_t u1_inv =
      count_equation_successes(result.records, EquationId::kU1Inv);
  const std::uint64_t u2_inv =
      count_equation_successes(result.records, EquationId::kU2Inv);
  summary.targets.push_back(make_rate("U1", u1, cfg.trials));
  summary.targets.push_back(make_rate("U2", u2, cfg.trials));
  summary.targets.push_back(make_rate("U1_INV", u1_inv, cfg.trials));
  summary.targets.push_back(make_rate("U2_INV", u2_inv, cfg.trials));
  // Pooled per-element estimates: the A-side equations sample p_a, the
  // B-side ones p_b, two attempts of each kind per trial.
  const RateEstimate p_a = make_rate("p_a", u1 + u2_inv, 2 * cfg.trials);
  const RateEstimate p_b = make_rate("p_b", u2 + u1_inv, 2 * cfg.trials);
  summary.targets.push_back(p_a);
  summary.targets.push_back(p_b);
  summary.observed = make_rate("overall", overall, cfg.trials);
  summary.predicted_combined_rate = estimate_combined_rate(p_a.rate, p_b.rate);
  summary.prediction_gap =
      std::abs(summary.observed.rate - *summary.predicted_combined_rate);
  summary.total_runtime_ms = elapsed_ms(t_start, Clock::now());
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  return cfg.mode == ExperimentMode::kSingle
             ? run_single_function_experiment(cfg)
             : run_combined_experiment(cfg);
}

std::string records_to_csv(const std::vector<TrialRecord>& records) {
  std::string out =
      "trial,derived_seed,equation,distance_fn,success,iterations_used,"
      "final_distance,time_ms\n";
  char buf[160];
  for (const TrialRecord& r : records) {
    for (const EquationResult& e : r.equations) {
      std::snprintf(buf, sizeof buf, "%zu,%llu,%s,%s,%d,%zu,%llu,%.3f\n",
                    r.trial_index,
                    static_cast<unsigned long long>(r.derived_seed),
                    equation_name(e.equation).c_str(),
                    distance_fn_name(e.distance_fn).c_str(),
                    e.success ? 1 : 0, e.iterations_used,
                    static_cast<unsigned long long>(e.final_distance),
                    e.time_ms);
      out += buf;
    }
  }
  return out;
}

Json summary_to_json(const SummaryReport& summary) {
  Json j;
  j["config"] = config_to_json(summary.config);
  Json targets = Json::array();
  for (const RateEstimate& r : summary.targets) targets.push_back(rate_to_json(r));
  j["targets"] = std::move(targets);
  j["observed"] = rate_to_json(summary.observed);
  j["predicted_combined_rate"] = summary.predicted_combined_rate
                                     ? Json(*summary.predicted_combined_rate)
                                     : Json(nullptr);
  j["prediction_gap"] =
      summary.prediction_gap ? Json(*summary.prediction_gap) : Json(nullptr);
  j["total_runtime_ms"] = summary.total_runtime_ms;
  return j;
}

SummaryReport summary_from_json(const Json& j) {
  SummaryReport s;
  s.config = config_from_json(j.at("config"));
  for (const Json& r : j.at("targets")) s.targets.push_back(rate_from_json(r));
  s.observed = rate_from_json(j.at("observed"));
  if (!j.at("predicted_combined_rate").is_null())
    s.predicted_combined_rate = j.at("predicted_combined_rate").get<double>();
  if (!j.at("prediction_gap").is_null())
    s.prediction_gap = j.at("prediction_gap").get<double>();
  s.total_runtime_ms = j.at("total_runtime_ms").get<double>();
  return s;
}

void write_reports(const ExperimentResult& result) {
  const ExperimentConfig& cfg = result.summary.config;
  if (!cfg.csv_path.empty())
    write_text_file(cfg.csv_path, records_to_csv(result.records));
  if (!cfg.json_path.empty())
    write_text_file(cfg.json_path, summary_to_json(result.summary).dump(2) + "\n");
}

}  // namespace fgroup
