#include "fgroup/cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "fgroup/attack.hpp"
#include "fgroup/distance.hpp"
#include "fgroup/harness.hpp"
#include "fgroup/json_io.hpp"
#include "fgroup/normal_form.hpp"
#include "fgroup/protocol.hpp"
#include "fgroup/rng.hpp"
#include "fgroup/word.hpp"

namespace fgroup {

namespace {

struct NfArgs {
  std::string word;
};

struct DistArgs {
  std::string fn;
  std::uint32_t s = 2;
  std::string word;
};

struct KeygenArgs {
  std::uint32_t s = 3;
  std::size_t length = 256;
  std::uint64_t seed = 0;
};

struct AttackArgs {
  std::string instance_path;
  std::size_t n = 0;  // 0 = default 2L
};

struct ExperimentArgs {
  std::string mode;
  std::uint32_t s = 3;
  std::size_t length = 256;
  std::size_t trials = 1;
  std::size_t n = 0;
  std::string fn;
  std::string equation;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string csv_path;
  std::string json_path;
};

int dispatch(const CLI::App& app, const NfArgs& nf_args,
             const DistArgs& dist_args, const KeygenArgs& keygen_args,
             const AttackArgs& attack_args, const ExperimentArgs& exp_args,
             std::ostream& out) {
  if (app.got_subcommand("nf")) {
    const NormalForm u = normalize(parse_word(nf_args.word));
    out << format_word(u.spelling()) << "\n";
    return 0;
  }

  if (app.got_subcommand("dist")) {
    const DistanceFunctionId fn = parse_distance_fn(dist_args.fn);
    const NormalForm u = normalize(parse_word(dist_args.word));
    out << evaluate(fn, u, dist_args.s) << "\n";
    return 0;
  }

  if (app.got_subcommand("keygen")) {
    Rng rng(keygen_args.seed);
    const ProtocolInstance inst =
        generate_instance(keygen_args.s, keygen_args.length, rng);
    out << instance_to_json(inst, /*include_secrets=*/true).dump(2) << "\n";
    return 0;
  }

  if (app.got_subcommand("attack")) {
    const std::string text = read_text_file(attack_args.instance_path);
    Json j;
    try {
      j = Json::parse(text);
    } catch (const std::exception& e) {
      throw std::runtime_error(attack_args.instance_path + ": " + e.what());
    }
    const LoadedInstance loaded = instance_from_json(j);
    const std::size_t n =
        attack_args.n != 0
            ? attack_args.n
            : std::max<std::size_t>(1, 2 * loaded.view.length);
    const DistanceChoice choice{};
    const InstanceAttackReport report = attack_instance(loaded.view, choice, n);
    const std::optional<NormalForm> true_key =
        loaded.full ? std::optional<NormalForm>(loaded.full->shared_key)
                    : std::nullopt;
    out << attack_report_to_json(report, choice, true_key).dump(2) << "\n";
    return 0;
  }

  if (app.got_subcommand("experiment")) {
    ExperimentConfig cfg;
    cfg.mode = parse_experiment_mode(exp_args.mode);
    cfg.s = exp_args.s;
    cfg.length = exp_args.length;
    cfg.trials = exp_args.trials;
    cfg.max_iterations = exp_args.n;
    if (!exp_args.fn.empty()) cfg.distance_fn = parse_distance_fn(exp_args.fn);
    if (!exp_args.equation.empty())
      cfg.equation = parse_equation(exp_args.equation);
    cfg.master_seed = exp_args.seed;
    cfg.worker_count = exp_args.workers;
    cfg.csv_path = exp_args.csv_path;
    cfg.json_path = exp_args.json_path;
    if (cfg.mode == ExperimentMode::kCombined &&
        (cfg.distance_fn || cfg.equation))
      throw std::invalid_argument(
          "--fn and --equation apply to single mode only");

    const ExperimentResult result = run_experiment(cfg);
    write_reports(result);
    out << summary_to_json(result.summary).dump(2) << "\n";
    return 0;
  }

  throw std::invalid_argument("no subcommand given");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Cryptanalysis workbench for the Shpilrain-Ushakov key "
               "agreement over Thompson's group F"};
  app.require_subcommand(1);

  NfArgs nf_args;
  CLI::App* nf_cmd =
      app.add_subcommand("nf", "Print the normal form of a word");
  nf_cmd->add_option("word", nf_args.word, "word text, e.g. \"x0^-1 x1 x0\"")
      ->required();

  DistArgs dist_args;
  CLI::App* dist_cmd = app.add_subcommand(
      "dist", "Evaluate a subgroup distance function on a word");
  dist_cmd->add_option("--fn", dist_args.fn, "dB, dBw, dA, dAw, or dAmax")
      ->required();
  dist_cmd->add_option("--s", dist_args.s, "subgroup parameter (>= 2)")
      ->required();
  dist_cmd->add_option("word", dist_args.word, "word text")->required();

  KeygenArgs keygen_args;
  CLI::App* keygen_cmd = app.add_subcommand(
      "keygen", "Generate a key-agreement instance as JSON (with secrets)");
  keygen_cmd->add_option("--s", keygen_args.s, "subgroup parameter (>= 2)")
      ->required();
  keygen_cmd
      ->add_option("--length", keygen_args.length,
                   "normal-form length L of each sampled word (even)")
      ->required();
  keygen_cmd->add_option("--seed", keygen_args.seed, "64-bit RNG seed")
      ->required();

  AttackArgs attack_args;
  CLI::App* attack_cmd = app.add_subcommand(
      "attack", "Attack an instance file with all four equations");
  attack_cmd
      ->add_option("--instance", attack_args.instance_path,
                   "path to an instance JSON file")
      ->required();
  attack_cmd->add_option("--n", attack_args.n,
                         "iteration bound N (default 2L)");

  ExperimentArgs exp_args;
  CLI::App* exp_cmd = app.add_subcommand(
      "experiment", "Run a seeded Monte Carlo attack experiment");
  exp_cmd->add_option("--mode", exp_args.mode, "single or combined")
      ->required();
  exp_cmd->add_option("--s", exp_args.s, "subgroup parameter (>= 2)")
      ->required();
  exp_cmd->add_option("--length", exp_args.length, "word length L (even)")
      ->required();
  exp_cmd->add_option("--trials", exp_args.trials, "number of trials")
      ->required();
  exp_cmd->add_option("--n", exp_args.n, "iteration bound N (default 2L)");
  exp_cmd->add_option("--fn", exp_args.fn,
                      "single mode: distance function under test");
  exp_cmd->add_option("--equation", exp_args.equation,
                      "single mode: equation to attack (default U1 for the "
                      "dB family, U1_INV for the dA family)");
  exp_cmd->add_option("--seed", exp_args.seed, "64-bit master seed")
      ->required();
  exp_cmd->add_option("--workers", exp_args.workers,
                      "worker threads (0 = hardware concurrency)");
  exp_cmd->add_option("--csv", exp_args.csv_path, "write per-trial CSV here");
  exp_cmd->add_option("--json", exp_args.json_path, "write summary JSON here");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("fgw");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    const int code = e.get_exit_code();
    return code == 0 ? 1 : code;
  }

  try {
    return dispatch(app, nf_args, dist_args, keygen_args, attack_args,
                    exp_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fgroup
