// Command-line front end: check, generate, bench.
//
// Exit codes: 0 linearizable, 1 non-linearizable, 2 input/validation error,
// 3 internal error or oracle budget exceeded.

#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "linmon/bench.hpp"
#include "linmon/check.hpp"
#include "linmon/generator.hpp"

namespace {

using namespace linmon;

constexpr int kExitLinearizable = 0;
constexpr int kExitNonLinearizable = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

struct CheckArgs {
  std::vector<std::string> inputs;
  std::string format = "ops";
  std::string adt;
  bool oracle = false;
  bool json = false;
  int jobs = 1;
  int oracle_max_ops = 20;
  std::uint64_t oracle_max_states = 1'000'000;
};

struct FileOutcome {
  int exit_code = kExitInternal;
  std::string text;  // one line (or one JSON object) per file
};

FileOutcome check_one(const CheckArgs& args, const std::string& path) {
  FileOutcome out;
  std::optional<AdtKind> expected;
  if (!args.adt.empty()) {
    expected = parse_adt(args.adt);
    if (!expected) {
      out.exit_code = kExitInputError;
      out.text = "error: unknown adt '" + args.adt + "'";
      return out;
    }
  }
  HistoryFormat fmt = args.format == "events" ? HistoryFormat::Events : HistoryFormat::Ops;

  ParseResult parsed;
  try {
    parsed = parse_history(read_file(path), fmt, expected);
  } catch (const std::exception& e) {
    out.exit_code = kExitInputError;
    out.text = path + ": error: " + e.what();
    return out;
  }

  CheckSettings settings;
  settings.use_oracle = args.oracle;
  settings.budget.max_ops = args.oracle_max_ops;
  settings.budget.max_states = args.oracle_max_states;
  RunResult result = run_check(parsed.history, settings);

  switch (result.status) {
    case RunResult::Status::InputError: out.exit_code = kExitInputError; break;
    case RunResult::Status::OracleBudget: out.exit_code = kExitInternal; break;
    case RunResult::Status::Ok:
      out.exit_code = result.report.verdict == Verdict::Linearizable ? kExitLinearizable
                                                                     : kExitNonLinearizable;
      break;
  }

  if (args.json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["input"] = path;
    j["adt"] = std::string(adt_name(parsed.history.adt));
    j["n_ops"] = parsed.history.ops.size();
    if (result.status == RunResult::Status::Ok) {
      j["verdict"] = std::string(verdict_name(result.report.verdict));
      j["stage"] = std::string(stage_name(result.report.stage));
      j["removal_order"] = result.report.removal_order;
      j["elapsed_ns"] = result.report.elapsed.count();
    } else {
      j["verdict"] = result.status == RunResult::Status::OracleBudget ? "budget_exceeded"
                                                                      : "input_error";
    }
    j["warnings"] = parsed.warnings;
    j["diagnostics"] = result.diagnostics;
    out.text = j.dump();
  } else {
    std::string status;
    switch (result.status) {
      case RunResult::Status::Ok: status = std::string(verdict_name(result.report.verdict)); break;
      case RunResult::Status::OracleBudget: status = "budget_exceeded"; break;
      case RunResult::Status::InputError: status = "input_error"; break;
    }
    out.text = path + ": " + status;
    for (const auto& d : result.diagnostics) out.text += "\n  " + d;
    for (const auto& w : parsed.warnings) out.text += "\n  warning: " + w;
  }
  return out;
}

int cmd_check(const CheckArgs& args) {
  std::vector<FileOutcome> outcomes(args.inputs.size());
  int jobs = std::max(1, args.jobs);
  if (jobs == 1 || args.inputs.size() <= 1) {
    for (std::size_t i = 0; i < args.inputs.size(); ++i) outcomes[i] = check_one(args, args.inputs[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= args.inputs.size()) return;
          outcomes[i] = check_one(args, args.inputs[i]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  int exit_code = kExitLinearizable;
  for (const auto& o : outcomes) {
    std::cout << o.text << "\n";
    exit_code = std::max(exit_code, o.exit_code);
  }
  return exit_code;
}

struct GenerateArgs {
  std::string adt;
  std::int64_t ops = 0;
  std::int32_t procs = 1;
  std::uint64_t seed = 0;
  double peek_ratio = 0.3;
  double fail_ratio = -1.0;   // resolved per adt
  double empty_ratio = -1.0;  // resolved per adt
  std::int64_t relax = 8;
  std::string mutate_kind;
  std::string out_path;
};

int cmd_generate(const GenerateArgs& args) {
  auto adt = parse_adt(args.adt);
  if (!adt) {
    std::cerr << "error: unknown adt '" << args.adt << "'\n";
    return kExitInputError;
  }
  GenConfig cfg;
  cfg.adt = *adt;
  cfg.n_ops = args.ops;
  cfg.n_procs = args.procs;
  cfg.seed = args.seed;
  cfg.peek_ratio = cfg.adt == AdtKind::Set ? 0.0 : args.peek_ratio;
  cfg.fail_ratio = args.fail_ratio >= 0 ? args.fail_ratio : (cfg.adt == AdtKind::Set ? 0.2 : 0.0);
  cfg.empty_ratio = args.empty_ratio >= 0
                        ? args.empty_ratio
                        : (cfg.adt == AdtKind::Set || cfg.adt == AdtKind::Register ? 0.0 : 0.1);
  cfg.relax = args.relax;
  if (auto err = cfg.validate(); !err.empty()) {
    std::cerr << "error: " << err << "\n";
    return kExitInputError;
  }

  History h = generate_linearizable(cfg);
  std::string verdict = "linearizable";
  if (!args.mutate_kind.empty()) {
    auto kind = parse_mutation(args.mutate_kind);
    if (!kind) {
      std::cerr << "error: unknown mutation '" << args.mutate_kind << "'\n";
      return kExitInputError;
    }
    MutationResult m = mutate(h, *kind, cfg.seed ^ 0xd1b54a32d192ed03ull);
    h = std::move(m.history);
    verdict = m.changed ? "unknown" : "linearizable";
  }

  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << args.out_path << "\n";
    return kExitInputError;
  }
  out << serialize_history(h, HistoryFormat::Ops);
  out.close();

  ValueTable values(h);
  nlohmann::json j;
  j["schema"] = 1;
  j["adt"] = std::string(adt_name(h.adt));
  j["n_ops"] = h.ops.size();
  j["n_values"] = values.size();
  j["seed"] = cfg.seed;
  j["verdict"] = verdict;
  j["path"] = args.out_path;
  std::cout << j.dump() << "\n";
  return 0;
}

struct BenchArgs {
  std::string adt;
  std::string sizes = "1000,10000";
  std::int32_t reps = 3;
  std::uint64_t seed = 0;
  std::int32_t procs = 40;
  std::string csv_path;
  std::string summary_path;
  bool mutants = false;
};

int cmd_bench(const BenchArgs& args) {
  auto adt = parse_adt(args.adt);
  if (!adt) {
    std::cerr << "error: unknown adt '" << args.adt << "'\n";
    return kExitInputError;
  }
  BenchPlan plan;
  plan.adt = *adt;
  plan.reps = args.reps;
  plan.seed = args.seed;
  plan.n_procs = args.procs;
  plan.include_mutants = args.mutants;
  std::stringstream sizes(args.sizes);
  std::string tok;
  while (std::getline(sizes, tok, ',')) {
    if (!tok.empty()) plan.sizes.push_back(std::stoll(tok));
  }
  if (auto err = plan.validate(); !err.empty()) {
    std::cerr << "error: " << err << "\n";
    return kExitInputError;
  }

  BenchSummary summary;
  if (!args.csv_path.empty()) {
    std::ofstream csv(args.csv_path, std::ios::binary);
    if (!csv) {
      std::cerr << "error: cannot write " << args.csv_path << "\n";
      return kExitInputError;
    }
    summary = run_bench(plan, csv);
  } else {
    summary = run_bench(plan, std::cout);
  }

  std::string json = summary_json(plan, summary);
  if (args.summary_path.empty()) {
    std::cout << json << "\n";
  } else {
    std::ofstream out(args.summary_path, std::ios::binary);
    out << json << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linearizability monitor for register, set, stack, queue and priority-queue histories"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Check whether a history is linearizable");
  check->add_option("--input", check_args.inputs, "History file(s)")->required();
  check->add_option("--format", check_args.format, "Input format")
      ->check(CLI::IsMember({"ops", "events"}));
  check->add_option("--adt", check_args.adt,
                    "ADT kind (optional when the file carries an adt header)");
  check->add_flag("--oracle", check_args.oracle, "Force the brute-force oracle");
  check->add_flag("--json", check_args.json, "Machine-readable JSON output");
  check->add_option("--jobs", check_args.jobs, "Parallelism across input files");
  check->add_option("--oracle-max-ops", check_args.oracle_max_ops, "Oracle op budget");
  check->add_option("--oracle-max-states", check_args.oracle_max_states, "Oracle state budget");

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "Generate a workload history");
  gen->add_option("--adt", gen_args.adt, "ADT kind")->required();
  gen->add_option("--ops", gen_args.ops, "Number of operations")->required();
  gen->add_option("--procs", gen_args.procs, "Number of processes");
  gen->add_option("--seed", gen_args.seed, "RNG seed");
  gen->add_option("--peek-ratio", gen_args.peek_ratio, "Peek/read ratio");
  gen->add_option("--fail-ratio", gen_args.fail_ratio, "Failed-op ratio (set only)");
  gen->add_option("--empty-ratio", gen_args.empty_ratio, "Empty-op ratio");
  gen->add_option("--relax", gen_args.relax, "Max window expansion in ticks");
  gen->add_option("--mutate", gen_args.mutate_kind,
                  "Apply a mutation: swap_remove_values|shrink_window|shift_window|drop_add");
  gen->add_option("--out", gen_args.out_path, "Output path (ops format)")->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run the scaling harness");
  bench->add_option("--adt", bench_args.adt, "ADT kind")->required();
  bench->add_option("--sizes", bench_args.sizes, "Comma-separated history sizes");
  bench->add_option("--reps", bench_args.reps, "Repetitions per size");
  bench->add_option("--seed", bench_args.seed, "Base RNG seed");
  bench->add_option("--procs", bench_args.procs, "Number of processes");
  bench->add_option("--csv", bench_args.csv_path, "CSV output path");
  bench->add_option("--summary", bench_args.summary_path, "JSON summary path (default stdout)");
  bench->add_flag("--mutants", bench_args.mutants, "Interleave mutated (unknown) histories");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (check->parsed()) return cmd_check(check_args);
    if (gen->parsed()) return cmd_generate(gen_args);
    if (bench->parsed()) return cmd_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInputError;
}
