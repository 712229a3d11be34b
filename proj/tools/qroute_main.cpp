#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qroute/error.hpp"
#include "qroute/harness.hpp"
#include "qroute/instances.hpp"
#include "qroute/json_io.hpp"
#include "qroute/model.hpp"
#include "qroute/oracle.hpp"
#include "qroute/solver.hpp"
#include "qroute/verifier.hpp"

namespace {

using namespace qroute;

struct CommonSolveFlags {
  std::string strategy = "budget-ascent";
  double time_limit_s = 0.0;
  std::optional<std::string> variant;
  std::optional<std::string> mode;
  std::optional<int> dummy_count;
  bool no_symmetry = false;
  bool no_frontload = false;
};

void apply_overrides(RoutingProblem& problem, const CommonSolveFlags& flags) {
  if (flags.variant) problem.variant = variant_from_string(*flags.variant);
  if (flags.mode) problem.mode = mode_from_string(*flags.mode);
  if (flags.dummy_count) problem.dummy_count = *flags.dummy_count;
  if (flags.no_symmetry) problem.symmetry_breaking = false;
  if (flags.no_frontload) problem.frontload_dominance = false;
  validate_problem(problem);
}

int cmd_gen(const InstanceSpec& spec, int dummy_count, const std::string& mode,
            const std::optional<std::string>& variant, std::string out_path) {
  RoutingProblem problem = make_bench_problem(spec, mode_from_string(mode), dummy_count);
  if (variant) problem.variant = variant_from_string(*variant);
  validate_problem(problem);
  if (out_path.empty()) out_path = instance_name(spec) + ".json";
  save_json(problem_to_json(problem), out_path);
  std::cout << out_path << "\n";
  return 0;
}

int cmd_solve(const std::string& problem_path, const CommonSolveFlags& flags,
              bool escalate, std::string out_path, bool dump_model) {
  RoutingProblem problem = load_problem(problem_path);
  apply_overrides(problem, flags);
  if (dump_model) {
    std::cerr << build_model(problem).dump();
  }

  SolveOptions options;
  options.strategy = engine::strategy_from_string(flags.strategy);
  options.limits.time_limit_ms = flags.time_limit_s * 1000.0;

  SolveOutcome outcome;
  int used_k = problem.dummy_count;
  if (escalate) {
    auto esc = solve_with_escalation(problem, options);
    outcome = std::move(esc.outcome);
    used_k = esc.dummy_count_used;
  } else {
    outcome = solve_problem(problem, options);
  }

  RoutingProblem solved = problem;
  solved.dummy_count = used_k;  // escalation may have widened the timeline
  if (outcome.best) {
    auto violations = verify(solved, *outcome.best);
    if (!violations.empty()) {
      std::cerr << "internal error: solution failed verification\n"
                << violation_report(violations);
      return 3;
    }
  }

  if (out_path.empty()) {
    auto dot = problem_path.rfind(".json");
    out_path = (dot == std::string::npos ? problem_path : problem_path.substr(0, dot)) +
               ".sol.json";
  }
  save_json(solution_to_json(solved, outcome), out_path);

  std::cout << "status=" << to_string(outcome.status);
  if (outcome.best) {
    std::cout << " objective=" << outcome.best->objective << " depth=" << outcome.best->depth;
  }
  if (escalate) std::cout << " dummy_count=" << used_k;
  std::cout << " time_ms=" << static_cast<long long>(outcome.stats.wall_ms)
            << " nodes=" << outcome.stats.nodes << " -> " << out_path << "\n";
  return outcome.status == SolveStatus::Unknown ? 4 : 0;
}

int cmd_verify(const std::string& problem_path, const std::string& solution_path) {
  RoutingProblem problem = load_problem(problem_path);
  nlohmann::json sj = load_json(solution_path);
  CompiledCircuit compiled = solution_from_json(sj);
  // Solutions written under an escalated K carry their own dummy count.
  if (auto k = solution_dummy_count(sj)) problem.dummy_count = *k;
  auto violations = verify(problem, compiled);
  if (violations.empty()) {
    std::cout << "ok\n";
    return 0;
  }
  std::cerr << violation_report(violations);
  return 2;
}

int cmd_oracle(const std::string& problem_path, const std::string& out_path) {
  RoutingProblem problem = load_problem(problem_path);
  OracleResult result = oracle_optimal(problem);
  if (!result.feasible) {
    std::cout << "infeasible\n";
    return 0;
  }
  SolveOutcome outcome;
  outcome.status = SolveStatus::Optimal;
  outcome.lower_bound = result.optimum;
  outcome.best = make_compiled(problem, *result.witness);
  std::cout << "optimum=" << result.optimum << " depth=" << outcome.best->depth << "\n";
  if (out_path.empty()) {
    std::cout << solution_to_json(problem, outcome).dump(2) << "\n";
  } else {
    save_json(solution_to_json(problem, outcome), out_path);
  }
  return 0;
}

int cmd_bench(const BenchOptions& options, const std::string& out_path,
              std::string plot_path) {
  auto records = run_bench(options);
  {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    write_bench_csv(records, out);
  }
  if (plot_path.empty()) plot_path = out_path + ".cactus";
  {
    std::ofstream out(plot_path);
    if (!out) throw Error("cannot write " + plot_path);
    write_cactus_data(records, out);
  }
  std::cout << depth_table(records);
  int failures = 0;
  for (const auto& r : records) {
    if (r.status != "optimal") ++failures;
  }
  std::cout << records.size() - failures << "/" << records.size()
            << " solved to proven optimality -> " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth-optimal qubit assignment and SWAP routing"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance file");
  InstanceSpec spec;
  int gen_k = 4;
  std::string gen_mode = "faithful", gen_out;
  std::optional<std::string> gen_variant;
  gen->add_option("--q", spec.qubit_count, "Qubit count")->required();
  gen->add_option("--layers", spec.layer_count, "Layer count (default: q, a square circuit)");
  gen->add_option("--topology", spec.topology, "linear|lattice")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Topology>{{"linear", Topology::LinearArray},
                                          {"lattice", Topology::Lattice}}));
  gen->add_option("--rows", spec.rows, "Lattice rows (default: widest divisor split)");
  gen->add_option("--cols", spec.cols, "Lattice cols");
  gen->add_option("--seed", spec.seed, "RNG seed");
  gen->add_option("--k", gen_k, "Dummy layers per gap");
  gen->add_option("--mode", gen_mode, "faithful|swap_only");
  gen->add_option("--variant", gen_variant, "Model variant override");
  gen->add_option("--out", gen_out, "Output path (default: derived from the instance)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance to proven optimality");
  std::string solve_problem_path, solve_out;
  CommonSolveFlags solve_flags;
  bool escalate = false, dump_model = false;
  solve->add_option("problem", solve_problem_path, "Problem JSON file")->required();
  solve->add_option("--strategy", solve_flags.strategy, "budget-ascent|branch-and-bound");
  solve->add_option("--time-limit", solve_flags.time_limit_s, "Wall-clock limit in seconds");
  solve->add_option("--variant", solve_flags.variant, "Override the file's variant");
  solve->add_option("--mode", solve_flags.mode, "Override the file's mode");
  solve->add_option("--k", solve_flags.dummy_count, "Override the file's dummy count");
  solve->add_flag("--no-symmetry", solve_flags.no_symmetry, "Disable symmetry breaking");
  solve->add_flag("--no-frontload", solve_flags.no_frontload, "Disable frontload dominance");
  solve->add_flag("--escalate-k", escalate, "Retry with K+1 while infeasible");
  solve->add_flag("--dump-model", dump_model, "Print the constraint network to stderr");
  solve->add_option("--out", solve_out, "Solution path (default: <problem>.sol.json)");

  // verify
  auto* ver = app.add_subcommand("verify", "Check a solution file against its problem");
  std::string verify_problem, verify_solution;
  ver->add_option("problem", verify_problem, "Problem JSON file")->required();
  ver->add_option("solution", verify_solution, "Solution JSON file")->required();

  // oracle
  auto* orc = app.add_subcommand("oracle", "Brute-force optimum for a small instance");
  std::string oracle_problem, oracle_out;
  orc->add_option("problem", oracle_problem, "Problem JSON file")->required();
  orc->add_option("--out", oracle_out, "Write a witness solution here");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and emit CSV");
  BenchOptions bench_options;
  std::string bench_out = "bench.csv", bench_plot, bench_mode = "faithful",
              bench_strategy = "budget-ascent";
  double bench_limit_s = 60.0;
  bench->add_option("--sizes", bench_options.sizes, "Square circuit sizes")->required();
  bench->add_option("--count", bench_options.count, "Instances per size");
  bench->add_option("--seed-base", bench_options.seed_base,
                    "Instance i uses seed seed-base + i");
  bench->add_option("--topology", bench_options.topology, "linear|lattice")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Topology>{{"linear", Topology::LinearArray},
                                          {"lattice", Topology::Lattice}}));
  bench->add_option("--mode", bench_mode, "faithful|swap_only");
  bench->add_option("--k", bench_options.dummy_count, "Dummy layers per gap");
  bench->add_option("--strategy", bench_strategy, "budget-ascent|branch-and-bound");
  bench->add_option("--time-limit", bench_limit_s, "Per-instance limit in seconds");
  bench->add_option("--jobs", bench_options.jobs, "Concurrent solves");
  bench->add_option("--out", bench_out, "CSV path");
  bench->add_option("--plot-out", bench_plot, "Cactus data path (default: <out>.cactus)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (spec.layer_count <= 0) spec.layer_count = spec.qubit_count;
      return cmd_gen(spec, gen_k, gen_mode, gen_variant, gen_out);
    }
    if (*solve) {
      return cmd_solve(solve_problem_path, solve_flags, escalate, solve_out, dump_model);
    }
    if (*ver) return cmd_verify(verify_problem, verify_solution);
    if (*orc) return cmd_oracle(oracle_problem, oracle_out);
    if (*bench) {
      bench_options.mode = mode_from_string(bench_mode);
      bench_options.strategy = engine::strategy_from_string(bench_strategy);
      bench_options.time_limit_ms = bench_limit_s * 1000.0;
      return cmd_bench(bench_options, bench_out, bench_plot);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
