#include "qroute/harness.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace qroute {

RoutingProblem make_bench_problem(const InstanceSpec& spec, Mode mode, int dummy_count) {
  LogicalCircuit circuit = gen_square_circuit(spec.qubit_count, spec.layer_count, spec.seed);
  if (spec.topology == Topology::LinearArray) {
    RoutingProblem p{std::move(circuit), gen_linear_topology(spec.qubit_count)};
    p.variant = Variant::Linear;
    p.mode = mode;
    p.dummy_count = dummy_count;
    return p;
  }
  auto [rows, cols] = spec.rows > 0 ? std::pair{spec.rows, spec.cols}
                                    : default_lattice_dims(spec.qubit_count);
  RoutingProblem p{std::move(circuit), gen_lattice_topology(rows, cols)};
  p.variant = Variant::General;
  p.mode = mode;
  p.dummy_count = dummy_count;
  return p;
}

namespace {

BenchRecord run_one(const BenchOptions& options, const InstanceSpec& spec) {
  BenchRecord rec;
  rec.instance = instance_name(spec);
  rec.q = spec.qubit_count;
  rec.layers = spec.layer_count;
  rec.topology = to_string(spec.topology);
  rec.variant = to_string(spec.topology == Topology::LinearArray ? Variant::Linear
                                                                 : Variant::General);
  rec.mode = to_string(options.mode);
  try {
    RoutingProblem problem = make_bench_problem(spec, options.mode, options.dummy_count);
    SolveOptions solve_options;
    solve_options.strategy = options.strategy;
    solve_options.limits.time_limit_ms = options.time_limit_ms;
    SolveOutcome outcome = solve_problem(problem, solve_options);
    rec.status = to_string(outcome.status);
    if (outcome.best) {
      rec.objective = outcome.best->objective;
      rec.depth = outcome.best->depth;
    }
    rec.time_ms = outcome.stats.wall_ms;
    rec.nodes = outcome.stats.nodes;
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  std::vector<InstanceSpec> specs;
  for (int q : options.sizes) {
    for (int i = 0; i < options.count; ++i) {
      InstanceSpec spec;
      spec.qubit_count = q;
      spec.layer_count = q;
      spec.topology = options.topology;
      spec.seed = options.seed_base + static_cast<std::uint64_t>(i);
      specs.push_back(spec);
    }
  }

  std::vector<BenchRecord> records(specs.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < specs.size(); ++i) records[i] = run_one(options, specs[i]);
    return records;
  }

  // Instances are independent; records land at their index so the output
  // order stays deterministic regardless of scheduling.
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= specs.size()) return;
        records[i] = run_one(options, specs[i]);
      }
    });
  }
  for (auto& t : workers) t.join();
  return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& os) {
  os << "# qroute-bench-csv v1\n";
  os << "instance,q,L,topology,variant,mode,status,objective,depth,time_ms,nodes\n";
  for (const auto& r : records) {
    os << r.instance << ',' << r.q << ',' << r.layers << ',' << r.topology << ','
       << r.variant << ',' << r.mode << ',' << r.status << ',' << r.objective << ','
       << r.depth << ',' << std::fixed << std::setprecision(1) << r.time_ms << ','
       << r.nodes << '\n';
  }
}

void write_cactus_data(const std::vector<BenchRecord>& records, std::ostream& os) {
  std::vector<double> times;
  for (const auto& r : records) {
    if (r.status == "optimal") times.push_back(r.time_ms);
  }
  std::sort(times.begin(), times.end());
  os << "solved,time_ms\n";
  for (std::size_t i = 0; i < times.size(); ++i) {
    os << i + 1 << ',' << std::fixed << std::setprecision(1) << times[i] << '\n';
  }
}

std::string depth_table(const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::string, int>, std::pair<long long, int>> acc;  // (topology,q) -> (sum, count)
  for (const auto& r : records) {
    if (r.status == "optimal" && r.depth >= 0) {
      auto& [sum, count] = acc[{r.topology, r.q}];
      sum += r.depth;
      ++count;
    }
  }
  std::ostringstream os;
  os << "topology  size   solved  avg_depth\n";
  for (const auto& [key, val] : acc) {
    const auto& [topology, q] = key;
    const auto& [sum, count] = val;
    os << std::left << std::setw(10) << topology << std::setw(7)
       << (std::to_string(q) + "x" + std::to_string(q)) << std::setw(8) << count
       << std::fixed << std::setprecision(2) << static_cast<double>(sum) / count << "\n";
  }
  return os.str();
}

}  // namespace qroute
