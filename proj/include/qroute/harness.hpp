#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qroute/instances.hpp"
#include "qroute/problem.hpp"
#include "qroute/solver.hpp"

namespace qroute {

/// One (instance, configuration) run of the benchmark suite.
struct BenchRecord {
  std::string instance;
  int q = 0;
  int layers = 0;
  std::string topology;
  std::string variant;
  std::string mode;
  std::string status;
  int objective = -1;  // -1 when no schedule was found
  int depth = -1;
  double time_ms = 0.0;
  long long nodes = 0;
  std::string error;  // per-row failure, the suite keeps going
};

struct BenchOptions {
  std::vector<int> sizes;               // square circuits, L = q
  int count = 10;                       // instances per size
  std::uint64_t seed_base = 1;          // instance i uses seed_base + i
  Topology topology = Topology::LinearArray;
  Mode mode = Mode::Faithful;
  int dummy_count = 4;
  engine::Strategy strategy = engine::Strategy::BudgetAscent;
  double time_limit_ms = 60000.0;       // per instance
  int jobs = 1;                         // instances run concurrently
};

/// Builds the problem for one suite entry: path graph for LinearArray
/// (Linear variant), default-dimension grid for Lattice (General variant).
RoutingProblem make_bench_problem(const InstanceSpec& spec, Mode mode, int dummy_count);

/// Runs the deterministic suite; one record per (size, index) in order.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

/// Versioned CSV, one row per record. Timing columns are wall clock and
/// excluded from any determinism comparison.
void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& os);

/// Cactus-plot series: per solved instance, cumulative count over the
/// sorted solve times.
void write_cactus_data(const std::vector<BenchRecord>& records, std::ostream& os);

/// Mean compiled depth per size over the optimally solved rows.
std::string depth_table(const std::vector<BenchRecord>& records);

}  // namespace qroute
