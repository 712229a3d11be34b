#include "qroute/engine/search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_map>

#include "qroute/engine/propagators.hpp"
#include "qroute/engine/var_store.hpp"
#include "qroute/error.hpp"

namespace qroute::engine {

std::string to_string(Strategy s) {
  return s == Strategy::BudgetAscent ? "budget-ascent" : "branch-and-bound";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "budget-ascent") return Strategy::BudgetAscent;
  if (s == "branch-and-bound") return Strategy::BranchAndBound;
  throw Error("unknown strategy '" + s + "' (expected 'budget-ascent' or 'branch-and-bound')");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point start = Clock::now();
  double limit_ms = 0.0;
  long long node_cap = 0;

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  bool exceeded(long long nodes) const {
    if (node_cap > 0 && nodes >= node_cap) return true;
    // The clock is consulted every few nodes only; it dominates otherwise.
    if (limit_ms > 0.0 && (nodes & 63) == 0 && elapsed_ms() >= limit_ms) return true;
    return false;
  }
};

enum class RunResult { Sat, Unsat, Stopped };

class FeasibilityEngine {
 public:
  struct Checkpoint {
    int start_var;  // first variable past the checkpoint layer
    int layer;
    int extra_flag;
  };

  FeasibilityEngine(const CPModel& model, std::optional<int> budget)
      : model_(model),
        store_([&] {
          std::vector<Mask> doms;
          doms.reserve(model.vars().size());
          for (const auto& v : model.vars()) doms.push_back(v.domain);
          return doms;
        }()),
        props_(build_propagators(model, budget)),
        subscribers_(model.var_count()) {
    for (std::size_t p = 0; p < props_.size(); ++p) {
      for (int v : props_[p]->scope()) subscribers_[v].push_back(static_cast<int>(p));
    }
    // Checkpoint memoization keys pack one node id per nibble.
    if (model.max_value() <= 15 && model.qubit_count() <= 14) {
      for (const auto& cp : model.checkpoints()) {
        checkpoints_.push_back({model.position_var(0, cp.layer + 1), cp.layer, cp.extra_flag});
      }
      failed_.resize(checkpoints_.size());
    }
  }

  RunResult run(const Deadline& deadline, SearchStats& stats, std::vector<int>& out) {
    // Root fixpoint over every propagator.
    for (std::size_t p = 0; p < props_.size(); ++p) {
      props_[p]->queued = true;
      queue_.push_back(static_cast<int>(p));
    }
    store_.changed().clear();
    if (!propagate(stats)) return RunResult::Unsat;
    return dfs(0, -1, deadline, stats, out);
  }

 private:
  // FIFO fixpoint; the queued guard keeps every propagator enqueued at most
  // once. Failure clears the queue so the next branch starts clean.
  bool propagate(SearchStats& stats) {
    drain_changed();
    while (!queue_.empty()) {
      int p = queue_.front();
      queue_.pop_front();
      props_[p]->queued = false;
      ++stats.propagations;
      if (!props_[p]->propagate(store_)) {
        for (int q : queue_) props_[q]->queued = false;
        queue_.clear();
        store_.changed().clear();
        return false;
      }
      drain_changed();
    }
    return true;
  }

  void drain_changed() {
    for (int v : store_.changed()) {
      for (int p : subscribers_[v]) {
        if (!props_[p]->queued) {
          props_[p]->queued = true;
          queue_.push_back(p);
        }
      }
    }
    store_.changed().clear();
  }

  // Fixed flags committed so far; all flags behind a fully assigned prefix
  // are decided by propagation.
  int committed_flags() const {
    int sum = 0;
    for (int f : model_.flag_vars()) {
      if (store_.dom(f) == value_bit(1)) ++sum;
    }
    return sum;
  }

  std::uint64_t checkpoint_key(const Checkpoint& cp) const {
    std::uint64_t key = 0;
    for (int q = 0; q < model_.qubit_count(); ++q) {
      key |= static_cast<std::uint64_t>(store_.value(model_.position_var(q, cp.layer)))
             << (4 * q);
    }
    if (cp.extra_flag >= 0 && store_.value(cp.extra_flag)) key |= std::uint64_t{1} << 60;
    return key;
  }

  RunResult dfs(int from, int cp_done, const Deadline& deadline, SearchStats& stats,
                std::vector<int>& out) {
    int var = -1;
    for (int v = from; v < store_.size(); ++v) {
      if (!store_.fixed(v)) {
        var = v;
        break;
      }
    }
    if (var < 0) {
      out.resize(store_.size());
      for (int v = 0; v < store_.size(); ++v) out[v] = store_.value(v);
      return RunResult::Sat;
    }

    // Once the search crosses a checkpoint layer, the rest of the problem is
    // a function of (layer mapping, committed flag sum); a state refuted at
    // some spend refutes every revisit that has spent at least as much.
    int cp = cp_done;
    while (cp + 1 < static_cast<int>(checkpoints_.size()) &&
           checkpoints_[cp + 1].start_var <= var) {
      ++cp;
    }
    if (cp > cp_done) {
      const std::uint64_t key = checkpoint_key(checkpoints_[cp]);
      const int spent = committed_flags();
      auto& cache = failed_[cp];
      auto it = cache.find(key);
      if (it != cache.end() && spent >= it->second) return RunResult::Unsat;
      RunResult r = dfs_branch(var, cp, deadline, stats, out);
      if (r == RunResult::Unsat) {
        if (it != cache.end()) {
          it->second = std::min(it->second, spent);
        } else {
          cache.emplace(key, spent);
        }
      }
      return r;
    }
    return dfs_branch(var, cp, deadline, stats, out);
  }

  RunResult dfs_branch(int var, int cp_done, const Deadline& deadline, SearchStats& stats,
                       std::vector<int>& out) {

    // Stay-put first: reuse the previous layer's node when still available.
    const Mask dom = store_.dom(var);
    int prefer = -1;
    const int prev = model_.vars()[var].prev;
    if (prev >= 0 && store_.fixed(prev) && (dom & value_bit(store_.value(prev)))) {
      prefer = store_.value(prev);
    }

    Mask rest = prefer >= 0 ? dom & ~value_bit(prefer) : dom;
    int val = prefer;
    if (val < 0) {
      val = mask_min(rest);
      rest &= rest - 1;
    }
    while (true) {
      ++stats.nodes;
      if (deadline.exceeded(stats.nodes)) return RunResult::Stopped;
      const std::size_t m = store_.mark();
      if (store_.assign(var, val) && propagate(stats)) {
        RunResult r = dfs(var + 1, cp_done, deadline, stats, out);
        if (r != RunResult::Unsat) return r;
      } else {
        store_.changed().clear();
      }
      store_.undo_to(m);
      if (!rest) break;
      val = mask_min(rest);
      rest &= rest - 1;
    }
    return RunResult::Unsat;
  }

  const CPModel& model_;
  VarStore store_;
  std::vector<std::unique_ptr<Propagator>> props_;
  std::vector<std::vector<int>> subscribers_;
  std::deque<int> queue_;
  std::vector<Checkpoint> checkpoints_;
  // Per checkpoint: mapping key -> smallest committed flag sum that failed.
  std::vector<std::unordered_map<std::uint64_t, int>> failed_;
};

int flag_sum(const CPModel& model, const std::vector<int>& assignment) {
  int sum = 0;
  for (int f : model.flag_vars()) sum += assignment[f];
  return sum;
}

}  // namespace

EngineOutcome solve_feasible(const CPModel& model, std::optional<int> budget,
                             const Limits& limits) {
  Deadline deadline{Clock::now(), limits.time_limit_ms, limits.node_cap};
  EngineOutcome outcome;
  FeasibilityEngine engine(model, budget);
  std::vector<int> assignment;
  RunResult r = engine.run(deadline, outcome.stats, assignment);
  outcome.stats.wall_ms = deadline.elapsed_ms();
  switch (r) {
    case RunResult::Sat:
      outcome.status = SolveStatus::Feasible;
      outcome.assignment = std::move(assignment);
      break;
    case RunResult::Unsat:
      outcome.status = SolveStatus::Infeasible;
      break;
    case RunResult::Stopped:
      outcome.status = SolveStatus::Unknown;
      break;
  }
  return outcome;
}

EngineOutcome run_search(const CPModel& model, Strategy strategy, const Limits& limits) {
  const Deadline deadline{Clock::now(), limits.time_limit_ms, limits.node_cap};
  const int max_budget = static_cast<int>(model.flag_vars().size());

  EngineOutcome total;
  auto remaining = [&]() {
    Limits rem = limits;
    if (limits.time_limit_ms > 0.0) {
      rem.time_limit_ms = std::max(1e-3, limits.time_limit_ms - deadline.elapsed_ms());
    }
    if (limits.node_cap > 0) {
      rem.node_cap = std::max<long long>(1, limits.node_cap - total.stats.nodes);
    }
    return rem;
  };
  auto accumulate = [&](const EngineOutcome& step) {
    total.stats.nodes += step.stats.nodes;
    total.stats.propagations += step.stats.propagations;
  };

  if (strategy == Strategy::BudgetAscent) {
    for (int budget = 0; budget <= max_budget; ++budget) {
      EngineOutcome step = solve_feasible(model, budget, remaining());
      accumulate(step);
      if (step.status == SolveStatus::Feasible) {
        // Budgets below `budget` are proven infeasible, so this is optimal.
        total.status = SolveStatus::Optimal;
        total.assignment = std::move(step.assignment);
        total.lower_bound = budget;
        total.stats.wall_ms = deadline.elapsed_ms();
        return total;
      }
      if (step.status == SolveStatus::Unknown) {
        total.status = SolveStatus::Unknown;
        total.lower_bound = budget;
        total.stats.wall_ms = deadline.elapsed_ms();
        return total;
      }
    }
    total.status = SolveStatus::Infeasible;
    total.lower_bound = max_budget + 1;
    total.stats.wall_ms = deadline.elapsed_ms();
    return total;
  }

  // Branch and bound: unconstrained incumbent, then tighten.
  std::optional<int> bound;
  while (true) {
    EngineOutcome step = solve_feasible(model, bound, remaining());
    accumulate(step);
    if (step.status == SolveStatus::Feasible) {
      total.assignment = std::move(step.assignment);
      int objective = flag_sum(model, total.assignment);
      if (objective == 0) {
        total.status = SolveStatus::Optimal;
        total.lower_bound = 0;
        break;
      }
      bound = objective - 1;
      continue;
    }
    if (step.status == SolveStatus::Infeasible) {
      if (total.assignment.empty()) {
        total.status = SolveStatus::Infeasible;
        total.lower_bound = max_budget + 1;
      } else {
        total.status = SolveStatus::Optimal;
        total.lower_bound = flag_sum(model, total.assignment);
      }
      break;
    }
    // Stopped mid-proof.
    total.status = total.assignment.empty() ? SolveStatus::Unknown : SolveStatus::Feasible;
    total.lower_bound = 0;
    break;
  }
  total.stats.wall_ms = deadline.elapsed_ms();
  return total;
}

}  // namespace qroute::engine
