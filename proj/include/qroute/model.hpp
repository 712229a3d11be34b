#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qroute/problem.hpp"

namespace qroute {

/// Variable metadata. Position variables hold a node id 1..|V|; flag
/// variables are binary and mark a counted transition as used.
struct VarInfo {
  enum class Kind { Position, Flag };
  Kind kind;
  int qubit;             // Position: 0-based qubit; Flag: -1
  int layer;             // 0-based timeline layer (Flag: origin of its transition)
  std::uint64_t domain;  // initial domain bitmask, bit v = value v
  int prev;              // same qubit one layer earlier, or -1 (search hint)
};

// Declarative constraints; the engine lowers each to a propagator.
struct AllDifferent {
  std::vector<int> vars;
};
struct AllowedPairs {  // (a,b) must match a tuple of tables()[table]
  int a, b;
  int table;
};
struct AbsEqOne {  // |a - b| = 1
  int a, b;
};
struct AbsLeOne {  // |a - b| <= 1
  int a, b;
};
struct MovementFlag {  // flag = 1 iff any (from,to) pair differs
  int flag;
  std::vector<std::pair<int, int>> moves;
};
struct GatePersistence {  // (p',q') = (p,q) or (q,p): the pair stays or swaps
  int p_now, q_now, p_next, q_next;
};
struct InvolutionTransition {  // node movement from->to decomposes into swaps
  std::vector<int> from, to;
};
struct FlagOrder {  // earlier >= later
  int earlier, later;
};
struct UnaryRestrict {  // domain restriction (symmetry breaking)
  int var;
  std::uint64_t allowed;
};

using Constraint = std::variant<AllDifferent, AllowedPairs, AbsEqOne, AbsLeOne, MovementFlag,
                                GatePersistence, InvolutionTransition, FlagOrder, UnaryRestrict>;

/// A constraint network over position and flag variables with objective
/// sum of flags. Immutable once built; independent engine instances may
/// solve the same model concurrently.
class CPModel {
 public:
  CPModel(int qubit_count, int layer_total, int max_value);

  int add_position_var(int qubit, int layer, std::uint64_t domain, int prev);
  int add_flag_var(int layer);
  void add(Constraint c) { constraints_.push_back(std::move(c)); }
  int add_table(std::vector<std::pair<int, int>> tuples, std::string name);

  int var_count() const { return static_cast<int>(vars_.size()); }
  const std::vector<VarInfo>& vars() const { return vars_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<std::vector<std::pair<int, int>>>& tables() const { return tables_; }
  const std::vector<int>& flag_vars() const { return flag_vars_; }
  int max_value() const { return max_value_; }

  int qubit_count() const { return qubit_count_; }
  int layer_total() const { return layer_total_; }
  int position_var(int qubit, int layer) const { return layer * qubit_count_ + qubit; }

  /// Search checkpoint: once every variable up to `layer` is fixed, the
  /// remaining subproblem is a function of (the layer's mapping, the
  /// committed flag sum, the value of extra_flag). extra_flag covers a
  /// flag-order constraint reaching across the boundary, -1 if none.
  struct SearchCheckpoint {
    int layer;
    int extra_flag;
  };
  const std::vector<SearchCheckpoint>& checkpoints() const { return checkpoints_; }
  void add_checkpoint(int layer, int extra_flag) { checkpoints_.push_back({layer, extra_flag}); }

  /// Human-readable network, one line per constraint.
  std::string dump() const;

 private:
  int qubit_count_;
  int layer_total_;
  int max_value_;
  std::vector<VarInfo> vars_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<std::pair<int, int>>> tables_;
  std::vector<std::string> table_names_;
  std::vector<int> flag_vars_;
  std::vector<SearchCheckpoint> checkpoints_;
};

/// Absolute-value formulation for the canonical path graph: alldifferent
/// per layer, |x_p - x_q| = 1 on gates, |x - x'| <= 1 on every transition,
/// crossed |x_p - x_q'| <= 1 on gate transitions, movement flags on dummy
/// transitions.
CPModel build_linear_model(const RoutingProblem& problem);

/// Tuple formulation for any connected graph: alldifferent per layer, gate
/// endpoints on an arc, transitions within arc-or-stay, stay-or-partner
/// disjunctions on gate transitions, movement flags. SwapOnly mode adds an
/// involution requirement per transition.
CPModel build_general_model(const RoutingProblem& problem);

/// Restricts the first-layer position of the lowest-indexed qubit of the
/// first gate to one orbit representative per graph reflection (path
/// reversal, or the horizontal reflection of a grid labeling). No-op for
/// graphs without a recognized reflection.
void add_symmetry_breaking(CPModel& model, const RoutingProblem& problem);

/// Within each dummy block, forces used transitions ahead of idle ones
/// (z_i >= z_{i+1}). Any schedule compacts to this form at equal cost.
void add_frontload_dominance(CPModel& model, const RoutingProblem& problem);

/// Builds the variant's model and applies the problem's toggles.
CPModel build_model(const RoutingProblem& problem);

}  // namespace qroute
