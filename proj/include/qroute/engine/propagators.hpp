#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qroute/engine/var_store.hpp"
#include "qroute/model.hpp"

namespace qroute::engine {

/// Filtering algorithm for one constraint. Filtering must be sound (never
/// removes a supported value) and must detect violation once its scope is
/// fully assigned; failure is reported by returning false.
class Propagator {
 public:
  virtual ~Propagator() = default;
  virtual bool propagate(VarStore& store) = 0;
  const std::vector<int>& scope() const { return scope_; }

  bool queued = false;  // scheduling guard owned by the propagation loop

 protected:
  std::vector<int> scope_;
};

/// Assigned-value elimination plus a pigeonhole check on the domain union.
class AllDifferentProp : public Propagator {
 public:
  explicit AllDifferentProp(std::vector<int> vars);
  bool propagate(VarStore& store) override;

 private:
  std::vector<int> vars_;
};

/// Generalized arc consistency over an explicit tuple set.
class AllowedPairsProp : public Propagator {
 public:
  AllowedPairsProp(int a, int b, const std::vector<std::pair<int, int>>& tuples);
  bool propagate(VarStore& store) override;

 private:
  int a_, b_;
  std::vector<Mask> support_a_;  // support_a_[v] = b-values compatible with a=v
  std::vector<Mask> support_b_;
};

/// |a - b| = 1.
class AbsEqOneProp : public Propagator {
 public:
  AbsEqOneProp(int a, int b);
  bool propagate(VarStore& store) override;

 private:
  int a_, b_;
};

/// |a - b| <= 1.
class AbsLeOneProp : public Propagator {
 public:
  AbsLeOneProp(int a, int b);
  bool propagate(VarStore& store) override;

 private:
  int a_, b_;
};

/// flag = 1 iff any (from,to) pair takes different values. flag=0 equalizes
/// every pair; an unsupportable pair forces flag=1; all pairs fixed equal
/// forces flag=0; flag=1 with a single movable pair forces that pair apart.
class MovementFlagProp : public Propagator {
 public:
  MovementFlagProp(int flag, std::vector<std::pair<int, int>> moves);
  bool propagate(VarStore& store) override;

 private:
  int flag_;
  std::vector<std::pair<int, int>> moves_;
};

/// A gate's qubit pair either stays put or swaps across the transition:
/// (p',q') = (p,q) or (q,p). Next-layer domains shrink to the union of the
/// current pair's domains, per branch feasibility.
class GatePersistenceProp : public Propagator {
 public:
  GatePersistenceProp(int p_now, int q_now, int p_next, int q_next);
  bool propagate(VarStore& store) override;

 private:
  int p_now_, q_now_, p_next_, q_next_;
};

/// Node movement across a transition must pair up: a fixed move i->j forces
/// the occupant of j back to i.
class InvolutionProp : public Propagator {
 public:
  InvolutionProp(std::vector<int> from, std::vector<int> to, int max_value);
  bool propagate(VarStore& store) override;

 private:
  std::vector<int> from_, to_;
  int max_value_;
};

/// earlier >= later over binary flags.
class FlagOrderProp : public Propagator {
 public:
  FlagOrderProp(int earlier, int later);
  bool propagate(VarStore& store) override;

 private:
  int earlier_, later_;
};

/// sum of binary flags <= bound; at the bound, all open flags drop to 0.
class SumLeProp : public Propagator {
 public:
  SumLeProp(std::vector<int> flags, int bound);
  bool propagate(VarStore& store) override;

 private:
  std::vector<int> flags_;
  int bound_;
};

/// One-shot domain restriction (symmetry breaking).
class UnaryRestrictProp : public Propagator {
 public:
  UnaryRestrictProp(int var, Mask allowed);
  bool propagate(VarStore& store) override;

 private:
  int var_;
  Mask allowed_;
};

/// Lowers every model constraint; appends the budget constraint over the
/// model's flags when `budget` is set.
std::vector<std::unique_ptr<Propagator>> build_propagators(const CPModel& model,
                                                           std::optional<int> budget);

}  // namespace qroute::engine
