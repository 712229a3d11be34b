#include "qroute/engine/propagators.hpp"

#include <algorithm>

namespace qroute::engine {

namespace {

// Iterate the values of a mask low to high.
template <typename F>
bool for_each_value(Mask m, F&& f) {
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    if (!f(v)) return false;
  }
  return true;
}

}  // namespace

AllDifferentProp::AllDifferentProp(std::vector<int> vars) : vars_(std::move(vars)) {
  scope_ = vars_;
}

bool AllDifferentProp::propagate(VarStore& store) {
  // Eliminating a fixed value can fix another variable, so loop to a local
  // fixpoint before the pigeonhole check.
  bool again = true;
  while (again) {
    again = false;
    Mask fixed = 0;
    for (int v : vars_) {
      if (store.fixed(v)) {
        Mask b = store.dom(v);
        if (fixed & b) return false;
        fixed |= b;
      }
    }
    for (int v : vars_) {
      if (store.fixed(v)) continue;
      if (!store.intersect(v, ~fixed)) return false;
      if (store.fixed(v)) again = true;
    }
  }
  Mask uni = 0;
  for (int v : vars_) uni |= store.dom(v);
  return mask_size(uni) >= static_cast<int>(vars_.size());
}

AllowedPairsProp::AllowedPairsProp(int a, int b, const std::vector<std::pair<int, int>>& tuples)
    : a_(a), b_(b), support_a_(64, 0), support_b_(64, 0) {
  scope_ = {a, b};
  for (auto [va, vb] : tuples) {
    support_a_[va] |= value_bit(vb);
    support_b_[vb] |= value_bit(va);
  }
}

bool AllowedPairsProp::propagate(VarStore& store) {
  Mask db = store.dom(b_);
  Mask keep_a = 0;
  for_each_value(store.dom(a_), [&](int v) {
    if (support_a_[v] & db) keep_a |= value_bit(v);
    return true;
  });
  if (!store.intersect(a_, keep_a)) return false;

  Mask da = store.dom(a_);
  Mask keep_b = 0;
  for_each_value(db, [&](int w) {
    if (support_b_[w] & da) keep_b |= value_bit(w);
    return true;
  });
  return store.intersect(b_, keep_b);
}

AbsEqOneProp::AbsEqOneProp(int a, int b) : a_(a), b_(b) { scope_ = {a, b}; }

bool AbsEqOneProp::propagate(VarStore& store) {
  Mask db = store.dom(b_);
  if (!store.intersect(a_, (db << 1) | (db >> 1))) return false;
  Mask da = store.dom(a_);
  return store.intersect(b_, (da << 1) | (da >> 1));
}

AbsLeOneProp::AbsLeOneProp(int a, int b) : a_(a), b_(b) { scope_ = {a, b}; }

bool AbsLeOneProp::propagate(VarStore& store) {
  Mask db = store.dom(b_);
  if (!store.intersect(a_, db | (db << 1) | (db >> 1))) return false;
  Mask da = store.dom(a_);
  return store.intersect(b_, da | (da << 1) | (da >> 1));
}

MovementFlagProp::MovementFlagProp(int flag, std::vector<std::pair<int, int>> moves)
    : flag_(flag), moves_(std::move(moves)) {
  scope_.push_back(flag_);
  for (auto [x, y] : moves_) {
    scope_.push_back(x);
    scope_.push_back(y);
  }
}

bool MovementFlagProp::propagate(VarStore& store) {
  if (store.dom(flag_) == value_bit(0)) {
    for (auto [x, y] : moves_) {
      Mask common = store.dom(x) & store.dom(y);
      if (!common) return false;
      if (!store.intersect(x, common)) return false;
      if (!store.intersect(y, common)) return false;
    }
    return true;
  }

  bool forced_move = false;
  int movable = 0;
  int movable_x = -1, movable_y = -1;
  for (auto [x, y] : moves_) {
    Mask dx = store.dom(x), dy = store.dom(y);
    if ((dx & dy) == 0) forced_move = true;
    if (!(is_singleton(dx) && dx == dy)) {
      ++movable;
      movable_x = x;
      movable_y = y;
    }
  }

  if (forced_move) return store.intersect(flag_, value_bit(1));
  if (movable == 0) return store.intersect(flag_, value_bit(0));
  if (store.dom(flag_) == value_bit(1) && movable == 1) {
    // Exactly one pair can still account for the required movement.
    if (store.fixed(movable_x) && !store.intersect(movable_y, ~store.dom(movable_x))) {
      return false;
    }
    if (store.fixed(movable_y) && !store.intersect(movable_x, ~store.dom(movable_y))) {
      return false;
    }
  }
  return true;
}

GatePersistenceProp::GatePersistenceProp(int p_now, int q_now, int p_next, int q_next)
    : p_now_(p_now), q_now_(q_now), p_next_(p_next), q_next_(q_next) {
  scope_ = {p_now, q_now, p_next, q_next};
}

bool GatePersistenceProp::propagate(VarStore& store) {
  // A value survives if it fits the stay branch (p'=p, q'=q) or the swap
  // branch (p'=q, q'=p), each branch requiring its partner equality to be
  // satisfiable. Loop: removing a branch can re-trigger the other side.
  while (true) {
    const Mask a = store.dom(p_now_), b = store.dom(q_now_);
    const Mask c = store.dom(p_next_), d = store.dom(q_next_);
    const bool stay_p = (a & c) != 0, stay_q = (b & d) != 0;
    const bool swap_p = (b & c) != 0, swap_q = (a & d) != 0;

    Mask na = (stay_q ? c : 0) | (swap_p ? d : 0);
    Mask nb = (stay_p ? d : 0) | (swap_q ? c : 0);
    Mask nc = (stay_q ? a : 0) | (swap_q ? b : 0);
    Mask nd = (stay_p ? b : 0) | (swap_p ? a : 0);

    const std::size_t mark = store.mark();
    if (!store.intersect(p_now_, na)) return false;
    if (!store.intersect(q_now_, nb)) return false;
    if (!store.intersect(p_next_, nc)) return false;
    if (!store.intersect(q_next_, nd)) return false;
    if (store.mark() == mark) return true;
  }
}

InvolutionProp::InvolutionProp(std::vector<int> from, std::vector<int> to, int max_value)
    : from_(std::move(from)), to_(std::move(to)), max_value_(max_value) {
  scope_ = from_;
  scope_.insert(scope_.end(), to_.begin(), to_.end());
}

bool InvolutionProp::propagate(VarStore& store) {
  // occupant[i] = qubit fixed at node i on the from side, if any.
  std::vector<int> occupant(max_value_ + 1, -1);
  for (std::size_t q = 0; q < from_.size(); ++q) {
    if (store.fixed(from_[q])) occupant[store.value(from_[q])] = static_cast<int>(q);
  }
  for (std::size_t q = 0; q < from_.size(); ++q) {
    if (!store.fixed(from_[q]) || !store.fixed(to_[q])) continue;
    int i = store.value(from_[q]);
    int j = store.value(to_[q]);
    if (i == j) continue;
    int occ = occupant[j];
    if (occ >= 0 && !store.intersect(to_[occ], value_bit(i))) return false;
  }
  return true;
}

FlagOrderProp::FlagOrderProp(int earlier, int later) : earlier_(earlier), later_(later) {
  scope_ = {earlier, later};
}

bool FlagOrderProp::propagate(VarStore& store) {
  if (store.dom(later_) == value_bit(1)) return store.intersect(earlier_, value_bit(1));
  if (store.dom(earlier_) == value_bit(0)) return store.intersect(later_, value_bit(0));
  return true;
}

SumLeProp::SumLeProp(std::vector<int> flags, int bound)
    : flags_(std::move(flags)), bound_(bound) {
  scope_ = flags_;
}

bool SumLeProp::propagate(VarStore& store) {
  int committed = 0;
  for (int v : flags_) {
    if (store.dom(v) == value_bit(1)) ++committed;
  }
  if (committed > bound_) return false;
  if (committed == bound_) {
    for (int v : flags_) {
      if (!store.fixed(v) && !store.intersect(v, value_bit(0))) return false;
    }
  }
  return true;
}

UnaryRestrictProp::UnaryRestrictProp(int var, Mask allowed) : var_(var), allowed_(allowed) {
  scope_ = {var};
}

bool UnaryRestrictProp::propagate(VarStore& store) {
  return store.intersect(var_, allowed_);
}

namespace {

struct LowerVisitor {
  const CPModel& model;
  std::vector<std::unique_ptr<Propagator>>& out;

  void operator()(const AllDifferent& c) const {
    out.push_back(std::make_unique<AllDifferentProp>(c.vars));
  }
  void operator()(const AllowedPairs& c) const {
    out.push_back(std::make_unique<AllowedPairsProp>(c.a, c.b, model.tables()[c.table]));
  }
  void operator()(const AbsEqOne& c) const {
    out.push_back(std::make_unique<AbsEqOneProp>(c.a, c.b));
  }
  void operator()(const AbsLeOne& c) const {
    out.push_back(std::make_unique<AbsLeOneProp>(c.a, c.b));
  }
  void operator()(const MovementFlag& c) const {
    out.push_back(std::make_unique<MovementFlagProp>(c.flag, c.moves));
  }
  void operator()(const GatePersistence& c) const {
    out.push_back(
        std::make_unique<GatePersistenceProp>(c.p_now, c.q_now, c.p_next, c.q_next));
  }
  void operator()(const InvolutionTransition& c) const {
    out.push_back(std::make_unique<InvolutionProp>(c.from, c.to, model.max_value()));
  }
  void operator()(const FlagOrder& c) const {
    out.push_back(std::make_unique<FlagOrderProp>(c.earlier, c.later));
  }
  void operator()(const UnaryRestrict& c) const {
    out.push_back(std::make_unique<UnaryRestrictProp>(c.var, c.allowed));
  }
};

}  // namespace

std::vector<std::unique_ptr<Propagator>> build_propagators(const CPModel& model,
                                                           std::optional<int> budget) {
  std::vector<std::unique_ptr<Propagator>> out;
  out.reserve(model.constraints().size() + 1);
  for (const auto& c : model.constraints()) {
    std::visit(LowerVisitor{model, out}, c);
  }
  if (budget && !model.flag_vars().empty()) {
    out.push_back(std::make_unique<SumLeProp>(model.flag_vars(), *budget));
  }
  return out;
}

}  // namespace qroute::engine
