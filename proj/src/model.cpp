#include "qroute/model.hpp"

#include <algorithm>
#include <sstream>

#include "qroute/error.hpp"

namespace qroute {

CPModel::CPModel(int qubit_count, int layer_total, int max_value)
    : qubit_count_(qubit_count), layer_total_(layer_total), max_value_(max_value) {}

int CPModel::add_position_var(int qubit, int layer, std::uint64_t domain, int prev) {
  vars_.push_back({VarInfo::Kind::Position, qubit, layer, domain, prev});
  return var_count() - 1;
}

int CPModel::add_flag_var(int layer) {
  vars_.push_back({VarInfo::Kind::Flag, -1, layer, 0b11u, -1});
  flag_vars_.push_back(var_count() - 1);
  return var_count() - 1;
}

int CPModel::add_table(std::vector<std::pair<int, int>> tuples, std::string name) {
  tables_.push_back(std::move(tuples));
  table_names_.push_back(std::move(name));
  return static_cast<int>(tables_.size()) - 1;
}

namespace {

std::uint64_t full_domain(int n) { return ((std::uint64_t{1} << n) - 1) << 1; }

struct ModelShell {
  CPModel model;
  LayerTimeline timeline;
  int arcs_table = -1;
  int arcs_or_stay_table = -1;
};

// Variables in layer-major order (the engine's static search order), then
// one flag per dummy layer in timeline order.
ModelShell build_shell(const RoutingProblem& problem) {
  validate_problem(problem);
  const int n = problem.graph.node_count();
  const int q_count = problem.circuit.qubit_count();
  LayerTimeline tl = problem.timeline();

  ModelShell shell{CPModel(q_count, tl.size(), n), tl};
  CPModel& m = shell.model;
  for (int l = 0; l < tl.size(); ++l) {
    for (int q = 0; q < q_count; ++q) {
      m.add_position_var(q, l, full_domain(n), l > 0 ? m.position_var(q, l - 1) : -1);
    }
  }
  for (int l = 0; l < tl.size(); ++l) {
    if (tl.entry(l).kind == TimelineEntry::Kind::Dummy) {
      m.add_flag_var(l);
    }
  }

  for (int l = 0; l < tl.size(); ++l) {
    std::vector<int> layer_vars(q_count);
    for (int q = 0; q < q_count; ++q) layer_vars[q] = m.position_var(q, l);
    m.add(AllDifferent{std::move(layer_vars)});
  }
  return shell;
}

void add_movement_flags(ModelShell& shell, const RoutingProblem& problem) {
  CPModel& m = shell.model;
  const auto& tl = shell.timeline;
  int flag_idx = 0;
  for (int l = 0; l + 1 < tl.size(); ++l) {
    if (!tl.dummy_origin(l)) continue;
    MovementFlag mf;
    mf.flag = m.flag_vars()[flag_idx++];
    for (int q = 0; q < problem.circuit.qubit_count(); ++q) {
      mf.moves.push_back({m.position_var(q, l), m.position_var(q, l + 1)});
    }
    m.add(std::move(mf));
  }
}

}  // namespace

CPModel build_linear_model(const RoutingProblem& problem) {
  if (problem.variant != Variant::Linear) {
    throw Error("problem variant is not 'linear'");
  }
  ModelShell shell = build_shell(problem);
  CPModel& m = shell.model;
  const auto& tl = shell.timeline;
  const auto& circuit = problem.circuit;

  for (int l = 0; l < tl.size(); ++l) {
    const auto& e = tl.entry(l);
    if (e.kind != TimelineEntry::Kind::Gate) continue;
    for (const auto& g : circuit.layer(e.gate_index)) {
      m.add(AbsEqOne{m.position_var(g.a - 1, l), m.position_var(g.b - 1, l)});
    }
    if (l + 1 < tl.size()) {
      // Gate qubits must still neighbor each other at the next layer; with
      // the per-qubit step bound below this pins each pair to stay or swap.
      for (const auto& g : circuit.layer(e.gate_index)) {
        m.add(AbsLeOne{m.position_var(g.a - 1, l), m.position_var(g.b - 1, l + 1)});
        m.add(AbsLeOne{m.position_var(g.b - 1, l), m.position_var(g.a - 1, l + 1)});
      }
    }
  }

  for (int l = 0; l + 1 < tl.size(); ++l) {
    for (int q = 0; q < circuit.qubit_count(); ++q) {
      m.add(AbsLeOne{m.position_var(q, l), m.position_var(q, l + 1)});
    }
  }

  // SwapOnly needs nothing extra here: a one-step bijection on a path is
  // always a product of disjoint adjacent transpositions.
  add_movement_flags(shell, problem);
  return std::move(shell.model);
}

CPModel build_general_model(const RoutingProblem& problem) {
  if (problem.variant != Variant::General) {
    throw Error("problem variant is not 'general'");
  }
  ModelShell shell = build_shell(problem);
  CPModel& m = shell.model;
  const auto& tl = shell.timeline;
  const auto& circuit = problem.circuit;
  const auto& graph = problem.graph;

  auto arcs = graph.arcs();
  auto arcs_or_stay = arcs;
  for (int i = 1; i <= graph.node_count(); ++i) arcs_or_stay.push_back({i, i});
  shell.arcs_table = m.add_table(std::move(arcs), "arcs");
  shell.arcs_or_stay_table = m.add_table(std::move(arcs_or_stay), "arcs-or-stay");

  for (int l = 0; l < tl.size(); ++l) {
    const auto& e = tl.entry(l);
    if (e.kind != TimelineEntry::Kind::Gate) continue;
    for (const auto& g : circuit.layer(e.gate_index)) {
      m.add(AllowedPairs{m.position_var(g.a - 1, l), m.position_var(g.b - 1, l),
                         shell.arcs_table});
    }
    if (l + 1 < tl.size()) {
      // Stay-or-swap: the printed disjunction plus its mirror, which the
      // movement and alldifferent constraints make equivalent to this.
      for (const auto& g : circuit.layer(e.gate_index)) {
        m.add(GatePersistence{m.position_var(g.a - 1, l), m.position_var(g.b - 1, l),
                              m.position_var(g.a - 1, l + 1),
                              m.position_var(g.b - 1, l + 1)});
      }
    }
  }

  for (int l = 0; l + 1 < tl.size(); ++l) {
    for (int q = 0; q < circuit.qubit_count(); ++q) {
      m.add(AllowedPairs{m.position_var(q, l), m.position_var(q, l + 1),
                         shell.arcs_or_stay_table});
    }
  }

  if (problem.mode == Mode::SwapOnly) {
    for (int l = 0; l + 1 < tl.size(); ++l) {
      InvolutionTransition inv;
      for (int q = 0; q < circuit.qubit_count(); ++q) {
        inv.from.push_back(m.position_var(q, l));
        inv.to.push_back(m.position_var(q, l + 1));
      }
      m.add(std::move(inv));
    }
  }

  add_movement_flags(shell, problem);
  return std::move(shell.model);
}

void add_symmetry_breaking(CPModel& model, const RoutingProblem& problem) {
  const auto& graph = problem.graph;
  const int n = graph.node_count();
  std::uint64_t allowed = 0;

  if (graph.is_path()) {
    // Path reversal maps node k to n+1-k; keep the left half.
    for (int v = 1; v <= (n + 1) / 2; ++v) allowed |= std::uint64_t{1} << v;
  } else if (auto dims = graph.lattice_dims()) {
    // Horizontal grid reflection maps column c to cols+1-c.
    auto [rows, cols] = *dims;
    for (int r = 1; r <= rows; ++r) {
      for (int c = 1; c <= (cols + 1) / 2; ++c) {
        allowed |= std::uint64_t{1} << ((r - 1) * cols + c);
      }
    }
  } else {
    return;  // no recognized reflection; nothing sound to post
  }

  const Gate& first = problem.circuit.layer(0).front();
  int qubit = std::min(first.a, first.b) - 1;
  model.add(UnaryRestrict{model.position_var(qubit, 0), allowed});
}

void add_frontload_dominance(CPModel& model, const RoutingProblem& problem) {
  const LayerTimeline tl = problem.timeline();
  if (tl.dummy_count() < 2) return;
  const auto& flags = model.flag_vars();
  for (std::size_t i = 0; i + 1 < flags.size(); ++i) {
    const VarInfo& a = model.vars()[flags[i]];
    const VarInfo& b = model.vars()[flags[i + 1]];
    if (tl.entry(a.layer).block == tl.entry(b.layer).block) {
      model.add(FlagOrder{flags[i], flags[i + 1]});
    }
  }
}

CPModel build_model(const RoutingProblem& problem) {
  CPModel model = problem.variant == Variant::Linear ? build_linear_model(problem)
                                                     : build_general_model(problem);
  if (problem.symmetry_breaking) add_symmetry_breaking(model, problem);
  if (problem.frontload_dominance) add_frontload_dominance(model, problem);

  // Checkpoints for the engine's refutation cache. A frontload constraint
  // ties a dummy layer's flag to its in-block predecessor, so that flag
  // joins the checkpoint key.
  const LayerTimeline tl = problem.timeline();
  std::vector<int> flag_of_layer(tl.size(), -1);
  for (int f : model.flag_vars()) flag_of_layer[model.vars()[f].layer] = f;
  for (int l = 1; l + 1 < tl.size(); ++l) {
    int extra = -1;
    const auto& here = tl.entry(l);
    const auto& before = tl.entry(l - 1);
    if (problem.frontload_dominance && here.kind == TimelineEntry::Kind::Dummy &&
        before.kind == TimelineEntry::Kind::Dummy && here.block == before.block) {
      extra = flag_of_layer[l - 1];
    }
    model.add_checkpoint(l, extra);
  }
  return model;
}

namespace {

struct DumpVisitor {
  const CPModel& m;
  std::ostream& os;

  std::string name(int v) const {
    const VarInfo& info = m.vars()[v];
    if (info.kind == VarInfo::Kind::Flag) {
      return "z[" + std::to_string(info.layer + 1) + "]";
    }
    return "x[" + std::to_string(info.qubit + 1) + "][" + std::to_string(info.layer + 1) + "]";
  }

  void operator()(const AllDifferent& c) const {
    os << "alldifferent(";
    for (std::size_t i = 0; i < c.vars.size(); ++i) {
      os << (i ? ", " : "") << name(c.vars[i]);
    }
    os << ")";
  }
  void operator()(const AllowedPairs& c) const {
    os << "table((" << name(c.a) << ", " << name(c.b) << "), table" << c.table << ")";
  }
  void operator()(const AbsEqOne& c) const {
    os << "|" << name(c.a) << " - " << name(c.b) << "| = 1";
  }
  void operator()(const AbsLeOne& c) const {
    os << "|" << name(c.a) << " - " << name(c.b) << "| <= 1";
  }
  void operator()(const MovementFlag& c) const {
    os << name(c.flag) << " = 1 iff movement across layers " << m.vars()[c.flag].layer + 1
       << " -> " << m.vars()[c.flag].layer + 2;
  }
  void operator()(const GatePersistence& c) const {
    os << "(" << name(c.p_next) << ", " << name(c.q_next) << ") in {(" << name(c.p_now)
       << ", " << name(c.q_now) << "), (" << name(c.q_now) << ", " << name(c.p_now) << ")}";
  }
  void operator()(const InvolutionTransition& c) const {
    os << "involution(layers " << m.vars()[c.from.front()].layer + 1 << " -> "
       << m.vars()[c.to.front()].layer + 1 << ")";
  }
  void operator()(const FlagOrder& c) const {
    os << name(c.earlier) << " >= " << name(c.later);
  }
  void operator()(const UnaryRestrict& c) const {
    os << name(c.var) << " in {";
    bool first = true;
    for (int v = 0; v < 64; ++v) {
      if (c.allowed >> v & 1) {
        os << (first ? "" : ",") << v;
        first = false;
      }
    }
    os << "}";
  }
};

}  // namespace

std::string CPModel::dump() const {
  std::ostringstream os;
  for (const auto& c : constraints_) {
    std::visit(DumpVisitor{*this, os}, c);
    os << "\n";
  }
  return os.str();
}

}  // namespace qroute
