#pragma once

#include <vector>

namespace qroute {

class LogicalCircuit;

/// One slot of the expanded schedule: an original gate layer, or one of the
/// K dummy slots of the block sitting between two consecutive gate layers.
struct TimelineEntry {
  enum class Kind { Gate, Dummy };
  Kind kind;
  int gate_index;    // Gate: 0-based circuit layer index; Dummy: -1
  int block;         // Dummy: 0-based block id (between gate layers block and block+1); Gate: -1
  int pos_in_block;  // Dummy: 0..K-1; Gate: -1
};

/// Expanded layer sequence g_1, K dummies, g_2, ..., g_L. No dummies before
/// the first or after the last gate layer, so |L'| = L + K*(L-1).
class LayerTimeline {
 public:
  static LayerTimeline expand(int gate_layer_count, int dummy_count);

  int size() const { return static_cast<int>(entries_.size()); }
  int gate_layer_count() const { return gate_layer_count_; }
  int dummy_count() const { return dummy_count_; }
  const std::vector<TimelineEntry>& entries() const { return entries_; }
  const TimelineEntry& entry(int idx) const { return entries_[idx]; }

  int transition_count() const { return size() - 1; }
  /// Transition t links layers t and t+1; it is counted toward the objective
  /// iff it originates at a dummy layer.
  bool dummy_origin(int transition) const {
    return entries_[transition].kind == TimelineEntry::Kind::Dummy;
  }

  /// |L_SWAP| = K*(L-1).
  int swap_layer_count() const { return dummy_count_ * (gate_layer_count_ - 1); }

  /// Timeline index of gate layer i (0-based).
  int gate_layer_position(int gate_index) const {
    return gate_index * (dummy_count_ + 1);
  }

 private:
  LayerTimeline() = default;
  int gate_layer_count_ = 0;
  int dummy_count_ = 0;
  std::vector<TimelineEntry> entries_;
};

/// Expands the circuit's L layers with K dummy slots per gap.
LayerTimeline expand_timeline(const LogicalCircuit& circuit, int dummy_count);

}  // namespace qroute
