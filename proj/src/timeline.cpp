#include "qroute/timeline.hpp"

#include "qroute/circuit.hpp"
#include "qroute/error.hpp"

namespace qroute {

LayerTimeline LayerTimeline::expand(int gate_layer_count, int dummy_count) {
  if (gate_layer_count < 1) throw Error("timeline needs at least one gate layer");
  if (dummy_count < 0) throw Error("dummy layer count must be non-negative");

  LayerTimeline tl;
  tl.gate_layer_count_ = gate_layer_count;
  tl.dummy_count_ = dummy_count;
  tl.entries_.reserve(gate_layer_count + dummy_count * (gate_layer_count - 1));
  for (int g = 0; g < gate_layer_count; ++g) {
    tl.entries_.push_back({TimelineEntry::Kind::Gate, g, -1, -1});
    if (g + 1 < gate_layer_count) {
      for (int k = 0; k < dummy_count; ++k) {
        tl.entries_.push_back({TimelineEntry::Kind::Dummy, -1, g, k});
      }
    }
  }
  return tl;
}

LayerTimeline expand_timeline(const LogicalCircuit& circuit, int dummy_count) {
  return LayerTimeline::expand(circuit.layer_count(), dummy_count);
}

}  // namespace qroute
