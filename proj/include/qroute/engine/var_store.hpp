#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace qroute::engine {

/// Finite domains over 0..63, one bit per value. Node ids are their own bit
/// positions; flags live on bits 0 and 1.
using Mask = std::uint64_t;

inline Mask value_bit(int v) { return Mask{1} << v; }
inline int mask_size(Mask m) { return std::popcount(m); }
inline int mask_min(Mask m) { return std::countr_zero(m); }
inline bool is_singleton(Mask m) { return std::has_single_bit(m); }

/// Backtrackable variable domains. Every shrink is trailed; undo_to restores
/// the exact pre-branch state. An emptied domain means the current branch
/// failed; shrinking operations report it by returning false.
class VarStore {
 public:
  explicit VarStore(std::vector<Mask> domains) : dom_(std::move(domains)) {}

  int size() const { return static_cast<int>(dom_.size()); }
  Mask dom(int v) const { return dom_[v]; }
  bool fixed(int v) const { return is_singleton(dom_[v]); }
  int value(int v) const { return mask_min(dom_[v]); }

  /// Intersects the domain with `allowed`. False on wipeout.
  bool intersect(int v, Mask allowed) {
    Mask next = dom_[v] & allowed;
    if (next == dom_[v]) return true;
    trail_.push_back({v, dom_[v]});
    changed_.push_back(v);
    dom_[v] = next;
    return next != 0;
  }

  bool assign(int v, int val) { return intersect(v, value_bit(val)); }
  bool remove(int v, int val) { return intersect(v, ~value_bit(val)); }

  std::size_t mark() const { return trail_.size(); }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [v, old] = trail_.back();
      trail_.pop_back();
      dom_[v] = old;
    }
  }

  /// Variables shrunk since the last drain; the propagation loop consumes
  /// this to wake subscribers.
  std::vector<int>& changed() { return changed_; }

  /// Order-sensitive digest of all domains (backtrack-integrity checks).
  std::uint64_t checksum() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Mask m : dom_) {
      h ^= m;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  std::vector<Mask> dom_;
  std::vector<std::pair<int, Mask>> trail_;
  std::vector<int> changed_;
};

}  // namespace qroute::engine
