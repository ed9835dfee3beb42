#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "cleanring/ring.hpp"

namespace cleanring {

// Subset of a ring's elements with O(1) membership and insertion order.
class ElementSet {
 public:
  explicit ElementSet(std::uint64_t universe) : bits_(universe, false) {}

  bool contains(Elem a) const { return bits_[a]; }
  bool insert(Elem a) {
    if (bits_[a]) return false;
    bits_[a] = true;
    items_.push_back(a);
    return true;
  }
  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<Elem>& items() const noexcept { return items_; }
  std::vector<Elem> sorted() const {
    auto out = items_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<bool> bits_;
  std::vector<Elem> items_;
};

// Grows the additive subgroup `span` (which must already be a subgroup
// containing zero) to span + <g>.
void extend_additive_span(const FiniteRing& ring, ElementSet& span, Elem g);

// Additive subgroup generated by `generators`.
ElementSet additive_span(const FiniteRing& ring, std::span<const Elem> generators);

}  // namespace cleanring
