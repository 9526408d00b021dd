#pragma once

#include <cstdint>
#include <vector>

#include "diskhitter/dp.hpp"

namespace dh::detail {

/// Mixed-radix addressing of the states of one nice node: digit i is the
/// choice index of the node's i-th clique.
struct Layout {
  std::vector<int> units;
  std::vector<std::uint64_t> stride;  // size units+1; stride.back() is the state count

  std::uint64_t size() const { return stride.back(); }
  int position(int unit) const;
  int digit(std::uint64_t state, int pos, int radix) const {
    return static_cast<int>(state / stride[pos] % static_cast<std::uint64_t>(radix));
  }
};

/// Per-unit choice lists plus one layout per nice node. Throws WidthOverflow
/// when a node exceeds `cap` states.
struct Frame {
  std::vector<std::vector<LocalChoice>> choices;  // by unit
  std::vector<Layout> layouts;                    // by nice node
  std::vector<char> must_hit;                     // capacity x capacity
  int capacity = 0;

  Frame(const NiceTreeDecomposition& ntd, const HittingGraph& g, Problem problem, std::uint64_t cap);
  bool must_hit_pair(Vertex a, Vertex b) const {
    return must_hit[static_cast<std::size_t>(a) * static_cast<std::size_t>(capacity) + static_cast<std::size_t>(b)] != 0;
  }
  int radix(int unit) const { return static_cast<int>(choices[unit].size()); }
  /// Index of `child_state` lifted into a layout with one extra digit at `pos`.
  static std::uint64_t insert_digit(const Layout& wide, std::uint64_t narrow_state, int pos, int digit);
  static std::uint64_t remove_digit(const Layout& wide, std::uint64_t wide_state, int pos);
};

/// Records the chosen local choice of every unit into a DpResult.
void fill_result(const HittingGraph& g, const NiceTreeDecomposition& ntd, const Frame& frame,
                 const std::vector<int>& unit_choice, DpResult& out);

std::uint64_t resolve_cap(const DpOptions& opts);

}  // namespace dh::detail
