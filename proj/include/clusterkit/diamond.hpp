#pragma once

// Minimal diamonds, diamond reduction and its inverse, and connected
// components of heaps.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterkit/heap.hpp"

namespace clusterkit {

struct MinimalDiamond {
  std::size_t bottom = 0, top = 0;  // the minimal pair, same column
  std::size_t left = 0, right = 0;  // its distinct resolution
  int column = 0;
};

class precondition_error : public std::invalid_argument {
 public:
  precondition_error(const std::string& what, int column)
      : std::invalid_argument(what + (column > 0 ? " (column " + std::to_string(column) + ")" : "")),
        column_(column) {}
  int column() const noexcept { return column_; }

 private:
  int column_;
};

/// Requires a fully commutative heap.
inline std::vector<MinimalDiamond> minimal_diamonds(const Heap& h) {
  if (!is_fully_commutative(h)) throw precondition_error("heap is not fully commutative", 0);
  std::vector<MinimalDiamond> out;
  for (int c = 1; c < h.rank(); ++c) {
    const auto& col = h.column(c);
    for (std::size_t i = 0; i + 1 < col.size(); ++i) {
      MinimalDiamond d{col[i], col[i + 1], 0, 0, c};
      const EntryMask window = h.above(d.bottom) & h.below(d.top);
      for (auto e : h.column(c - 1))
        if (window.test(e)) d.left = e;
      for (auto e : h.column(c + 1))
        if (window.test(e)) d.right = e;
      out.push_back(d);
    }
  }
  return out;
}

/// Embedding of a fully commutative heap in which covers are diagonal
/// unit steps: adjacent columns strictly alternate, so column c sits at
/// levels base_c, base_c + 2, ... with base_{c+1} = base_c +- 1.
inline std::vector<HeapPoint> tight_embedding(const Heap& h) {
  std::vector<HeapPoint> out(h.size());
  int base = 0;
  int prev = -1;  // previous nonempty column
  for (int c = 1; c < h.rank(); ++c) {
    const auto& col = h.column(c);
    if (col.empty()) continue;
    if (prev == c - 1) {
      const auto& left = h.column(prev);
      base += h.less(col.front(), left.front()) ? -1 : 1;
      // Alternation check: merged order must zig-zag.
      std::vector<std::pair<int, int>> merged;
      for (std::size_t i = 0; i < left.size(); ++i) merged.push_back({h.point(left[i]).level, 0});
      for (std::size_t i = 0; i < col.size(); ++i) merged.push_back({h.point(col[i]).level, 1});
      std::sort(merged.begin(), merged.end());
      for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i].second == merged[i + 1].second)
          throw precondition_error("heap is not fully commutative", c);
    } else {
      base = 0;
    }
    for (std::size_t i = 0; i < col.size(); ++i) out[col[i]] = {c, base + 2 * static_cast<int>(i)};
    prev = c;
  }
  return out;
}

enum class ReductionMode {
  strict,   // connected, fully commutative, >= 2 entries per internal column
  relaxed,  // fully commutative only; output may be disconnected
};

/// Replaces every minimal diamond by an entry at its centre and erases the
/// original heap; columns shift down by one and the rank drops by two.
inline Heap diamond_reduction(const Heap& h, ReductionMode mode = ReductionMode::strict) {
  if (!is_fully_commutative(h)) throw precondition_error("heap is not fully commutative", 0);
  if (mode == ReductionMode::strict) {
    if (!h.connected()) throw precondition_error("heap is not connected", 0);
    const auto supp = h.support();
    for (int c = supp.front() + 1; c < supp.back(); ++c)
      if (h.column(c).size() < 2) throw precondition_error("internal column has fewer than two entries", c);
  }
  if (h.rank() < 3) throw precondition_error("heap has too few columns to reduce", 0);
  const auto tight = tight_embedding(h);
  std::vector<HeapPoint> centres;
  for (const auto& d : minimal_diamonds(h)) centres.push_back({d.column - 1, tight[d.bottom].level + 1});
  return Heap::from_points(h.rank() - 2, std::move(centres));
}

/// Places a minimal diamond around every entry; columns shift up by one
/// and the rank grows by two.
inline Heap inverse_diamond_reduction(const Heap& g) {
  if (!g.connected()) throw precondition_error("heap is not connected", 0);
  if (!is_fully_commutative(g)) throw precondition_error("heap is not fully commutative", 0);
  std::set<HeapPoint> pts;
  for (auto p : tight_embedding(g)) {
    pts.insert({p.column + 1, p.level - 1});
    pts.insert({p.column, p.level});
    pts.insert({p.column + 2, p.level});
    pts.insert({p.column + 1, p.level + 1});
  }
  return Heap::from_points(g.rank() + 2, {pts.begin(), pts.end()});
}

struct HeapComponent {
  ColumnInterval columns;
  Heap heap;  // same ambient rank and columns as the source heap
};

struct ComponentSplit {
  std::vector<HeapComponent> components;  // left to right
  std::vector<int> empty_columns;
};

inline ComponentSplit connected_components(const Heap& h) {
  ComponentSplit out;
  int c = 1;
  while (c < h.rank()) {
    if (h.column(c).empty()) {
      out.empty_columns.push_back(c);
      ++c;
      continue;
    }
    int end = c;
    while (end + 1 < h.rank() && !h.column(end + 1).empty()) ++end;
    std::vector<HeapPoint> pts;
    for (auto p : h.points())
      if (p.column >= c && p.column <= end) pts.push_back(p);
    out.components.push_back({{c, end}, Heap::from_points(h.rank(), std::move(pts))});
    c = end + 1;
  }
  return out;
}

}  // namespace clusterkit
