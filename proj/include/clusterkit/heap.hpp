#pragma once

// Heaps of reduced words in type A.
//
// A heap is stored through its lattice embedding: one (column, level) point
// per letter, column = generator subscript and level = 1 + the length of
// the longest chain below the entry. The point set determines the poset
// (entries in equal or adjacent columns are ordered by level), so equality
// of heaps is equality of point sets.

#include <algorithm>
#include <bitset>
#include <compare>
#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clusterkit/patterns.hpp"
#include "clusterkit/permutation.hpp"

namespace clusterkit {

/// Upper bound on heap size; covers every reduced word up to rank 16.
inline constexpr std::size_t kMaxHeapEntries = 128;
using EntryMask = std::bitset<kMaxHeapEntries>;

struct HeapPoint {
  int column = 0;
  int level = 0;
  auto operator<=>(const HeapPoint&) const = default;
};

struct ColumnInterval {
  int first = 0;
  int last = -1;  // empty when last < first
  bool empty() const noexcept { return last < first; }
  int width() const noexcept { return empty() ? 0 : last - first + 1; }
  bool operator==(const ColumnInterval&) const = default;
};

class not_reduced_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Heap {
 public:
  Heap() = default;

  /// Throws not_reduced_error for non-reduced words.
  static Heap from_word(const Word& word) {
    if (word.size() > kMaxHeapEntries) throw std::length_error("word too long for a heap");
    if (!is_reduced(word)) throw not_reduced_error("word '" + to_string(word) + "' is not reduced");
    return from_word_unchecked(word);
  }

  /// Builds the labeled poset without checking reducedness.
  static Heap from_word_unchecked(const Word& word) {
    if (word.size() > kMaxHeapEntries) throw std::length_error("word too long for a heap");
    Heap h;
    h.rank_ = word.rank;
    std::vector<int> top(static_cast<std::size_t>(word.rank + 2), 0);
    std::vector<HeapPoint> pts;
    pts.reserve(word.size());
    for (int c : word.letters) {
      if (c < 1 || c >= word.rank) throw std::out_of_range("generator out of range for rank");
      const auto uc = static_cast<std::size_t>(c);
      const int level = 1 + std::max({top[uc - 1], top[uc], top[uc + 1]});
      top[uc] = level;
      pts.push_back({c, level});
    }
    std::sort(pts.begin(), pts.end(), [](const HeapPoint& a, const HeapPoint& b) {
      return std::pair(a.level, a.column) < std::pair(b.level, b.column);
    });
    h.points_ = std::move(pts);
    h.build_relations();
    return h;
  }

  /// Heap whose lattice points are `points` in any embedding; levels are
  /// re-normalized.
  static Heap from_points(int rank, std::vector<HeapPoint> points) {
    std::sort(points.begin(), points.end(), [](const HeapPoint& a, const HeapPoint& b) {
      return std::pair(a.level, a.column) < std::pair(b.level, b.column);
    });
    Word w{{}, rank};
    for (auto p : points) w.letters.push_back(p.column);
    return from_word_unchecked(w);
  }

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<HeapPoint>& points() const noexcept { return points_; }
  const HeapPoint& point(std::size_t i) const { return points_[i]; }

  /// Indices of the entries in column c, bottom to top.
  const std::vector<std::size_t>& column(int c) const {
    static const std::vector<std::size_t> kEmpty;
    if (c < 1 || c >= static_cast<int>(columns_.size())) return kEmpty;
    return columns_[static_cast<std::size_t>(c)];
  }

  /// Strict heap order: entry i lies below entry j.
  bool less(std::size_t i, std::size_t j) const { return above_[i].test(j); }
  const EntryMask& above(std::size_t i) const { return above_[i]; }
  const EntryMask& below(std::size_t i) const { return below_[i]; }

  /// Columns with at least one entry.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int c = 1; c < static_cast<int>(columns_.size()); ++c)
      if (!columns_[static_cast<std::size_t>(c)].empty()) s.push_back(c);
    return s;
  }

  bool connected() const {
    auto s = support();
    return !s.empty() && s.back() - s.front() + 1 == static_cast<int>(s.size());
  }

  /// Linear extension in (level, column) order.
  Word word() const {
    Word w{{}, rank_};
    for (auto p : points_) w.letters.push_back(p.column);
    return w;
  }

  Permutation evaluate() const { return word_to_permutation(word()); }

  /// Same heap on a different ambient rank (columns are unchanged).
  Heap with_rank(int rank) const {
    Word w = word();
    w.rank = rank;
    return from_word_unchecked(w);
  }

  bool operator==(const Heap& o) const { return rank_ == o.rank_ && points_ == o.points_; }
  auto operator<=>(const Heap& o) const {
    if (auto c = rank_ <=> o.rank_; c != 0) return c;
    return points_ <=> o.points_;
  }

 private:
  void build_relations() {
    const std::size_t k = points_.size();
    above_.assign(k, {});
    below_.assign(k, {});
    columns_.assign(static_cast<std::size_t>(std::max(rank_, 1)), {});
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (std::abs(points_[i].column - points_[j].column) <= 1) {
          below_[j] |= below_[i];
          below_[j].set(i);
        }
      }
      columns_[static_cast<std::size_t>(points_[j].column)].push_back(j);
    }
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i)
        if (below_[j].test(i)) above_[i].set(j);
  }

  int rank_ = 0;
  std::vector<HeapPoint> points_;
  std::vector<EntryMask> above_, below_;
  std::vector<std::vector<std::size_t>> columns_;
};

inline Heap heap_from_word(const Word& word) { return Heap::from_word(word); }
inline Heap heap_of(const Permutation& w) { return Heap::from_word_unchecked(reduced_word_of(w)); }

/// Entries of columns c-1 and c+1 strictly between entries lo < hi.
inline std::pair<int, int> between_counts(const Heap& h, std::size_t lo, std::size_t hi, int c) {
  int left = 0, right = 0;
  const EntryMask window = h.above(lo) & h.below(hi);
  for (auto e : h.column(c - 1)) left += window.test(e);
  for (auto e : h.column(c + 1)) right += window.test(e);
  return {left, right};
}

/// Lateral convexity: every minimal same-column pair has entries from both
/// neighbouring columns strictly between it.
inline bool has_lateral_convexity(const Heap& h) {
  for (int c = 1; c < h.rank(); ++c) {
    const auto& col = h.column(c);
    for (std::size_t i = 0; i + 1 < col.size(); ++i) {
      auto [l, r] = between_counts(h, col[i], col[i + 1], c);
      if (l == 0 || r == 0) return false;
    }
  }
  return true;
}

inline bool is_fully_commutative(const Heap& h) { return has_lateral_convexity(h); }
inline bool is_fully_commutative(const Permutation& w) { return has_lateral_convexity(heap_of(w)); }

/// Heaps reachable from `h` by one short-braid move.
inline std::vector<Heap> braid_neighbours(const Heap& h) {
  std::vector<Heap> out;
  for (int c = 1; c < h.rank(); ++c) {
    const auto& col = h.column(c);
    for (std::size_t i = 0; i + 1 < col.size(); ++i) {
      const std::size_t a = col[i], z = col[i + 1];
      const EntryMask window = h.above(a) & h.below(z);
      if (window.count() != 1) continue;
      std::size_t b = 0;
      while (!window.test(b)) ++b;
      const int d = h.point(b).column;
      // Everything not above a, then the braid, then the rest.
      Word w{{}, h.rank()};
      for (std::size_t e = 0; e < h.size(); ++e)
        if (e != a && !h.less(a, e)) w.letters.push_back(h.point(e).column);
      w.letters.insert(w.letters.end(), {d, c, d});
      for (std::size_t e = 0; e < h.size(); ++e)
        if (h.less(a, e) && e != b && e != z) w.letters.push_back(h.point(e).column);
      out.push_back(Heap::from_word_unchecked(w));
    }
  }
  return out;
}

class class_search_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultClassBudget = 200000;

/// All commutativity classes (as heaps) of the element represented by
/// `start`, by breadth-first search over short-braid moves.
inline std::vector<Heap> commutativity_classes(const Heap& start, std::size_t budget = kDefaultClassBudget) {
  std::set<Heap> seen{start};
  std::vector<Heap> order{start};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (auto& next : braid_neighbours(order[i])) {
      if (seen.insert(next).second) {
        order.push_back(std::move(next));
        if (order.size() > budget) throw class_search_error("commutativity class search exceeded budget");
      }
    }
  }
  return order;
}

enum class ClassSearch {
  fc_mc_only,  // host must be fully commutative or maximally clustered
  exhaustive,  // any host, bounded by the class budget
};

/// Convex labeled-subposet matching of one pattern heap into one host heap
/// with the pattern's columns translated by `shift`.
inline bool embeds_convex(const Heap& host, const Heap& pattern, int shift) {
  const auto supp = pattern.support();
  if (supp.empty()) return true;
  const int first = supp.front(), last = supp.back();
  if (first + shift < 1 || last + shift >= host.rank()) return false;
  const std::size_t ncols = static_cast<std::size_t>(last - first + 1);
  std::vector<std::size_t> start(ncols, 0);
  std::vector<std::size_t> image(pattern.size());

  auto place = [&](auto&& self, std::size_t ci) -> bool {
    if (ci == ncols) {
      EntryMask s, up, down;
      for (auto e : image) s.set(e);
      for (auto e : image) {
        up |= host.above(e);
        down |= host.below(e);
      }
      return (up & down & ~s).none();
    }
    const int pc = first + static_cast<int>(ci);
    const auto& pcol = pattern.column(pc);
    const auto& hcol = host.column(pc + shift);
    if (pcol.size() > hcol.size()) return false;
    for (std::size_t s0 = 0; s0 + pcol.size() <= hcol.size(); ++s0) {
      for (std::size_t t = 0; t < pcol.size(); ++t) image[pcol[t]] = hcol[s0 + t];
      bool ok = true;
      if (ci > 0) {
        for (auto u : pattern.column(pc - 1)) {
          for (auto v : pcol) {
            if (pattern.less(u, v) != host.less(image[u], image[v])) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
      if (ok && self(self, ci + 1)) return true;
    }
    return false;
  };
  return place(place, 0);
}

/// Precomputed heap pattern: every commutativity class of a connected h.
class HeapPattern {
 public:
  explicit HeapPattern(const Permutation& h, std::size_t budget = kDefaultClassBudget) : element_(h) {
    const auto supp = support_and_connectivity(h);
    if (!supp.connected) throw std::invalid_argument("heap pattern " + to_string(h) + " is not connected");
    classes_ = commutativity_classes(heap_of(h), budget);
    first_ = supp.generators.front();
    last_ = supp.generators.back();
  }

  const Permutation& element() const noexcept { return element_; }
  const std::vector<Heap>& classes() const noexcept { return classes_; }
  int support_first() const noexcept { return first_; }
  int support_last() const noexcept { return last_; }

  bool fully_commutative() const noexcept { return classes_.size() == 1; }

  /// Does some heap among `host_classes` contain a shifted class of h?
  bool found_in(const std::vector<Heap>& host_classes, int host_rank) const {
    const int length = element_.length();
    for (const auto& host : host_classes) {
      if (static_cast<int>(host.size()) < length) return false;
      for (int shift = 1 - first_; last_ + shift <= host_rank - 1; ++shift)
        for (const auto& pat : classes_)
          if (embeds_convex(host, pat, shift)) return true;
    }
    return false;
  }

 private:
  Permutation element_;
  std::vector<Heap> classes_;
  int first_ = 0, last_ = 0;
};

/// Commutativity classes of w under the given search policy.
inline std::vector<Heap> host_classes(const Permutation& w, ClassSearch policy,
                                      std::size_t budget = kDefaultClassBudget) {
  Heap h = heap_of(w);
  if (has_lateral_convexity(h)) return {std::move(h)};
  if (policy == ClassSearch::fc_mc_only && !patterns::maximally_clustered().avoided_by(w))
    throw class_search_error("class-search unsupported: " + to_string(w) +
                             " is neither fully commutative nor maximally clustered");
  return commutativity_classes(h, budget);
}

/// w heap-contains h: some commutativity class of w contains a shifted
/// commutativity class of h as a convex labeled subposet.
inline bool heap_contains(const Permutation& w, const HeapPattern& h,
                          ClassSearch policy = ClassSearch::fc_mc_only) {
  if (h.element().rank() > w.rank() || h.element().length() > w.length()) return false;
  return h.found_in(host_classes(w, policy), w.rank());
}

inline bool heap_contains(const Permutation& w, const Permutation& h, ClassSearch policy = ClassSearch::fc_mc_only) {
  return heap_contains(w, HeapPattern(h), policy);
}

/// One line per level (top first), one cell per column 1..rank-1.
inline std::string heap_picture(const Heap& h) {
  int top = 0;
  for (auto p : h.points()) top = std::max(top, p.level);
  std::set<HeapPoint> pts(h.points().begin(), h.points().end());
  std::string out;
  for (int y = top; y >= 1; --y) {
    for (int c = 1; c < h.rank(); ++c) {
      if (c > 1) out += ' ';
      out += pts.count({c, y}) ? '*' : '.';
    }
    out += '\n';
  }
  return out;
}

/// Sorted "(column,level)" pairs.
inline std::string heap_points_string(const Heap& h) {
  std::vector<HeapPoint> pts = h.points();
  std::sort(pts.begin(), pts.end());
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += '(' + std::to_string(pts[i].column) + ',' + std::to_string(pts[i].level) + ')';
  }
  return out;
}

}  // namespace clusterkit
