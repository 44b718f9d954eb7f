#pragma once

// Braid clusters and the canonical braid-cluster column decomposition of a
// maximally clustered permutation.

#include <algorithm>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterkit/heap.hpp"
#include "clusterkit/patterns.hpp"

namespace clusterkit {

/// s_{m+1} s_{m+2} ... s_{m+k+1} ... s_{m+2} s_{m+1}, which evaluates to the
/// transposition (m+1, m+k+2). The word is placed in rank m+k+2.
inline Word canonical_braid_cluster(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("braid cluster needs m >= 0 and k >= 0");
  Word w{{}, m + k + 2};
  for (int i = 1; i <= k + 1; ++i) w.letters.push_back(m + i);
  for (int i = k; i >= 1; --i) w.letters.push_back(m + i);
  return w;
}

struct ClusterDecomposition {
  /// C~_0, C~_1, ..., C~_k; C~_i lies between B~_i and B~_{i+1}.
  std::vector<ColumnInterval> gaps;
  /// B~_1, ..., B~_k.
  std::vector<ColumnInterval> clusters;
  /// n_i; cluster i has length 2 n_i + 1 and spans n_i + 1 columns.
  std::vector<int> half_lengths;
  Heap canonical_heap;
  /// a_0 c_1 a_1 ... c_k a_k read off the canonical heap.
  Word contracted_word;

  std::size_t cluster_count() const noexcept { return clusters.size(); }
  long long total_half_length() const {
    long long s = 0;
    for (int n : half_lengths) s += n;
    return s;
  }
};

class not_maximally_clustered_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Column c has a minimal pair lacking a distinct resolution.
inline bool column_unresolved(const Heap& h, int c) {
  const auto& col = h.column(c);
  for (std::size_t i = 0; i + 1 < col.size(); ++i) {
    auto [l, r] = between_counts(h, col[i], col[i + 1], c);
    if (l == 0 || r == 0) return true;
  }
  return false;
}

// Cluster entries in canonical order s_p ... s_q ... s_p, when the heap
// restricted to [p, q] is a canonical braid cluster forming a convex set.
inline std::optional<std::vector<std::size_t>> canonical_cluster_entries(const Heap& h, int p, int q) {
  if (q >= h.rank()) return std::nullopt;
  std::vector<std::size_t> seq;
  for (int c = p; c < q; ++c) {
    if (h.column(c).size() != 2) return std::nullopt;
    seq.push_back(h.column(c)[0]);
  }
  if (h.column(q).size() != 1) return std::nullopt;
  seq.push_back(h.column(q)[0]);
  for (int c = q - 1; c >= p; --c) seq.push_back(h.column(c)[1]);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!h.less(seq[i], seq[i + 1])) return std::nullopt;
  EntryMask s;
  for (auto e : seq) s.set(e);
  // Convex: nothing outside the cluster lies between its bottom and top.
  if ((h.above(seq.front()) & h.below(seq.back()) & ~s).any()) return std::nullopt;
  return seq;
}

// Topological reading where each cluster is emitted as one block.
inline Word contracted_reading(const Heap& h, const std::vector<std::vector<std::size_t>>& clusters) {
  std::vector<int> group(h.size(), -1);
  for (std::size_t g = 0; g < clusters.size(); ++g)
    for (auto e : clusters[g]) group[e] = static_cast<int>(g);
  std::vector<bool> done(h.size(), false);
  Word w{{}, h.rank()};
  auto ready = [&](std::size_t e) {
    for (std::size_t d = 0; d < h.size(); ++d)
      if (h.less(d, e) && !done[d] && (group[e] < 0 || group[d] != group[e])) return false;
    return true;
  };
  std::size_t emitted = 0;
  while (emitted < h.size()) {
    bool progressed = false;
    for (std::size_t e = 0; e < h.size() && !progressed; ++e) {
      if (done[e]) continue;
      if (group[e] < 0) {
        if (!ready(e)) continue;
        done[e] = true;
        w.letters.push_back(h.point(e).column);
        ++emitted;
        progressed = true;
      } else {
        const auto& members = clusters[static_cast<std::size_t>(group[e])];
        if (!std::all_of(members.begin(), members.end(), ready)) continue;
        for (auto m : members) {
          done[m] = true;
          w.letters.push_back(h.point(m).column);
        }
        emitted += members.size();
        progressed = true;
      }
    }
    if (!progressed) throw std::logic_error("cluster blocks are not convex");
  }
  return w;
}

}  // namespace detail

/// The column decomposition of one specific heap, if it has one.
inline std::optional<ClusterDecomposition> column_decomposition(const Heap& h) {
  ClusterDecomposition d;
  std::vector<std::vector<std::size_t>> blocks;
  int c = 1;
  int gap_start = 1;
  const int ncols = h.rank() - 1;
  while (c <= ncols) {
    if (!detail::column_unresolved(h, c)) {
      ++c;
      continue;
    }
    int end = c;
    while (end + 1 <= ncols && detail::column_unresolved(h, end + 1)) ++end;
    const int p = c, q = end + 1;
    auto seq = detail::canonical_cluster_entries(h, p, q);
    if (!seq) return std::nullopt;
    d.gaps.push_back({gap_start, p - 1});
    d.clusters.push_back({p, q});
    d.half_lengths.push_back(q - p);
    blocks.push_back(std::move(*seq));
    gap_start = q + 1;
    c = q + 1;
  }
  d.gaps.push_back({gap_start, ncols});
  d.canonical_heap = h;
  d.contracted_word = detail::contracted_reading(h, blocks);
  return d;
}

/// Unique commutativity class of a maximally clustered w whose heap has a
/// braid-cluster column decomposition, found by breadth-first search over
/// commutativity classes.
inline ClusterDecomposition braid_cluster_decomposition(const Permutation& w,
                                                        std::size_t budget = kDefaultClassBudget) {
  if (!patterns::maximally_clustered().avoided_by(w))
    throw not_maximally_clustered_error(to_string(w) + " is not maximally clustered");
  const Heap start = heap_of(w);
  std::set<Heap> seen{start};
  std::deque<Heap> queue{start};
  while (!queue.empty()) {
    Heap h = std::move(queue.front());
    queue.pop_front();
    if (auto d = column_decomposition(h)) return *d;
    for (auto& next : braid_neighbours(h)) {
      if (seen.insert(next).second) {
        if (seen.size() > budget) throw class_search_error("decomposition search exceeded budget");
        queue.push_back(std::move(next));
      }
    }
  }
  throw inconsistency_error("no commutativity class of " + to_string(w) + " has a column decomposition");
}

/// Property (2) of the decomposition: every minimal pair in a gap column
/// has a distinct resolution.
inline bool gaps_resolved(const ClusterDecomposition& d) {
  for (const auto& g : d.gaps)
    for (int c = g.first; c <= g.last; ++c)
      if (detail::column_unresolved(d.canonical_heap, c)) return false;
  return true;
}

/// Property (1): the heap restricted to each cluster interval is the
/// canonical braid cluster of matching half-length.
inline bool clusters_canonical(const ClusterDecomposition& d) {
  for (std::size_t i = 0; i < d.clusters.size(); ++i) {
    const auto& b = d.clusters[i];
    if (b.width() != d.half_lengths[i] + 1 || d.half_lengths[i] < 1) return false;
    if (!detail::canonical_cluster_entries(d.canonical_heap, b.first, b.last)) return false;
  }
  return true;
}

}  // namespace clusterkit
