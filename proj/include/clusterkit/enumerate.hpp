#pragma once

// Brute-force enumeration of pattern classes S_n^P(H) over the insertion
// tree, plus the 1-line translation of heap patterns.
//
// A node of the tree is w in S_k; its children insert k+1 into each of the
// k+1 slots. Avoidance of classical patterns is inherited by restriction,
// so children are pruned as soon as they contain a pattern through the new
// entry. Heap avoidance is not monotone along the tree and is tested on
// every node whose size we report.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "clusterkit/heap.hpp"
#include "clusterkit/patterns.hpp"

namespace clusterkit {

class limit_error : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Largest size enumerated by default; CLUSTERKIT_MAX_N overrides it.
inline int brute_force_limit() {
  if (const char* env = std::getenv("CLUSTERKIT_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 11;
}

/// Does every permutation avoiding P also avoid the maximally clustered
/// patterns? True iff each of those contains some pattern of P.
inline bool implies_maximally_clustered(const PatternSet& P) {
  for (const auto& m : patterns::maximally_clustered().patterns) {
    bool hit = false;
    for (const auto& p : P.patterns) hit = hit || contains_pattern(m, p);
    if (!hit) return false;
  }
  return true;
}

/// Hypothesis on heap patterns used by the translation machinery: connected,
/// fully commutative, and at least two entries in every internal column.
inline bool satisfies_heap_pattern_hypothesis(const Permutation& h, std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const auto supp = support_and_connectivity(h);
  if (supp.generators.empty()) return fail("empty heap");
  if (!supp.connected) return fail("heap is not connected");
  const Heap heap = heap_of(h);
  if (!has_lateral_convexity(heap)) return fail("heap is not fully commutative");
  for (int c = supp.generators.front() + 1; c < supp.generators.back(); ++c)
    if (heap.column(c).size() < 2) return fail("internal column " + std::to_string(c) + " has fewer than two entries");
  return true;
}

class ClassSpec {
 public:
  ClassSpec(PatternSet one_line, std::vector<Permutation> heap_patterns, bool check_hypothesis = true)
      : one_line_(std::move(one_line)), search_(ClassSearch::fc_mc_only) {
    for (const auto& h : heap_patterns) {
      std::string why;
      if (check_hypothesis && !satisfies_heap_pattern_hypothesis(h, &why))
        throw std::invalid_argument("heap pattern " + to_string(h) + ": " + why);
      heap_.emplace_back(h);
    }
    if (!heap_.empty() && !implies_maximally_clustered(one_line_)) search_ = ClassSearch::exhaustive;
  }

  explicit ClassSpec(PatternSet one_line) : ClassSpec(std::move(one_line), {}) {}

  const PatternSet& one_line() const noexcept { return one_line_; }
  const std::vector<HeapPattern>& heap_patterns() const noexcept { return heap_; }
  ClassSearch search() const noexcept { return search_; }

  /// Heap-avoidance part of membership; the 1-line part is assumed.
  bool avoids_heaps(const Permutation& w) const {
    if (heap_.empty()) return true;
    std::vector<Heap> classes;
    bool computed = false;
    for (const auto& h : heap_) {
      if (h.element().rank() > w.rank() || h.element().length() > w.length()) continue;
      if (!computed) {
        classes = host_classes(w, search_);
        computed = true;
      }
      if (h.found_in(classes, w.rank())) return false;
    }
    return true;
  }

  bool contains(const Permutation& w) const { return one_line_.avoided_by(w) && avoids_heaps(w); }

 private:
  PatternSet one_line_;
  std::vector<HeapPattern> heap_;
  ClassSearch search_;
};

struct Enumeration {
  /// counts[k] = |S_k^P(H)| for k = 0..n (counts[0] = 1 by convention).
  std::vector<long long> counts;
  /// Members of size n in lexicographic order, if requested.
  std::vector<Permutation> members;
};

struct EnumerateOptions {
  int jobs = 1;
  bool keep_members = false;
  /// Also filter by heap patterns at every size below n (for counts).
  bool all_sizes = true;
  /// Skip the size limit check.
  bool ignore_limit = false;
};

/// Enumerates S_n^P(H). Results are identical for every job count.
inline Enumeration enumerate_class(const ClassSpec& spec, int n, EnumerateOptions opt = {}) {
  if (n < 0) throw std::invalid_argument("size must be non-negative");
  if (!opt.ignore_limit && n > brute_force_limit())
    throw limit_error("size " + std::to_string(n) + " exceeds the brute-force limit " +
                      std::to_string(brute_force_limit()) + " (set CLUSTERKIT_MAX_N to raise it)");
  Enumeration out;
  out.counts.assign(static_cast<std::size_t>(n + 1), 0);
  out.counts[0] = 1;
  if (n == 0) {
    if (opt.keep_members) out.members.push_back(Permutation::identity(0));
    return out;
  }
  const int jobs = std::max(1, opt.jobs);

  // Breadth-first to a frontier wide enough to share between workers.
  std::vector<Permutation> frontier{Permutation::identity(1)};
  int depth = 1;
  auto tally = [&](const Permutation& w, std::vector<long long>& counts, std::vector<Permutation>* keep) {
    const int k = w.rank();
    if (k < n && !opt.all_sizes) return;
    if (!spec.avoids_heaps(w)) return;
    ++counts[static_cast<std::size_t>(k)];
    if (k == n && keep) keep->push_back(w);
  };
  auto children = [&](const Permutation& w, auto&& visit) {
    for (int pos = 1; pos <= w.rank() + 1; ++pos) {
      Permutation child = w.insert_max(pos);
      if (spec.one_line().avoided_by_through(child, pos)) visit(std::move(child));
    }
  };

  for (const auto& w : frontier) tally(w, out.counts, opt.keep_members ? &out.members : nullptr);
  const std::size_t wanted = static_cast<std::size_t>(jobs) * 16;
  while (depth < n && (jobs > 1 ? frontier.size() < wanted : false)) {
    std::vector<Permutation> next;
    for (const auto& w : frontier) children(w, [&](Permutation c) { next.push_back(std::move(c)); });
    frontier = std::move(next);
    ++depth;
    for (const auto& w : frontier) tally(w, out.counts, opt.keep_members ? &out.members : nullptr);
  }
  if (depth == n) {
    std::sort(out.members.begin(), out.members.end());
    return out;
  }

  struct Partial {
    std::vector<long long> counts;
    std::vector<Permutation> members;
  };
  std::vector<Partial> partial(static_cast<std::size_t>(jobs));
  std::atomic<std::size_t> next_root{0};
  auto worker = [&](Partial& part) {
    part.counts.assign(out.counts.size(), 0);
    std::vector<Permutation>* keep = opt.keep_members ? &part.members : nullptr;
    auto dfs = [&](auto&& self, const Permutation& w) -> void {
      children(w, [&](Permutation c) {
        tally(c, part.counts, keep);
        if (c.rank() < n) self(self, c);
      });
    };
    for (std::size_t i = next_root++; i < frontier.size(); i = next_root++) dfs(dfs, frontier[i]);
  };
  if (jobs == 1) {
    worker(partial[0]);
  } else {
    std::vector<std::thread> threads;
    for (auto& part : partial) threads.emplace_back(worker, std::ref(part));
    for (auto& t : threads) t.join();
  }
  for (auto& part : partial) {
    for (std::size_t k = 0; k < part.counts.size(); ++k) out.counts[k] += part.counts[k];
    out.members.insert(out.members.end(), part.members.begin(), part.members.end());
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

inline std::vector<Permutation> class_members(const ClassSpec& spec, int n, int jobs = 1) {
  EnumerateOptions opt;
  opt.jobs = jobs;
  opt.keep_members = true;
  opt.all_sizes = false;
  return enumerate_class(spec, n, opt).members;
}

inline long long class_count(const ClassSpec& spec, int n, int jobs = 1) {
  EnumerateOptions opt;
  opt.jobs = jobs;
  opt.all_sizes = false;
  return enumerate_class(spec, n, opt).counts[static_cast<std::size_t>(n)];
}

/// Size counts 1..n of a class.
inline std::vector<long long> class_counts(const ClassSpec& spec, int n, int jobs = 1) {
  EnumerateOptions opt;
  opt.jobs = jobs;
  return enumerate_class(spec, n, opt).counts;
}

// ---------------------------------------------------------------------------
// Translation of heap patterns into 1-line patterns.

/// U(P, h): elements of S^P of the same size as h that heap-contain h.
inline std::vector<Permutation> compute_U(const PatternSet& P, const Permutation& h, int jobs = 1) {
  const ClassSpec base(P);
  const HeapPattern pattern(h);
  const ClassSearch policy = implies_maximally_clustered(P) ? ClassSearch::fc_mc_only : ClassSearch::exhaustive;
  std::vector<Permutation> out;
  for (const auto& w : class_members(base, h.rank(), jobs))
    if (heap_contains(w, pattern, policy)) out.push_back(w);
  return out;
}

/// p is an ideal pattern for P when every q in S^P one size larger that
/// contains p (classically) also heap-contains p.
inline bool is_ideal_pattern(const Permutation& p, const PatternSet& P, int jobs = 1,
                             std::vector<Permutation>* witnesses = nullptr) {
  const ClassSpec base(P);
  const HeapPattern pattern(p);
  const ClassSearch policy = implies_maximally_clustered(P) ? ClassSearch::fc_mc_only : ClassSearch::exhaustive;
  bool ideal = true;
  for (const auto& q : class_members(base, p.rank() + 1, jobs)) {
    if (!contains_pattern(q, p)) continue;
    if (!heap_contains(q, pattern, policy)) {
      ideal = false;
      if (!witnesses) break;
      witnesses->push_back(q);
    }
  }
  return ideal;
}

struct TranslationRow {
  int n = 0;
  long long heap_side = 0;
  long long one_line_side = 0;
  bool same_members = false;
};

struct TranslationReport {
  std::vector<Permutation> translated;  // P' = P together with U(P, h) for h in H
  std::vector<std::pair<Permutation, bool>> ideal;
  std::vector<TranslationRow> rows;
  bool ok() const {
    for (const auto& [p, i] : ideal)
      if (!i) return false;
    for (const auto& r : rows)
      if (!r.same_members) return false;
    return true;
  }
};

/// Checks S_n^P(H) = S_n^{P'} for n = 1..n_max, where P' adds U(P, h) for
/// each h in H, and reports ideality of every U element.
inline TranslationReport verify_translation(const PatternSet& P, const std::vector<Permutation>& H, int n_max,
                                            int jobs = 1, bool check_hypothesis = true) {
  TranslationReport report;
  PatternSet translated = P;
  translated.name = P.name + "+U";
  for (const auto& h : H)
    for (const auto& u : compute_U(P, h, jobs))
      if (std::find(translated.patterns.begin(), translated.patterns.end(), u) == translated.patterns.end())
        translated.patterns.push_back(u);
  for (const auto& u : translated.patterns)
    if (std::find(P.patterns.begin(), P.patterns.end(), u) == P.patterns.end()) {
      report.translated.push_back(u);
      report.ideal.emplace_back(u, is_ideal_pattern(u, P, jobs));
    }
  const ClassSpec heap_side(P, H, check_hypothesis);
  const ClassSpec line_side(translated);
  for (int n = 1; n <= n_max; ++n) {
    const auto a = class_members(heap_side, n, jobs);
    const auto b = class_members(line_side, n, jobs);
    report.rows.push_back({n, static_cast<long long>(a.size()), static_cast<long long>(b.size()), a == b});
  }
  return report;
}

}  // namespace clusterkit
