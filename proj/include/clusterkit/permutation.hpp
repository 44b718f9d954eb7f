#pragma once

// Permutations in 1-line notation, classical pattern containment and the
// word <-> permutation conversions used by the heap model.
//
// Everything is 1-based: positions, values and generator subscripts.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clusterkit {

class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A word in the generators s_1, s_2, ...; letters are the subscripts.
struct Word {
  std::vector<int> letters;
  int rank = 0;  // ambient n of S_n; letters lie in [1, rank-1]

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

inline std::string to_string(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i) out += ' ';
    out += "s_" + std::to_string(word.letters[i]);
  }
  return out;
}

class Permutation {
 public:
  Permutation() = default;

  /// Identity of S_n.
  static Permutation identity(int n) {
    Permutation p;
    p.values_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.values_[static_cast<std::size_t>(i)] = i + 1;
    return p;
  }

  /// Throws std::invalid_argument unless `values` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || v > static_cast<int>(values_.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation of 1..n");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

  int rank() const noexcept { return static_cast<int>(values_.size()); }
  /// 1-based access: w(i) = w_i.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> values() const noexcept { return values_; }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

  /// Coxeter length = number of inversions.
  int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < values_.size(); ++i)
      for (std::size_t j = i + 1; j < values_.size(); ++j)
        if (values_[i] > values_[j]) ++inv;
    return inv;
  }

  Permutation inverse() const {
    std::vector<int> inv(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
      inv[static_cast<std::size_t>(values_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  /// Right multiplication by s_i: swaps positions i and i+1.
  void swap_positions(int i) {
    std::swap(values_[static_cast<std::size_t>(i - 1)], values_[static_cast<std::size_t>(i)]);
  }

  /// The permutation of S_{n+1} obtained by inserting n+1 before position
  /// `pos` (pos in [1, n+1]).
  Permutation insert_max(int pos) const {
    Permutation child;
    child.values_.reserve(values_.size() + 1);
    child.values_.assign(values_.begin(), values_.begin() + (pos - 1));
    child.values_.push_back(rank() + 1);
    child.values_.insert(child.values_.end(), values_.begin() + (pos - 1), values_.end());
    return child;
  }

 private:
  std::vector<int> values_;
};

/// "[46718235]" for rank <= 9, "[4,6,7,1,8,2,3,5,10]" beyond.
inline std::string to_string(const Permutation& w) {
  std::string out = "[";
  const bool commas = w.rank() > 9;
  for (int i = 1; i <= w.rank(); ++i) {
    if (commas && i > 1) out += ',';
    out += std::to_string(w(i));
  }
  out += ']';
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << to_string(w); }

/// Accepts "[46718235]", "46718235", "[4,6,7,1,8,2,3,5]" and space separated
/// forms. Without separators every character is one entry.
inline Permutation parse_permutation(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && text[begin] == ' ') ++begin;
  while (end > begin && text[end - 1] == ' ') --end;
  if (begin < end && text[begin] == '[') {
    if (text[end - 1] != ']') throw parse_error("missing closing ']'", end);
    ++begin;
    --end;
  }
  const std::string_view body = text.substr(begin, end - begin);
  const bool separated = body.find_first_of(", ") != std::string_view::npos;
  std::vector<int> values;
  if (!separated) {
    for (std::size_t i = 0; i < body.size(); ++i) {
      const char c = body[i];
      if (c < '1' || c > '9') throw parse_error(std::string("unexpected character '") + c + "'", begin + i);
      values.push_back(c - '0');
    }
  } else {
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == ',' || body[i] == ' ') {
        ++i;
        continue;
      }
      int v = 0;
      auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), v);
      if (ec != std::errc()) throw parse_error(std::string("unexpected character '") + body[i] + "'", begin + i);
      values.push_back(v);
      i = static_cast<std::size_t>(ptr - body.data());
    }
  }
  if (values.empty()) throw parse_error("empty permutation", begin);
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument&) {
    throw parse_error("entries are not a permutation of 1..n", begin);
  }
}

namespace detail {

// Backtracking over positions; `chosen[a]` is the index in w matched to
// pattern position a. When `forced` >= 0 that index must be used.
inline bool match_pattern(std::span<const int> w, std::span<const int> p, std::size_t a, std::size_t start,
                          std::vector<std::size_t>& chosen, int forced, bool forced_used) {
  const std::size_t k = p.size();
  if (a == k) return forced < 0 || forced_used;
  for (std::size_t i = start; i + (k - a) <= w.size(); ++i) {
    if (forced >= 0 && !forced_used && static_cast<int>(i) > forced) break;
    bool ok = true;
    for (std::size_t b = 0; b < a && ok; ++b)
      ok = (w[i] < w[chosen[b]]) == (p[a] < p[b]);
    if (!ok) continue;
    chosen[a] = i;
    if (match_pattern(w, p, a + 1, i + 1, chosen, forced, forced_used || static_cast<int>(i) == forced))
      return true;
  }
  return false;
}

}  // namespace detail

/// One pattern instance (1-based positions) of `p` in `w`, if any.
inline std::optional<std::vector<int>> find_pattern(const Permutation& w, const Permutation& p) {
  if (p.rank() > w.rank()) return std::nullopt;
  std::vector<std::size_t> chosen(static_cast<std::size_t>(p.rank()));
  if (!detail::match_pattern(w.values(), p.values(), 0, 0, chosen, -1, false)) return std::nullopt;
  std::vector<int> witness;
  for (auto c : chosen) witness.push_back(static_cast<int>(c) + 1);
  return witness;
}

inline bool contains_pattern(const Permutation& w, const Permutation& p) {
  if (p.rank() > w.rank()) return false;
  std::vector<std::size_t> chosen(static_cast<std::size_t>(p.rank()));
  return detail::match_pattern(w.values(), p.values(), 0, 0, chosen, -1, false);
}

/// Containment restricted to instances that use position `pos` (1-based).
inline bool contains_pattern_through(const Permutation& w, const Permutation& p, int pos) {
  if (p.rank() > w.rank()) return false;
  std::vector<std::size_t> chosen(static_cast<std::size_t>(p.rank()));
  return detail::match_pattern(w.values(), p.values(), 0, 0, chosen, pos - 1, false);
}

/// Number of [321] instances N(w): decreasing triples.
inline long long count_321_instances(const Permutation& w) {
  const auto v = w.values();
  long long total = 0;
  // For each middle entry: (# larger to its left) * (# smaller to its right).
  for (std::size_t j = 0; j < v.size(); ++j) {
    long long left = 0, right = 0;
    for (std::size_t i = 0; i < j; ++i) left += v[i] > v[j];
    for (std::size_t k = j + 1; k < v.size(); ++k) right += v[k] < v[j];
    total += left * right;
  }
  return total;
}

/// Applies s_{i_1} ... s_{i_k} left to right to the identity, each letter
/// swapping positions i and i+1 of the current 1-line string.
inline Permutation word_to_permutation(const Word& word) {
  Permutation w = Permutation::identity(word.rank);
  for (int letter : word.letters) {
    if (letter < 1 || letter >= word.rank)
      throw std::out_of_range("generator s_" + std::to_string(letter) + " out of range for rank " +
                              std::to_string(word.rank));
    w.swap_positions(letter);
  }
  return w;
}

inline bool is_reduced(const Word& word) {
  return word_to_permutation(word).length() == static_cast<int>(word.size());
}

/// Canonical reduced word: peel n, n-1, ... into place by adjacent swaps.
inline Word reduced_word_of(const Permutation& w) {
  std::vector<int> cur(w.values().begin(), w.values().end());
  std::vector<int> swaps;
  for (int v = w.rank(); v >= 1; --v) {
    int p = static_cast<int>(std::find(cur.begin(), cur.end(), v) - cur.begin()) + 1;
    for (; p < v; ++p) {
      std::swap(cur[static_cast<std::size_t>(p - 1)], cur[static_cast<std::size_t>(p)]);
      swaps.push_back(p);
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return Word{std::move(swaps), w.rank()};
}

struct Support {
  std::vector<int> generators;  // sorted subscripts
  bool connected = false;
};

/// s_i is in the support iff w does not map {1..i} onto itself.
inline Support support_and_connectivity(const Permutation& w) {
  Support s;
  int prefix_max = 0;
  for (int i = 1; i < w.rank(); ++i) {
    prefix_max = std::max(prefix_max, w(i));
    if (prefix_max != i) s.generators.push_back(i);
  }
  s.connected = !s.generators.empty() &&
                s.generators.back() - s.generators.front() + 1 == static_cast<int>(s.generators.size());
  return s;
}

}  // namespace clusterkit
