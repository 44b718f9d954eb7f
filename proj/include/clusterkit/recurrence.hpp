#pragma once

// Linear constant-coefficient recurrences read off rational GFs.
//
// Generating functions are indexed by rank (x^n counts elements of
// S_{n+1}); recurrences quoted for "permutations in S_n" use the size
// index, which is the rank index plus one.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterkit/rational_gf.hpp"

namespace clusterkit {

struct Recurrence {
  /// a_n = sum_i coefficients[i-1] * a_{n-i}
  std::vector<Rational> coefficients;
  /// Smallest rank index n from which the recurrence holds.
  int valid_from = 0;
  /// a_0 .. a_{valid_from - 1}
  std::vector<Rational> initial_terms;

  int order() const noexcept { return static_cast<int>(coefficients.size()); }
  int valid_from_size_index() const noexcept { return valid_from + 1; }

  /// a_0 .. a_last
  std::vector<Rational> terms(int last) const {
    std::vector<Rational> a(initial_terms.begin(), initial_terms.end());
    a.resize(static_cast<std::size_t>(std::max(last + 1, 0)));
    for (int n = valid_from; n <= last; ++n) {
      Rational s = 0;
      for (int i = 1; i <= order(); ++i) s += coefficients[static_cast<std::size_t>(i - 1)] * a[static_cast<std::size_t>(n - i)];
      a[static_cast<std::size_t>(n)] = s;
    }
    return a;
  }
};

/// Recurrence from the denominator Q: a_n = -sum q_i/q_0 a_{n-i}, valid
/// for n >= max(deg P + 1, deg Q).
inline Recurrence recurrence_from_ratfun(const RationalGF& r) {
  const Poly& p = r.numerator();
  const Poly& q = r.denominator();
  Recurrence rec;
  for (int i = 1; i <= q.degree(); ++i) rec.coefficients.push_back(-q[static_cast<std::size_t>(i)] / q[0]);
  rec.valid_from = std::max(p.degree() + 1, q.degree());
  const Series s = r.series(std::max(rec.valid_from, 0));
  rec.initial_terms.assign(s.coefficients().begin(), s.coefficients().begin() + rec.valid_from);
  return rec;
}

/// "a(n+1) = 6 a(n) - 11 a(n-1) + ..." in size indexing.
inline std::string to_string(const Recurrence& rec, const std::string& name = "a") {
  std::string out = name + "(n+1) =";
  bool first = true;
  for (int i = 1; i <= rec.order(); ++i) {
    Rational c = rec.coefficients[static_cast<std::size_t>(i - 1)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    out += first ? (neg ? " -" : " ") : (neg ? " - " : " + ");
    if (c != 1) out += c.str() + " ";
    out += name + "(n" + (i == 1 ? std::string() : "-" + std::to_string(i - 1)) + ")";
    first = false;
  }
  if (first) out += " 0";
  out += "   for n >= " + std::to_string(rec.valid_from_size_index() - 1);
  return out;
}

}  // namespace clusterkit
