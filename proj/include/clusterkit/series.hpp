#pragma once

// Truncated formal power series with exact rational coefficients.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterkit/poly.hpp"

namespace clusterkit {

inline constexpr int kDefaultOrder = 40;

class series_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficients a_0 .. a_T are known exactly; T is the order. Binary
/// operations keep the smaller order of their operands.
class Series {
 public:
  Series() = default;
  Series(std::vector<Rational> coeffs, int order) : order_(order), c_(std::move(coeffs)) {
    if (order < 0) throw series_error("negative series order");
    c_.resize(static_cast<std::size_t>(order + 1));
  }
  static Series constant(const Rational& a, int order) { return Series({a}, order); }
  static Series variable(int order) { return Series({0, 1}, order); }
  static Series from_poly(const Poly& p, int order) { return Series(p.coefficients(), order); }

  int order() const noexcept { return order_; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  const Rational& operator[](std::size_t i) const { return c_.at(i); }
  Rational constant_term() const { return c_[0]; }

  Series truncated(int order) const {
    if (order > order_) throw series_error("cannot raise the order of a truncated series");
    return Series(c_, order);
  }

  bool operator==(const Series&) const = default;

  friend Series operator+(const Series& a, const Series& b) {
    const int t = std::min(a.order_, b.order_);
    std::vector<Rational> c(static_cast<std::size_t>(t + 1));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return Series(std::move(c), t);
  }
  friend Series operator-(const Series& a) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v = -v;
    return Series(std::move(c), a.order_);
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(const Series& a, const Series& b) {
    const int t = std::min(a.order_, b.order_);
    std::vector<Rational> c(static_cast<std::size_t>(t + 1));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Series(std::move(c), t);
  }
  friend Series operator*(const Rational& s, const Series& a) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v *= s;
    return Series(std::move(c), a.order_);
  }

  /// Requires a nonzero constant term.
  Series reciprocal() const {
    if (c_[0] == 0) throw series_error("reciprocal of a series with zero constant term");
    std::vector<Rational> r(c_.size());
    r[0] = Rational(1) / c_[0];
    for (std::size_t n = 1; n < r.size(); ++n) {
      Rational s = 0;
      for (std::size_t i = 1; i <= n; ++i) s += c_[i] * r[n - i];
      r[n] = -s * r[0];
    }
    return Series(std::move(r), order_);
  }

  friend Series operator/(const Series& a, const Series& b) { return a * b.reciprocal(); }

  /// Square root with constant term 1; requires a_0 = 1.
  Series sqrt() const {
    if (c_[0] != 1) throw series_error("sqrt needs constant term 1");
    std::vector<Rational> s(c_.size());
    s[0] = 1;
    for (std::size_t n = 1; n < s.size(); ++n) {
      Rational acc = c_[n];
      for (std::size_t i = 1; i < n; ++i) acc -= s[i] * s[n - i];
      s[n] = acc / 2;
    }
    return Series(std::move(s), order_);
  }

  /// Multiplication by x^k; the order grows by k.
  Series shifted_up(int k) const {
    std::vector<Rational> c(static_cast<std::size_t>(k), Rational(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Series(std::move(c), order_ + k);
  }

  /// Division by x^k; the k lowest coefficients must vanish and the order
  /// drops by k.
  Series shifted_down(int k) const {
    if (k > order_) throw series_error("shift exceeds series order");
    for (int i = 0; i < k; ++i)
      if (c_[static_cast<std::size_t>(i)] != 0)
        throw series_error("division by x^" + std::to_string(k) + " with nonzero coefficient of x^" +
                           std::to_string(i));
    return Series(std::vector<Rational>(c_.begin() + k, c_.end()), order_ - k);
  }

 private:
  int order_ = 0;
  std::vector<Rational> c_{Rational(0)};
};

/// Divides by c * x^k for a nonzero constant c: verify, shift, scale.
inline Series divide_by_monomial(const Series& s, const Rational& c, int k) {
  if (c == 0) throw series_error("division by zero monomial");
  return (Rational(1) / c) * s.shifted_down(k);
}

/// "a0, a1, a2, ..."
inline std::string to_string(const Series& s) {
  std::string out;
  for (std::size_t i = 0; i < s.coefficients().size(); ++i) {
    if (i) out += ", ";
    out += s.coefficients()[i].str();
  }
  return out;
}

inline Series parse_series(std::string_view text) {
  std::vector<Rational> c;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view item = text.substr(i, j - i);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) c.push_back(parse_rational(item));
    i = j + 1;
  }
  if (c.empty()) throw std::invalid_argument("empty series");
  const int order = static_cast<int>(c.size()) - 1;
  return Series(std::move(c), order);
}

}  // namespace clusterkit
