#pragma once

// Dense univariate polynomials over the rationals.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace clusterkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(std::string_view text) {
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "'");
  }
}

/// Coefficient i multiplies x^i; trailing zeros are always stripped, so the
/// zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& a) { return Poly(std::vector<Rational>{a}); }
  /// a * x^k
  static Poly monomial(const Rational& a, std::size_t k) {
    std::vector<Rational> c(k + 1);
    c[k] = a;
    return Poly(std::move(c));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  bool operator==(const Poly&) const = default;

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v = -v;
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != 0)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Rational& s, const Poly& a) {
    std::vector<Rational> c(a.c_);
    for (auto& v : c) v *= s;
    return Poly(std::move(c));
  }

  /// Quotient and remainder; throws on division by zero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(a.c_);
    const int db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree() - db; k >= 0; --k) {
      const Rational f = rem[static_cast<std::size_t>(k + db)] / b.leading();
      quo[static_cast<std::size_t>(k)] = f;
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  Poly monic() const { return is_zero() ? *this : (Rational(1) / leading()) * *this; }

  /// Monic greatest common divisor (zero if both are zero).
  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Space separated "c*x^k" terms in ascending degree; "0" for zero.
inline std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const Rational& c = p.coefficients()[k];
    if (c == 0) continue;
    if (!out.empty()) out += ' ';
    out += c.str() + "*x^" + std::to_string(k);
  }
  return out;
}

/// Conventional rendering, highest degree first: "-3x^6 + 4x^5 - 7x + 1".
inline std::string to_pretty_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (c != 1 || k == 0) out += c.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

/// Inverse of to_string: terms "c*x^k", "c*x", "x^k", "c".
inline Poly parse_poly(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    std::string_view term = text.substr(i, j - i);
    i = j;
    Rational c = 1;
    std::size_t k = 0;
    const auto xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      c = parse_rational(term);
    } else {
      std::string_view head = term.substr(0, xpos);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (head == "-")
        c = -1;
      else if (!head.empty() && head != "+")
        c = parse_rational(head);
      std::string_view tail = term.substr(xpos + 1);
      k = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') throw std::invalid_argument("bad polynomial term '" + std::string(term) + "'");
        k = static_cast<std::size_t>(std::stoul(std::string(tail.substr(1))));
      }
    }
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] += c;
  }
  return Poly(std::move(coeffs));
}

}  // namespace clusterkit
