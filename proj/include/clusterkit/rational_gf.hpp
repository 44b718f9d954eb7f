#pragma once

// Rational generating functions P(x)/Q(x) with Q(0) != 0, kept in lowest
// terms with coprime integer coefficients and Q(0) > 0.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "clusterkit/poly.hpp"
#include "clusterkit/series.hpp"

namespace clusterkit {

class RationalGF {
 public:
  RationalGF() : num_(), den_(Poly{1}) {}
  RationalGF(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
  explicit RationalGF(Poly p) : RationalGF(std::move(p), Poly{1}) {}

  static RationalGF constant(const Rational& a) { return RationalGF(Poly::constant(a)); }
  static RationalGF variable() { return RationalGF(Poly{0, 1}); }

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  Rational constant_term() const { return num_[0] / den_[0]; }

  bool operator==(const RationalGF&) const = default;

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalGF operator-(const RationalGF& a) { return {-a.num_, a.den_}; }
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b) { return a + (-b); }
  friend RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalGF operator*(const Rational& s, const RationalGF& a) { return {s * a.num_, a.den_}; }
  /// Throws std::domain_error when b is zero.
  friend RationalGF operator/(const RationalGF& a, const RationalGF& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero generating function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }

  /// Coefficients a_0..a_T by q_0 a_n = p_n - sum_{i>=1} q_i a_{n-i}.
  Series series(int order = kDefaultOrder) const {
    std::vector<Rational> a(static_cast<std::size_t>(order + 1));
    const Rational q0 = den_[0];
    for (std::size_t n = 0; n < a.size(); ++n) {
      Rational acc = num_[n];
      for (std::size_t i = 1; i <= n && static_cast<int>(i) <= den_.degree(); ++i) acc -= den_[i] * a[n - i];
      a[n] = acc / q0;
    }
    return Series(std::move(a), order);
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = Poly{1};
      return;
    }
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    if (den_[0] == 0) throw std::domain_error("generating function has a pole at 0");
    // Clear denominators, then remove the integer content.
    Integer l = 1;
    for (const auto* p : {&num_, &den_})
      for (const auto& c : p->coefficients()) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    Integer content = 0;
    for (const auto* p : {&num_, &den_})
      for (const auto& c : p->coefficients()) content = boost::multiprecision::gcd(content, Integer(boost::multiprecision::numerator(Rational(c * l))));
    Rational scale = Rational(l) / Rational(content);
    if (den_[0] < 0) scale = -scale;
    num_ = scale * num_;
    den_ = scale * den_;
  }

  Poly num_, den_;
};

/// Long-division series expansion.
inline Series series_of_ratfun(const RationalGF& r, int order = kDefaultOrder) { return r.series(order); }

/// "(<poly>)/(<poly>)" with to_string(Poly) terms.
inline std::string to_string(const RationalGF& r) {
  return "(" + to_string(r.numerator()) + ")/(" + to_string(r.denominator()) + ")";
}

inline std::string to_pretty_string(const RationalGF& r) {
  return "(" + to_pretty_string(r.numerator()) + ") / (" + to_pretty_string(r.denominator()) + ")";
}

inline RationalGF parse_ratfun(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    return s;
  };
  const auto slash = text.find(")/(");
  if (slash == std::string_view::npos) return RationalGF(parse_poly(strip(text)));
  return RationalGF(parse_poly(strip(text.substr(0, slash + 1))), parse_poly(strip(text.substr(slash + 2))));
}

}  // namespace clusterkit
