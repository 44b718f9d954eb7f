#pragma once

// Generating-function transforms between fully commutative classes and
// the corresponding freely braided / maximally clustered classes, between
// all and connected heaps, and across a diamond reduction.
//
// Every transform is written once over a "GF algebra": RationalGF for
// closed forms and Series for truncated (possibly algebraic) inputs.

#include <stdexcept>
#include <string>

#include "clusterkit/rational_gf.hpp"
#include "clusterkit/series.hpp"

namespace clusterkit {

template <class T>
struct gf_algebra;

template <>
struct gf_algebra<RationalGF> {
  static RationalGF constant(const RationalGF&, const Rational& a) { return RationalGF::constant(a); }
  static RationalGF variable(const RationalGF&) { return RationalGF::variable(); }
};

template <>
struct gf_algebra<Series> {
  static Series constant(const Series& like, const Rational& a) { return Series::constant(a, like.order()); }
  static Series variable(const Series& like) { return Series::variable(like.order()); }
};

template <class T>
concept GfAlgebra = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { a.constant_term() } -> std::convertible_to<Rational>;
  gf_algebra<T>::variable(a);
};

class transform_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

template <GfAlgebra T>
void require_constant(const T& f, const Rational& value, const char* what) {
  if (f.constant_term() != value)
    throw transform_error(std::string(what) + " must have constant term " + value.str());
}

}  // namespace detail

enum class ClusterMode { freely_braided, maximally_clustered };

template <GfAlgebra T>
struct Pieces {
  T L;  // heaps with an entry in the last column
  T M;  // heaps with entries in both extremal columns
};

/// L = F - xF - 1 and M = F - 2xF + x^2 F - 1; requires F(0) = 1.
template <GfAlgebra T>
Pieces<T> transform_pieces(const T& F) {
  detail::require_constant(F, 1, "F");
  using A = gf_algebra<T>;
  const T x = A::variable(F);
  const T one = A::constant(F, 1);
  const T two = A::constant(F, 2);
  return {F - x * F - one, F - two * x * F + x * x * F - one};
}

/// F + L^2/(1 - M) for freely braided, F + L^2/(1 - x - M) for maximally
/// clustered.
template <GfAlgebra T>
T transform_clustered(const T& F, ClusterMode mode) {
  const auto [L, M] = transform_pieces(F);
  using A = gf_algebra<T>;
  const T one = A::constant(F, 1);
  const T x = A::variable(F);
  const T denom = mode == ClusterMode::freely_braided ? one - M : one - x - M;
  return F + (L * L) / denom;
}

/// The k-cluster part L^2 B^k M^{k-1} of the maximally clustered transform
/// (B = 1/(1-x) for cluster interiors), or L^2 M^{k-1} for freely braided;
/// k = 0 gives F.
template <GfAlgebra T>
T clustered_term(const T& F, ClusterMode mode, int k) {
  if (k == 0) return F;
  const auto [L, M] = transform_pieces(F);
  using A = gf_algebra<T>;
  const T one = A::constant(F, 1);
  const T interior = mode == ClusterMode::maximally_clustered ? one / (one - A::variable(F)) : one;
  T out = L * L * interior;
  for (int i = 1; i < k; ++i) out = out * M * interior;
  return out;
}

enum class Connectivity { to_connected, to_full };

/// F_c = (F - xF - 1)/(1 + xF) and F = (1 + F_c)/(1 - x - x F_c).
template <GfAlgebra T>
T transform_connected(const T& input, Connectivity direction) {
  using A = gf_algebra<T>;
  const T one = A::constant(input, 1);
  const T x = A::variable(input);
  if (direction == Connectivity::to_connected) {
    detail::require_constant(input, 1, "F");
    return (input - x * input - one) / (one + x * input);
  }
  detail::require_constant(input, 0, "F_c");
  return (one + input) / (one - x - x * input);
}

/// Heaps with no minimal diamond: (1 - x)/(1 - 3x + x^2).
inline RationalGF diamond_avoiding_gf() { return RationalGF(Poly{1, -1}, Poly{1, -3, 1}); }

template <GfAlgebra T>
struct DiamondClosedForm {
  T from_connected;  // (1 - x - x G_c)/(1 - 3x + x^2 + (x^2 - x) G_c)
  T from_full;       // 1/(1 - 2x - x^2 G)
  T G;               // full GF of the reduced class
};

/// Both closed forms of the diamond-reduction transform from G_c; throws
/// if they disagree.
template <GfAlgebra T>
DiamondClosedForm<T> transform_diamond_closed(const T& Gc) {
  detail::require_constant(Gc, 0, "G_c");
  using A = gf_algebra<T>;
  const T one = A::constant(Gc, 1);
  const T x = A::variable(Gc);
  const T two = A::constant(Gc, 2);
  const T three = A::constant(Gc, 3);
  DiamondClosedForm<T> out{(one - x - x * Gc) / (one - three * x + x * x + (x * x - x) * Gc), one, one};
  out.G = transform_connected(Gc, Connectivity::to_full);
  out.from_full = one / (one - two * x - x * x * out.G);
  if (!(out.from_connected == out.from_full))
    throw transform_error("the two closed forms of the diamond transform disagree");
  return out;
}

/// 1/(1 - 2x - x^2 G) from the full GF of the reduced class.
template <GfAlgebra T>
T transform_diamond_from_full(const T& G) {
  detail::require_constant(G, 1, "G");
  using A = gf_algebra<T>;
  const T one = A::constant(G, 1);
  const T x = A::variable(G);
  return one / (one - A::constant(G, 2) * x - x * x * G);
}

template <GfAlgebra T>
struct DiamondComponents {
  T E, E_LR, E_M, F;
};

/// F = E + E_LR * G_c * E_LR / (1 - G_c E_M) with E_LR = E - xE - 1 and
/// E_M = E - 2xE + x^2 E - 1 + x. With `subtract_x`, E_M loses the x term
/// (diamond regions may not be glued along a one-column path).
template <GfAlgebra T>
DiamondComponents<T> transform_diamond_components(const T& E, const T& Gc, bool subtract_x) {
  detail::require_constant(E, 1, "E");
  detail::require_constant(Gc, 0, "G_c");
  using A = gf_algebra<T>;
  const T one = A::constant(E, 1);
  const T x = A::variable(E);
  const T two = A::constant(E, 2);
  DiamondComponents<T> out{E, E - x * E - one, E - two * x * E + x * x * E - one + x, E};
  if (subtract_x) out.E_M = out.E_M - x;
  out.F = E + out.E_LR * Gc * out.E_LR / (one - Gc * out.E_M);
  return out;
}

}  // namespace clusterkit
