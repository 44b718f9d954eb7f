#pragma once

// Generating functions of the named classes, indexed by rank.
//
// The [321]-avoiding class is algebraic (Catalan) and its transforms are
// handled as truncated series; the hexagon-avoiding classes are rational.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterkit/lattice_path.hpp"
#include "clusterkit/rational_gf.hpp"
#include "clusterkit/series.hpp"
#include "clusterkit/transforms.hpp"

namespace clusterkit::catalog {

/// (1 - 2x - sqrt(1 - 4x)) / (2x^2) to order T.
inline Series catalan(int order = kDefaultOrder) {
  const int t = order + 2;
  const Series root = (Series({1, -4}, t)).sqrt();
  return divide_by_monomial(Series({1, -2}, t) - root, 2, 2);
}

/// Hexagon-avoiding [321]-avoiding permutations, derived through the
/// diamond reduction hexagon -> 3-hexagon: the 3-hexagon-avoiding class is
/// assembled from monotone lattice paths with the one-column gluing
/// removed, then lifted back through the reduction.
inline RationalGF fc_hexagon() {
  const RationalGF monotone = lattice_path_gf_avoiding(std::vector<std::string>{"UD", "DU"});
  const RationalGF three_hex = transform_diamond_components(diamond_avoiding_gf(), monotone, true).F;
  return transform_diamond_from_full(three_hex);
}

struct ClassGF {
  std::string name;
  std::string description;
  std::optional<RationalGF> rational;  // when the class GF is rational
  Series series;
};

/// name in {fc, fc-L, fc-M, fb, mc, fc-hexagon, fc-hexagon-L, fc-hexagon-M,
/// fb-hexagon, mc-hexagon, diamond-avoiding}
inline ClassGF lookup(const std::string& name, int order = kDefaultOrder) {
  if (name == "fc" || name == "fc-L" || name == "fc-M" || name == "fb" || name == "mc") {
    const Series F = catalan(order);
    const auto [L, M] = transform_pieces(F);
    if (name == "fc") return {name, "[321]-avoiding", std::nullopt, F};
    if (name == "fc-L") return {name, "L(x) for [321]-avoiding", std::nullopt, L};
    if (name == "fc-M") return {name, "M(x) for [321]-avoiding", std::nullopt, M};
    if (name == "fb")
      return {name, "freely braided", std::nullopt, transform_clustered(F, ClusterMode::freely_braided)};
    return {name, "maximally clustered", std::nullopt, transform_clustered(F, ClusterMode::maximally_clustered)};
  }
  if (name == "diamond-avoiding") {
    const RationalGF r = diamond_avoiding_gf();
    return {name, "[321],[3412]-avoiding", r, r.series(order)};
  }
  const RationalGF F = fc_hexagon();
  RationalGF r;
  std::string description;
  if (name == "fc-hexagon") {
    r = F;
    description = "[321]-hexagon-avoiding";
  } else if (name == "fc-hexagon-L") {
    r = transform_pieces(F).L;
    description = "L(x) for [321]-hexagon-avoiding";
  } else if (name == "fc-hexagon-M") {
    r = transform_pieces(F).M;
    description = "M(x) for [321]-hexagon-avoiding";
  } else if (name == "fb-hexagon") {
    r = transform_clustered(F, ClusterMode::freely_braided);
    description = "freely braided hexagon-avoiding";
  } else if (name == "mc-hexagon") {
    r = transform_clustered(F, ClusterMode::maximally_clustered);
    description = "maximally clustered hexagon-avoiding";
  } else {
    throw std::invalid_argument("unknown class '" + name + "'");
  }
  return {name, description, r, r.series(order)};
}

inline const std::vector<std::string>& class_names() {
  static const std::vector<std::string> names{"fc",         "fc-L",         "fc-M",         "fb",
                                              "mc",         "fc-hexagon",   "fc-hexagon-L", "fc-hexagon-M",
                                              "fb-hexagon", "mc-hexagon",   "diamond-avoiding"};
  return names;
}

}  // namespace clusterkit::catalog
