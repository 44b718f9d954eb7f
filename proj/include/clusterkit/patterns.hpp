#pragma once

// Named pattern classes and 1-line classification.

#include <stdexcept>
#include <string>
#include <vector>

#include "clusterkit/permutation.hpp"

namespace clusterkit {

struct PatternSet {
  std::vector<Permutation> patterns;
  std::string name;

  bool avoided_by(const Permutation& w) const {
    for (const auto& p : patterns)
      if (contains_pattern(w, p)) return false;
    return true;
  }

  /// Avoidance test for a child of the insertion tree: the parent already
  /// avoids every pattern, so any instance has to use position `pos`.
  bool avoided_by_through(const Permutation& w, int pos) const {
    for (const auto& p : patterns)
      if (contains_pattern_through(w, p, pos)) return false;
    return true;
  }

  PatternSet united(const PatternSet& other, std::string label = {}) const {
    PatternSet out{patterns, label.empty() ? name + "+" + other.name : std::move(label)};
    for (const auto& p : other.patterns)
      if (std::find(out.patterns.begin(), out.patterns.end(), p) == out.patterns.end()) out.patterns.push_back(p);
    return out;
  }
};

namespace patterns {

inline const Permutation& hexagon() {
  static const Permutation h{4, 6, 7, 1, 8, 2, 3, 5};
  return h;
}

inline PatternSet none() { return {{}, "none"}; }
inline PatternSet fully_commutative() { return {{Permutation{3, 2, 1}}, "fc"}; }
inline PatternSet freely_braided() {
  return {{Permutation{4, 2, 3, 1}, Permutation{3, 4, 2, 1}, Permutation{4, 3, 1, 2}, Permutation{4, 3, 2, 1}}, "fb"};
}
inline PatternSet maximally_clustered() {
  return {{Permutation{3, 4, 2, 1}, Permutation{4, 3, 1, 2}, Permutation{4, 3, 2, 1}}, "mc"};
}
/// The four 1-line patterns equivalent to heap-avoiding the hexagon
/// inside the [321]-avoiding permutations.
inline PatternSet hexagon_one_line() {
  return {{Permutation{4, 6, 7, 1, 8, 2, 3, 5}, Permutation{4, 6, 7, 8, 1, 2, 3, 5},
           Permutation{5, 6, 7, 1, 8, 2, 3, 4}, Permutation{5, 6, 7, 8, 1, 2, 3, 4}},
          "hex1l"};
}

inline PatternSet by_name(const std::string& name) {
  if (name == "none") return none();
  if (name == "fc") return fully_commutative();
  if (name == "fb") return freely_braided();
  if (name == "mc") return maximally_clustered();
  if (name == "hex1l") return hexagon_one_line();
  throw std::invalid_argument("unknown pattern set '" + name + "'");
}

}  // namespace patterns

struct Classification {
  bool fully_commutative = false;
  bool freely_braided = false;
  bool maximally_clustered = false;
  bool hexagon_avoiding_1line = false;
  long long n321 = 0;
};

class inconsistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Classification classify(const Permutation& w) {
  Classification c;
  c.n321 = count_321_instances(w);
  c.fully_commutative = patterns::fully_commutative().avoided_by(w);
  c.freely_braided = patterns::freely_braided().avoided_by(w);
  c.maximally_clustered = patterns::maximally_clustered().avoided_by(w);
  c.hexagon_avoiding_1line = patterns::hexagon_one_line().avoided_by(w);
  // FC => FB => MC, and FC <=> N(w) = 0.
  if ((c.fully_commutative && !c.freely_braided) || (c.freely_braided && !c.maximally_clustered) ||
      (c.fully_commutative != (c.n321 == 0)))
    throw inconsistency_error("classification chain violated for " + to_string(w));
  return c;
}

}  // namespace clusterkit
