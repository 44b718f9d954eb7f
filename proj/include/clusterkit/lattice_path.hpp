#pragma once

// Transfer-matrix counting of up/down lattice paths avoiding consecutive
// step words, by number of nodes.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterkit/rational_gf.hpp"

namespace clusterkit {

namespace detail {

inline bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace detail

/// Paths are step words over {U, D}; a path on n nodes has n - 1 steps.
/// States are the longest suffixes of the steps so far that are proper
/// prefixes of some forbidden word.
inline RationalGF lattice_path_gf_avoiding(const std::vector<std::string>& forbidden) {
  for (const auto& f : forbidden) {
    if (f.empty()) throw std::invalid_argument("forbidden step word is empty");
    if (f.find_first_not_of("UD") != std::string::npos)
      throw std::invalid_argument("forbidden step word '" + f + "' must use only U and D");
  }
  std::vector<std::string> states{""};
  for (const auto& f : forbidden)
    for (std::size_t k = 1; k < f.size(); ++k)
      if (std::find(states.begin(), states.end(), f.substr(0, k)) == states.end()) states.push_back(f.substr(0, k));
  auto index_of = [&](const std::string& s) {
    return static_cast<int>(std::find(states.begin(), states.end(), s) - states.begin());
  };
  auto is_state = [&](const std::string& s) { return std::find(states.begin(), states.end(), s) != states.end(); };

  const std::size_t n = states.size();
  // f_s = 1 + x * sum_{c} f_{next(s,c)}  ->  (I - xA) f = 1
  std::vector<std::vector<RationalGF>> m(n, std::vector<RationalGF>(n + 1));
  const RationalGF x = RationalGF::variable();
  for (std::size_t s = 0; s < n; ++s) {
    m[s][s] = RationalGF::constant(1);
    m[s][n] = RationalGF::constant(1);
    for (char c : {'U', 'D'}) {
      const std::string text = states[s] + c;
      bool dead = false;
      for (const auto& f : forbidden) dead = dead || detail::has_suffix(text, f);
      if (dead) continue;
      std::string next;
      for (std::size_t k = text.size(); k >= 1; --k) {
        if (is_state(text.substr(text.size() - k))) {
          next = text.substr(text.size() - k);
          break;
        }
      }
      const auto t = static_cast<std::size_t>(index_of(next));
      m[s][t] = m[s][t] - x;
    }
  }
  // Gauss-Jordan over the field of rational functions.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::logic_error("singular transfer system");
    std::swap(m[piv], m[col]);
    const RationalGF inv = RationalGF::constant(1) / m[col][col];
    for (auto& v : m[col]) v = v * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const RationalGF f = m[r][col];
      for (std::size_t k = col; k <= n; ++k) m[r][k] = m[r][k] - f * m[col][k];
    }
  }
  return x * m[0][n];
}

inline RationalGF lattice_path_gf_avoiding(const std::string& forbidden) {
  return lattice_path_gf_avoiding(std::vector<std::string>{forbidden});
}

}  // namespace clusterkit
