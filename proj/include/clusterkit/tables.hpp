#pragma once

// Counting reports: brute force, series coefficients and recurrences for
// the named classes, side by side.
//
// Every count is reported by size n (permutations in S_n); the GF
// coefficient used is the one of x^{n-1}.

#include <algorithm>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "clusterkit/catalog.hpp"
#include "clusterkit/enumerate.hpp"
#include "clusterkit/recurrence.hpp"

namespace clusterkit {

struct CountRow {
  int n = 0;
  Integer count;
  std::string method;  // "brute", "gf" or "recurrence"
};

struct CountReport {
  std::string class_name;
  std::vector<CountRow> rows;

  /// For each n, do all methods that produced a value agree?
  bool consistent() const {
    std::map<int, Integer> first;
    for (const auto& r : rows) {
      auto [it, fresh] = first.emplace(r.n, r.count);
      if (!fresh && it->second != r.count) return false;
    }
    return true;
  }

  std::optional<Integer> value(int n, const std::string& method) const {
    for (const auto& r : rows)
      if (r.n == n && r.method == method) return r.count;
    return std::nullopt;
  }
};

inline nlohmann::json to_json(const CountRow& row, const std::string& class_name) {
  nlohmann::json j;
  j["class"] = class_name;
  j["n"] = row.n;
  if (row.count >= std::numeric_limits<long long>::min() && row.count <= std::numeric_limits<long long>::max())
    j["count"] = static_cast<long long>(row.count);
  else
    j["count"] = row.count.str();
  j["method"] = row.method;
  return j;
}

inline std::string to_json_lines(const CountReport& report) {
  std::string out;
  for (const auto& r : report.rows) out += to_json(r, report.class_name).dump() + "\n";
  return out;
}

/// Parses what to_json_lines writes; all lines must name the same class.
inline CountReport parse_json_lines(const std::string& text) {
  CountReport report;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    const auto name = j.at("class").get<std::string>();
    if (report.rows.empty()) report.class_name = name;
    else if (name != report.class_name) throw std::invalid_argument("mixed classes in one report");
    CountRow row;
    row.n = j.at("n").get<int>();
    const auto& c = j.at("count");
    row.count = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long long>());
    row.method = j.at("method").get<std::string>();
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// One line per n, one column per method, '-' where a method has no value.
inline std::string to_text_table(const CountReport& report) {
  std::vector<std::string> methods;
  std::map<int, std::map<std::string, std::string>> cells;
  for (const auto& r : report.rows) {
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) methods.push_back(r.method);
    cells[r.n][r.method] = r.count.str();
  }
  std::size_t width = 10;
  for (const auto& [n, row] : cells)
    for (const auto& [m, v] : row) width = std::max(width, v.size() + 2);
  std::ostringstream out;
  out << report.class_name << "\n" << std::setw(4) << "n";
  for (const auto& m : methods) out << std::setw(static_cast<int>(width)) << m;
  out << "\n";
  for (const auto& [n, row] : cells) {
    out << std::setw(4) << n;
    for (const auto& m : methods) {
      auto it = row.find(m);
      out << std::setw(static_cast<int>(width)) << (it == row.end() ? "-" : it->second);
    }
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

/// Membership by brute force for a catalog class.
struct BruteClass {
  ClassSpec spec;
  /// 0: whole class; 1: last generator present; 2: first and last present
  /// with the two distinct.
  int extremal = 0;
};

inline BruteClass brute_class(const std::string& name) {
  const auto fc = patterns::fully_commutative();
  const std::vector<Permutation> hex{patterns::hexagon()};
  if (name == "fc") return {ClassSpec(fc), 0};
  if (name == "fc-L") return {ClassSpec(fc), 1};
  if (name == "fc-M") return {ClassSpec(fc), 2};
  if (name == "fb") return {ClassSpec(patterns::freely_braided()), 0};
  if (name == "mc") return {ClassSpec(patterns::maximally_clustered()), 0};
  if (name == "fc-hexagon") return {ClassSpec(fc, hex), 0};
  if (name == "fc-hexagon-L") return {ClassSpec(fc, hex), 1};
  if (name == "fc-hexagon-M") return {ClassSpec(fc, hex), 2};
  if (name == "fb-hexagon") return {ClassSpec(patterns::freely_braided(), hex), 0};
  if (name == "mc-hexagon") return {ClassSpec(patterns::maximally_clustered(), hex), 0};
  if (name == "diamond-avoiding")
    return {ClassSpec(PatternSet{{Permutation{3, 2, 1}, Permutation{3, 4, 1, 2}}, "fc+3412"}), 0};
  throw std::invalid_argument("unknown class '" + name + "'");
}

inline long long brute_count(const BruteClass& bc, int n, int jobs = 1) {
  if (bc.extremal == 0) return class_count(bc.spec, n, jobs);
  if (n < bc.extremal + 1) return 0;
  long long count = 0;
  for (const auto& w : class_members(bc.spec, n, jobs)) {
    const auto gens = support_and_connectivity(w).generators;
    const bool last = std::find(gens.begin(), gens.end(), n - 1) != gens.end();
    const bool first = std::find(gens.begin(), gens.end(), 1) != gens.end();
    if (last && (bc.extremal == 1 || first)) ++count;
  }
  return count;
}

struct TableOptions {
  int brute_max = 0;   // sizes 1..brute_max by brute force (0: none)
  int series_max = 15; // sizes 1..series_max from the GF
  int jobs = 1;
  std::function<void(const std::string&)> progress;
};

inline Integer integer_of(const Rational& r) {
  if (denominator(r) != 1) throw std::logic_error("non-integer coefficient " + r.str());
  return numerator(r);
}

inline CountReport count_report(const std::string& name, const TableOptions& opt) {
  CountReport report{name, {}};
  const auto gf = catalog::lookup(name, std::max(opt.series_max, 1));
  if (opt.brute_max > 0) {
    const auto bc = brute_class(name);
    for (int n = 1; n <= opt.brute_max; ++n) {
      if (opt.progress) opt.progress(name + ": brute force n=" + std::to_string(n));
      report.rows.push_back({n, Integer(brute_count(bc, n, opt.jobs)), "brute"});
    }
  }
  for (int n = 1; n <= opt.series_max; ++n) report.rows.push_back({n, integer_of(gf.series[n - 1]), "gf"});
  if (gf.rational) {
    const auto terms = recurrence_from_ratfun(*gf.rational).terms(opt.series_max - 1);
    for (int n = 1; n <= opt.series_max; ++n)
      report.rows.push_back({n, integer_of(terms[static_cast<std::size_t>(n - 1)]), "recurrence"});
  }
  return report;
}

inline std::vector<CountReport> verify_tables(const std::vector<std::string>& names, const TableOptions& opt) {
  std::vector<CountReport> out;
  for (const auto& name : names) out.push_back(count_report(name, opt));
  return out;
}

}  // namespace clusterkit
