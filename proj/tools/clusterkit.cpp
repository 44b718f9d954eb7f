// Command-line front end for the clusterkit headers.
//
// Exit status: 0 on success, 1 when a verification fails, 2 on bad usage
// or bad input. Progress for long runs goes to stderr only.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "clusterkit/clusterkit.hpp"

using namespace clusterkit;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void progress(const std::string& msg) { std::cerr << msg << '\n'; }

std::vector<Permutation> parse_list(const std::string& text) {
  // Entries separated by ';' or whitespace around compact forms, e.g.
  // "321;3412" or "[321] [3412]".
  std::vector<Permutation> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(parse_permutation(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ';' || c == ' ') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

std::vector<int> parse_letters(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.rfind("s_", 0) == 0) tok = tok.substr(2);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw usage_error("bad letter '" + tok + "' in word");
    }
  }
  return out;
}

json interval(const ColumnInterval& b) { return json::array({b.first, b.last}); }

json decomposition_json(const ClusterDecomposition& d) {
  json j;
  j["clusters"] = json::array();
  for (const auto& b : d.clusters) j["clusters"].push_back(interval(b));
  j["half_lengths"] = d.half_lengths;
  j["gaps"] = json::array();
  for (const auto& g : d.gaps) j["gaps"].push_back(interval(g));
  j["contracted_word"] = d.contracted_word.letters;
  j["heap"] = heap_points_string(d.canonical_heap);
  return j;
}

void print_decomposition(std::ostream& os, const ClusterDecomposition& d) {
  os << "clusters:";
  if (d.clusters.empty()) os << " none";
  for (std::size_t i = 0; i < d.clusters.size(); ++i)
    os << " [" << d.clusters[i].first << "," << d.clusters[i].last << "] (n=" << d.half_lengths[i] << ")";
  os << "\ngaps:";
  for (const auto& g : d.gaps) {
    if (g.empty())
      os << " {}";
    else
      os << " [" << g.first << "," << g.last << "]";
  }
  os << "\ncontracted word: " << to_string(d.contracted_word) << "\ncanonical heap:\n" << heap_picture(d.canonical_heap);
}

// ---------------------------------------------------------------- commands

int cmd_classify(const std::string& text, bool as_json) {
  const Permutation w = parse_permutation(text);
  const Classification c = classify(w);
  std::optional<ClusterDecomposition> d;
  if (c.maximally_clustered) d = braid_cluster_decomposition(w);
  const auto hex = patterns::hexagon_one_line().patterns;
  const bool is_hex_pattern = std::find(hex.begin(), hex.end(), w) != hex.end();
  if (as_json) {
    json j{{"permutation", to_string(w)},
           {"fully_commutative", c.fully_commutative},
           {"freely_braided", c.freely_braided},
           {"maximally_clustered", c.maximally_clustered},
           {"hexagon_avoiding", c.hexagon_avoiding_1line},
           {"hexagon_pattern", is_hex_pattern},
           {"n321", c.n321},
           {"length", w.length()}};
    j["decomposition"] = d ? decomposition_json(*d) : json(nullptr);
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << to_string(w) << "\n"
            << "FC=" << std::boolalpha << c.fully_commutative << " FB=" << c.freely_braided
            << " MC=" << c.maximally_clustered << " hexagon-avoiding=" << c.hexagon_avoiding_1line << "\n"
            << "N(w)=" << c.n321 << " length=" << w.length() << "\n";
  if (is_hex_pattern) std::cout << "this is one of the hexagon 1-line patterns\n";
  if (d) print_decomposition(std::cout, *d);
  return kOk;
}

int cmd_gf(const std::string& name, int order, bool as_json) {
  if (order < 0) throw usage_error("--order must be non-negative");
  const auto g = catalog::lookup(name, order);
  std::optional<Recurrence> rec;
  if (g.rational) rec = recurrence_from_ratfun(*g.rational);
  if (as_json) {
    json j{{"class", g.name}, {"description", g.description}, {"order", order}, {"series", to_string(g.series)}};
    j["gf"] = g.rational ? json(to_string(*g.rational)) : json(nullptr);
    if (rec) {
      json r{{"valid_from_rank", rec->valid_from}, {"valid_from_size", rec->valid_from_size_index()}};
      r["coefficients"] = json::array();
      for (const auto& c : rec->coefficients) r["coefficients"].push_back(c.str());
      j["recurrence"] = r;
    } else {
      j["recurrence"] = nullptr;
    }
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << g.name << ": " << g.description << "\n";
  if (g.rational)
    std::cout << "GF: " << to_pretty_string(*g.rational) << "\n     " << to_string(*g.rational) << "\n";
  else
    std::cout << "GF: algebraic (series only)\n";
  std::cout << "series: " << to_string(g.series) << "\n";
  if (rec) std::cout << "recurrence: " << to_string(*rec, "a") << "\n";
  return kOk;
}

Heap heap_input(const std::string& perm, const std::string& word, int rank) {
  if (!word.empty()) {
    const auto letters = parse_letters(word);
    int r = rank;
    if (r == 0)
      for (int l : letters) r = std::max(r, l + 1);
    return Heap::from_word(Word{letters, std::max(r, 1)});
  }
  if (perm.empty()) throw usage_error("give a permutation or --word");
  return heap_of(parse_permutation(perm));
}

void print_heap(const Heap& h, bool as_json) {
  if (as_json) {
    json j{{"permutation", to_string(h.evaluate())},
           {"rank", h.rank()},
           {"word", h.word().letters},
           {"points", heap_points_string(h)}};
    std::cout << j.dump() << '\n';
    return;
  }
  std::cout << to_string(h.evaluate()) << "  " << to_string(h.word()) << "\n"
            << heap_points_string(h) << "\n"
            << heap_picture(h);
}

int cmd_heap(const std::string& perm, const std::string& word, int rank, bool as_json) {
  const Heap h = heap_input(perm, word, rank);
  const auto classes = commutativity_classes(h);
  if (as_json) {
    json j{{"permutation", to_string(h.evaluate())},
           {"rank", h.rank()},
           {"word", h.word().letters},
           {"points", heap_points_string(h)},
           {"fully_commutative", is_fully_commutative(h)},
           {"commutativity_classes", classes.size()}};
    std::cout << j.dump() << '\n';
    return kOk;
  }
  print_heap(h, false);
  std::cout << "commutativity classes: " << classes.size() << "\n";
  return kOk;
}

int cmd_decompose(const std::string& text, bool as_json) {
  const Permutation w = parse_permutation(text);
  const auto d = braid_cluster_decomposition(w);
  if (as_json) {
    json j = decomposition_json(d);
    j["permutation"] = to_string(w);
    j["n321"] = count_321_instances(w);
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << to_string(w) << "  N(w)=" << count_321_instances(w) << "\n";
  print_decomposition(std::cout, d);
  return kOk;
}

int cmd_diamond(bool expand, const std::string& perm, const std::string& word, int rank, bool relaxed, bool as_json) {
  const Heap h = heap_input(perm, word, rank);
  const Heap out = expand ? inverse_diamond_reduction(h)
                          : diamond_reduction(h, relaxed ? ReductionMode::relaxed : ReductionMode::strict);
  print_heap(out, as_json);
  return kOk;
}

int cmd_count(const std::string& name, const std::string& pats, const std::string& heaps, int n_max, int jobs,
              bool as_json) {
  if (n_max < 1) throw usage_error("--n-max must be at least 1");
  if (n_max > brute_force_limit())
    throw limit_error("size " + std::to_string(n_max) + " exceeds the brute-force limit " +
                      std::to_string(brute_force_limit()) + " (set CLUSTERKIT_MAX_N to raise it)");
  CountReport report;
  if (!name.empty()) {
    if (!pats.empty() || !heaps.empty()) throw usage_error("give either a class name or --patterns/--heaps");
    const auto bc = brute_class(name);
    report.class_name = name;
    for (int n = 1; n <= n_max; ++n) {
      progress(name + ": n=" + std::to_string(n));
      report.rows.push_back({n, Integer(brute_count(bc, n, jobs)), "brute"});
    }
  } else {
    const PatternSet P{parse_list(pats), pats.empty() ? "none" : pats};
    const ClassSpec spec(P, parse_list(heaps));
    report.class_name = "patterns:" + pats + (heaps.empty() ? "" : " heaps:" + heaps);
    EnumerateOptions opt;
    opt.jobs = jobs;
    const auto e = enumerate_class(spec, n_max, opt);
    for (int n = 1; n <= n_max; ++n) report.rows.push_back({n, Integer(e.counts[static_cast<std::size_t>(n)]), "brute"});
  }
  std::cout << (as_json ? to_json_lines(report) : to_text_table(report));
  return kOk;
}

int verify_tables_cmd(std::vector<std::string> names, int n_max, int series_max, int jobs, bool as_json) {
  if (names.empty()) names = catalog::class_names();
  TableOptions opt;
  opt.brute_max = n_max;
  opt.series_max = std::max(series_max, n_max);
  opt.jobs = jobs;
  opt.progress = progress;
  bool ok = true;
  for (const auto& report : verify_tables(names, opt)) {
    ok = ok && report.consistent();
    if (as_json)
      std::cout << to_json_lines(report);
    else
      std::cout << report.class_name << ": " << (report.consistent() ? "pass" : "FAIL") << "\n" << to_text_table(report) << "\n";
  }
  if (!as_json) std::cout << (ok ? "tables: pass\n" : "tables: FAIL\n");
  return ok ? kOk : kFailed;
}

int verify_translation_cmd(const std::string& set, const std::string& heap, int n_max, int jobs, bool as_json) {
  const PatternSet P = patterns::by_name(set);
  const std::vector<Permutation> H = heap.empty() ? std::vector<Permutation>{patterns::hexagon()} : parse_list(heap);
  progress("translating heap patterns over " + P.name);
  const auto report = verify_translation(P, H, n_max, jobs);
  if (as_json) {
    json j{{"set", P.name}, {"ok", report.ok()}};
    j["translated"] = json::array();
    for (const auto& p : report.translated) j["translated"].push_back(to_string(p));
    j["ideal"] = json::array();
    for (const auto& [p, i] : report.ideal) j["ideal"].push_back({{"pattern", to_string(p)}, {"ideal", i}});
    j["rows"] = json::array();
    for (const auto& r : report.rows)
      j["rows"].push_back({{"n", r.n}, {"heap_side", r.heap_side}, {"one_line_side", r.one_line_side}, {"same", r.same_members}});
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "translated patterns:";
    for (const auto& [p, i] : report.ideal) std::cout << " " << to_string(p) << (i ? "" : " (not ideal)");
    std::cout << "\n  n  heap-avoiding  1-line-avoiding  same\n";
    for (const auto& r : report.rows)
      std::cout << std::setw(3) << r.n << std::setw(15) << r.heap_side << std::setw(17) << r.one_line_side << "  "
                << (r.same_members ? "yes" : "NO") << "\n";
    std::cout << "translation: " << (report.ok() ? "pass" : "FAIL") << "\n";
  }
  return report.ok() ? kOk : kFailed;
}

// Decomposition soundness on every maximally clustered permutation, and
// the per-cluster-count tallies against the terms of the transform.
int verify_bijection_cmd(int n_max, int jobs, bool as_json) {
  bool ok = true;
  const Series F = catalog::catalan(std::max(n_max, 1));
  json rows = json::array();
  for (int n = 1; n <= n_max; ++n) {
    progress("decomposing MC permutations of size " + std::to_string(n));
    std::map<int, long long> by_k;
    const auto members = class_members(ClassSpec(patterns::maximally_clustered()), n, jobs);
    bool sound = true;
    for (const auto& w : members) {
      const auto d = braid_cluster_decomposition(w);
      sound = sound && gaps_resolved(d) && clusters_canonical(d) && d.total_half_length() == count_321_instances(w) &&
              d.canonical_heap.evaluate() == w;
      ++by_k[static_cast<int>(d.cluster_count())];
    }
    bool terms = true;
    for (int k = 0; k <= n; ++k)
      terms = terms && Rational(by_k[k]) == clustered_term(F, ClusterMode::maximally_clustered, k)[static_cast<std::size_t>(n - 1)];
    ok = ok && sound && terms;
    if (as_json) {
      rows.push_back({{"n", n}, {"members", members.size()}, {"sound", sound}, {"cluster_terms", terms}});
    } else {
      std::cout << "n=" << n << " members=" << members.size() << " sound=" << (sound ? "yes" : "NO")
                << " cluster-count terms=" << (terms ? "match" : "DIFFER") << "\n";
    }
  }
  if (as_json)
    std::cout << json{{"ok", ok}, {"rows", rows}}.dump() << '\n';
  else
    std::cout << "bijection: " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kOk : kFailed;
}

int verify_diamond_cmd(int max_entries, bool as_json) {
  if (max_entries < 1) throw usage_error("--max-entries must be at least 1");
  // Connected FC heaps with full support, grown through 321-avoiding
  // permutations by inserting the maximum.
  std::vector<Heap> heaps;
  const Permutation p321{3, 2, 1};
  std::function<void(const Permutation&)> grow = [&](const Permutation& w) {
    const auto s = support_and_connectivity(w);
    if (s.connected && s.generators.front() == 1 && s.generators.back() == w.rank() - 1) heaps.push_back(heap_of(w));
    if (w.rank() > max_entries) return;
    for (int pos = 1; pos <= w.rank() + 1; ++pos) {
      const Permutation next = w.insert_max(pos);
      if (next.length() <= max_entries && !contains_pattern(next, p321)) grow(next);
    }
  };
  progress("generating connected FC heaps");
  grow(Permutation{1});
  long long expanded = 0, reduced = 0, failures = 0;
  for (const auto& g : heaps) {
    if (diamond_reduction(inverse_diamond_reduction(g)) == g)
      ++expanded;
    else
      ++failures;
    if (g.rank() >= 4 && satisfies_heap_pattern_hypothesis(g.evaluate())) {
      if (inverse_diamond_reduction(diamond_reduction(g)) == g)
        ++reduced;
      else
        ++failures;
    }
  }
  const bool ok = failures == 0;
  if (as_json)
    std::cout << json{{"ok", ok}, {"heaps", heaps.size()}, {"expand_then_reduce", expanded}, {"reduce_then_expand", reduced}, {"failures", failures}}.dump()
              << '\n';
  else
    std::cout << heaps.size() << " heaps; " << expanded << " expand/reduce and " << reduced
              << " reduce/expand round trips; " << failures << " failures\ndiamond: " << (ok ? "pass" : "FAIL") << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heaps, braid clusters and generating functions for permutation classes"};
  app.require_subcommand(1);
  bool as_json = false;
  int jobs = 1;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("-j,--jobs", jobs, "Worker threads for brute-force enumeration")->check(CLI::PositiveNumber);

  std::string perm, word, name, pats, heaps, set = "fc", heap;
  int rank = 0, order = kDefaultOrder, n_max = 0, series_max = 15, max_entries = 12;
  bool relaxed = false;
  std::vector<std::string> names;
  std::function<int()> run;

  auto* classify_cmd = app.add_subcommand("classify", "Class membership, N(w) and braid clusters of a permutation");
  classify_cmd->add_option("permutation", perm, "1-line notation, e.g. [46718235]")->required();
  classify_cmd->callback([&] { run = [&] { return cmd_classify(perm, as_json); }; });

  auto* gf_cmd = app.add_subcommand("gf", "Generating function, series and recurrence of a named class");
  gf_cmd->add_option("class", name, "Class name")->required();
  gf_cmd->add_option("--order", order, "Series truncation order");
  gf_cmd->callback([&] { run = [&] { return cmd_gf(name, order, as_json); }; });

  auto* heap_cmd = app.add_subcommand("heap", "Print the heap of a permutation or word");
  heap_cmd->add_option("permutation", perm, "1-line notation");
  heap_cmd->add_option("--word", word, "Letters of a reduced word, e.g. \"1 2 1\"");
  heap_cmd->add_option("--rank", rank, "Ambient n of S_n for --word");
  heap_cmd->callback([&] { run = [&] { return cmd_heap(perm, word, rank, as_json); }; });

  auto* decompose_cmd = app.add_subcommand("decompose", "Braid-cluster decomposition of a maximally clustered permutation");
  decompose_cmd->add_option("permutation", perm, "1-line notation")->required();
  decompose_cmd->callback([&] { run = [&] { return cmd_decompose(perm, as_json); }; });

  auto* diamond_cmd = app.add_subcommand("diamond", "Diamond reduction and its inverse");
  diamond_cmd->require_subcommand(1);
  for (const bool expand : {false, true}) {
    auto* sub = diamond_cmd->add_subcommand(expand ? "expand" : "reduce",
                                            expand ? "Place a minimal diamond around every entry" : "Collapse minimal diamonds");
    sub->add_option("permutation", perm, "1-line notation of a fully commutative element");
    sub->add_option("--word", word, "Letters of a reduced word");
    sub->add_option("--rank", rank, "Ambient n of S_n for --word");
    if (!expand) sub->add_flag("--relaxed", relaxed, "Allow disconnected heaps and thin columns");
    sub->callback([&, expand] { run = [&, expand] { return cmd_diamond(expand, perm, word, rank, relaxed, as_json); }; });
  }

  auto* count_cmd = app.add_subcommand("count", "Brute-force counts by size");
  count_cmd->add_option("class", name, "Catalog class name");
  count_cmd->add_option("--patterns", pats, "Forbidden 1-line patterns, e.g. \"321;3412\"");
  count_cmd->add_option("--heaps", heaps, "Forbidden heap patterns");
  count_cmd->add_option("--n-max", n_max, "Largest size")->required();
  count_cmd->callback([&] { run = [&] { return cmd_count(name, pats, heaps, n_max, jobs, as_json); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Consistency checks; exit status 1 on failure");
  verify_cmd->require_subcommand(1);
  auto* tables_cmd = verify_cmd->add_subcommand("tables", "Brute force vs GF vs recurrence for catalog classes");
  tables_cmd->add_option("--n-max", n_max, "Largest size counted by brute force")->default_val(9);
  tables_cmd->add_option("--series-max", series_max, "Largest size taken from the GF")->default_val(15);
  tables_cmd->add_option("--classes", names, "Class names (default: all)");
  tables_cmd->callback([&] { run = [&] { return verify_tables_cmd(names, n_max, series_max, jobs, as_json); }; });
  auto* translation_cmd = verify_cmd->add_subcommand("translation", "Heap avoidance vs translated 1-line avoidance");
  translation_cmd->add_option("--n-max", n_max, "Largest size")->default_val(8);
  translation_cmd->add_option("--set", set, "Base pattern set: none, fc, fb, mc")->default_val("fc");
  translation_cmd->add_option("--heap", heap, "Heap patterns (default: the hexagon)");
  translation_cmd->callback([&] { run = [&] { return verify_translation_cmd(set, heap, n_max, jobs, as_json); }; });
  auto* bijection_cmd = verify_cmd->add_subcommand("bijection", "Braid-cluster decompositions of maximally clustered permutations");
  bijection_cmd->add_option("--n-max", n_max, "Largest size")->default_val(8);
  bijection_cmd->callback([&] { run = [&] { return verify_bijection_cmd(n_max, jobs, as_json); }; });
  auto* vdiamond_cmd = verify_cmd->add_subcommand("diamond", "Diamond reduction round trips");
  vdiamond_cmd->add_option("--max-entries", max_entries, "Largest heap size")->default_val(12);
  vdiamond_cmd->callback([&] { run = [&] { return verify_diamond_cmd(max_entries, as_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return run();
  } catch (const parse_error& e) {
    std::cerr << "error: cannot parse permutation: " << e.what() << '\n';
    return kUsage;
  } catch (const limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
}
