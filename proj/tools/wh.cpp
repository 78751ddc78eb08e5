// wh: Whitehead moves, minimal-word orbits, and syllable structure for free
// groups.  Subcommands: minimize, census, growth, verify, depgraph, lift.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "wh/json_io.hpp"
#include "wh/verify.hpp"

namespace {

using nlohmann::json;

int error_exit(const wh::Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  return e.kind() == wh::ErrorKind::Io ? 1 : 2;
}

std::string word_line(const wh::CyclicWord& w) {
  return (w.empty() ? std::string("(empty)") : w.text()) + "  " + json(w.ints()).dump();
}

struct CommonArgs {
  std::string word;
  int rank = 2;
  bool as_json = false;
  std::string cache_dir;
};

std::optional<std::string> cache_of(const CommonArgs& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  return wh::default_cache_dir();
}

int cmd_minimize(const CommonArgs& c) {
  wh::CyclicWord w = wh::CyclicWord::parse(c.word, c.rank);
  auto [minimal, chain] = wh::minimize(w);
  if (minimal.empty())
    std::cerr << "warning: the input reduces to the empty word (identity class)\n";
  if (c.as_json) {
    json j{{"schema", wh::kSchemaVersion},
           {"n", c.rank},
           {"input", wh::word_to_json(w)},
           {"minimal", wh::word_to_json(minimal)},
           {"already_minimal", chain.steps.empty()},
           {"chain", wh::chain_to_json(chain)}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "input:   " << word_line(w) << "\n";
  std::cout << "minimal: " << word_line(minimal) << "  |w|=" << minimal.size() << "\n";
  if (chain.steps.empty()) {
    std::cout << "already minimal\n";
  } else {
    std::cout << "reduction steps (" << chain.steps.size() << "):\n";
    for (const wh::Move& m : chain.steps)
      std::cout << "  " << wh::move_to_json(m).dump() << "\n";
  }
  return 0;
}

int cmd_census(const CommonArgs& c, bool auto_minimize) {
  wh::CyclicWord w = wh::CyclicWord::parse(c.word, c.rank);
  if (!wh::is_minimal(w)) {
    if (!auto_minimize)
      wh::fail(wh::ErrorKind::NotMinimal,
               "word " + w.text() + " is not minimal; pass --auto-minimize or minimize first");
    w = wh::minimize(w).first;
    std::cerr << "note: minimized input to " << w.text() << "\n";
  }
  wh::CensusReport rep = wh::run_census(w, cache_of(c));
  if (!rep.hypotheses.all_true())
    std::cerr << "warning: the word fails one or more structural conditions; "
                 "bounds are still reported\n";
  if (c.as_json) {
    std::cout << wh::census_to_json(rep).dump(2) << "\n";
    return 0;
  }
  std::cout << "u = " << word_line(rep.u) << "  |u|=" << rep.len << "  rank " << rep.rank << "\n";
  std::cout << "N(u) = " << rep.N << "\n";
  std::cout << "N_k  =";
  for (auto nk : rep.Nk) std::cout << " " << nk;
  std::cout << "   C = " << rep.C << "\n";
  std::cout << "product bound: " << (rep.product_bound_ok ? "holds" : "VIOLATED") << "\n";
  if (rep.khan_bound_ok)
    std::cout << "rank-2 sharp bound 8|u|-40: " << (*rep.khan_bound_ok ? "holds" : "exceeded")
              << "\n";
  auto flag = [](const std::optional<bool>& b) {
    return !b.has_value() ? "n/a" : (*b ? "yes" : "no");
  };
  std::cout << "conditions: minimal=" << flag(rep.hypotheses.minimal)
            << " graded=" << flag(rep.hypotheses.graded_occurrences)
            << " top-syllable=" << flag(rep.hypotheses.top_syllable_minimal)
            << " lower-syllable=" << flag(rep.hypotheses.lower_syllable_minimal) << "\n";
  return 0;
}

int cmd_growth(int rank, std::size_t min_len, std::size_t max_len, int samples,
               std::uint64_t seed, bool as_json, const std::string& cache_dir) {
  std::optional<std::string> cache =
      cache_dir.empty() ? wh::default_cache_dir() : std::optional<std::string>(cache_dir);
  auto rows = wh::growth_probe(rank, min_len, max_len, samples, seed, cache);
  if (as_json)
    std::cout << wh::growth_to_json(rows).dump(2) << "\n";
  else
    std::cout << wh::growth_to_csv(rows);
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool quick, bool as_json,
               const std::string& cache_dir) {
  wh::VerifyOptions opt;
  opt.seed = seed;
  if (!cache_dir.empty())
    opt.cache_dir = cache_dir;
  else
    opt.cache_dir = wh::default_cache_dir();
  if (quick) {
    opt.formula_words_per_rank = 60;
    opt.dominance_words = 40;
    opt.derived_words = 12;
    opt.reorder_words = 4;
    opt.reorder_random_words = 20;
    opt.ascending_words = 6;
    opt.ascending_include_rank4 = false;
    opt.lift_words = 6;
    opt.lift_sequence_words = 2;
    opt.product_words = 4;
    opt.product_include_rank4 = false;
    opt.khan_per_length = 1;
  }
  auto results = wh::run_verify(suite, opt);
  bool any_failed = false;
  json out = json::array();
  for (const auto& r : results) {
    any_failed = any_failed || !r.passed();
    if (as_json) {
      out.push_back(json{{"suite", r.suite},
                         {"checks", r.checks},
                         {"failures", r.failures},
                         {"findings", r.findings},
                         {"passed", r.passed()}});
      continue;
    }
    std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.suite << " (" << r.checks
              << " checks";
    if (!r.failures.empty()) std::cout << ", " << r.failures.size() << " failures";
    std::cout << ")\n";
    std::size_t shown = 0;
    for (const std::string& f : r.failures) {
      if (shown++ == 10) {
        std::cout << "  ... " << (r.failures.size() - 10) << " more\n";
        break;
      }
      std::cout << "  failure: " << f << "\n";
      std::cout << "  reproduce: wh verify " << r.suite << " --seed " << seed << "\n";
    }
    for (const std::string& f : r.findings) std::cout << "  finding: " << f << "\n";
  }
  if (as_json) std::cout << json{{"schema", wh::kSchemaVersion}, {"results", out}}.dump(2) << "\n";
  return any_failed ? 1 : 0;
}

int cmd_depgraph(const CommonArgs& c, bool as_dot) {
  wh::CyclicWord w = wh::CyclicWord::parse(c.word, c.rank);
  wh::LevelSet ls = wh::cached_level_set(w, cache_of(c));
  wh::DependenceGraph g = wh::dependence_graph(ls);
  if (as_dot) {
    std::cout << g.to_dot();
    return 0;
  }
  if (c.as_json) {
    json comps = json::array();
    for (const auto& comp : g.components()) {
      json one = json::array();
      for (wh::Letter l : comp) one.push_back(l.signed_index());
      comps.push_back(one);
    }
    json edges = json::array(), vacuous = json::array();
    for (int x = 0; x < 2 * g.rank; ++x) {
      for (int y = x + 1; y < 2 * g.rank; ++y) {
        wh::Letter lx = wh::Letter::from_code(x), ly = wh::Letter::from_code(y);
        if (!g.edge(lx, ly)) continue;
        edges.push_back(json::array({lx.signed_index(), ly.signed_index()}));
        if (g.vacuous_edge(lx, ly))
          vacuous.push_back(json::array({lx.signed_index(), ly.signed_index()}));
      }
    }
    json j{{"schema", wh::kSchemaVersion}, {"n", g.rank},         {"u", wh::word_to_json(w)},
           {"components", comps},          {"edges", edges},      {"vacuous_edges", vacuous}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "u = " << word_line(w) << "\n";
  std::cout << "components: " << g.component_count() << "\n";
  for (const auto& comp : g.components()) {
    std::cout << "  C" << g.component_of(comp.front()) << " = {";
    for (std::size_t i = 0; i < comp.size(); ++i)
      std::cout << (i ? ", " : "") << comp[i].text();
    std::cout << "}\n";
  }
  return 0;
}

int cmd_lift(const CommonArgs& c, int k) {
  wh::CyclicWord u = wh::CyclicWord::parse(c.word, c.rank);
  wh::LowLetterFactorization f = wh::factor_by_low_letters(u, k);
  wh::MarkedSequence V = wh::build_marked_sequence(u, k);
  auto rule = [&](const wh::LowLetterFactorization::Piece& piece,
                  const wh::LowLetterFactorization::Piece& next) {
    std::string r = piece.head.negative() ? "head x" + std::to_string(c.rank + piece.head.gen())
                                          : "head x" + std::to_string(piece.head.gen());
    r += next.head.negative() ? ", pair x" + std::to_string(2 * c.rank + next.head.gen())
                              : ", pair x" + std::to_string(3 * c.rank + next.head.gen());
    return r;
  };
  if (c.as_json) {
    json pieces = json::array();
    for (std::size_t i = 0; i < f.pieces.size(); ++i) {
      const auto& piece = f.pieces[i];
      const auto& next = f.pieces[(i + 1) % f.pieces.size()];
      json tail = json::array();
      for (wh::Letter l : piece.tail) tail.push_back(l.signed_index());
      pieces.push_back(json{{"y", piece.head.signed_index()},
                            {"tail", tail},
                            {"rule", rule(piece, next)}});
    }
    json j{{"schema", wh::kSchemaVersion},
           {"u", wh::word_to_json(u)},
           {"k", k},
           {"factorization", pieces},
           {"sequence", wh::marked_sequence_to_json(V)}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "u = " << word_line(u) << "  cut k=" << k << "\n";
  std::cout << "factorization: " << f.pieces.size() << " pieces\n";
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const auto& piece = f.pieces[i];
    const auto& next = f.pieces[(i + 1) % f.pieces.size()];
    std::cout << "  " << (i + 1) << ". y=" << piece.head.text() << " tail=";
    if (piece.tail.empty()) std::cout << "(empty)";
    for (wh::Letter l : piece.tail) std::cout << l.text();
    std::cout << "   rule: " << rule(piece, next) << "\n";
  }
  std::cout << "marker words over rank " << wh::marked_rank(c.rank, k) << " (total length "
            << V.total_length() << " = 2*" << u.size() << "):\n";
  for (const wh::CyclicWord& w : V.seq.words) std::cout << "  " << word_line(w) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whitehead moves and minimal-word orbit counting in free groups"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool override_guard = false;
  app.add_flag("--override-rank-guard", override_guard,
               "allow exhaustive enumeration past the desk-scale rank guard");

  CommonArgs margs, cargs, dargs, largs;
  bool auto_minimize = false;
  bool as_dot = false;
  int lift_k = 1;

  auto add_common = [](CLI::App* sub, CommonArgs& a, bool with_cache) {
    sub->add_option("--word", a.word, "word, as letters (aabAB) or signed ints ([1,1,2,-1,-2])")
        ->required();
    sub->add_option("--rank", a.rank, "ambient rank n")->required();
    sub->add_flag("--json", a.as_json, "emit JSON");
    if (with_cache) sub->add_option("--cache-dir", a.cache_dir, "level-set cache directory");
  };

  CLI::App* s_min = app.add_subcommand("minimize", "shortest word in the automorphic orbit");
  add_common(s_min, margs, false);

  CLI::App* s_census = app.add_subcommand("census", "orbit counts and bounds for one word");
  add_common(s_census, cargs, true);
  s_census->add_flag("--auto-minimize", auto_minimize, "minimize the input first");

  CLI::App* s_growth = app.add_subcommand("growth", "max N(u) over sampled words per length");
  int g_rank = 2, g_samples = 10;
  std::size_t g_min = 6, g_max = 10;
  std::uint64_t g_seed = 1;
  bool g_json = false;
  std::string g_cache;
  s_growth->add_option("--rank", g_rank)->required();
  s_growth->add_option("--min-len", g_min)->required();
  s_growth->add_option("--max-len", g_max)->required();
  s_growth->add_option("--samples", g_samples, "words sampled per length");
  s_growth->add_option("--seed", g_seed);
  s_growth->add_flag("--json", g_json, "JSON instead of CSV");
  s_growth->add_option("--cache-dir", g_cache);

  CLI::App* s_verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite = "all";
  std::uint64_t v_seed = 0x5eedf00d;
  bool v_quick = false, v_json = false;
  std::string v_cache;
  std::string suites;
  for (const auto& s : wh::verify_suite_names()) suites += s + " ";
  s_verify->add_option("suite", v_suite, "one of: all " + suites);
  s_verify->add_option("--seed", v_seed);
  s_verify->add_flag("--quick", v_quick, "smaller sample sizes");
  s_verify->add_flag("--json", v_json);
  s_verify->add_option("--cache-dir", v_cache);

  CLI::App* s_dep = app.add_subcommand("depgraph", "dependence graph of a minimal word");
  add_common(s_dep, dargs, true);
  s_dep->add_flag("--dot", as_dot, "emit DOT");

  CLI::App* s_lift = app.add_subcommand("lift", "marker-word construction for a word");
  add_common(s_lift, largs, false);
  s_lift->add_option("--k", lift_k, "cut index (low letters x1..xk)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // bad arguments are input errors
  }
  wh::set_rank_guard_override(override_guard);

  try {
    if (s_min->parsed()) return cmd_minimize(margs);
    if (s_census->parsed()) return cmd_census(cargs, auto_minimize);
    if (s_growth->parsed())
      return cmd_growth(g_rank, g_min, g_max, g_samples, g_seed, g_json, g_cache);
    if (s_verify->parsed()) return cmd_verify(v_suite, v_seed, v_quick, v_json, v_cache);
    if (s_dep->parsed()) return cmd_depgraph(dargs, as_dot);
    if (s_lift->parsed()) return cmd_lift(largs, lift_k);
  } catch (const wh::Error& e) {
    return error_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
