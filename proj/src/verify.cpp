#include "wh/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wh/json_io.hpp"

namespace wh {

using nlohmann::json;

namespace {

void record(VerifyResult& r, bool ok, const std::function<std::string()>& message) {
  ++r.checks;
  if (!ok) r.failures.push_back(message());
}

std::string ctx(std::initializer_list<std::pair<const char*, json>> fields) {
  json j = json::object();
  for (const auto& [k, v] : fields) j[k] = v;
  return j.dump();
}

void enumerate_reduced(int rank, std::size_t len, std::vector<Letter>& cur,
                       std::set<CyclicWord>& out) {
  if (cur.size() == len) {
    if (len == 0 || cur.front() != cur.back().inverse() || len == 1)
      out.insert(CyclicWord::reduce(rank, cur));
    return;
  }
  for (int c = 0; c < 2 * rank; ++c) {
    Letter l = Letter::from_code(c);
    if (!cur.empty() && l == cur.back().inverse()) continue;
    cur.push_back(l);
    enumerate_reduced(rank, len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<CyclicWord> all_cyclic_words(int rank, std::size_t max_len) {
  std::set<CyclicWord> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<Letter> cur;
    enumerate_reduced(rank, len, cur, out);
  }
  return {out.begin(), out.end()};
}

std::vector<CyclicWord> sample_minimal_words(int rank, std::size_t min_len, std::size_t max_len,
                                             int count, SplitMix64& rng) {
  std::vector<CyclicWord> out;
  std::set<CyclicWord> seen;
  const int budget = count * 400;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < budget) {
    ++attempts;
    std::size_t len = min_len + rng.below(max_len - min_len + 1);
    CyclicWord w = random_cyclic_word(rank, len, rng);
    if (!is_minimal(w)) continue;
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

VerifyResult verify_length_formula(const VerifyOptions& opt) {
  VerifyResult r{"length-formula", 0, {}, {}};
  for (int rank : {2, 3}) {
    auto moves = enumerate_w2(rank);
    SplitMix64 rng(opt.seed ^ (0x11 * rank));
    for (int i = 0; i < opt.formula_words_per_rank; ++i) {
      CyclicWord w = random_cyclic_word(rank, rng.below(15), rng);
      PairCountTable counts(w);
      for (const WhiteheadW2& m : moves) {
        int formula = length_delta(m, counts);
        int direct = static_cast<int>(apply(m, w).size()) - static_cast<int>(w.size());
        record(r, formula == direct, [&] {
          return "length_delta mismatch " + ctx({{"w", w.text()},
                                                 {"rank", rank},
                                                 {"move", w2_to_json(m)},
                                                 {"formula", formula},
                                                 {"direct", direct}});
        });
      }
    }
  }
  return r;
}

VerifyResult verify_complement(const VerifyOptions& opt) {
  VerifyResult r{"complement", 0, {}, {}};
  for (int rank : {2, 3}) {
    auto moves = enumerate_w2(rank);
    SplitMix64 rng(opt.seed ^ (0x22 * rank));
    for (int i = 0; i < opt.formula_words_per_rank; ++i) {
      CyclicWord w = random_cyclic_word(rank, rng.below(15), rng);
      for (const WhiteheadW2& m : moves) {
        record(r, apply(m, w) == apply(m.complement(), w), [&] {
          return "complement action mismatch " +
                 ctx({{"w", w.text()}, {"rank", rank}, {"move", w2_to_json(m)}});
        });
      }
    }
  }
  return r;
}

namespace {

struct ExampleAnalysis {
  CyclicWord u;
  LevelSet ls;
  DependenceGraph graph;
};

ExampleAnalysis analyze(const std::string& text, int rank,
                        const std::optional<std::string>& cache_dir) {
  ExampleAnalysis a;
  a.u = CyclicWord::parse(text, rank);
  a.ls = cached_level_set(a.u, cache_dir);
  a.graph = dependence_graph(a.ls);
  return a;
}

}  // namespace

VerifyResult verify_example_blocks(const VerifyOptions& opt) {
  VerifyResult r{"example-blocks", 0, {}, {}};

  {  // four generator blocks with strictly graded exponents
    ExampleAnalysis a = analyze("aabbbccccddddd", 4, opt.cache_dir);
    auto comps = a.graph.components();
    record(r, comps.size() == 4, [&] {
      return "expected 4 components, got " + std::to_string(comps.size());
    });
    for (int i = 1; i <= 4; ++i) {
      LetterSet expected{Letter(i), Letter(-i)};
      LetterSet got;
      if (comps.size() == 4)
        for (Letter l : comps[static_cast<std::size_t>(i) - 1]) got.insert(l);
      record(r, got == expected, [&] {
        return "component " + std::to_string(i) + " is " + got.text() + ", expected " +
               expected.text();
      });
    }
    HypothesisReport mg = check_minimality_and_grading(a.u);
    HypothesisReport syl = check_syllable_minimality(a.u, a.ls, a.graph);
    record(r, mg.minimal.value_or(false), [&] { return "u is not minimal"; });
    record(r, mg.graded_occurrences.value_or(false), [&] { return "u is not graded"; });
    record(r, syl.top_syllable_minimal.value_or(false),
           [&] { return "u fails top syllable minimality"; });
    record(r, syl.lower_syllable_minimal.value_or(false),
           [&] { return "u fails lower syllable minimality"; });
    {
      AdmissibleMoveIndex idx = admissible_moves(a.ls);
      record(r, idx.count() == 112, [&] {
        return "admissible move count changed: " + std::to_string(idx.count()) + " != 112";
      });
    }
    {
      SyllableDecomposition su = syllable_decompose(a.u, a.graph);
      bool ones = true;
      for (int i = 1; i <= 4; ++i) ones = ones && su.syllable_length(i) == 1;
      record(r, ones, [&] { return "u should have one syllable per component"; });
    }

    CyclicWord v = CyclicWord::parse("abbbaccccddddd", 4);
    record(r, a.ls.contains(v), [&] { return "v = " + v.text() + " is not in the level set"; });
    {
      // splitting the x1 block doubles the C1-syllable count
      SyllableDecomposition sv = syllable_decompose(v, a.graph);
      record(r, sv.syllable_length(1) == 2 && sv.syllable_length(2) == 1 &&
                    sv.syllable_length(3) == 1 && sv.syllable_length(4) == 1,
             [&] { return "v should have two C1 syllables and one of each other"; });
    }
    HypothesisReport vmg = check_minimality_and_grading(v);
    HypothesisReport vsyl = check_syllable_minimality(v, a.ls, a.graph);
    record(r, vmg.minimal.value_or(false) && vmg.graded_occurrences.value_or(false),
           [&] { return "v should pass minimality and grading"; });
    record(r, vsyl.top_syllable_minimal.value_or(false),
           [&] { return "v should pass top syllable minimality"; });
    record(r, !vsyl.lower_syllable_minimal.value_or(true), [&] {
      return "v should fail lower syllable minimality (its x1 blocks can be rejoined)";
    });
  }
  return r;
}

VerifyResult verify_example_interleaved(const VerifyOptions& opt) {
  VerifyResult r{"example-interleaved", 0, {}, {}};
  {  // interleaved x3/x4 letters: their components merge
    ExampleAnalysis a = analyze("aabbbccdCdcddd", 4, opt.cache_dir);
    record(r, a.graph.component_count() == 3, [&] {
      return "expected 3 components, got " + std::to_string(a.graph.component_count());
    });
    record(r, a.graph.component_of_gen(3) == a.graph.component_of_gen(4),
           [&] { return "x3 and x4 should share a component"; });
    record(r, a.graph.component_of_gen(1) != a.graph.component_of_gen(2),
           [&] { return "x1 and x2 should be in distinct components"; });
    HypothesisReport mg = check_minimality_and_grading(a.u);
    HypothesisReport syl = check_syllable_minimality(a.u, a.ls, a.graph);
    record(r, mg.minimal.value_or(false) && mg.graded_occurrences.value_or(false) &&
                  syl.top_syllable_minimal.value_or(false) &&
                  syl.lower_syllable_minimal.value_or(false),
           [&] { return "u should pass all structural conditions"; });

    CyclicWord v = CyclicWord::parse("aaccbbbdCdcddd", 4);
    record(r, a.ls.contains(v), [&] { return "v = " + v.text() + " is not in the level set"; });
    HypothesisReport vsyl = check_syllable_minimality(v, a.ls, a.graph);
    record(r, !vsyl.top_syllable_minimal.value_or(true), [&] {
      return "v should fail top syllable minimality (its x3/x4 syllables can be rejoined)";
    });
  }
  return r;
}

VerifyResult verify_examples(const VerifyOptions& opt) {
  VerifyResult blocks = verify_example_blocks(opt);
  VerifyResult inter = verify_example_interleaved(opt);
  VerifyResult r{"examples", blocks.checks + inter.checks, {}, {}};
  r.failures = blocks.failures;
  r.failures.insert(r.failures.end(), inter.failures.begin(), inter.failures.end());
  r.findings = blocks.findings;
  r.findings.insert(r.findings.end(), inter.findings.begin(), inter.findings.end());
  return r;
}

VerifyResult verify_dominance(const VerifyOptions& opt) {
  VerifyResult r{"dominance", 0, {}, {}};
  SplitMix64 rng(opt.seed ^ 0x33);
  std::vector<CyclicWord> words = sample_graded_minimal_words(2, 5, 12, opt.dominance_words / 2, rng);
  auto rank3 = sample_graded_minimal_words(3, 6, 12, opt.dominance_words - opt.dominance_words / 2, rng);
  words.insert(words.end(), rank3.begin(), rank3.end());
  for (const CyclicWord& u : words) {
    PairCountTable counts(u);
    for (const WhiteheadW2& m : enumerate_w2(u.rank())) {
      if (length_delta(m, counts) != 0) continue;
      record(r, m.degree() <= u.rank() - 1, [&] {
        return "degree exceeds n-1 " + ctx({{"u", u.text()}, {"move", w2_to_json(m)}});
      });
      for (Letter b : m.set().one_sided().letters()) {
        record(r, counts.row_sum(m.multiplier()) > counts.row_sum(b), [&] {
          return "multiplier occurrence count not dominant " +
                 ctx({{"u", u.text()}, {"move", w2_to_json(m)}, {"b", b.text()}});
        });
      }
    }
  }
  return r;
}

VerifyResult verify_derived_moves(const VerifyOptions& opt) {
  VerifyResult r{"derived-moves", 0, {}, {}};
  SplitMix64 rng(opt.seed ^ 0x44);
  std::vector<CyclicWord> words = sample_minimal_words(2, 4, 10, (opt.derived_words + 1) / 2, rng);
  auto rank3 = sample_minimal_words(3, 5, 10, opt.derived_words / 2, rng);
  words.insert(words.end(), rank3.begin(), rank3.end());
  words.push_back(CyclicWord::parse("aabbbccccddddd", 4));
  for (const CyclicWord& u : words) {
    PairCountTable counts(u);
    std::vector<WhiteheadW2> keep;
    for (const WhiteheadW2& m : enumerate_w2(u.rank()))
      if (length_delta(m, counts) == 0) keep.push_back(m);
    for (const WhiteheadW2& sigma : keep) {
      for (const WhiteheadW2& tau : keep) {
        const Letter m = sigma.multiplier(), b = tau.multiplier();
        const bool case_same = (m == b);
        const bool case_disjoint = (m != b) && !tau.set().contains(m) &&
                                   !tau.set().contains(m.inverse()) && !sigma.set().contains(b);
        if (!case_same && !case_disjoint) continue;
        try {
          auto derived = derive_length_preserving_moves(sigma, tau, u);
          for (const WhiteheadW2& d : derived) {
            record(r, apply(d, u).size() == u.size(), [&] {
              return "derived move changes length " +
                     ctx({{"u", u.text()}, {"sigma", w2_to_json(sigma)}, {"tau", w2_to_json(tau)},
                          {"derived", w2_to_json(d)}});
            });
          }
        } catch (const Error& e) {
          record(r, false, [&] {
            return std::string("derivation failed: ") + e.what() + " " +
                   ctx({{"u", u.text()}, {"sigma", w2_to_json(sigma)}, {"tau", w2_to_json(tau)}});
          });
        }
      }
    }
  }
  return r;
}

namespace {

void reorder_sweep(VerifyResult& r, const std::vector<CyclicWord>& words,
                   const std::vector<CyclicWord>& universe) {
  if (words.empty()) return;
  const auto moves = enumerate_w2(words.front().rank());
  for (const CyclicWord& u : words) {
    PairCountTable counts(u);
    for (const WhiteheadW2& s1 : moves) {
      if (s1.degree() < 1 || length_delta(s1, counts) != 0) continue;
      const CyclicWord u1 = apply(s1, u);
      PairCountTable counts1(u1);
      for (const WhiteheadW2& s2 : moves) {
        if (s2.degree() >= s1.degree() || length_delta(s2, counts1) != 0) continue;
        MoveChain chain;
        try {
          chain = reorder_pair(s1, s2, u);
        } catch (const Error& e) {
          record(r, false, [&] {
            return std::string("reorder_pair raised: ") + e.what() + " " +
                   ctx({{"u", u.text()}, {"s1", w2_to_json(s1)}, {"s2", w2_to_json(s2)}});
          });
          continue;
        }
        // degree pattern: the final move attains deg s1 alone, or all do
        std::vector<int> degs = chain.w2_degrees();
        bool all_equal = std::all_of(degs.begin(), degs.end(),
                                     [&](int d) { return d == s1.degree(); });
        bool final_attains = !degs.empty() && degs.back() == s1.degree() &&
                             std::all_of(degs.begin(), degs.end() - 1,
                                         [&](int d) { return d < s1.degree(); });
        record(r, all_equal || final_attains, [&] {
          return "degree pattern violated " + ctx({{"u", u.text()},
                                                   {"s1", w2_to_json(s1)},
                                                   {"s2", w2_to_json(s2)},
                                                   {"chain", chain_to_json(chain)}});
        });
        bool equal_everywhere = true;
        for (const CyclicWord& w : universe) {
          if (apply(chain, w) != apply(s2, apply(s1, w))) {
            equal_everywhere = false;
            record(r, false, [&] {
              return "chain action differs from the composition " +
                     ctx({{"u", u.text()}, {"w", w.text()}, {"s1", w2_to_json(s1)},
                          {"s2", w2_to_json(s2)}, {"chain", chain_to_json(chain)}});
            });
            break;
          }
        }
        record(r, equal_everywhere, [&] { return "action equality sweep failed"; });
      }
    }
  }
}

}  // namespace

VerifyResult verify_reorder(const VerifyOptions& opt) {
  VerifyResult r{"reorder", 0, {}, {}};
  SplitMix64 rng(opt.seed ^ 0x55);

  {  // rank 2: exhaustive over qualifying pairs, full universe to length 8
    std::vector<CyclicWord> words = sample_graded_minimal_words(2, 4, 10, opt.reorder_words, rng);
    std::vector<CyclicWord> universe = all_cyclic_words(2, 8);
    for (int i = 0; i < opt.reorder_random_words; ++i)
      universe.push_back(random_cyclic_word(2, 9 + rng.below(6), rng));
    reorder_sweep(r, words, universe);
  }

  {  // rank 3 reaches the overlap and merged-multiplier configurations
    std::vector<CyclicWord> words =
        sample_graded_minimal_words(3, 8, 14, std::max(2, opt.reorder_words / 2), rng);
    std::vector<CyclicWord> universe = all_cyclic_words(3, 5);
    for (int i = 0; i < opt.reorder_random_words / 2; ++i)
      universe.push_back(random_cyclic_word(3, 6 + rng.below(7), rng));
    reorder_sweep(r, words, universe);
  }

  {  // rank 4: the graded-blocks word plus a word whose qualifying pairs hit
    // the overlapping-sets-with-distinct-multipliers configuration, which is
    // provably out of reach below rank 4
    std::vector<CyclicWord> words{CyclicWord::parse("aabbbccccddddd", 4),
                                  CyclicWord::parse("aaDBcBCddcDDbc", 4)};
    std::vector<CyclicWord> universe = all_cyclic_words(4, 4);
    for (int i = 0; i < opt.reorder_random_words / 2; ++i)
      universe.push_back(random_cyclic_word(4, 5 + rng.below(6), rng));
    reorder_sweep(r, words, universe);
  }
  return r;
}

VerifyResult verify_ascending(const VerifyOptions& opt) {
  VerifyResult r{"ascending", 0, {}, {}};
  std::vector<CyclicWord> words;
  if (opt.ascending_include_rank4) {
    words.push_back(CyclicWord::parse("aabbbccccddddd", 4));
    words.push_back(CyclicWord::parse("aabbbccdCdcddd", 4));
  }
  SplitMix64 rng(opt.seed ^ 0x66);
  int found = 0, want = opt.ascending_words;
  int attempts = 0;
  while (found < want && attempts < want * 60) {
    ++attempts;
    int rank = 2 + static_cast<int>(rng.below(2));
    std::size_t len = 5 + rng.below(5);
    auto w = sample_graded_minimal_word(rank, len, rng, 50);
    if (!w) continue;
    HypothesisReport syl = check_syllable_minimality(*w);
    if (!syl.top_syllable_minimal.value_or(false) || !syl.lower_syllable_minimal.value_or(false))
      continue;
    words.push_back(*w);
    ++found;
  }
  record(r, found >= want, [&] {
    return "could not sample enough words passing all structural conditions (got " +
           std::to_string(found) + ")";
  });

  for (const CyclicWord& u : words) {
    LevelSet closure = level_set_w2(u);
    AscendingReach reach(u, u.rank() - 1);
    int spot = 0;
    for (const CyclicWord& v : closure.members) {
      record(r, reach.reached(v), [&] {
        return "no non-decreasing-degree chain found " +
               ctx({{"u", u.text()}, {"v", v.text()}, {"max_degree", u.rank() - 1}});
      });
      if (reach.reached(v) && spot < 50) {
        ++spot;
        auto chain = reach.chain_to(v);
        bool ok = chain.has_value() && apply(*chain, u) == v;
        if (ok) {
          auto degs = chain->w2_degrees();
          ok = std::is_sorted(degs.begin(), degs.end());
        }
        record(r, ok, [&] {
          return "reconstructed chain invalid " + ctx({{"u", u.text()}, {"v", v.text()}});
        });
      }
    }
  }
  return r;
}

VerifyResult verify_lift(const VerifyOptions& opt) {
  VerifyResult r{"lift", 0, {}, {}};
  SplitMix64 rng(opt.seed ^ 0x77);
  std::vector<CyclicWord> words{CyclicWord::parse("abaB", 2)};
  {
    auto pool = sample_minimal_words(2, 4, 10, opt.lift_words * 3, rng);
    for (const CyclicWord& w : pool) {
      if (static_cast<int>(words.size()) > opt.lift_words) break;
      if (w.occurrence_count(1) > 0 && w != words.front()) words.push_back(w);
    }
  }
  const auto moves = enumerate_w2(2);

  // lift/project round trips cover the whole restricted class
  for (const WhiteheadW2& tau : moves) {
    if (tau.multiplier().gen() == 1) continue;
    RestrictedW2 alpha = lift_general(tau, 2);
    record(r, project_restricted(alpha, 2) == tau, [&] {
      return "project(lift(tau)) != tau " + ctx({{"tau", w2_to_json(tau)}});
    });
    record(r, lift_general(project_restricted(alpha, 2), 2).move == alpha.move, [&] {
      return "lift(project(alpha)) != alpha " + ctx({{"alpha", w2_to_json(alpha.move)}});
    });
  }

  int seq_checked = 0;
  for (const CyclicWord& u : words) {
    MarkedSequence V = build_marked_sequence(u, 1);
    record(r, V.total_length() == 2 * u.size(), [&] {
      return "marked sequence length is not 2|u| " + ctx({{"u", u.text()}});
    });
    PairCountTable counts(u);

    for (const WhiteheadW2& sigma : moves) {
      if (length_delta(sigma, counts) != 0) continue;
      if (sigma.degree() == 1) {
        WhiteheadW2 tau = lift_degree_k(sigma, V);
        record(r, tau.degree() == 0, [&] {
          return "lift is not degree 0 " + ctx({{"sigma", w2_to_json(sigma)}});
        });
        MarkedSequence W = apply_to_sequence(tau, V);
        record(r, W.total_length() == V.total_length(), [&] {
          return "lifted move changes the total length " +
                 ctx({{"u", u.text()}, {"sigma", w2_to_json(sigma)}});
        });
        MarkedSequence expect = build_marked_sequence(apply(sigma, u), 1);
        record(r, W.seq == expect.seq, [&] {
          return "lift does not commute with the construction " +
                 ctx({{"u", u.text()}, {"sigma", w2_to_json(sigma)},
                      {"got", marked_sequence_to_json(W)},
                      {"expected", marked_sequence_to_json(expect)}});
        });
      }
      if (sigma.multiplier().gen() != 1) {
        RestrictedW2 alpha = lift_general(sigma, 2);
        MarkedSequence W = apply_to_sequence(alpha.move, V);
        MarkedSequence expect = build_marked_sequence(apply(sigma, u), 1);
        record(r, W.total_length() == V.total_length() && W.seq == expect.seq, [&] {
          return "general lift does not commute " +
                 ctx({{"u", u.text()}, {"sigma", w2_to_json(sigma)}});
        });
      }
    }

    // injectivity of the construction over the degree-1 orbit
    DegreeOrbit orbit = degree_restricted_orbit(u, 1);
    std::set<CyclicSequence> images;
    for (const CyclicWord& w : orbit.members) images.insert(build_marked_sequence(w, 1).seq);
    record(r, images.size() == orbit.members.size(), [&] {
      return "marked sequences of distinct orbit members collide " + ctx({{"u", u.text()}});
    });

    if (seq_checked < opt.lift_sequence_words) {
      ++seq_checked;
      auto seq_orbit = sequence_degree_orbit(V.seq, 0);
      record(r, orbit.members.size() <= seq_orbit.size(), [&] {
        return "degree-1 orbit exceeds the degree-0 sequence orbit " +
               ctx({{"u", u.text()}, {"N1", orbit.members.size()}, {"N0_seq", seq_orbit.size()}});
      });
    }
  }
  return r;
}

VerifyResult verify_product_bound(const VerifyOptions& opt) {
  VerifyResult r{"product-bound", 0, {}, {}};
  std::vector<CyclicWord> words{CyclicWord::parse("a", 2)};
  SplitMix64 rng(opt.seed ^ 0x88);
  auto sampled = sample_graded_minimal_words(2, 5, 10, opt.product_words / 2, rng);
  auto rank3 = sample_graded_minimal_words(3, 6, 10, opt.product_words - opt.product_words / 2, rng);
  words.insert(words.end(), sampled.begin(), sampled.end());
  words.insert(words.end(), rank3.begin(), rank3.end());
  if (opt.product_include_rank4) {
    words.push_back(CyclicWord::parse("aabbbccccddddd", 4));
    words.push_back(CyclicWord::parse("aabbbccdCdcddd", 4));
  }
  for (const CyclicWord& u : words) {
    CensusReport rep = run_census(u, opt.cache_dir);
    record(r, rep.product_bound_ok, [&] {
      return "product bound fails " + census_to_json(rep).dump();
    });
  }
  return r;
}

VerifyResult verify_khan(const VerifyOptions& opt) {
  VerifyResult r{"khan", 0, {}, {}};
  SplitMix64 rng(opt.seed ^ 0x99);
  for (std::size_t len = 6; len <= 14; ++len) {
    std::set<CyclicWord> words;
    for (int s = 0; s < opt.khan_per_length; ++s) {
      auto w = sample_graded_minimal_word(2, len, rng, 300);
      if (w) words.insert(*w);
    }
    for (const CyclicWord& u : words) {
      ++r.checks;
      unsigned long long n = cached_level_set(u, opt.cache_dir).count();
      unsigned long long bound = 8 * static_cast<unsigned long long>(len) - 40;
      if (n > bound)
        r.findings.push_back("N(u) exceeds the rank-2 sharp bound " +
                             ctx({{"u", u.text()}, {"N", n}, {"bound", bound}}));
    }
  }
  return r;
}

std::vector<std::string> verify_suite_names() {
  return {"length-formula", "complement", "examples",  "dominance",     "derived-moves",
          "reorder",        "ascending",  "lift",      "product-bound", "khan"};
}

std::vector<VerifyResult> run_verify(const std::string& name, const VerifyOptions& opt) {
  std::vector<VerifyResult> out;
  auto run_one = [&](const std::string& suite) {
    if (suite == "length-formula") return verify_length_formula(opt);
    if (suite == "complement") return verify_complement(opt);
    if (suite == "examples") return verify_examples(opt);
    if (suite == "dominance") return verify_dominance(opt);
    if (suite == "derived-moves") return verify_derived_moves(opt);
    if (suite == "reorder") return verify_reorder(opt);
    if (suite == "ascending") return verify_ascending(opt);
    if (suite == "lift") return verify_lift(opt);
    if (suite == "product-bound") return verify_product_bound(opt);
    if (suite == "khan") return verify_khan(opt);
    fail(ErrorKind::Parse, "unknown verify suite '" + suite + "'");
  };
  if (name == "all") {
    for (const std::string& s : verify_suite_names()) out.push_back(run_one(s));
  } else {
    out.push_back(run_one(name));
  }
  return out;
}

}  // namespace wh
