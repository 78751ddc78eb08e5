#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wh/dependence.hpp"
#include "wh/rng.hpp"

using namespace wh;

namespace {

CyclicWord W(const char* text, int rank) { return CyclicWord::parse(text, rank); }

}  // namespace

TEST_CASE("admissible moves carry valid witnesses") {
  LevelSet ls = level_set(W("a", 2));
  AdmissibleMoveIndex idx = admissible_moves(ls);
  // all moves except the four that append the multiplier to the lone letter
  CHECK(idx.count() == 12);
  for (const auto& [m, witness] : idx.moves) {
    CHECK(apply(m, witness).size() == witness.size());
    CHECK(witness.size() == ls.base.size());
  }
  // the identity-acting moves are always present
  for (int c = 0; c < 4; ++c) {
    bool found = false;
    for (const auto& [m, w] : idx.moves)
      if (m.set().empty() && m.multiplier() == Letter::from_code(c)) found = true;
    CHECK(found);
  }
}

TEST_CASE("admissible move counts: frozen oracle values") {
  CHECK(admissible_moves(level_set(W("abABB", 2))).count() == 12);
  CHECK(admissible_moves(level_set(W("aabbb", 2))).count() == 12);
  CHECK(admissible_moves(level_set(W("aabbb", 3))).count() == 52);
}

TEST_CASE("dependence is symmetric") {
  for (auto [text, rank] : std::initializer_list<std::pair<const char*, int>>{
           {"abABB", 2}, {"aabbb", 3}, {"aabbbcccc", 3}}) {
    AdmissibleMoveIndex idx = admissible_moves(level_set(W(text, rank)));
    for (int cx = 0; cx < 2 * rank; ++cx) {
      for (int cy = 0; cy < 2 * rank; ++cy) {
        Letter x = Letter::from_code(cx), y = Letter::from_code(cy);
        if (x == y || x == y.inverse()) continue;
        auto fwd = depends_on_detail(x, y, idx);
        auto bwd = depends_on_detail(y, x, idx);
        CHECK(fwd.depends == bwd.depends);
        CHECK(fwd.vacuous == bwd.vacuous);
      }
    }
  }
}

TEST_CASE("rank-2 cross-generator dependence is always vacuous") {
  // no multiplier outside {x, y}^{+-1} exists, so the condition holds emptily
  DependenceGraph g = dependence_graph(W("aabbb", 2));
  CHECK(g.component_count() == 1);
  CHECK(g.edge(Letter(1), Letter(2)));
  CHECK(g.vacuous_edge(Letter(1), Letter(2)));
  CHECK(!g.vacuous_edge(Letter(1), Letter(-1)));  // inversion edges are structural
}

TEST_CASE("rank-3 structures: frozen oracle values") {
  DependenceGraph g = dependence_graph(W("aabbb", 3));
  CHECK(g.component_count() == 2);
  CHECK(g.component_of_gen(1) == g.component_of_gen(2));
  CHECK(g.component_of_gen(3) != g.component_of_gen(1));
  CHECK(g.edge(Letter(1), Letter(2)));
  CHECK(!g.vacuous_edge(Letter(1), Letter(2)));

  DependenceGraph h = dependence_graph(W("aabbbcccc", 3));
  CHECK(h.component_count() == 3);
  auto comps = h.components();
  REQUIRE(comps.size() == 3);
  for (int i = 1; i <= 3; ++i) {
    LetterSet got;
    for (Letter l : comps[static_cast<std::size_t>(i) - 1]) got.insert(l);
    CHECK(got == LetterSet{Letter(i), Letter(-i)});
  }
}

TEST_CASE("one-sided moves into a shared component keep the multiplier inside it") {
  CyclicWord u = W("aabbb", 3);
  LevelSet ls = level_set(u);
  AdmissibleMoveIndex idx = admissible_moves(ls);
  DependenceGraph g = dependence_graph(ls);
  for (const auto& [m, w] : idx.moves) {
    LetterSet one_sided = m.set().one_sided();
    for (Letter b : one_sided.letters()) {
      int ci = g.component_of(b);
      // does C_i contain a different generator pair?
      bool shared = false;
      for (int j = 1; j <= 3; ++j)
        if (j != b.gen() && g.component_of_gen(j) == ci) shared = true;
      if (shared) CHECK(g.component_of(m.multiplier()) == ci);
    }
  }
}

TEST_CASE("graph is invariant across core members") {
  CyclicWord u = W("aabbbcccc", 3);
  LevelSet core = level_set_w2(u);
  DependenceGraph g = dependence_graph(u);
  SplitMix64 rng(51);
  for (int t = 0; t < 3; ++t) {
    const CyclicWord& v = core.members[rng.below(core.members.size())];
    DependenceGraph gv = dependence_graph(v);
    CHECK(gv.adj == g.adj);
    CHECK(gv.component_id == g.component_id);
  }
}

TEST_CASE("syllable decomposition") {
  CyclicWord u = W("aabbbcccc", 3);
  DependenceGraph g = dependence_graph(u);
  SyllableDecomposition syl = syllable_decompose(u, g);
  CHECK(syl.factors.size() == 3);
  CHECK(syl.syllable_length(1) == 1);
  CHECK(syl.syllable_length(2) == 1);
  CHECK(syl.syllable_length(3) == 1);
  CHECK(syl.total() == 3);

  // adjacent factors, cyclically, lie in distinct components
  for (std::size_t i = 0; i < syl.factors.size(); ++i) {
    const auto& cur = syl.factors[i];
    const auto& next = syl.factors[(i + 1) % syl.factors.size()];
    if (syl.factors.size() > 1) CHECK(cur.component != next.component);
  }

  // concatenating the factors reproduces the word as a cyclic word
  std::vector<Letter> cat;
  for (const auto& f : syl.factors) cat.insert(cat.end(), f.letters.begin(), f.letters.end());
  CHECK(CyclicWord::reduce(3, cat) == u);
}

TEST_CASE("single-component words form one syllable") {
  CyclicWord u = W("aabbb", 2);
  DependenceGraph g = dependence_graph(u);
  SyllableDecomposition syl = syllable_decompose(u, g);
  CHECK(syl.factors.size() == 1);
  CHECK(syl.factors[0].letters.size() == u.size());
}

TEST_CASE("empty words cannot be decomposed") {
  DependenceGraph g = dependence_graph(W("a", 2));
  CHECK_THROWS_AS(syllable_decompose(W("", 2), g), Error);
}

TEST_CASE("minimality and grading checks") {
  HypothesisReport ok = check_minimality_and_grading(W("aabbb", 2));
  CHECK(*ok.minimal);
  CHECK(*ok.graded_occurrences);
  CHECK(ok.all_true());

  // the commutator has equal occurrence counts
  HypothesisReport comm = check_minimality_and_grading(W("abAB", 2));
  CHECK(*comm.minimal);
  CHECK(!*comm.graded_occurrences);
  REQUIRE(comm.grading_witness.has_value());
  CHECK(comm.grading_witness->first == 1);
  CHECK(comm.grading_witness->second == 2);

  // a primitive-extended word is not minimal; the witness move shortens it
  HypothesisReport red = check_minimality_and_grading(W("abb", 2));
  CHECK(!*red.minimal);
  REQUIRE(red.reducing_move.has_value());
  CHECK(apply(*red.reducing_move, W("abb", 2)).size() < 3);
}

TEST_CASE("syllable minimality on small words") {
  // a single letter's level set is the letters; every count is 1
  HypothesisReport rep = check_syllable_minimality(W("a", 2));
  CHECK(*rep.top_syllable_minimal);
  CHECK(*rep.lower_syllable_minimal);

  HypothesisReport all = check_hypotheses(W("aabbb", 2));
  CHECK(all.all_true());
}

TEST_CASE("syllable checks require membership") {
  LevelSet ls = level_set(W("aabbb", 2));
  DependenceGraph g = dependence_graph(ls);
  CHECK_THROWS_AS(check_syllable_minimality(W("abABB", 2), ls, g), Error);
}

TEST_CASE("dot output shape") {
  DependenceGraph g = dependence_graph(W("aabbb", 2));
  std::string dot = g.to_dot();
  CHECK(dot.rfind("graph dependence {", 0) == 0);
  CHECK(dot.find("\"x1\" -- \"x1'\" [style=dashed];") != std::string::npos);
  CHECK(dot.find("label=\"vacuous\"") != std::string::npos);
  CHECK(dot.back() == '\n');
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
}
