#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wh/moves.hpp"
#include "wh/rng.hpp"

using namespace wh;

namespace {

CyclicWord W(const char* text, int rank) { return CyclicWord::parse(text, rank); }
WhiteheadW2 M2(int rank, std::initializer_list<int> a_set, int mult) {
  LetterSet A;
  for (int v : a_set) A.insert(Letter(v));
  return WhiteheadW2(rank, A, Letter(mult));
}

}  // namespace

TEST_CASE("construction validates the multiplier") {
  CHECK_NOTHROW(M2(2, {}, 1));
  CHECK_THROWS_AS(M2(2, {1}, 1), Error);
  CHECK_THROWS_AS(M2(2, {-1}, 1), Error);
  // conjugating move: x2 -> x1^{-1} x2 x1
  WhiteheadW2 conj = M2(2, {2, -2}, 1);
  CHECK(apply(conj, W("b", 2)) == W("b", 2));
  CHECK(apply(conj, W("ab", 2)) == CyclicWord::from_ints({1, -1, 2, 1}, 2));
}

TEST_CASE("empty-set move acts as the identity") {
  WhiteheadW2 id = M2(2, {}, 1);
  SplitMix64 rng(3);
  for (int t = 0; t < 50; ++t) {
    CyclicWord w = random_cyclic_word(2, rng.below(10), rng);
    CHECK(apply(id, w) == w);
  }
}

TEST_CASE("application: worked examples") {
  CHECK(apply(M2(2, {2}, 1), W("bA", 2)) == W("b", 2));
  CHECK(apply(M2(2, {1}, 2), W("ab", 2)) == W("abb", 2));
}

TEST_CASE("relabeling moves") {
  WhiteheadW1 swap(2, {Letter(2), Letter(1)});
  CHECK(apply(swap, W("aab", 2)) == W("bba", 2));
  WhiteheadW1 invert(2, {Letter(-1), Letter(2)});
  CHECK(apply(invert, W("a", 2)) == W("A", 2));
  SplitMix64 rng(5);
  for (const WhiteheadW1& pi : enumerate_w1(2)) {
    CyclicWord w = random_cyclic_word(2, rng.below(12), rng);
    CHECK(apply(pi, w).size() == w.size());
  }
  CHECK_THROWS_AS(WhiteheadW1(2, {Letter(1), Letter(1)}), Error);
  CHECK_THROWS_AS(WhiteheadW1(2, {Letter(1)}), Error);
}

TEST_CASE("length delta: worked examples") {
  CHECK(length_delta(M2(2, {2}, 1), W("bA", 2)) == -1);
  CHECK(length_delta(M2(2, {1}, 2), W("ab", 2)) == 1);
  SplitMix64 rng(17);
  for (int t = 0; t < 100; ++t) {
    CyclicWord w = random_cyclic_word(2, rng.below(12), rng);
    CHECK(length_delta(M2(2, {}, 1), w) == 0);
  }
}

TEST_CASE("length formula agrees with direct application") {
  SplitMix64 rng(19);
  for (int rank : {2, 3}) {
    auto moves = enumerate_w2(rank);
    for (int t = 0; t < 60; ++t) {
      CyclicWord w = random_cyclic_word(rank, rng.below(15), rng);
      PairCountTable counts(w);
      for (const WhiteheadW2& m : moves) {
        CHECK(length_delta(m, counts) ==
              static_cast<int>(apply(m, w).size()) - static_cast<int>(w.size()));
      }
    }
  }
}

TEST_CASE("degree: worked examples") {
  CHECK(M2(3, {2, 3, -3}, -1).degree() == 2);
  CHECK(M2(2, {2, -2}, 1).degree() == 0);
  CHECK(M2(2, {1}, 2).degree() == 1);
  CHECK(M2(2, {}, 1).degree() == 0);
}

TEST_CASE("complement: worked examples and involution") {
  WhiteheadW2 m = M2(2, {2}, 1);
  WhiteheadW2 c = m.complement();
  CHECK(c.set() == LetterSet{Letter(-2)});
  CHECK(c.multiplier() == Letter(-1));
  CHECK(c.complement() == m);
}

TEST_CASE("complement acts identically on cyclic words") {
  SplitMix64 rng(23);
  auto moves = enumerate_w2(3);
  for (int t = 0; t < 50; ++t) {
    CyclicWord w = random_cyclic_word(3, rng.below(12), rng);
    for (const WhiteheadW2& m : moves) {
      CHECK(apply(m, w) == apply(m.complement(), w));
    }
  }
}

TEST_CASE("complement preserves degree") {
  for (int rank : {2, 3}) {
    for (const WhiteheadW2& m : enumerate_w2(rank)) CHECK(m.complement().degree() == m.degree());
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_w2(1).size() == 2);
  CHECK(enumerate_w2(2).size() == 16);
  CHECK(enumerate_w2(3).size() == 96);
  CHECK(enumerate_w1(1).size() == 2);
  CHECK(enumerate_w1(2).size() == 8);
  CHECK(enumerate_w1(3).size() == 48);
  CHECK(enumerate_w2_degree0(2).size() == 8);
  CHECK(enumerate_w2_degree0(3).size() == 24);
}

TEST_CASE("degree-0 enumeration matches the filtered full enumeration") {
  for (int rank : {2, 3}) {
    std::vector<WhiteheadW2> filtered;
    for (const WhiteheadW2& m : enumerate_w2(rank))
      if (m.degree() == 0) filtered.push_back(m);
    auto direct = enumerate_w2_degree0(rank);
    std::sort(filtered.begin(), filtered.end());
    std::sort(direct.begin(), direct.end());
    CHECK(filtered == direct);
  }
}

TEST_CASE("rank guard") {
  CHECK_THROWS_AS(enumerate_w2(7), Error);
  CHECK_NOTHROW(enumerate_w2_degree0(7));
  CHECK_THROWS_AS(enumerate_w2_degree0(15), Error);
}

TEST_CASE("enumeration order is deterministic") {
  auto moves = enumerate_w2(2);
  CHECK(moves[0] == M2(2, {}, 1));
  CHECK(moves[1] == M2(2, {2}, 1));
  CHECK(moves[2] == M2(2, {-2}, 1));
  CHECK(moves[3] == M2(2, {2, -2}, 1));
  CHECK(moves[4].multiplier() == Letter(-1));
}

TEST_CASE("move chains apply in order") {
  MoveChain chain;
  chain.steps.emplace_back(M2(2, {1}, 2));      // a -> ab
  chain.steps.emplace_back(WhiteheadW1(2, {Letter(2), Letter(1)}));
  CHECK(apply(chain, W("a", 2)) == W("ba", 2));
  CHECK(chain.w2_degrees() == std::vector<int>{1});
}

TEST_CASE("rank mismatch is rejected") {
  CHECK_THROWS_AS(apply(M2(2, {2}, 1), W("abc", 3)), Error);
  CHECK_THROWS_AS(length_delta(M2(3, {2}, 1), W("ab", 2)), Error);
}
