#pragma once

#include <variant>
#include <vector>

#include "wh/pair_counts.hpp"
#include "wh/word.hpp"

namespace wh {

// Ranks above this need an explicit override: full W2 enumeration grows as
// 2n * 2^(2n-2) and exhaustion past desk scale should fail loudly.
inline constexpr int kEnumerationGuard = 6;
// Degree-0 enumeration grows as 2n * 2^(n-1); it is used on the extended
// marker alphabets and tolerates larger ranks.
inline constexpr int kDegree0EnumerationGuard = 14;

// Second-type Whitehead automorphism (A, a): a letter set A and a multiplier
// a with a, a^{-1} both outside A.  Acts on letters by
//   x -> x a        if x in A, x^{-1} not in A,
//   x -> a^{-1} x a if x, x^{-1} both in A,
//   x -> x          otherwise.
class WhiteheadW2 {
 public:
  WhiteheadW2(int rank, LetterSet A, Letter a);

  int rank() const { return rank_; }
  LetterSet set() const { return set_; }
  Letter multiplier() const { return mult_; }

  // max generator index occurring one-sidedly in A; 0 if none
  int degree() const;

  // (A-bar, a^{-1}) with A-bar = Sigma - A - a^{+-1}; same action on every
  // cyclic word as (A, a)
  WhiteheadW2 complement() const;

  friend bool operator==(const WhiteheadW2& x, const WhiteheadW2& y) {
    return x.rank_ == y.rank_ && x.set_ == y.set_ && x.mult_ == y.mult_;
  }
  friend bool operator!=(const WhiteheadW2& x, const WhiteheadW2& y) { return !(x == y); }
  friend bool operator<(const WhiteheadW2& x, const WhiteheadW2& y) {
    if (x.rank_ != y.rank_) return x.rank_ < y.rank_;
    if (x.mult_ != y.mult_) return x.mult_ < y.mult_;
    return x.set_ < y.set_;
  }

  std::string text() const { return "(" + set_.text() + ", " + mult_.text() + ")"; }

 private:
  int rank_;
  LetterSet set_;
  Letter mult_;
};

// First-type Whitehead automorphism: a permutation of the letter set that
// commutes with inversion, given by the images of x_1..x_n.
class WhiteheadW1 {
 public:
  WhiteheadW1(int rank, std::vector<Letter> images);

  static WhiteheadW1 identity(int rank);

  int rank() const { return rank_; }
  const std::vector<Letter>& images() const { return images_; }
  Letter image(Letter l) const {
    Letter g = images_[static_cast<std::size_t>(l.gen()) - 1];
    return l.negative() ? g.inverse() : g;
  }

  friend bool operator==(const WhiteheadW1& x, const WhiteheadW1& y) {
    return x.rank_ == y.rank_ && x.images_ == y.images_;
  }
  friend bool operator!=(const WhiteheadW1& x, const WhiteheadW1& y) { return !(x == y); }

  std::string text() const;

 private:
  int rank_;
  std::vector<Letter> images_;
};

CyclicWord apply(const WhiteheadW2& m, const CyclicWord& w);
CyclicWord apply(const WhiteheadW1& m, const CyclicWord& w);

// |m(w)| - |w| computed from pair counts alone: (A+a).(A+a)' - a.Sigma.
// Must agree with the direct route |apply(m, w)| - |w| on every input.
int length_delta(const WhiteheadW2& m, const PairCountTable& counts);
int length_delta(const WhiteheadW2& m, const CyclicWord& w);

// All (A, a) over the given rank: multipliers in letter order, then subsets
// of Sigma - {a, a^{-1}} by ascending bitmask.  Count: 2n * 2^(2n-2).
std::vector<WhiteheadW2> enumerate_w2(int rank, bool override_guard = false);

// All degree-0 moves: multipliers in letter order, then inversion-closed
// subsets by ascending pair bitmask.  Count: 2n * 2^(n-1).
std::vector<WhiteheadW2> enumerate_w2_degree0(int rank, bool override_guard = false);

// All 2^n * n! signed permutations.
std::vector<WhiteheadW1> enumerate_w1(int rank, bool override_guard = false);

// Either kind of Whitehead automorphism.
struct Move {
  std::variant<WhiteheadW2, WhiteheadW1> value;

  Move(WhiteheadW2 m) : value(std::move(m)) {}
  Move(WhiteheadW1 m) : value(std::move(m)) {}

  bool is_w2() const { return std::holds_alternative<WhiteheadW2>(value); }
  const WhiteheadW2* w2() const { return std::get_if<WhiteheadW2>(&value); }
  const WhiteheadW1* w1() const { return std::get_if<WhiteheadW1>(&value); }
};

CyclicWord apply(const Move& m, const CyclicWord& w);

// A composition of Whitehead automorphisms in application order:
// steps[0] is applied first.
struct MoveChain {
  std::vector<Move> steps;
  // set when the W2 degrees are non-decreasing in application order
  bool ascending = false;

  std::vector<int> w2_degrees() const;
  std::size_t size() const { return steps.size(); }
};

CyclicWord apply(const MoveChain& chain, const CyclicWord& w);

}  // namespace wh
