#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wh/letters.hpp"

namespace wh {

// A cyclic word: a conjugacy-class representative stored cyclically reduced
// (no adjacent inverse pair, including across the wrap-around) and in its
// lexicographically least rotation under the letter order of letters.hpp.
// Immutable after construction; all operations on words are pure.
class CyclicWord {
 public:
  CyclicWord() = default;  // empty word of rank 1

  // Free+cyclic reduction followed by rotation canonicalization.
  static CyclicWord reduce(int rank, std::span<const Letter> letters);
  static CyclicWord reduce(int rank, const std::vector<Letter>& letters) {
    return reduce(rank, std::span<const Letter>(letters));
  }

  // Accepts "aabAB" style text or a JSON-style signed integer array "[1,1,2,-1,-2]".
  static CyclicWord parse(std::string_view text, int rank);

  static CyclicWord from_ints(const std::vector<int>& ints, int rank);

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter at(std::size_t i) const { return letters_[i]; }
  // letter at cyclic position i (mod size); word must be nonempty
  Letter cyclic_at(std::size_t i) const { return letters_[i % letters_.size()]; }

  // number of positions holding x_i or x_i^{-1}
  int occurrence_count(int gen_index) const;
  // per-generator occurrence counts, indexed 1..rank
  std::vector<int> occurrence_profile() const;

  std::string text() const;
  std::vector<int> ints() const;

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  friend bool operator!=(const CyclicWord& a, const CyclicWord& b) { return !(a == b); }
  friend bool operator<(const CyclicWord& a, const CyclicWord& b);

  std::size_t hash() const;

 private:
  CyclicWord(int rank, std::vector<Letter> letters)
      : rank_(rank), letters_(std::move(letters)) {}

  int rank_ = 1;
  std::vector<Letter> letters_;
};

struct CyclicWordHash {
  std::size_t operator()(const CyclicWord& w) const { return w.hash(); }
};

// Index of the lexicographically least rotation (Booth-style two-pointer scan).
std::size_t least_rotation(std::span<const Letter> w);

// The defining normalization of cyclic words, exposed for direct use.
inline CyclicWord cyclic_reduce(int rank, const std::vector<Letter>& letters) {
  return CyclicWord::reduce(rank, letters);
}

// Identity on this representation: words are stored canonically.
inline CyclicWord canonical_form(const CyclicWord& w) { return w; }

inline CyclicWord parse_word(std::string_view text, int rank) { return CyclicWord::parse(text, rank); }

}  // namespace wh
