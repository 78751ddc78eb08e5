#pragma once

#include <vector>

#include "wh/word.hpp"

namespace wh {

// Occurrence counts of the cyclic subwords x y^{-1} and y x^{-1} of a fixed
// word, tabulated for all letter pairs.  count(x, y) is symmetric, and the
// row sum over y equals the number of x^{+-1} occurring in the word.
// For x == y the two subword patterns coincide and are counted once per
// occurrence; on reduced words this diagonal is identically zero.
class PairCountTable {
 public:
  explicit PairCountTable(const CyclicWord& w);

  int rank() const { return rank_; }
  std::size_t source_length() const { return source_length_; }

  int count(Letter x, Letter y) const { return m_[idx(x.code(), y.code())]; }

  // sum of count(a, b) over a in A, b in B
  long set_count(LetterSet A, LetterSet B) const;

  // a.Sigma: the total number of a^{+-1} occurring in the word
  long row_sum(Letter a) const;

 private:
  std::size_t idx(int xc, int yc) const { return static_cast<std::size_t>(xc) * 2 * rank_ + yc; }

  int rank_;
  std::size_t source_length_;
  std::vector<int> m_;
};

inline int pair_count(const CyclicWord& w, Letter x, Letter y) {
  return PairCountTable(w).count(x, y);
}

inline long set_pair_count(const CyclicWord& w, LetterSet A, LetterSet B) {
  return PairCountTable(w).set_count(A, B);
}

}  // namespace wh
