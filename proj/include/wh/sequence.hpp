#pragma once

#include <vector>

#include "wh/moves.hpp"

namespace wh {

// A finite sequence of cyclic words treated as one object: automorphisms act
// entrywise, length is the summed length, and occurrence counts are summed.
// The entry order is itself cyclic (a factorization of a cyclic word is only
// defined up to rotation), so the canonical form also picks the least
// rotation of the tuple.
struct CyclicSequence {
  int rank = 1;
  std::vector<CyclicWord> words;

  static CyclicSequence canonicalize(int rank, std::vector<CyclicWord> words);

  std::size_t total_length() const;
  std::vector<int> occurrence_profile() const;  // indexed 1..rank, summed over entries

  friend bool operator==(const CyclicSequence& a, const CyclicSequence& b) {
    return a.rank == b.rank && a.words == b.words;
  }
  friend bool operator!=(const CyclicSequence& a, const CyclicSequence& b) { return !(a == b); }
  friend bool operator<(const CyclicSequence& a, const CyclicSequence& b);

  std::size_t hash() const;
};

struct CyclicSequenceHash {
  std::size_t operator()(const CyclicSequence& s) const { return s.hash(); }
};

CyclicSequence apply(const WhiteheadW2& m, const CyclicSequence& s);

// Sequences reachable from s by compositions of degree-k W2 moves with every
// prefix preserving the total length.  Sequences are not required to be of
// minimum length; moves that change the total length are simply not edges.
std::vector<CyclicSequence> sequence_degree_orbit(const CyclicSequence& s, int k,
                                                  bool override_guard = false);

}  // namespace wh
