#pragma once

#include "wh/sequence.hpp"

namespace wh {

// Cyclic factorization u = y_1 u_1 y_2 u_2 ... y_l u_l without cancellation,
// where each y_i is a letter of generator index <= cut and each u_i is a
// (possibly empty) segment over the higher generators.  Anchored at the
// first low letter of the canonical rotation, so the result is deterministic.
struct LowLetterFactorization {
  int rank = 1;
  int cut = 1;  // the index k splitting low from high generators
  struct Piece {
    Letter head;                // y_i
    std::vector<Letter> tail;   // u_i
  };
  std::vector<Piece> pieces;

  std::size_t piece_count() const { return pieces.size(); }
};

LowLetterFactorization factor_by_low_letters(const CyclicWord& u, int cut);

// Ambient alphabet holding the three marker families x_{n+j}, x_{2n+j},
// x_{3n+j} for j = 1..k alongside x_1..x_n.  Indices between the families
// stay unused; the numbering is not compacted.
int marked_rank(int n, int k);

// The tuple of cyclic words encoding a low-letter factorization over the
// marker alphabet: piece (y_i, u_i) becomes  h(y_i) u_i p(y_{i+1}) u_i^{-1}
// with h(x_j) = x_j, h(x_j^{-1}) = x_{n+j}, p(x_j') = x_{3n+j'},
// p(x_j'^{-1}) = x_{2n+j'}, and y_{l+1} = y_1.  Total length is 2|u|.
struct MarkedSequence {
  int n = 1;
  int k = 1;
  CyclicWord source;    // the word the construction started from
  CyclicSequence seq;   // entries over marked_rank(n, k)

  std::size_t total_length() const { return seq.total_length(); }
};

MarkedSequence build_marked_sequence(const CyclicWord& u, int k);

// Lift of a degree-k move to a degree-0 move over the marker alphabet:
// positive low letters carry their x_{2n+i} markers into the set, negative
// low letters contribute their x_{n+i}, x_{3n+i} markers, high letters pass
// through.  The multiplier is normalized to its positive form first; its
// index must exceed the cut.
WhiteheadW2 lift_degree_k(const WhiteheadW2& sigma, int n, int k);
WhiteheadW2 lift_degree_k(const WhiteheadW2& sigma, const MarkedSequence& V);

// Marker-set restrictions for moves over the k = 1 extension: the multiplier
// avoids x_1^{+-1} and the markers, and the set meets the marker letters
// I = {x_1, x_{n+1}, x_{2n+1}, x_{3n+1}}^{+-1} in one of four patterns.
enum class MarkerPattern {
  Full,          // I inside S
  PositiveSide,  // S meets I in {x_1, x_{2n+1}}^{+-1}
  NegativeSide,  // S meets I in {x_{n+1}, x_{3n+1}}^{+-1}
  Disjoint,      // S misses I
};

struct RestrictedW2 {
  WhiteheadW2 move;
  MarkerPattern pattern;

  // Throws Restriction when alpha steps outside the allowed class.
  static RestrictedW2 validate(const WhiteheadW2& alpha, int n);
};

// Extension of an arbitrary-degree rank-n move (multiplier != x_1^{+-1}) to
// the k = 1 marker alphabet, landing in the restricted class.
RestrictedW2 lift_general(const WhiteheadW2& tau, int n);

// The inverse direction: strip the markers and reattach x_1 per the pattern.
// project_restricted(lift_general(tau)) == tau and vice versa.
WhiteheadW2 project_restricted(const RestrictedW2& alpha, int n);
WhiteheadW2 project_restricted(const WhiteheadW2& alpha, int n);

// Entrywise application with canonicalization; the total length moves by
// twice the word-level length change of the corresponding move.
MarkedSequence apply_to_sequence(const WhiteheadW2& aut, const MarkedSequence& V);

}  // namespace wh
