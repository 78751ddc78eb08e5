#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wh/orbit.hpp"

namespace wh {

// All W2 moves that preserve the length of at least one member of the
// W2-reachable part of the level set, each with one witnessing member.
// Witnesses are scoped to that part because length-preserving W2 chains fix
// the occurrence profile; admitting relabeled members would let moves with
// permuted letter roles separate letters the relation is meant to tie.
struct AdmissibleMoveIndex {
  int rank = 1;
  std::vector<std::pair<WhiteheadW2, CyclicWord>> moves;

  std::size_t count() const { return moves.size(); }
};

AdmissibleMoveIndex admissible_moves(const LevelSet& ls);

// x depends on y when every indexed move (A, a) with a outside {x, y}^{+-1}
// and A meeting {y, y^{-1}} contains both of x^{+-1}.  When no indexed move
// meets the hypothesis the dependence holds vacuously; the flag records that.
struct DependenceQuery {
  bool depends = false;
  bool vacuous = false;
};

DependenceQuery depends_on_detail(Letter x, Letter y, const AdmissibleMoveIndex& idx);
bool depends_on(Letter x, Letter y, const AdmissibleMoveIndex& idx);

// Graph on the letters: inverse pairs are always joined; distinct non-inverse
// letters are joined when one depends on the other.  Components are named by
// the least generator index they contain, so component_of_gen(i) identifies
// C_i and C_i == C_j exactly when the ids agree.
struct DependenceGraph {
  int rank = 1;
  std::vector<std::uint64_t> adj;          // row per letter code
  std::vector<std::uint64_t> vacuous_adj;  // dependence edges that held vacuously
  std::vector<int> component_id;           // per letter code

  bool edge(Letter x, Letter y) const { return (adj[static_cast<std::size_t>(x.code())] >> y.code()) & 1; }
  bool vacuous_edge(Letter x, Letter y) const {
    return (vacuous_adj[static_cast<std::size_t>(x.code())] >> y.code()) & 1;
  }
  int component_of(Letter l) const { return component_id[static_cast<std::size_t>(l.code())]; }
  int component_of_gen(int i) const { return component_of(Letter(i)); }
  int component_count() const;
  std::vector<std::vector<Letter>> components() const;  // keyed by ascending id

  std::string to_dot() const;
};

DependenceGraph dependence_graph(const LevelSet& ls);
DependenceGraph dependence_graph(const CyclicWord& u);  // computes the level set

// The unique cyclic factorization of w into maximal runs of letters from a
// single component, with adjacent runs (cyclically) in distinct components.
struct SyllableDecomposition {
  struct Factor {
    std::vector<Letter> letters;
    int component;
  };
  std::vector<Factor> factors;          // cyclic order from the first boundary
  std::map<int, int> syllable_lengths;  // component id -> count, zeros included

  int syllable_length(int component) const {
    auto it = syllable_lengths.find(component);
    return it == syllable_lengths.end() ? 0 : it->second;
  }
  // |w|_s: the total number of syllables
  int total() const { return static_cast<int>(factors.size()); }
};

SyllableDecomposition syllable_decompose(const CyclicWord& w, const DependenceGraph& g);

// Structural conditions on a word, with witnesses for every false entry.
struct HypothesisReport {
  std::optional<bool> minimal;                 // minimum length over the orbit
  std::optional<bool> graded_occurrences;      // occurrence counts strictly increase with index
  std::optional<bool> top_syllable_minimal;    // C_n-syllable count minimal over the level set
  std::optional<bool> lower_syllable_minimal;  // conditional minimality for lower components

  std::optional<WhiteheadW2> reducing_move;              // minimal == false
  std::optional<std::pair<int, int>> grading_witness;    // (i, j), i < j, count_i >= count_j
  std::optional<CyclicWord> top_witness;                 // member with a smaller top count
  std::optional<std::pair<int, CyclicWord>> lower_witness;

  bool all_true() const;
};

// Minimality plus strict grading of the occurrence counts of the letters
// occurring in u.
HypothesisReport check_minimality_and_grading(const CyclicWord& u);

// Syllable-length minimality over the level set: the C_n count outright, and
// for each j < n whose component is distinct from all higher ones, the C_j
// count among members matching u's higher counts.
HypothesisReport check_syllable_minimality(const CyclicWord& u, const LevelSet& ls,
                                           const DependenceGraph& g);
HypothesisReport check_syllable_minimality(const CyclicWord& u);

// All four conditions, sharing one level-set computation.
HypothesisReport check_hypotheses(const CyclicWord& u);

}  // namespace wh
