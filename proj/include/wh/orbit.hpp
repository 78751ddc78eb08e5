#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wh/moves.hpp"

namespace wh {

// All minimum-length cyclic words in the automorphic orbit of base:
// the closure of {base} under length-preserving W2 moves and all W1 moves.
struct LevelSet {
  CyclicWord base;
  std::vector<CyclicWord> members;  // sorted ascending, unique

  std::size_t count() const { return members.size(); }
  bool contains(const CyclicWord& w) const;
};

// First enumerated W2 move that strictly shortens w, if any.
std::optional<WhiteheadW2> find_reducing_move(const CyclicWord& w);
bool is_minimal(const CyclicWord& w);

// Greedy descent by W2 moves in enumeration order; the returned chain maps
// the input onto the returned word, each step strictly shortening.
std::pair<CyclicWord, MoveChain> minimize(const CyclicWord& w);

LevelSet level_set(const CyclicWord& u);

// Closure under length-preserving W2 moves only (no relabelings).
LevelSet level_set_w2(const CyclicWord& u);

// Words reachable from u by compositions of degree-k length-preserving W2
// moves, every prefix preserving the length.  u itself is a member via the
// empty composition.
struct DegreeOrbit {
  int k = 0;
  std::vector<CyclicWord> members;  // sorted ascending, unique

  std::size_t count() const { return members.size(); }
  bool contains(const CyclicWord& w) const;
};

DegreeOrbit degree_restricted_orbit(const CyclicWord& u, int k);

// From two length-preserving moves sigma=(A, m) and tau=(B, b) on a word of
// minimum orbit length, derive further guaranteed length-preserving moves:
//   same multiplier (m == b):        (A&B, m)
//   m^{+-1} disjoint from B, b not in A:  (A-B, m) and (B-A, b)
// Throws Precondition if the pair matches neither pattern or the guarantee
// fails (the latter means u was not minimal).
std::vector<WhiteheadW2> derive_length_preserving_moves(const WhiteheadW2& sigma,
                                                        const WhiteheadW2& tau,
                                                        const CyclicWord& u);

// Rewrites the composition s2*s1 (s1 applied first, deg s1 > deg s2, both
// length-preserving on u along the way) as a chain of at most three W2 moves
// with the same action on every cyclic word, where either the final move
// alone attains deg s1 or all moves do, and every prefix preserves |u|.
// Requires u of minimum orbit length with strictly graded occurrence counts;
// inputs violating the grading can reach configurations that raise
// InternalContradiction.
MoveChain reorder_pair(const WhiteheadW2& s1, const WhiteheadW2& s2, const CyclicWord& u);

// Single-source search over states (word, smallest degree allowed next) for
// chains of length-preserving W2 moves with non-decreasing degrees <= max_degree.
class AscendingReach {
 public:
  AscendingReach(const CyclicWord& u, int max_degree);

  const CyclicWord& base() const { return base_; }
  int max_degree() const { return max_degree_; }

  bool reached(const CyclicWord& v) const;
  std::vector<CyclicWord> reached_words() const;  // sorted

  // Chain from base to v with non-decreasing degrees, if one was found.
  std::optional<MoveChain> chain_to(const CyclicWord& v) const;

 private:
  struct State {
    int word_id;
    int floor;
  };

  CyclicWord base_;
  int max_degree_;
  std::vector<CyclicWord> words_;
  std::map<CyclicWord, int> word_id_;
  // per word: floors visited (strictly decreasing over time), with the
  // predecessor state and move that produced each visit
  struct Visit {
    int floor;
    int parent_word;
    int parent_floor;
    std::optional<WhiteheadW2> move;  // empty for the start state
  };
  std::vector<std::vector<Visit>> visits_;
};

std::optional<MoveChain> ascending_chain_search(const CyclicWord& u, const CyclicWord& v,
                                                int max_degree);

struct ProductBoundReport {
  int rank = 0;
  CyclicWord u;
  unsigned long long N = 0;
  std::vector<unsigned long long> Nk;  // k = 0..rank-1
  unsigned long long C = 0;            // number of W1 automorphisms
  bool bound_ok = false;
};

// N(u) <= C * N_0(u) * ... * N_{n-1}(u)
ProductBoundReport product_bound_check(const CyclicWord& u);

// Process-wide override for the enumeration rank guards (CLI flag).
void set_rank_guard_override(bool on);
bool rank_guard_override();

}  // namespace wh
