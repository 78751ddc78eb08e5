#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wh/reports.hpp"

namespace wh {

struct VerifyResult {
  std::string suite;
  int checks = 0;
  std::vector<std::string> failures;  // each with enough detail to reproduce
  std::vector<std::string> findings;  // non-blocking observations

  bool passed() const { return failures.empty(); }
};

struct VerifyOptions {
  std::uint64_t seed = 0x5eedf00d;
  std::optional<std::string> cache_dir;

  int formula_words_per_rank = 500;  // ranks 2 and 3, lengths <= 14
  int dominance_words = 200;
  int derived_words = 50;
  int reorder_words = 12;
  int reorder_random_words = 100;
  int ascending_words = 20;
  bool ascending_include_rank4 = true;
  int lift_words = 20;
  int lift_sequence_words = 6;  // how many lift words also get the sequence-orbit bound
  int product_words = 8;
  bool product_include_rank4 = true;
  int khan_per_length = 4;
};

// Pair-count length formula against direct application, exact.
VerifyResult verify_length_formula(const VerifyOptions& opt = {});
// (A, a) and (Sigma-A-a^{+-1}, a^{-1}) act identically on cyclic words.
VerifyResult verify_complement(const VerifyOptions& opt = {});
// The two rank-4 worked examples: component structure, membership, and the
// expected pass/fail pattern of the structural conditions.
VerifyResult verify_example_blocks(const VerifyOptions& opt = {});       // graded powers
VerifyResult verify_example_interleaved(const VerifyOptions& opt = {});  // merged x3/x4 component
VerifyResult verify_examples(const VerifyOptions& opt = {});
// On graded minimal words, every length-preserving move (A, a) has
// a.Sigma > b.Sigma for each one-sided b in A, and degree <= n-1.
VerifyResult verify_dominance(const VerifyOptions& opt = {});
// Derived moves from qualifying pairs preserve length.
VerifyResult verify_derived_moves(const VerifyOptions& opt = {});
// Pair reordering: chain action equals the composition on a word universe,
// prefixes preserve length, and the promised degree pattern holds.
VerifyResult verify_reorder(const VerifyOptions& opt = {});
// Every W2-reachable level-set member is reachable by a chain of
// non-decreasing degrees.
VerifyResult verify_ascending(const VerifyOptions& opt = {});
// Marker lifting: commutation, length bookkeeping, lift/project round trips,
// injectivity, and the sequence-orbit bound N_1(u) <= N_0(V_u).
VerifyResult verify_lift(const VerifyOptions& opt = {});
// N(u) <= C * N_0(u) ... N_{n-1}(u) on censused words.
VerifyResult verify_product_bound(const VerifyOptions& opt = {});
// The rank-2 sharp bound N(u) <= 8|u| - 40 for 6 <= |u| <= 14, reported as
// findings rather than failures (cited result, validity range unstated).
VerifyResult verify_khan(const VerifyOptions& opt = {});

std::vector<std::string> verify_suite_names();
std::vector<VerifyResult> run_verify(const std::string& name, const VerifyOptions& opt = {});

// Every nonempty cyclically reduced canonical word over the rank, lengths
// 0..max_len (used as the action-equality universe and by tests).
std::vector<CyclicWord> all_cyclic_words(int rank, std::size_t max_len);

std::vector<CyclicWord> sample_minimal_words(int rank, std::size_t min_len, std::size_t max_len,
                                             int count, SplitMix64& rng);

}  // namespace wh
