#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wh/cache.hpp"
#include "wh/dependence.hpp"
#include "wh/rng.hpp"

namespace wh {

// Everything the census command reports for one minimal word.
struct CensusReport {
  int rank = 0;
  CyclicWord u;
  std::size_t len = 0;
  unsigned long long N = 0;
  std::vector<unsigned long long> Nk;
  unsigned long long C = 0;
  bool product_bound_ok = false;
  // only rank 2 with |u| >= 6, where the 8|u|-40 bound is positive
  std::optional<bool> khan_bound_ok;
  HypothesisReport hypotheses;
};

CensusReport run_census(const CyclicWord& u, const std::optional<std::string>& cache_dir);
nlohmann::json census_to_json(const CensusReport& rep);

struct GrowthRow {
  std::size_t length = 0;
  unsigned long long max_N = 0;
  int samples_found = 0;
};

// For each length in [min_len, max_len], sample words satisfying minimality
// and the occurrence grading and record the largest N seen.  Deterministic
// for a fixed seed.  Throws Precondition if a length yields no word.
std::vector<GrowthRow> growth_probe(int rank, std::size_t min_len, std::size_t max_len,
                                    int samples, std::uint64_t seed,
                                    const std::optional<std::string>& cache_dir);

nlohmann::json growth_to_json(const std::vector<GrowthRow>& rows);
std::string growth_to_csv(const std::vector<GrowthRow>& rows);

// Rejection sampling of words that pass minimality and the grading.
std::optional<CyclicWord> sample_graded_minimal_word(int rank, std::size_t length,
                                                     SplitMix64& rng, int attempts);
std::vector<CyclicWord> sample_graded_minimal_words(int rank, std::size_t min_len,
                                                    std::size_t max_len, int count,
                                                    SplitMix64& rng);

}  // namespace wh
