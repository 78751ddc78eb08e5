#include "wh/reports.hpp"

#include <set>

#include "wh/json_io.hpp"

namespace wh {

using nlohmann::json;

CensusReport run_census(const CyclicWord& u, const std::optional<std::string>& cache_dir) {
  CensusReport rep;
  rep.rank = u.rank();
  rep.u = u;
  rep.len = u.size();

  LevelSet ls = cached_level_set(u, cache_dir);  // rejects non-minimal words
  rep.N = ls.count();
  unsigned long long product = 1;
  for (int k = 0; k < u.rank(); ++k) {
    unsigned long long nk = degree_restricted_orbit(u, k).count();
    rep.Nk.push_back(nk);
    product = (product != 0 && nk > ~0ull / product) ? ~0ull : product * nk;
  }
  rep.C = enumerate_w1(u.rank(), rank_guard_override()).size();
  unsigned long long bound = (rep.C != 0 && product > ~0ull / rep.C) ? ~0ull : rep.C * product;
  rep.product_bound_ok = rep.N <= bound;

  if (u.rank() == 2 && u.size() >= 6)
    rep.khan_bound_ok = rep.N <= 8 * static_cast<unsigned long long>(u.size()) - 40;

  rep.hypotheses = check_minimality_and_grading(u);
  DependenceGraph g = dependence_graph(ls);
  HypothesisReport syl = check_syllable_minimality(u, ls, g);
  rep.hypotheses.top_syllable_minimal = syl.top_syllable_minimal;
  rep.hypotheses.lower_syllable_minimal = syl.lower_syllable_minimal;
  rep.hypotheses.top_witness = syl.top_witness;
  rep.hypotheses.lower_witness = syl.lower_witness;
  return rep;
}

json census_to_json(const CensusReport& rep) {
  json j{{"schema", kSchemaVersion},
         {"n", rep.rank},
         {"u", word_to_json(rep.u)},
         {"len", rep.len},
         {"N", rep.N},
         {"N_k", rep.Nk},
         {"C", rep.C},
         {"product_bound_ok", rep.product_bound_ok},
         {"khan_bound_ok", rep.khan_bound_ok ? json(*rep.khan_bound_ok) : json(nullptr)},
         {"hypotheses", hypothesis_report_to_json(rep.hypotheses)}};
  return j;
}

namespace {

bool full_support(const CyclicWord& w) {
  std::vector<int> m = w.occurrence_profile();
  for (int i = 1; i <= w.rank(); ++i)
    if (m[static_cast<std::size_t>(i)] == 0) return false;
  return true;
}

}  // namespace

std::optional<CyclicWord> sample_graded_minimal_word(int rank, std::size_t length,
                                                     SplitMix64& rng, int attempts) {
  for (int t = 0; t < attempts; ++t) {
    CyclicWord w = random_cyclic_word(rank, length, rng);
    if (w.size() != length) continue;
    // the grading is only meaningful when every generator occurs; words over
    // a sub-alphabet satisfy it vacuously and degenerate downstream claims
    if (!full_support(w)) continue;
    HypothesisReport rep = check_minimality_and_grading(w);
    if (rep.minimal.value_or(false) && rep.graded_occurrences.value_or(false)) return w;
  }
  return std::nullopt;
}

std::vector<CyclicWord> sample_graded_minimal_words(int rank, std::size_t min_len,
                                                    std::size_t max_len, int count,
                                                    SplitMix64& rng) {
  std::vector<CyclicWord> out;
  std::set<CyclicWord> seen;
  const int budget = count * 600;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < budget) {
    ++attempts;
    std::size_t len = min_len + rng.below(max_len - min_len + 1);
    CyclicWord w = random_cyclic_word(rank, len, rng);
    if (w.size() != len || !full_support(w)) continue;
    HypothesisReport rep = check_minimality_and_grading(w);
    if (!rep.minimal.value_or(false) || !rep.graded_occurrences.value_or(false)) continue;
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

std::vector<GrowthRow> growth_probe(int rank, std::size_t min_len, std::size_t max_len,
                                    int samples, std::uint64_t seed,
                                    const std::optional<std::string>& cache_dir) {
  std::vector<GrowthRow> rows;
  if (max_len < min_len) return rows;
  SplitMix64 rng(seed);
  for (std::size_t len = min_len; len <= max_len; ++len) {
    GrowthRow row;
    row.length = len;
    std::set<CyclicWord> words;
    for (int s = 0; s < samples; ++s) {
      auto w = sample_graded_minimal_word(rank, len, rng, 400);
      if (w) words.insert(*w);
    }
    if (samples > 0 && words.empty())
      fail(ErrorKind::Precondition, "no word of length " + std::to_string(len) +
                                        " passing minimality and the occurrence grading was "
                                        "found; cannot probe this length");
    for (const CyclicWord& w : words) {
      unsigned long long n = cached_level_set(w, cache_dir).count();
      row.max_N = std::max(row.max_N, n);
    }
    row.samples_found = static_cast<int>(words.size());
    rows.push_back(row);
  }
  return rows;
}

json growth_to_json(const std::vector<GrowthRow>& rows) {
  json arr = json::array();
  for (const GrowthRow& r : rows)
    arr.push_back(json{{"len", r.length}, {"max_N", r.max_N}, {"samples", r.samples_found}});
  return json{{"schema", kSchemaVersion}, {"rows", arr}};
}

std::string growth_to_csv(const std::vector<GrowthRow>& rows) {
  std::string out = "len,max_N,samples\n";
  for (const GrowthRow& r : rows)
    out += std::to_string(r.length) + "," + std::to_string(r.max_N) + "," +
           std::to_string(r.samples_found) + "\n";
  return out;
}

}  // namespace wh
