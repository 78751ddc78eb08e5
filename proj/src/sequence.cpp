#include "wh/sequence.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace wh {

namespace {

bool tuple_less(const std::vector<CyclicWord>& w, std::size_t i, std::size_t j) {
  // compare rotation starting at i with rotation starting at j
  const std::size_t m = w.size();
  for (std::size_t t = 0; t < m; ++t) {
    const CyclicWord& a = w[(i + t) % m];
    const CyclicWord& b = w[(j + t) % m];
    if (a < b) return true;
    if (b < a) return false;
  }
  return false;
}

}  // namespace

CyclicSequence CyclicSequence::canonicalize(int rank, std::vector<CyclicWord> words) {
  check_rank(rank);
  for (const CyclicWord& w : words)
    if (w.rank() != rank) fail(ErrorKind::RankMismatch, "sequence entries must share the rank");
  std::size_t best = 0;
  for (std::size_t i = 1; i < words.size(); ++i)
    if (tuple_less(words, i, best)) best = i;
  std::rotate(words.begin(), words.begin() + best, words.end());
  return CyclicSequence{rank, std::move(words)};
}

std::size_t CyclicSequence::total_length() const {
  std::size_t n = 0;
  for (const CyclicWord& w : words) n += w.size();
  return n;
}

std::vector<int> CyclicSequence::occurrence_profile() const {
  std::vector<int> m(static_cast<std::size_t>(rank) + 1, 0);
  for (const CyclicWord& w : words)
    for (Letter l : w.letters()) ++m[static_cast<std::size_t>(l.gen())];
  return m;
}

bool operator<(const CyclicSequence& a, const CyclicSequence& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  if (a.words.size() != b.words.size()) return a.words.size() < b.words.size();
  for (std::size_t i = 0; i < a.words.size(); ++i) {
    if (a.words[i] < b.words[i]) return true;
    if (b.words[i] < a.words[i]) return false;
  }
  return false;
}

std::size_t CyclicSequence::hash() const {
  std::size_t h = 0xc2b2ae3d27d4eb4full ^ words.size();
  for (const CyclicWord& w : words) h ^= w.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

CyclicSequence apply(const WhiteheadW2& m, const CyclicSequence& s) {
  if (m.rank() != s.rank)
    fail(ErrorKind::RankMismatch, "move rank " + std::to_string(m.rank()) +
                                      " vs sequence rank " + std::to_string(s.rank));
  std::vector<CyclicWord> out;
  out.reserve(s.words.size());
  for (const CyclicWord& w : s.words) out.push_back(apply(m, w));
  return CyclicSequence::canonicalize(s.rank, std::move(out));
}

std::vector<CyclicSequence> sequence_degree_orbit(const CyclicSequence& s, int k,
                                                  bool override_guard) {
  std::vector<WhiteheadW2> moves;
  if (k == 0) {
    moves = enumerate_w2_degree0(s.rank, override_guard);
  } else {
    for (const WhiteheadW2& m : enumerate_w2(s.rank, override_guard))
      if (m.degree() == k) moves.push_back(m);
  }
  const std::size_t len = s.total_length();
  std::unordered_set<CyclicSequence, CyclicSequenceHash> seen{s};
  std::deque<CyclicSequence> queue{s};
  while (!queue.empty()) {
    CyclicSequence cur = std::move(queue.front());
    queue.pop_front();
    for (const WhiteheadW2& m : moves) {
      CyclicSequence img = apply(m, cur);
      if (img.total_length() != len) continue;
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::vector<CyclicSequence> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wh
