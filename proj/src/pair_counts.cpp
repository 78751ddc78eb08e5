#include "wh/pair_counts.hpp"

namespace wh {

PairCountTable::PairCountTable(const CyclicWord& w)
    : rank_(w.rank()), source_length_(w.size()), m_(4u * rank_ * rank_, 0) {
  const std::size_t n = w.size();
  // adjacency (p, q) is the subword p q^{-1} for the pair (p, q^{-1});
  // the mirrored pattern is added below, once per unordered pair.
  std::vector<int> adj(m_.size(), 0);
  for (std::size_t t = 0; t < n; ++t) {
    Letter p = w.at(t);
    Letter q = w.cyclic_at(t + 1);
    ++adj[idx(p.code(), q.inverse().code())];
  }
  for (int xc = 0; xc < 2 * rank_; ++xc) {
    for (int yc = 0; yc < 2 * rank_; ++yc) {
      m_[idx(xc, yc)] = (xc == yc) ? adj[idx(xc, yc)] : adj[idx(xc, yc)] + adj[idx(yc, xc)];
    }
  }
}

long PairCountTable::set_count(LetterSet A, LetterSet B) const {
  long total = 0;
  for (std::uint64_t ab = A.bits(); ab; ab &= ab - 1) {
    const int ac = __builtin_ctzll(ab);
    for (std::uint64_t bb = B.bits(); bb; bb &= bb - 1)
      total += m_[idx(ac, __builtin_ctzll(bb))];
  }
  return total;
}

long PairCountTable::row_sum(Letter a) const {
  long total = 0;
  const int ac = a.code();
  for (int yc = 0; yc < 2 * rank_; ++yc) total += m_[idx(ac, yc)];
  return total;
}

}  // namespace wh
