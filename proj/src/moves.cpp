#include "wh/moves.hpp"

#include <algorithm>
#include <numeric>

namespace wh {

WhiteheadW2::WhiteheadW2(int rank, LetterSet A, Letter a) : rank_(rank), set_(A), mult_(a) {
  check_rank(rank);
  check_letter(a, rank);
  if (!LetterSet::all(rank).contains_all(A))
    fail(ErrorKind::Rank, "set " + A.text() + " outside alphabet of rank " + std::to_string(rank));
  if (A.contains(a) || A.contains(a.inverse()))
    fail(ErrorKind::InvalidMove,
         "multiplier " + a.text() + " (or its inverse) lies in the set " + A.text());
}

int WhiteheadW2::degree() const {
  LetterSet os = set_.one_sided();
  if (os.empty()) return 0;
  int top = 63 - __builtin_clzll(os.bits());
  return top / 2 + 1;
}

WhiteheadW2 WhiteheadW2::complement() const {
  LetterSet bar = LetterSet::all(rank_).minus(set_).without(mult_).without(mult_.inverse());
  return WhiteheadW2(rank_, bar, mult_.inverse());
}

WhiteheadW1::WhiteheadW1(int rank, std::vector<Letter> images)
    : rank_(rank), images_(std::move(images)) {
  check_rank(rank);
  if (images_.size() != static_cast<std::size_t>(rank))
    fail(ErrorKind::InvalidMove, "expected " + std::to_string(rank) + " generator images");
  std::uint64_t seen = 0;
  for (Letter l : images_) {
    check_letter(l, rank);
    seen |= std::uint64_t{1} << (l.gen() - 1);
  }
  if (__builtin_popcountll(seen) != rank)
    fail(ErrorKind::InvalidMove, "images do not form a signed permutation");
}

WhiteheadW1 WhiteheadW1::identity(int rank) {
  std::vector<Letter> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(Letter(i));
  return WhiteheadW1(rank, std::move(images));
}

std::string WhiteheadW1::text() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ",";
    s += images_[i].text();
  }
  return s + "]";
}

CyclicWord apply(const WhiteheadW2& m, const CyclicWord& w) {
  if (m.rank() != w.rank())
    fail(ErrorKind::RankMismatch, "move rank " + std::to_string(m.rank()) + " vs word rank " +
                                      std::to_string(w.rank()));
  const Letter a = m.multiplier();
  const LetterSet A = m.set();
  std::vector<Letter> out;
  out.reserve(3 * w.size());
  for (Letter x : w.letters()) {
    bool in = A.contains(x);
    bool inv_in = A.contains(x.inverse());
    if (in && !inv_in) {
      out.push_back(x);
      out.push_back(a);
    } else if (!in && inv_in) {
      out.push_back(a.inverse());
      out.push_back(x);
    } else if (in && inv_in) {
      out.push_back(a.inverse());
      out.push_back(x);
      out.push_back(a);
    } else {
      out.push_back(x);
    }
  }
  return CyclicWord::reduce(w.rank(), out);
}

CyclicWord apply(const WhiteheadW1& m, const CyclicWord& w) {
  if (m.rank() != w.rank())
    fail(ErrorKind::RankMismatch, "move rank " + std::to_string(m.rank()) + " vs word rank " +
                                      std::to_string(w.rank()));
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w.letters()) out.push_back(m.image(x));
  return CyclicWord::reduce(w.rank(), out);
}

int length_delta(const WhiteheadW2& m, const PairCountTable& counts) {
  LetterSet grown = m.set().with(m.multiplier());
  long pairs = counts.set_count(grown, grown.complement_in(counts.rank()));
  return static_cast<int>(pairs - counts.row_sum(m.multiplier()));
}

int length_delta(const WhiteheadW2& m, const CyclicWord& w) {
  if (m.rank() != w.rank())
    fail(ErrorKind::RankMismatch, "move rank " + std::to_string(m.rank()) + " vs word rank " +
                                      std::to_string(w.rank()));
  return length_delta(m, PairCountTable(w));
}

namespace {

void check_guard(int rank, int guard, bool override_guard, const char* what) {
  check_rank(rank);
  if (rank > guard && !override_guard)
    fail(ErrorKind::RankGuard, std::string(what) + " enumeration at rank " + std::to_string(rank) +
                                   " exceeds the guard (" + std::to_string(guard) +
                                   "); pass the override flag to force it");
}

}  // namespace

std::vector<WhiteheadW2> enumerate_w2(int rank, bool override_guard) {
  check_guard(rank, kEnumerationGuard, override_guard, "whitehead move");
  const int letters = 2 * rank;
  std::vector<WhiteheadW2> out;
  out.reserve(static_cast<std::size_t>(letters) << (letters - 2));
  for (int mc = 0; mc < letters; ++mc) {
    Letter a = Letter::from_code(mc);
    std::vector<Letter> others;
    others.reserve(static_cast<std::size_t>(letters) - 2);
    for (int c = 0; c < letters; ++c) {
      Letter l = Letter::from_code(c);
      if (l != a && l != a.inverse()) others.push_back(l);
    }
    const std::uint64_t limit = std::uint64_t{1} << others.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      LetterSet A;
      std::uint64_t b = mask;
      while (b) {
        int t = __builtin_ctzll(b);
        A.insert(others[static_cast<std::size_t>(t)]);
        b &= b - 1;
      }
      out.emplace_back(rank, A, a);
    }
  }
  return out;
}

std::vector<WhiteheadW2> enumerate_w2_degree0(int rank, bool override_guard) {
  check_guard(rank, kDegree0EnumerationGuard, override_guard, "degree-0 move");
  const int letters = 2 * rank;
  std::vector<WhiteheadW2> out;
  out.reserve(static_cast<std::size_t>(letters) << (rank - 1));
  for (int mc = 0; mc < letters; ++mc) {
    Letter a = Letter::from_code(mc);
    std::vector<int> pairs;  // generator indices other than the multiplier's
    pairs.reserve(static_cast<std::size_t>(rank) - 1);
    for (int g = 1; g <= rank; ++g)
      if (g != a.gen()) pairs.push_back(g);
    const std::uint64_t limit = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      LetterSet A;
      std::uint64_t b = mask;
      while (b) {
        int t = __builtin_ctzll(b);
        A.insert(Letter(pairs[static_cast<std::size_t>(t)]));
        A.insert(Letter(-pairs[static_cast<std::size_t>(t)]));
        b &= b - 1;
      }
      out.emplace_back(rank, A, a);
    }
  }
  return out;
}

std::vector<WhiteheadW1> enumerate_w1(int rank, bool override_guard) {
  check_guard(rank, kEnumerationGuard, override_guard, "signed permutation");
  std::vector<int> perm(static_cast<std::size_t>(rank));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<WhiteheadW1> out;
  do {
    const std::uint64_t limit = std::uint64_t{1} << rank;
    for (std::uint64_t signs = 0; signs < limit; ++signs) {
      std::vector<Letter> images;
      images.reserve(static_cast<std::size_t>(rank));
      for (int i = 0; i < rank; ++i) {
        int g = perm[static_cast<std::size_t>(i)];
        images.push_back(Letter((signs >> i) & 1 ? -g : g));
      }
      out.emplace_back(rank, std::move(images));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CyclicWord apply(const Move& m, const CyclicWord& w) {
  return std::visit([&](const auto& inner) { return apply(inner, w); }, m.value);
}

std::vector<int> MoveChain::w2_degrees() const {
  std::vector<int> out;
  for (const Move& m : steps)
    if (const WhiteheadW2* w2 = m.w2()) out.push_back(w2->degree());
  return out;
}

CyclicWord apply(const MoveChain& chain, const CyclicWord& w) {
  CyclicWord cur = w;
  for (const Move& m : chain.steps) cur = apply(m, cur);
  return cur;
}

}  // namespace wh
