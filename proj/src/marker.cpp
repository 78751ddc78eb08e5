#include "wh/marker.hpp"

namespace wh {

LowLetterFactorization factor_by_low_letters(const CyclicWord& u, int cut) {
  const int n = u.rank();
  if (cut < 1 || cut >= n)
    fail(ErrorKind::Precondition,
         "cut index must lie in 1.." + std::to_string(n - 1) + ", got " + std::to_string(cut));
  const std::size_t len = u.size();
  std::size_t anchor = len;
  for (std::size_t i = 0; i < len; ++i) {
    if (u.at(i).gen() <= cut) {
      anchor = i;
      break;
    }
  }
  if (anchor == len)
    fail(ErrorKind::NoLowLetters, "word " + u.text() + " contains no letter of index <= " +
                                      std::to_string(cut));

  LowLetterFactorization f;
  f.rank = n;
  f.cut = cut;
  std::size_t i = 0;
  while (i < len) {
    LowLetterFactorization::Piece piece;
    piece.head = u.cyclic_at(anchor + i);
    ++i;
    while (i < len && u.cyclic_at(anchor + i).gen() > cut) {
      piece.tail.push_back(u.cyclic_at(anchor + i));
      ++i;
    }
    f.pieces.push_back(std::move(piece));
  }
  return f;
}

int marked_rank(int n, int k) {
  int m = 3 * n + k;
  check_rank(m);
  return m;
}

namespace {

Letter head_marker(Letter y, int n) {
  return y.negative() ? Letter(n + y.gen()) : y;
}

Letter pair_marker(Letter y_next, int n) {
  return y_next.negative() ? Letter(2 * n + y_next.gen()) : Letter(3 * n + y_next.gen());
}

}  // namespace

MarkedSequence build_marked_sequence(const CyclicWord& u, int k) {
  const int n = u.rank();
  LowLetterFactorization f = factor_by_low_letters(u, k);
  const int m = marked_rank(n, k);

  std::vector<CyclicWord> words;
  words.reserve(f.pieces.size());
  for (std::size_t i = 0; i < f.pieces.size(); ++i) {
    const auto& piece = f.pieces[i];
    const Letter y_next = f.pieces[(i + 1) % f.pieces.size()].head;
    std::vector<Letter> v;
    v.reserve(2 * piece.tail.size() + 2);
    v.push_back(head_marker(piece.head, n));
    for (Letter l : piece.tail) v.push_back(l);
    v.push_back(pair_marker(y_next, n));
    for (auto it = piece.tail.rbegin(); it != piece.tail.rend(); ++it) v.push_back(it->inverse());
    CyclicWord w = CyclicWord::reduce(m, v);
    if (w.size() != 2 * piece.tail.size() + 2)
      fail(ErrorKind::InternalContradiction, "marker word collapsed under reduction");
    words.push_back(std::move(w));
  }

  MarkedSequence V;
  V.n = n;
  V.k = k;
  V.source = u;
  V.seq = CyclicSequence::canonicalize(m, std::move(words));
  if (V.total_length() != 2 * u.size())
    fail(ErrorKind::InternalContradiction, "marker sequence length is not twice the source length");
  return V;
}

WhiteheadW2 lift_degree_k(const WhiteheadW2& sigma, int n, int k) {
  if (sigma.rank() != n)
    fail(ErrorKind::RankMismatch, "move rank " + std::to_string(sigma.rank()) +
                                      " does not match the source rank " + std::to_string(n));
  if (sigma.degree() != k)
    fail(ErrorKind::DegreeMismatch, "move " + sigma.text() + " has degree " +
                                        std::to_string(sigma.degree()) + ", expected " +
                                        std::to_string(k));
  WhiteheadW2 norm = sigma.multiplier().negative() ? sigma.complement() : sigma;
  const int r = norm.multiplier().gen();
  if (r <= k)
    fail(ErrorKind::MultiplierIndex,
         "multiplier index " + std::to_string(r) + " is at or below the cut " + std::to_string(k) +
             "; the occurrence grading excludes such length-preserving moves");

  const int m = marked_rank(n, k);
  const LetterSet S = norm.set();
  LetterSet out;
  for (Letter l : S.letters()) {
    if (l.gen() > k) {
      out.insert(l);  // high letters appear two-sidedly in a degree-k set
    } else if (!l.negative()) {
      out.insert(l);
      out.insert(l.inverse());
      out.insert(Letter(2 * n + l.gen()));
      out.insert(Letter(-(2 * n + l.gen())));
    } else {
      out.insert(Letter(n + l.gen()));
      out.insert(Letter(-(n + l.gen())));
      out.insert(Letter(3 * n + l.gen()));
      out.insert(Letter(-(3 * n + l.gen())));
    }
  }
  WhiteheadW2 lifted(m, out, norm.multiplier());
  if (lifted.degree() != 0)
    fail(ErrorKind::InternalContradiction, "lift of a degree-" + std::to_string(k) +
                                               " move is not of degree 0");
  return lifted;
}

WhiteheadW2 lift_degree_k(const WhiteheadW2& sigma, const MarkedSequence& V) {
  return lift_degree_k(sigma, V.n, V.k);
}

namespace {

LetterSet marker_letters(int n) {
  LetterSet I;
  for (int g : {1, n + 1, 2 * n + 1, 3 * n + 1}) {
    I.insert(Letter(g));
    I.insert(Letter(-g));
  }
  return I;
}

LetterSet pair_set(int g) { return LetterSet{Letter(g), Letter(-g)}; }

}  // namespace

RestrictedW2 RestrictedW2::validate(const WhiteheadW2& alpha, int n) {
  const int m = marked_rank(n, 1);
  if (alpha.rank() != m)
    fail(ErrorKind::RankMismatch, "move rank " + std::to_string(alpha.rank()) +
                                      " does not match the extended rank " + std::to_string(m));
  const Letter s = alpha.multiplier();
  if (s.gen() < 2 || s.gen() > n)
    fail(ErrorKind::Restriction,
         "multiplier " + s.text() + " must be one of x2..x" + std::to_string(n) + " or inverses");
  LetterSet used;
  for (int g = 1; g <= n; ++g) {
    used.insert(Letter(g));
    used.insert(Letter(-g));
  }
  for (int g : {n + 1, 2 * n + 1, 3 * n + 1}) {
    used.insert(Letter(g));
    used.insert(Letter(-g));
  }
  if (!used.contains_all(alpha.set()))
    fail(ErrorKind::Restriction, "set " + alpha.set().text() + " uses letters outside the marker alphabet");

  const LetterSet I = marker_letters(n);
  const LetterSet IS = alpha.set() & I;
  MarkerPattern pattern;
  if (IS == I)
    pattern = MarkerPattern::Full;
  else if (IS == (pair_set(1) | pair_set(2 * n + 1)))
    pattern = MarkerPattern::PositiveSide;
  else if (IS == (pair_set(n + 1) | pair_set(3 * n + 1)))
    pattern = MarkerPattern::NegativeSide;
  else if (IS.empty())
    pattern = MarkerPattern::Disjoint;
  else
    fail(ErrorKind::Restriction,
         "set meets the marker letters in " + IS.text() + ", not one of the allowed patterns");
  return RestrictedW2{alpha, pattern};
}

RestrictedW2 lift_general(const WhiteheadW2& tau, int n) {
  if (tau.rank() != n)
    fail(ErrorKind::RankMismatch, "move rank " + std::to_string(tau.rank()) +
                                      " does not match the source rank " + std::to_string(n));
  if (tau.multiplier().gen() == 1)
    fail(ErrorKind::MultiplierIndex, "multiplier x1^{+-1} cannot be extended over the markers");
  const int m = marked_rank(n, 1);
  const LetterSet A = tau.set();
  const Letter x1(1);
  const bool pos = A.contains(x1), neg = A.contains(x1.inverse());
  LetterSet S = A;
  if (pos && neg) {
    S = S | pair_set(n + 1) | pair_set(2 * n + 1) | pair_set(3 * n + 1);
  } else if (pos) {
    S = S.with(x1.inverse()) | pair_set(2 * n + 1);
  } else if (neg) {
    S = S.without(x1.inverse()) | pair_set(n + 1) | pair_set(3 * n + 1);
  }
  return RestrictedW2::validate(WhiteheadW2(m, S, tau.multiplier()), n);
}

WhiteheadW2 project_restricted(const RestrictedW2& alpha, int n) {
  const LetterSet T = alpha.move.set().minus(marker_letters(n));
  LetterSet A = T;
  switch (alpha.pattern) {
    case MarkerPattern::Full:
      A = A.with(Letter(1)).with(Letter(-1));
      break;
    case MarkerPattern::PositiveSide:
      A = A.with(Letter(1));
      break;
    case MarkerPattern::NegativeSide:
      A = A.with(Letter(-1));
      break;
    case MarkerPattern::Disjoint:
      break;
  }
  return WhiteheadW2(n, A, alpha.move.multiplier());
}

WhiteheadW2 project_restricted(const WhiteheadW2& alpha, int n) {
  return project_restricted(RestrictedW2::validate(alpha, n), n);
}

MarkedSequence apply_to_sequence(const WhiteheadW2& aut, const MarkedSequence& V) {
  MarkedSequence out;
  out.n = V.n;
  out.k = V.k;
  out.source = V.source;
  out.seq = apply(aut, V.seq);  // rank checked inside
  return out;
}

}  // namespace wh
