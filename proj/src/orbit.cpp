#include "wh/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <deque>
#include <unordered_set>

namespace wh {

namespace {

std::atomic<bool> g_guard_override{false};

bool contains_sorted(const std::vector<CyclicWord>& v, const CyclicWord& w) {
  auto it = std::lower_bound(v.begin(), v.end(), w);
  return it != v.end() && *it == w;
}

}  // namespace

void set_rank_guard_override(bool on) { g_guard_override.store(on); }
bool rank_guard_override() { return g_guard_override.load(); }

bool LevelSet::contains(const CyclicWord& w) const { return contains_sorted(members, w); }
bool DegreeOrbit::contains(const CyclicWord& w) const { return contains_sorted(members, w); }

std::optional<WhiteheadW2> find_reducing_move(const CyclicWord& w) {
  PairCountTable counts(w);
  for (const WhiteheadW2& m : enumerate_w2(w.rank(), rank_guard_override())) {
    if (length_delta(m, counts) < 0) return m;
  }
  return std::nullopt;
}

bool is_minimal(const CyclicWord& w) { return !find_reducing_move(w).has_value(); }

std::pair<CyclicWord, MoveChain> minimize(const CyclicWord& w) {
  CyclicWord cur = w;
  MoveChain chain;
  while (true) {
    auto red = find_reducing_move(cur);
    if (!red) break;
    cur = apply(*red, cur);
    chain.steps.emplace_back(*red);
  }
  return {cur, chain};
}

namespace {

void require_minimal(const CyclicWord& u, const char* op) {
  if (auto red = find_reducing_move(u))
    fail(ErrorKind::NotMinimal, std::string(op) + ": word " + u.text() +
                                    " is not of minimum orbit length (move " + red->text() +
                                    " shortens it); minimize first");
}

// Closure of {u} under the given length-preserving W2 moves.
std::vector<CyclicWord> w2_closure(const CyclicWord& u, const std::vector<WhiteheadW2>& moves) {
  std::unordered_set<CyclicWord, CyclicWordHash> seen{u};
  std::deque<CyclicWord> queue{u};
  while (!queue.empty()) {
    CyclicWord w = std::move(queue.front());
    queue.pop_front();
    for (const WhiteheadW2& m : moves) {
      CyclicWord img = apply(m, w);
      if (img.size() != w.size()) {
        if (img.size() < w.size())
          fail(ErrorKind::InternalContradiction,
               "length dropped below the minimum during closure; base was not minimal");
        continue;
      }
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  std::vector<CyclicWord> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LevelSet level_set_w2(const CyclicWord& u) {
  require_minimal(u, "level_set");
  return LevelSet{u, w2_closure(u, enumerate_w2(u.rank(), rank_guard_override()))};
}

LevelSet level_set(const CyclicWord& u) {
  // Every mixed W1/W2 chain rewrites as one relabeling after a W2 chain
  // ((A,a) pi = pi (pi^{-1}A, pi^{-1}a)), so the closure is the union of the
  // relabelings of the W2-only closure.
  LevelSet core = level_set_w2(u);
  std::unordered_set<CyclicWord, CyclicWordHash> seen(core.members.begin(), core.members.end());
  for (const WhiteheadW1& pi : enumerate_w1(u.rank(), rank_guard_override())) {
    for (const CyclicWord& w : core.members) seen.insert(apply(pi, w));
  }
  std::vector<CyclicWord> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return LevelSet{u, std::move(out)};
}

DegreeOrbit degree_restricted_orbit(const CyclicWord& u, int k) {
  require_minimal(u, "degree_restricted_orbit");
  std::vector<WhiteheadW2> moves;
  for (const WhiteheadW2& m : enumerate_w2(u.rank(), rank_guard_override()))
    if (m.degree() == k) moves.push_back(m);
  return DegreeOrbit{k, w2_closure(u, moves)};
}

std::vector<WhiteheadW2> derive_length_preserving_moves(const WhiteheadW2& sigma,
                                                        const WhiteheadW2& tau,
                                                        const CyclicWord& u) {
  if (sigma.rank() != u.rank() || tau.rank() != u.rank())
    fail(ErrorKind::RankMismatch, "moves and word must share a rank");
  if (apply(sigma, u).size() != u.size() || apply(tau, u).size() != u.size())
    fail(ErrorKind::Precondition, "both moves must preserve the length of u");

  const LetterSet A = sigma.set(), B = tau.set();
  const Letter m = sigma.multiplier(), b = tau.multiplier();
  const LetterSet E = A & B;

  std::vector<WhiteheadW2> derived;
  if (m == b) {
    derived.emplace_back(u.rank(), E, m);
  } else if (!B.contains(m) && !B.contains(m.inverse()) && !A.contains(b)) {
    derived.emplace_back(u.rank(), A.minus(E), m);
    derived.emplace_back(u.rank(), B.minus(E), b);
  } else {
    fail(ErrorKind::Precondition,
         "pair " + sigma.text() + ", " + tau.text() + " matches neither derivation pattern");
  }
  for (const WhiteheadW2& d : derived) {
    if (apply(d, u).size() != u.size())
      fail(ErrorKind::Precondition,
           "derived move " + d.text() + " changes |u|; u is not of minimum orbit length");
  }
  return derived;
}

MoveChain reorder_pair(const WhiteheadW2& s1_in, const WhiteheadW2& s2_in, const CyclicWord& u) {
  const int rank = u.rank();
  if (s1_in.rank() != rank || s2_in.rank() != rank)
    fail(ErrorKind::RankMismatch, "moves and word must share a rank");
  const int d1 = s1_in.degree();
  if (d1 <= s2_in.degree())
    fail(ErrorKind::Precondition, "reorder_pair requires deg of the first move (" +
                                      std::to_string(d1) + ") to exceed deg of the second (" +
                                      std::to_string(s2_in.degree()) + ")");
  const CyclicWord u1 = apply(s1_in, u);
  if (u1.size() != u.size())
    fail(ErrorKind::Precondition, "first move must preserve the length of u");
  const CyclicWord u2 = apply(s2_in, u1);
  if (u2.size() != u.size())
    fail(ErrorKind::Precondition, "the composition must preserve the length of u");

  // Normalize via complements so that the degree-attaining letter c lies in
  // the first set positively and misses the second set entirely.
  WhiteheadW2 s1 = s1_in, s2 = s2_in;
  const Letter c(d1);
  if (!s1.set().contains(c)) s1 = s1.complement();
  if (s2.set().contains(c) || s2.set().contains(c.inverse())) {
    if (!(s2.set().contains(c) && s2.set().contains(c.inverse())))
      fail(ErrorKind::InternalContradiction,
           "degree letter is one-sided in the smaller-degree set");
    s2 = s2.complement();
  }

  const LetterSet A = s1.set(), B = s2.set();
  const Letter a = s1.multiplier(), b = s2.multiplier();
  const LetterSet E = A & B;
  const LetterSet C = A.minus(E);
  const LetterSet D = B.minus(E);
  const LetterSet apm{a, a.inverse()};
  const bool a_in = B.contains(a), ainv_in = B.contains(a.inverse());
  if (a_in != ainv_in)
    fail(ErrorKind::InternalContradiction,
         "multiplier " + a.text() + " is one-sided in " + B.text() +
         "; the occurrence grading excludes this configuration");
  const bool b_in = A.contains(b), binv_in = A.contains(b.inverse());

  auto mk = [&](LetterSet S, Letter mult) { return WhiteheadW2(rank, S, mult); };
  std::vector<WhiteheadW2> chain;  // application order

  if (!a_in) {
    if (!b_in && !binv_in) {
      if (E.empty()) {
        if (b == a)
          chain = {mk(A | B, a)};
        else
          chain = {mk(B, b), mk(A, a)};
      } else if (b == a) {
        chain = {mk(E, a), mk(C | B, a)};
      } else if (b == a.inverse()) {
        chain = {mk(D, a.inverse()), mk(C, a)};
      } else {
        chain = {mk(E, a), mk(B, b), mk(C, a)};
      }
    } else if (!b_in && binv_in) {
      if (E.empty())
        chain = {mk(B, b), mk(A | B, a)};
      else
        chain = {mk(E, a), mk(B, b), mk(C | B, a)};
    } else if (b_in && !binv_in) {
      chain = {mk(D, a.inverse()), mk(B, b), mk(C, a)};
    } else {
      chain = {mk(D, a.inverse()), mk(B, b), mk(C | B, a)};
    }
  } else {
    if (!b_in && !binv_in) {
      chain = {mk(C | B, b), mk(A, a), mk(C, b.inverse())};
    } else if (!b_in && binv_in) {
      if (c != b.inverse())
        fail(ErrorKind::InternalContradiction,
             "configuration excluded by the occurrence grading (multiplier inside the larger "
             "set, degree letter not its inverse)");
      chain = {mk((C | B).with(b).minus(apm), a), mk(B, b), mk(E.with(b.inverse()), a)};
    } else if (b_in && !binv_in) {
      if (c != b)
        fail(ErrorKind::InternalContradiction,
             "configuration excluded by the occurrence grading (multiplier inside the larger "
             "set, degree letter not the smaller multiplier)");
      chain = {mk(C.without(b), a), mk(B, b), mk(D.with(b.inverse()).minus(apm), a.inverse())};
    } else {
      LetterSet bpm{b, b.inverse()};
      chain = {mk(C.minus(bpm), b.inverse()), mk(A, a), mk((C | B).minus(bpm), b)};
    }
  }

  // The rewriting promises length preservation at every prefix and equality
  // of action; violations mean the inputs broke the grading precondition.
  CyclicWord cur = u;
  for (const WhiteheadW2& m : chain) {
    cur = apply(m, cur);
    if (cur.size() != u.size())
      fail(ErrorKind::InternalContradiction,
           "rewritten chain changes |u| at prefix through " + m.text());
  }
  if (cur != u2)
    fail(ErrorKind::InternalContradiction, "rewritten chain does not reproduce the composition");

  MoveChain out;
  for (const WhiteheadW2& m : chain) out.steps.emplace_back(m);
  return out;
}

AscendingReach::AscendingReach(const CyclicWord& u, int max_degree)
    : base_(u), max_degree_(max_degree) {
  require_minimal(u, "ascending_chain_search");
  std::vector<WhiteheadW2> moves;
  for (const WhiteheadW2& m : enumerate_w2(u.rank(), rank_guard_override()))
    if (m.degree() <= max_degree) moves.push_back(m);

  auto id_of = [&](const CyclicWord& w) {
    auto [it, fresh] = word_id_.try_emplace(w, static_cast<int>(words_.size()));
    if (fresh) {
      words_.push_back(w);
      visits_.emplace_back();
    }
    return it->second;
  };

  auto min_floor = [&](int wid) {
    int best = INT_MAX;
    for (const Visit& v : visits_[static_cast<std::size_t>(wid)]) best = std::min(best, v.floor);
    return best;
  };

  int base_id = id_of(u);
  visits_[static_cast<std::size_t>(base_id)].push_back(Visit{0, -1, -1, std::nullopt});
  std::deque<State> queue{State{base_id, 0}};
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    const CyclicWord w = words_[static_cast<std::size_t>(s.word_id)];
    for (const WhiteheadW2& m : moves) {
      const int d = m.degree();
      if (d < s.floor) continue;
      CyclicWord img = apply(m, w);
      if (img.size() != w.size()) continue;
      int nid = id_of(img);
      if (d < min_floor(nid)) {
        visits_[static_cast<std::size_t>(nid)].push_back(Visit{d, s.word_id, s.floor, m});
        queue.push_back(State{nid, d});
      }
    }
  }
}

bool AscendingReach::reached(const CyclicWord& v) const {
  auto it = word_id_.find(v);
  return it != word_id_.end() && !visits_[static_cast<std::size_t>(it->second)].empty();
}

std::vector<CyclicWord> AscendingReach::reached_words() const {
  std::vector<CyclicWord> out;
  out.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (!visits_[i].empty()) out.push_back(words_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MoveChain> AscendingReach::chain_to(const CyclicWord& v) const {
  auto it = word_id_.find(v);
  if (it == word_id_.end() || visits_[static_cast<std::size_t>(it->second)].empty())
    return std::nullopt;
  std::vector<WhiteheadW2> rev;
  int wid = it->second;
  int floor = visits_[static_cast<std::size_t>(wid)].front().floor;
  while (true) {
    const Visit* visit = nullptr;
    for (const Visit& cand : visits_[static_cast<std::size_t>(wid)])
      if (cand.floor == floor) visit = &cand;
    if (visit == nullptr || !visit->move.has_value()) break;  // start state
    rev.push_back(*visit->move);
    wid = visit->parent_word;
    floor = visit->parent_floor;
  }
  MoveChain chain;
  chain.ascending = true;
  for (auto rit = rev.rbegin(); rit != rev.rend(); ++rit) chain.steps.emplace_back(*rit);
  return chain;
}

std::optional<MoveChain> ascending_chain_search(const CyclicWord& u, const CyclicWord& v,
                                                int max_degree) {
  if (u == v) {
    MoveChain empty;
    empty.ascending = true;
    return empty;
  }
  AscendingReach reach(u, max_degree);
  return reach.chain_to(v);
}

namespace {

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
  if (a != 0 && b > ULLONG_MAX / a) return ULLONG_MAX;
  return a * b;
}

}  // namespace

ProductBoundReport product_bound_check(const CyclicWord& u) {
  require_minimal(u, "product_bound_check");
  ProductBoundReport rep;
  rep.rank = u.rank();
  rep.u = u;
  rep.N = level_set(u).count();
  unsigned long long product = 1;
  for (int k = 0; k < u.rank(); ++k) {
    unsigned long long nk = degree_restricted_orbit(u, k).count();
    rep.Nk.push_back(nk);
    product = sat_mul(product, nk);
  }
  rep.C = enumerate_w1(u.rank(), rank_guard_override()).size();
  rep.bound_ok = rep.N <= sat_mul(rep.C, product);
  return rep;
}

}  // namespace wh
