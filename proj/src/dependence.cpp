#include "wh/dependence.hpp"

#include <algorithm>
#include <numeric>

namespace wh {

AdmissibleMoveIndex admissible_moves(const LevelSet& ls) {
  const int rank = ls.base.rank();
  AdmissibleMoveIndex idx;
  idx.rank = rank;
  // Witnesses are drawn from the part of the level set reachable by
  // length-preserving second-type moves alone.  Relabeled members permute
  // the occurrence profile and would admit moves that collapse the component
  // structure the worked examples exhibit; the relation is about second-type
  // chains, which preserve the profile.
  LevelSet core = level_set_w2(ls.base);
  std::vector<WhiteheadW2> all = enumerate_w2(rank, rank_guard_override());
  std::vector<bool> done(all.size(), false);
  std::vector<std::optional<CyclicWord>> witness(all.size());
  std::size_t remaining = all.size();
  for (const CyclicWord& v : core.members) {
    if (remaining == 0) break;
    PairCountTable counts(v);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (done[i]) continue;
      if (length_delta(all[i], counts) == 0) {
        done[i] = true;
        witness[i] = v;
        --remaining;
      }
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    if (witness[i]) idx.moves.emplace_back(all[i], *witness[i]);
  return idx;
}

DependenceQuery depends_on_detail(Letter x, Letter y, const AdmissibleMoveIndex& idx) {
  DependenceQuery q;
  bool any = false;
  bool all_contain = true;
  for (const auto& [m, w] : idx.moves) {
    Letter a = m.multiplier();
    if (a == x || a == x.inverse() || a == y || a == y.inverse()) continue;
    if (!m.set().contains(y) && !m.set().contains(y.inverse())) continue;
    any = true;
    if (!(m.set().contains(x) && m.set().contains(x.inverse()))) {
      all_contain = false;
      break;
    }
  }
  q.vacuous = !any;
  q.depends = !any || all_contain;
  return q;
}

bool depends_on(Letter x, Letter y, const AdmissibleMoveIndex& idx) {
  return depends_on_detail(x, y, idx).depends;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

DependenceGraph dependence_graph(const LevelSet& ls) {
  const int rank = ls.base.rank();
  AdmissibleMoveIndex idx = admissible_moves(ls);

  DependenceGraph g;
  g.rank = rank;
  const int letters = 2 * rank;
  g.adj.assign(static_cast<std::size_t>(letters), 0);
  g.vacuous_adj.assign(static_cast<std::size_t>(letters), 0);

  auto add_edge = [&](Letter x, Letter y, bool vac) {
    g.adj[static_cast<std::size_t>(x.code())] |= std::uint64_t{1} << y.code();
    g.adj[static_cast<std::size_t>(y.code())] |= std::uint64_t{1} << x.code();
    if (vac) {
      g.vacuous_adj[static_cast<std::size_t>(x.code())] |= std::uint64_t{1} << y.code();
      g.vacuous_adj[static_cast<std::size_t>(y.code())] |= std::uint64_t{1} << x.code();
    }
  };

  for (int c = 0; c < letters; ++c) {
    Letter x = Letter::from_code(c);
    add_edge(x, x.inverse(), false);
  }
  for (int cx = 0; cx < letters; ++cx) {
    for (int cy = cx + 1; cy < letters; ++cy) {
      Letter x = Letter::from_code(cx), y = Letter::from_code(cy);
      if (y == x.inverse()) continue;
      DependenceQuery fwd = depends_on_detail(x, y, idx);
      DependenceQuery bwd = depends_on_detail(y, x, idx);
      if (fwd.depends || bwd.depends) add_edge(x, y, fwd.vacuous || bwd.vacuous);
    }
  }

  UnionFind uf(letters);
  for (int c = 0; c < letters; ++c) {
    std::uint64_t row = g.adj[static_cast<std::size_t>(c)];
    while (row) {
      int d = __builtin_ctzll(row);
      uf.unite(c, d);
      row &= row - 1;
    }
  }
  // name components by the least generator index they contain
  g.component_id.assign(static_cast<std::size_t>(letters), 0);
  for (int c = 0; c < letters; ++c) {
    int root = uf.find(c);
    int least = rank + 1;
    for (int d = 0; d < letters; ++d)
      if (uf.find(d) == root) least = std::min(least, d / 2 + 1);
    g.component_id[static_cast<std::size_t>(c)] = least;
  }
  return g;
}

DependenceGraph dependence_graph(const CyclicWord& u) { return dependence_graph(level_set(u)); }

int DependenceGraph::component_count() const {
  std::vector<int> ids(component_id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return static_cast<int>(ids.size());
}

std::vector<std::vector<Letter>> DependenceGraph::components() const {
  std::map<int, std::vector<Letter>> by_id;
  for (int c = 0; c < 2 * rank; ++c)
    by_id[component_id[static_cast<std::size_t>(c)]].push_back(Letter::from_code(c));
  std::vector<std::vector<Letter>> out;
  out.reserve(by_id.size());
  for (auto& [id, ls] : by_id) out.push_back(std::move(ls));
  return out;
}

std::string DependenceGraph::to_dot() const {
  auto name = [](Letter l) {
    std::string s = "x" + std::to_string(l.gen());
    if (l.negative()) s += "'";
    return s;
  };
  std::string dot = "graph dependence {\n";
  for (int c = 0; c < 2 * rank; ++c) {
    Letter l = Letter::from_code(c);
    dot += "  \"" + name(l) + "\" [component=" + std::to_string(component_of(l)) + "];\n";
  }
  for (int cx = 0; cx < 2 * rank; ++cx) {
    for (int cy = cx + 1; cy < 2 * rank; ++cy) {
      Letter x = Letter::from_code(cx), y = Letter::from_code(cy);
      if (!edge(x, y)) continue;
      std::string attrs;
      if (y == x.inverse())
        attrs = " [style=dashed]";
      else if (vacuous_edge(x, y))
        attrs = " [label=\"vacuous\"]";
      dot += "  \"" + name(x) + "\" -- \"" + name(y) + "\"" + attrs + ";\n";
    }
  }
  dot += "}\n";
  return dot;
}

SyllableDecomposition syllable_decompose(const CyclicWord& w, const DependenceGraph& g) {
  if (w.empty()) fail(ErrorKind::EmptyWord, "syllable decomposition of the empty word");
  if (w.rank() != g.rank) fail(ErrorKind::RankMismatch, "word and graph ranks differ");
  const std::size_t n = w.size();
  std::vector<int> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i] = g.component_of(w.at(i));

  SyllableDecomposition out;
  // start at the first position whose component differs from its cyclic
  // predecessor; a single-component word is one syllable
  std::size_t start = 0;
  bool boundary = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] != comp[(i + n - 1) % n]) {
      start = i;
      boundary = true;
      break;
    }
  }
  if (!boundary) {
    SyllableDecomposition::Factor f;
    for (std::size_t i = 0; i < n; ++i) f.letters.push_back(w.at(i));
    f.component = comp[0];
    out.factors.push_back(std::move(f));
  } else {
    std::size_t i = 0;
    while (i < n) {
      SyllableDecomposition::Factor f;
      f.component = comp[(start + i) % n];
      while (i < n && comp[(start + i) % n] == f.component) {
        f.letters.push_back(w.at((start + i) % n));
        ++i;
      }
      out.factors.push_back(std::move(f));
    }
  }
  std::vector<int> ids(g.component_id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) out.syllable_lengths[id] = 0;
  for (const auto& f : out.factors) ++out.syllable_lengths[f.component];
  return out;
}

bool HypothesisReport::all_true() const {
  auto ok = [](const std::optional<bool>& b) { return !b.has_value() || *b; };
  return ok(minimal) && ok(graded_occurrences) && ok(top_syllable_minimal) &&
         ok(lower_syllable_minimal);
}

HypothesisReport check_minimality_and_grading(const CyclicWord& u) {
  HypothesisReport rep;
  auto red = find_reducing_move(u);
  rep.minimal = !red.has_value();
  if (red) rep.reducing_move = *red;

  rep.graded_occurrences = true;
  std::vector<int> m = u.occurrence_profile();
  for (int i = 1; i <= u.rank() && *rep.graded_occurrences; ++i) {
    if (m[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = i + 1; j <= u.rank(); ++j) {
      if (m[static_cast<std::size_t>(j)] == 0) continue;
      if (m[static_cast<std::size_t>(i)] >= m[static_cast<std::size_t>(j)]) {
        rep.graded_occurrences = false;
        rep.grading_witness = std::make_pair(i, j);
        break;
      }
    }
  }
  return rep;
}

namespace {

// per-component syllable counts without materializing the factors; counts
// are indexed by component id (ids are generator indices, <= rank)
void syllable_counts(const CyclicWord& w, const DependenceGraph& g, std::vector<int>& out) {
  std::fill(out.begin(), out.end(), 0);
  const std::size_t n = w.size();
  if (n == 0) return;
  bool any_boundary = false;
  for (std::size_t i = 0; i < n; ++i) {
    int c = g.component_of(w.at(i));
    int prev = g.component_of(w.at((i + n - 1) % n));
    if (c != prev) {
      any_boundary = true;
      ++out[static_cast<std::size_t>(c)];  // each syllable counted at its start
    }
  }
  if (!any_boundary) out[static_cast<std::size_t>(g.component_of(w.at(0)))] = 1;
}

}  // namespace

HypothesisReport check_syllable_minimality(const CyclicWord& u, const LevelSet& ls,
                                           const DependenceGraph& g) {
  if (!ls.contains(u))
    fail(ErrorKind::Precondition, "word " + u.text() + " is not a member of the level set");
  HypothesisReport rep;
  const int n = u.rank();

  std::vector<int> mine(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> theirs(static_cast<std::size_t>(n) + 1, 0);
  syllable_counts(u, g, mine);

  const std::size_t top = static_cast<std::size_t>(g.component_of_gen(n));
  rep.top_syllable_minimal = true;
  for (const CyclicWord& v : ls.members) {
    syllable_counts(v, g, theirs);
    if (theirs[top] < mine[top]) {
      rep.top_syllable_minimal = false;
      rep.top_witness = v;
      break;
    }
  }

  rep.lower_syllable_minimal = true;
  for (int j = 1; j < n && *rep.lower_syllable_minimal; ++j) {
    const int cj = g.component_of_gen(j);
    bool distinct_from_higher = true;
    for (int k = j + 1; k <= n; ++k)
      if (g.component_of_gen(k) == cj) distinct_from_higher = false;
    if (!distinct_from_higher) continue;
    for (const CyclicWord& v : ls.members) {
      syllable_counts(v, g, theirs);
      bool matches_higher = true;
      for (int k = j + 1; k <= n && matches_higher; ++k) {
        std::size_t ck = static_cast<std::size_t>(g.component_of_gen(k));
        matches_higher = theirs[ck] == mine[ck];
      }
      if (!matches_higher) continue;
      if (theirs[static_cast<std::size_t>(cj)] < mine[static_cast<std::size_t>(cj)]) {
        rep.lower_syllable_minimal = false;
        rep.lower_witness = std::make_pair(j, v);
        break;
      }
    }
  }
  return rep;
}

HypothesisReport check_syllable_minimality(const CyclicWord& u) {
  LevelSet ls = level_set(u);
  DependenceGraph g = dependence_graph(ls);
  return check_syllable_minimality(u, ls, g);
}

HypothesisReport check_hypotheses(const CyclicWord& u) {
  HypothesisReport rep = check_minimality_and_grading(u);
  if (rep.minimal.value_or(false)) {
    LevelSet ls = level_set(u);
    DependenceGraph g = dependence_graph(ls);
    HypothesisReport syl = check_syllable_minimality(u, ls, g);
    rep.top_syllable_minimal = syl.top_syllable_minimal;
    rep.lower_syllable_minimal = syl.lower_syllable_minimal;
    rep.top_witness = syl.top_witness;
    rep.lower_witness = syl.lower_witness;
  }
  return rep;
}

}  // namespace wh
