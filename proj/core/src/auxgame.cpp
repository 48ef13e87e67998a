#include "wsne/auxgame.hpp"

#include "wsne/parallel.hpp"
#include "wsne/subsets.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace wsne {

ColumnIndexMap::ColumnIndexMap(int n_nodes, int k) : n_nodes_(n_nodes), k_(k) {
  if (k < 1 || k > n_nodes)
    throw std::invalid_argument("ColumnIndexMap: require 1 <= k <= n_nodes");
  auto c = binom_u64(n_nodes, k);
  if (!c) throw std::overflow_error("ColumnIndexMap: C(n,k) exceeds 64-bit index width");
  count_ = *c;
}

uint64_t ColumnIndexMap::rank(const NodeSet& s) const {
  if (s.size() != k_ || s.max_id() >= n_nodes_)
    throw std::invalid_argument("ColumnIndexMap::rank: not a k-subset of the node range");
  return subset_rank_colex(s.ids());
}

NodeSet ColumnIndexMap::unrank(uint64_t column) const {
  if (column >= count_) throw std::invalid_argument("ColumnIndexMap::unrank: column out of range");
  return NodeSet(subset_unrank_colex(column, k_));
}

std::pair<WinLoseGame, ColumnIndexMap> build_auxiliary_game(const Tournament& t, int k) {
  int n = t.size();
  if (k < 1 || k > n)
    throw std::invalid_argument("build_auxiliary_game: require 1 <= k <= n");
  ColumnIndexMap map(n, k);
  if (map.count() > static_cast<uint64_t>(std::numeric_limits<int>::max()))
    throw std::overflow_error("build_auxiliary_game: column count exceeds matrix capacity");
  int cols = static_cast<int>(map.count());

  WinLoseGame g(n, cols);
  std::vector<int> x = first_subset(k);
  std::vector<uint64_t> dom(t.in_neighbors(0).size());
  for (int c = 0; c < cols; ++c) {
    for (int v : x) g.B.set(v, c);
    dom.assign(t.in_neighbors(x[0]).begin(), t.in_neighbors(x[0]).end());
    for (int i = 1; i < k; ++i) and_into(dom, t.in_neighbors(x[i]));
    for (int w = 0; w < static_cast<int>(dom.size()); ++w) {
      uint64_t bits = dom[w];
      while (bits) {
        int u = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        g.A.set(u, c);
      }
    }
    next_subset_colex(x, n);
  }
  return {std::move(g), map};
}

BipartiteDigraph game_to_digraph(const WinLoseGame& g) {
  BipartiteDigraph d(g.m, g.n);
  d.lr = g.B;
  d.rl = g.A.transposed();
  return d;
}

WinLoseGame digraph_to_game(const BipartiteDigraph& d) {
  WinLoseGame g(d.left_size, d.right_size);
  g.B = d.lr;
  g.A = d.rl.transposed();
  return g;
}

namespace {

const BitMatrix& side_rows(const BipartiteDigraph& g, Side s) {
  return s == Side::left ? g.lr : g.rl;
}

int side_size(const BipartiteDigraph& g, Side s) {
  return s == Side::left ? g.left_size : g.right_size;
}

}  // namespace

std::optional<int> is_covered(const BipartiteDigraph& g, const VertexSet& w) {
  if (w.indices.empty()) throw std::invalid_argument("is_covered: empty vertex set");
  const BitMatrix& rows = side_rows(g, w.side);
  for (int v : w.indices)
    if (v < 0 || v >= rows.rows()) throw std::invalid_argument("is_covered: vertex out of range");
  std::vector<uint64_t> acc(rows.row(w.indices[0]).begin(), rows.row(w.indices[0]).end());
  for (size_t i = 1; i < w.indices.size(); ++i) and_into(acc, rows.row(w.indices[i]));
  int y = first_bit(acc);
  if (y < 0) return std::nullopt;
  return y;
}

KCoverageResult check_k_covered_exact(const BipartiteDigraph& g, int k,
                                      uint64_t budget, int jobs) {
  if (k < 1 || k > std::min(g.left_size, g.right_size))
    throw std::invalid_argument("check_k_covered_exact: require 1 <= k <= min(sides)");
  KCoverageResult res;
  res.mode = "exact";
  uint64_t left_total = binom_sat(g.left_size, k);
  uint64_t right_total = binom_sat(g.right_size, k);
  res.total = left_total + right_total;  // saturated values stay way above any budget
  uint64_t inspect = std::min(res.total, budget);
  res.inspected = inspect;

  // Item order: all left k-subsets in lex order, then all right ones. A chunk
  // reports the first uncovered item it sees; the earliest chunk wins, so the
  // witness is the global size-then-lex minimum regardless of scheduling.
  auto scan_side = [&](Side side, uint64_t lo, uint64_t hi) -> std::optional<uint64_t> {
    const BitMatrix& rows = side_rows(g, side);
    int n = side_size(g, side);
    std::vector<int> s = subset_unrank_lex(lo, n, k);
    std::vector<uint64_t> acc(rows.words_per_row());
    for (uint64_t r = lo; r < hi; ++r) {
      acc.assign(rows.row(s[0]).begin(), rows.row(s[0]).end());
      for (int i = 1; i < k; ++i) and_into(acc, rows.row(s[i]));
      if (!any_bit(acc)) return r;
      next_subset_lex(s, n);
    }
    return std::nullopt;
  };

  auto chunk = [&](IndexRange r) -> std::optional<uint64_t> {
    if (r.begin >= r.end) return std::nullopt;
    uint64_t b = r.begin, e = r.end;
    if (b < left_total) {
      auto f = scan_side(Side::left, b, std::min(e, left_total));
      if (f) return f;
    }
    if (e > left_total) {
      uint64_t rb = b > left_total ? b - left_total : 0;
      auto f = scan_side(Side::right, rb, e - left_total);
      if (f) return *f + left_total;
    }
    return std::nullopt;
  };

  auto found = map_ranges(inspect, jobs, chunk);
  for (auto& f : found)
    if (f) {
      Side side = *f < left_total ? Side::left : Side::right;
      uint64_t r = *f < left_total ? *f : *f - left_total;
      res.status = CoverageStatus::uncovered;
      res.witness = VertexSet{side, subset_unrank_lex(r, side_size(g, side), k)};
      return res;
    }
  res.status = inspect < res.total ? CoverageStatus::budget_exceeded : CoverageStatus::covered;
  if (res.status == CoverageStatus::budget_exceeded)
    res.note = "enumeration budget exhausted before a verdict";
  return res;
}

KCoverageResult check_k_covered_sufficient(const Tournament& t, int construction_k,
                                           int cover_k, int jobs) {
  KCoverageResult res;
  res.mode = "sufficient";
  if (cover_k < 1 || construction_k < 1)
    throw std::invalid_argument("check_k_covered_sufficient: sizes must be positive");
  if (cover_k > construction_k) {
    res.status = CoverageStatus::inconclusive;
    res.note = "row-side coverage by construction needs cover_k <= construction_k";
    return res;
  }
  long m = static_cast<long>(cover_k) * construction_k;
  if (m >= t.size()) {
    res.status = CoverageStatus::inconclusive;
    res.note = "cover_k * construction_k >= node count; domination cannot hold";
    return res;
  }
  auto dom = is_m_dominated(t, static_cast<int>(m), jobs);
  if (dom.dominated) {
    res.status = CoverageStatus::covered;
  } else {
    res.status = CoverageStatus::inconclusive;
    res.domination_witness = dom.witness;
    res.note = "tournament is not (cover_k * construction_k)-dominated; exact check required";
  }
  return res;
}

std::optional<std::pair<int, int>> has_digon(const BipartiteDigraph& g) {
  BitMatrix rlt = g.rl.transposed();  // rlt[u] = right vertices with an arc back to u
  std::vector<uint64_t> both(g.lr.words_per_row());
  for (int u = 0; u < g.left_size; ++u) {
    both.assign(g.lr.row(u).begin(), g.lr.row(u).end());
    and_into(both, rlt.row(u));
    int y = first_bit(both);
    if (y >= 0) return std::make_pair(u, y);
  }
  return std::nullopt;
}

namespace {

// One BFS from `src`, returning the shortest cycle through src of length
// <= cap (0 = unbounded) as a vertex list, if any. Settling order is
// deterministic, so so is the witness.
std::optional<std::vector<BVertex>> cycle_through(const BipartiteDigraph& g,
                                                  BVertex src, int cap,
                                                  const BitMatrix& lrt,
                                                  const BitMatrix& rlt) {
  const int L = g.left_size, R = g.right_size;
  std::vector<int> dist_l(L, -1), dist_r(R, -1), par_l(L, -1), par_r(R, -1);
  std::vector<int> frontier{src.index};
  bool frontier_left = src.side == Side::left;
  (frontier_left ? dist_l : dist_r)[src.index] = 0;

  // In-neighbours of src live on the opposite side; reaching one of them at
  // distance d closes a cycle of length d+1.
  const BitMatrix& into_src = src.side == Side::left ? rlt : lrt;
  auto closes = [&](int v) { return into_src.get(src.index, v); };

  int depth = 0;
  while (!frontier.empty()) {
    // The coming step settles vertices at distance depth+1; those close
    // cycles of length depth+2 at best.
    if (cap > 0 && depth + 2 > cap) break;
    std::vector<int> next;
    const BitMatrix& rows = frontier_left ? g.lr : g.rl;
    std::vector<int>& dist = frontier_left ? dist_r : dist_l;
    std::vector<int>& par = frontier_left ? par_r : par_l;
    for (int u : frontier) {
      auto row = rows.row(u);
      for (int w = 0; w < static_cast<int>(row.size()); ++w) {
        uint64_t bits = row[w];
        while (bits) {
          int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          if (v >= (frontier_left ? R : L)) break;
          if (dist[v] >= 0) continue;
          dist[v] = depth + 1;
          par[v] = u;
          next.push_back(v);
        }
      }
    }
    ++depth;
    // Cycle candidates appear on the side opposite src, i.e. when the newly
    // settled side differs from src's side.
    bool settled_left = !frontier_left;
    if (settled_left != (src.side == Side::left)) {
      for (int v : next)
        if (closes(v)) {
          std::vector<BVertex> cyc;
          Side s = settled_left ? Side::left : Side::right;
          int cur = v;
          while (!(s == src.side && cur == src.index)) {
            cyc.push_back({s, cur});
            int p = (s == Side::left) ? par_l[cur] : par_r[cur];
            s = (s == Side::left) ? Side::right : Side::left;
            cur = p;
          }
          cyc.push_back(src);
          std::reverse(cyc.begin(), cyc.end());
          return cyc;
        }
    }
    frontier = std::move(next);
    frontier_left = !frontier_left;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<BVertex>> shortest_cycle(const BipartiteDigraph& g, int max_len) {
  BitMatrix lrt = g.lr.transposed();
  BitMatrix rlt = g.rl.transposed();
  std::optional<std::vector<BVertex>> best;
  int cap = max_len;
  auto consider = [&](BVertex src) {
    if (best && best->size() == 2) return;  // digon is unbeatable
    auto c = cycle_through(g, src, cap, lrt, rlt);
    if (c && (!best || c->size() < best->size())) {
      best = c;
      cap = static_cast<int>(best->size()) - 1;  // only strictly shorter from here on
    }
  };
  for (int u = 0; u < g.left_size; ++u) consider({Side::left, u});
  for (int y = 0; y < g.right_size; ++y) consider({Side::right, y});
  return best;
}

std::optional<int> shortest_cycle_length(const BipartiteDigraph& g) {
  auto c = shortest_cycle(g, 0);
  if (!c) return std::nullopt;
  return static_cast<int>(c->size());
}

Rat union_bound_value(int N, int k) {
  if (k < 1) throw std::invalid_argument("union_bound_value: k must be positive");
  long k2 = static_cast<long>(k) * k;
  if (N <= k2) throw std::invalid_argument("union_bound_value: require N > k^2");
  Int cols = binom_big(N, k);               // n = C(N,k)
  Int collections = binom_big(cols, k);     // C(n,k)
  Int pow2 = Int(1) << static_cast<unsigned>(k2);
  Rat miss(pow2 - 1, pow2);                 // 1 - 2^(-k^2)
  Rat acc(collections);
  long e = N - k2;
  Rat base = miss;
  while (e > 0) {  // acc * base^e by squaring
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace wsne
