#pragma once

// Test-side oracles, deliberately implemented on different algorithmic paths
// than the library code they check.

#include "wsne/auxgame.hpp"
#include "wsne/equilibrium.hpp"
#include "wsne/rational.hpp"
#include "wsne/ratlp.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace oracles {

using wsne::Rat;

// Shortest directed cycle via boolean matrix powers: the least d with a
// nonzero diagonal in A^d is the girth (a minimal closed walk cannot revisit
// a vertex). Independent of the library's BFS engine.
inline std::optional<int> girth_matrix_power(const std::vector<std::vector<char>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<std::vector<char>> pow = adj;
  for (int d = 1; d <= n; ++d) {
    if (d > 1) {
      std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          if (pow[i][k])
            for (int j = 0; j < n; ++j)
              if (adj[k][j]) next[i][j] = 1;
      pow = std::move(next);
    }
    for (int i = 0; i < n; ++i)
      if (pow[i][i]) return d;
  }
  return std::nullopt;
}

inline std::vector<std::vector<char>> unified_adjacency(const wsne::BipartiteDigraph& g) {
  int n = g.left_size + g.right_size;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int u = 0; u < g.left_size; ++u)
    for (int y = 0; y < g.right_size; ++y) {
      if (g.lr.get(u, y)) adj[u][g.left_size + y] = 1;
      if (g.rl.get(y, u)) adj[g.left_size + y][u] = 1;
    }
  return adj;
}

inline std::optional<int> girth_oracle(const wsne::BipartiteDigraph& g) {
  return girth_matrix_power(unified_adjacency(g));
}

// wsne_epsilon recomputed straight from the definition with explicit loops.
inline Rat wsne_eps_definition(const wsne::WinLoseGame& g, const wsne::Profile& prof) {
  std::vector<Rat> aq(g.m, Rat(0)), pb(g.n, Rat(0));
  for (int i = 0; i < g.m; ++i)
    for (int j = 0; j < g.n; ++j) {
      if (g.A.get(i, j)) aq[i] += prof.col.at(j);
      if (g.B.get(i, j)) pb[j] += prof.row.at(i);
    }
  Rat best_r(0), best_c(0), eps(0);
  for (const Rat& v : aq)
    if (v > best_r) best_r = v;
  for (const Rat& v : pb)
    if (v > best_c) best_c = v;
  for (int i = 0; i < g.m; ++i)
    if (prof.row.at(i) > 0) {
      Rat gap = best_r - aq[i];
      if (gap > eps) eps = gap;
    }
  for (int j = 0; j < g.n; ++j)
    if (prof.col.at(j) > 0) {
      Rat gap = best_c - pb[j];
      if (gap > eps) eps = gap;
    }
  return eps;
}

// All compositions of `den` over `parts` slots (entries may be zero), i.e.
// the 1/den probability grid over the designated support.
inline void grid_vectors(int parts, int den, std::vector<std::vector<Rat>>& out) {
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == parts - 1) {
      cur[pos] = left;
      std::vector<Rat> v;
      for (int c : cur) v.emplace_back(c, den);
      out.push_back(std::move(v));
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  rec(rec, 0, den);
}

// Designated-support epsilon of one side evaluated at a concrete q: the worst
// gap between the global best response and a designated row.
inline Rat row_side_eps_at(const wsne::WinLoseGame& g, const std::vector<int>& rows,
                           const std::vector<int>& cols, const std::vector<Rat>& q_on_cols) {
  std::vector<Rat> aq(g.m, Rat(0));
  for (size_t t = 0; t < cols.size(); ++t)
    for (int i = 0; i < g.m; ++i)
      if (g.A.get(i, cols[t])) aq[i] += q_on_cols[t];
  Rat best(0);
  for (const Rat& v : aq)
    if (v > best) best = v;
  Rat eps(0);
  for (int i : rows) {
    Rat gap = best - aq[i];
    if (gap > eps) eps = gap;
  }
  return eps;
}

inline Rat col_side_eps_at(const wsne::WinLoseGame& g, const std::vector<int>& rows,
                           const std::vector<int>& cols, const std::vector<Rat>& p_on_rows) {
  std::vector<Rat> pb(g.n, Rat(0));
  for (size_t t = 0; t < rows.size(); ++t) {
    for (int j = 0; j < g.n; ++j)
      if (g.B.get(rows[t], j)) pb[j] += p_on_rows[t];
  }
  Rat best(0);
  for (const Rat& v : pb)
    if (v > best) best = v;
  Rat eps(0);
  for (int j : cols) {
    Rat gap = best - pb[j];
    if (gap > eps) eps = gap;
  }
  return eps;
}

// Brute-force min-eps over a 1/den grid for the designated supports. Always
// an upper bound on the exact LP optimum; within 2/den of it for supports of
// size <= 2.
inline Rat grid_min_eps(const wsne::WinLoseGame& g, const wsne::SupportPair& sp, int den) {
  std::vector<std::vector<Rat>> qs, ps;
  grid_vectors(static_cast<int>(sp.cols.size()), den, qs);
  grid_vectors(static_cast<int>(sp.rows.size()), den, ps);
  std::optional<Rat> row_best, col_best;
  for (const auto& q : qs) {
    Rat e = row_side_eps_at(g, sp.rows, sp.cols, q);
    if (!row_best || e < *row_best) row_best = e;
  }
  for (const auto& p : ps) {
    Rat e = col_side_eps_at(g, sp.rows, sp.cols, p);
    if (!col_best || e < *col_best) col_best = e;
  }
  return *row_best > *col_best ? *row_best : *col_best;
}

// Exhaustive vertex enumeration for small LPs; the test-side optimality
// oracle. Returns nullopt when no feasible vertex exists.
inline std::optional<Rat> lp_vertex_optimum(const wsne::ratlp::LinearProgram& lp) {
  using wsne::ratlp::Relation;
  struct Plane {
    std::vector<Rat> a;
    Rat b;
  };
  std::vector<Plane> planes;
  for (const auto& c : lp.constraints) planes.push_back({c.coeffs, c.rhs});
  for (int j = 0; j < lp.num_vars; ++j) {
    std::vector<Rat> unit(lp.num_vars, Rat(0));
    unit[j] = 1;
    if (lp.lower[j]) planes.push_back({unit, *lp.lower[j]});
    if (lp.upper[j]) planes.push_back({unit, *lp.upper[j]});
  }
  int h = static_cast<int>(planes.size());
  int n = lp.num_vars;
  if (h < n) return std::nullopt;

  auto feasible = [&](const std::vector<Rat>& x) {
    for (int j = 0; j < n; ++j) {
      if (lp.lower[j] && x[j] < *lp.lower[j]) return false;
      if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
    }
    for (const auto& c : lp.constraints) {
      Rat lhs(0);
      for (int j = 0; j < n; ++j) lhs += c.coeffs[j] * x[j];
      if (c.rel == Relation::le && lhs > c.rhs) return false;
      if (c.rel == Relation::ge && lhs < c.rhs) return false;
      if (c.rel == Relation::eq && lhs != c.rhs) return false;
    }
    return true;
  };

  std::optional<Rat> best;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    // Cramer-style solve by elimination
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = planes[pick[i]].a[j];
      a[i][n] = planes[pick[i]].b;
    }
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (a[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) {
        singular = true;
        break;
      }
      std::swap(a[piv], a[col]);
      Rat p = a[col][col];
      for (int j = col; j <= n; ++j) a[col][j] /= p;
      for (int r = 0; r < n; ++r) {
        if (r == col || a[r][col] == 0) continue;
        Rat f = a[r][col];
        for (int j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
      }
    }
    if (!singular) {
      std::vector<Rat> x(n);
      for (int i = 0; i < n; ++i) x[i] = a[i][n];
      if (feasible(x)) {
        Rat v(0);
        for (int j = 0; j < n; ++j) v += lp.objective[j] * x[j];
        if (!best || v < *best) best = v;
      }
    }
    // next combination
    int t = n - 1;
    while (t >= 0 && pick[t] == h - n + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (int u = t + 1; u < n; ++u) pick[u] = pick[u - 1] + 1;
  }
  return best;
}

// Seeded random instances.
inline wsne::WinLoseGame random_game(int m, int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  wsne::WinLoseGame g(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (rng() & 1) g.A.set(i, j);
      if (rng() & 1) g.B.set(i, j);
    }
  return g;
}

inline std::vector<Rat> random_distribution(int dim, uint64_t seed, int den = 12) {
  std::mt19937_64 rng(seed);
  std::vector<int> cuts(dim, 0);
  int left = den;
  for (int i = 0; i < dim - 1; ++i) {
    cuts[i] = static_cast<int>(rng() % (left + 1));
    left -= cuts[i];
  }
  cuts[dim - 1] = left;
  std::vector<Rat> p;
  for (int c : cuts) p.emplace_back(c, den);
  return p;
}

}  // namespace oracles
