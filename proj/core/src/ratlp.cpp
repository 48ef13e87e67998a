#include "wsne/ratlp.hpp"

#include "wsne/subsets.hpp"

#include <algorithm>
#include <stdexcept>

namespace wsne::ratlp {

void LinearProgram::add_constraint(std::vector<Rat> coeffs, Relation rel, Rat rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw std::invalid_argument("LinearProgram: constraint width mismatch");
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

namespace {

// Standard-form translation of one original variable into nonnegative
// simplex variables.
struct VarMap {
  enum class Mode { shifted, flipped, split } mode = Mode::shifted;
  Rat base;      // x = base + y   |   x = base - y   |   x = y_pos - y_neg
  int y = -1;    // first simplex variable
  int y_neg = -1;
};

struct Tableau {
  // rows x (num_cols + 1); last column is the rhs
  std::vector<std::vector<Rat>> rows;
  std::vector<int> basis;   // column index basic in each row
  int num_cols = 0;

  Rat& at(int r, int c) { return rows[r][c]; }
  Rat& rhs(int r) { return rows[r][num_cols]; }

  void pivot(int r, int c) {
    Rat p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      Rat f = rows[i][c];
      if (f == 0) continue;
      for (int j = 0; j <= num_cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }
};

// Bland's rule over a cost row: entering = lowest-index eligible column with a
// negative reduced cost; leaving = lexicographically safe min-ratio row with
// the lowest basic variable index. Returns false on optimality, throws
// nothing; unboundedness is signalled through *unbounded.
bool simplex_iterate(Tableau& t, std::vector<Rat>& cost,
                     const std::vector<char>& allowed, bool* unbounded) {
  *unbounded = false;
  while (true) {
    int enter = -1;
    for (int j = 0; j < t.num_cols; ++j)
      if (allowed[j] && cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return true;
    int leave = -1;
    Rat best;
    for (size_t i = 0; i < t.rows.size(); ++i) {
      const Rat& a = t.rows[i][enter];
      if (a <= 0) continue;
      Rat ratio = t.rhs(static_cast<int>(i)) / a;
      if (leave < 0 || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = static_cast<int>(i);
        best = ratio;
      }
    }
    if (leave < 0) {
      *unbounded = true;
      return false;
    }
    Rat f = cost[enter];
    t.pivot(leave, enter);
    if (f != 0)
      for (int j = 0; j <= t.num_cols; ++j) {
        Rat& c = (j == t.num_cols) ? cost[t.num_cols] : cost[j];
        c -= f * t.rows[leave][j];
      }
  }
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  if (lp.num_vars < 1) throw std::invalid_argument("solve: LP has no variables");
  if (static_cast<int>(lp.objective.size()) != lp.num_vars ||
      static_cast<int>(lp.lower.size()) != lp.num_vars ||
      static_cast<int>(lp.upper.size()) != lp.num_vars)
    throw std::invalid_argument("solve: LP vector sizes mismatch num_vars");
  for (const auto& c : lp.constraints)
    if (static_cast<int>(c.coeffs.size()) != lp.num_vars)
      throw std::invalid_argument("solve: constraint width mismatch");

  // --- translate to standard form: minimize c.y, A y (rel) b, y >= 0 ---
  std::vector<VarMap> vmap(lp.num_vars);
  int ny = 0;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.lower[j]) {
      if (lp.upper[j] && *lp.upper[j] < *lp.lower[j]) return {LpStatus::infeasible, 0, {}};
      vmap[j] = {VarMap::Mode::shifted, *lp.lower[j], ny++, -1};
    } else if (lp.upper[j]) {
      vmap[j] = {VarMap::Mode::flipped, *lp.upper[j], ny++, -1};
    } else {
      vmap[j] = {VarMap::Mode::split, 0, ny, ny + 1};
      ny += 2;
    }
  }

  struct StdRow {
    std::vector<Rat> a;
    Relation rel;
    Rat b;
  };
  std::vector<StdRow> rows;
  auto translate = [&](const std::vector<Rat>& coeffs, Relation rel, const Rat& rhs) {
    StdRow r{std::vector<Rat>(ny), rel, rhs};
    for (int j = 0; j < lp.num_vars; ++j) {
      const Rat& a = coeffs[j];
      if (a == 0) continue;
      switch (vmap[j].mode) {
        case VarMap::Mode::shifted:
          r.a[vmap[j].y] += a;
          r.b -= a * vmap[j].base;
          break;
        case VarMap::Mode::flipped:
          r.a[vmap[j].y] -= a;
          r.b -= a * vmap[j].base;
          break;
        case VarMap::Mode::split:
          r.a[vmap[j].y] += a;
          r.a[vmap[j].y_neg] -= a;
          break;
      }
    }
    rows.push_back(std::move(r));
  };
  for (const auto& c : lp.constraints) translate(c.coeffs, c.rel, c.rhs);
  // upper bounds of shifted variables become explicit rows y <= u - l
  for (int j = 0; j < lp.num_vars; ++j)
    if (vmap[j].mode == VarMap::Mode::shifted && lp.upper[j]) {
      StdRow r{std::vector<Rat>(ny), Relation::le, *lp.upper[j] - *lp.lower[j]};
      r.a[vmap[j].y] = 1;
      rows.push_back(std::move(r));
    }

  int m = static_cast<int>(rows.size());
  // column layout: [y vars][slack/surplus][artificials]
  int nslack = 0;
  for (auto& r : rows)
    if (r.rel != Relation::eq) ++nslack;
  int total = ny + nslack + m;  // at most one artificial per row

  Tableau t;
  t.num_cols = total;
  t.rows.assign(m, std::vector<Rat>(total + 1));
  t.basis.assign(m, -1);
  std::vector<char> is_artificial(total, 0);
  int scol = ny, acol = ny + nslack;
  for (int i = 0; i < m; ++i) {
    auto& r = rows[i];
    bool flip = r.b < 0;
    for (int j = 0; j < ny; ++j) t.at(i, j) = flip ? -r.a[j] : r.a[j];
    t.rhs(i) = flip ? -r.b : r.b;
    Relation rel = r.rel;
    if (flip) rel = rel == Relation::le ? Relation::ge : (rel == Relation::ge ? Relation::le : Relation::eq);
    if (rel == Relation::le) {
      t.at(i, scol) = 1;
      t.basis[i] = scol++;
    } else if (rel == Relation::ge) {
      t.at(i, scol) = -1;
      ++scol;
      t.at(i, acol) = 1;
      is_artificial[acol] = 1;
      t.basis[i] = acol++;
    } else {
      t.at(i, acol) = 1;
      is_artificial[acol] = 1;
      t.basis[i] = acol++;
    }
  }

  std::vector<char> allowed(total, 1);

  // --- phase 1: minimize the artificial sum ---
  bool any_artificial = false;
  {
    std::vector<Rat> cost(total + 1);
    for (int j = 0; j < total; ++j)
      if (is_artificial[j]) {
        cost[j] = 1;
        any_artificial = true;
      }
    if (any_artificial) {
      for (int i = 0; i < m; ++i)
        if (is_artificial[t.basis[i]])
          for (int j = 0; j <= total; ++j) cost[j] -= t.rows[i][j];
      bool unbounded = false;
      simplex_iterate(t, cost, allowed, &unbounded);
      Rat artificial_sum = 0;
      for (int i = 0; i < m; ++i)
        if (is_artificial[t.basis[i]]) artificial_sum += t.rhs(i);
      if (artificial_sum != 0) return {LpStatus::infeasible, 0, {}};
      // pivot remaining (degenerate) artificials out, or drop redundant rows
      for (int i = m - 1; i >= 0; --i) {
        if (!is_artificial[t.basis[i]]) continue;
        int piv = -1;
        for (int j = 0; j < total && piv < 0; ++j)
          if (!is_artificial[j] && t.rows[i][j] != 0) piv = j;
        if (piv >= 0) {
          t.pivot(i, piv);
        } else {
          t.rows.erase(t.rows.begin() + i);
          t.basis.erase(t.basis.begin() + i);
          --m;
        }
      }
      for (int j = 0; j < total; ++j)
        if (is_artificial[j]) allowed[j] = 0;
    }
  }

  // --- phase 2 ---
  {
    std::vector<Rat> cost(total + 1);
    for (int j = 0; j < lp.num_vars; ++j) {
      const Rat& c = lp.objective[j];
      if (c == 0) continue;
      switch (vmap[j].mode) {
        case VarMap::Mode::shifted:
          cost[vmap[j].y] += c;
          break;
        case VarMap::Mode::flipped:
          cost[vmap[j].y] -= c;
          break;
        case VarMap::Mode::split:
          cost[vmap[j].y] += c;
          cost[vmap[j].y_neg] -= c;
          break;
      }
    }
    for (int i = 0; i < m; ++i) {
      Rat f = cost[t.basis[i]];
      if (f != 0)
        for (int j = 0; j <= total; ++j) cost[j] -= f * t.rows[i][j];
    }
    bool unbounded = false;
    simplex_iterate(t, cost, allowed, &unbounded);
    if (unbounded) return {LpStatus::unbounded, 0, {}};
  }

  // --- recover the original-space assignment ---
  std::vector<Rat> y(ny);
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < ny) y[t.basis[i]] = t.rhs(i);
  LpSolution sol;
  sol.status = LpStatus::optimal;
  sol.x.resize(lp.num_vars);
  for (int j = 0; j < lp.num_vars; ++j) {
    switch (vmap[j].mode) {
      case VarMap::Mode::shifted:
        sol.x[j] = vmap[j].base + y[vmap[j].y];
        break;
      case VarMap::Mode::flipped:
        sol.x[j] = vmap[j].base - y[vmap[j].y];
        break;
      case VarMap::Mode::split:
        sol.x[j] = y[vmap[j].y] - y[vmap[j].y_neg];
        break;
    }
  }
  sol.value = 0;
  for (int j = 0; j < lp.num_vars; ++j) sol.value += lp.objective[j] * sol.x[j];
  return sol;
}

namespace {

bool satisfies(const LinearProgram& lp, const std::vector<Rat>& x) {
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.lower[j] && x[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
  }
  for (const auto& c : lp.constraints) {
    Rat lhs = 0;
    for (int j = 0; j < lp.num_vars; ++j) lhs += c.coeffs[j] * x[j];
    if (c.rel == Relation::le && lhs > c.rhs) return false;
    if (c.rel == Relation::ge && lhs < c.rhs) return false;
    if (c.rel == Relation::eq && lhs != c.rhs) return false;
  }
  return true;
}

// Unique solution of an n x n rational system, if the matrix is nonsingular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b) {
  int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat p = a[col][col];
    for (int j = col; j < n; ++j) a[col][j] /= p;
    b[col] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rat f = a[r][col];
      if (f == 0) continue;
      for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

bool verify(const LinearProgram& lp, const LpSolution& claimed, uint64_t budget) {
  if (claimed.status != LpStatus::optimal) {
    LpSolution again = solve(lp);
    return again.status == claimed.status;
  }
  if (static_cast<int>(claimed.x.size()) != lp.num_vars) return false;
  if (!satisfies(lp, claimed.x)) return false;
  Rat obj = 0;
  for (int j = 0; j < lp.num_vars; ++j) obj += lp.objective[j] * claimed.x[j];
  if (obj != claimed.value) return false;

  // Optimality by vertex enumeration: only meaningful when the feasible
  // region is pointed, which is guaranteed if every variable carries a finite
  // bound on at least one side.
  for (int j = 0; j < lp.num_vars; ++j)
    if (!lp.lower[j] && !lp.upper[j]) return true;  // feasibility-only verify

  struct Plane {
    std::vector<Rat> a;
    Rat b;
  };
  std::vector<Plane> planes;
  for (const auto& c : lp.constraints) planes.push_back({c.coeffs, c.rhs});
  for (int j = 0; j < lp.num_vars; ++j) {
    std::vector<Rat> unit(lp.num_vars);
    unit[j] = 1;
    if (lp.lower[j]) planes.push_back({unit, *lp.lower[j]});
    if (lp.upper[j]) planes.push_back({unit, *lp.upper[j]});
  }
  int h = static_cast<int>(planes.size());
  int n = lp.num_vars;
  auto bases = binom_u64(h, n);
  if (!bases || *bases > budget) return true;  // too large: feasibility-only

  std::optional<Rat> best;
  std::vector<int> pick = first_subset(n);
  bool more = h >= n && n > 0;
  while (more) {
    std::vector<std::vector<Rat>> a(n);
    std::vector<Rat> b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = planes[pick[i]].a;
      b[i] = planes[pick[i]].b;
    }
    if (auto x = solve_square(std::move(a), std::move(b)); x && satisfies(lp, *x)) {
      Rat v = 0;
      for (int j = 0; j < n; ++j) v += lp.objective[j] * (*x)[j];
      if (!best || v < *best) best = v;
    }
    more = next_subset_lex(pick, h);
  }
  // The claimed point is feasible, so a pointed region has at least one
  // vertex; a bounded optimum must be attained at one of them.
  return best && *best == claimed.value;
}

}  // namespace wsne::ratlp
