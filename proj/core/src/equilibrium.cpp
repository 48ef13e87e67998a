#include "wsne/equilibrium.hpp"

#include "wsne/parallel.hpp"
#include "wsne/subsets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wsne {

MixedStrategy::MixedStrategy(std::vector<Rat> probs) : p_(std::move(probs)) {
  Rat sum = 0;
  for (const Rat& v : p_) {
    if (v < 0) throw std::invalid_argument("MixedStrategy: negative probability");
    sum += v;
  }
  if (sum != 1) throw std::invalid_argument("MixedStrategy: probabilities must sum to 1");
}

MixedStrategy MixedStrategy::pure(int dim, int index) {
  std::vector<Rat> p(dim);
  p.at(index) = 1;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform_on(int dim, const std::vector<int>& support) {
  if (support.empty()) throw std::invalid_argument("uniform_on: empty support");
  std::vector<Rat> p(dim);
  Rat w(1, static_cast<int>(support.size()));
  for (int i : support) p.at(i) = w;
  return MixedStrategy(std::move(p));
}

std::vector<int> MixedStrategy::support() const {
  std::vector<int> s;
  for (int i = 0; i < dim(); ++i)
    if (p_[i] > 0) s.push_back(i);
  return s;
}

namespace {

void check_profile(const WinLoseGame& g, const Profile& prof) {
  if (prof.row.dim() != g.m || prof.col.dim() != g.n)
    throw std::invalid_argument("profile dimensions do not match the game");
}

void check_support_pair(const WinLoseGame& g, const SupportPair& sp) {
  auto check = [](const std::vector<int>& s, int limit, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string(what) + ": empty support");
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= limit)
        throw std::invalid_argument(std::string(what) + ": index out of range");
      if (i > 0 && s[i] <= s[i - 1])
        throw std::invalid_argument(std::string(what) + ": indices must be strictly increasing");
    }
  };
  check(sp.rows, g.m, "row support");
  check(sp.cols, g.n, "column support");
}

}  // namespace

std::vector<Rat> row_payoffs(const WinLoseGame& g, const MixedStrategy& q) {
  if (q.dim() != g.n) throw std::invalid_argument("row_payoffs: dimension mismatch");
  std::vector<Rat> out(g.m);
  for (int j = 0; j < g.n; ++j) {
    const Rat& w = q.at(j);
    if (w == 0) continue;
    for (int i = 0; i < g.m; ++i)
      if (g.A.get(i, j)) out[i] += w;
  }
  return out;
}

std::vector<Rat> col_payoffs(const WinLoseGame& g, const MixedStrategy& p) {
  if (p.dim() != g.m) throw std::invalid_argument("col_payoffs: dimension mismatch");
  std::vector<Rat> out(g.n);
  for (int i = 0; i < g.m; ++i) {
    const Rat& w = p.at(i);
    if (w == 0) continue;
    auto row = g.B.row(i);
    for (int wd = 0; wd < static_cast<int>(row.size()); ++wd) {
      uint64_t bits = row[wd];
      while (bits) {
        int j = wd * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        out[j] += w;
      }
    }
  }
  return out;
}

Rat wsne_epsilon(const WinLoseGame& g, const Profile& prof) {
  check_profile(g, prof);
  auto rp = row_payoffs(g, prof.col);
  auto cp = col_payoffs(g, prof.row);
  Rat best_row = 0, best_col = 0;
  for (const Rat& v : rp)
    if (v > best_row) best_row = v;
  for (const Rat& v : cp)
    if (v > best_col) best_col = v;
  Rat eps = 0;
  for (int i = 0; i < g.m; ++i)
    if (prof.row.at(i) > 0 && best_row - rp[i] > eps) eps = best_row - rp[i];
  for (int j = 0; j < g.n; ++j)
    if (prof.col.at(j) > 0 && best_col - cp[j] > eps) eps = best_col - cp[j];
  return eps;
}

namespace {

// Bit pattern of one payoff line restricted to a support (support sizes are
// capped at 63 so patterns fit a word).
uint64_t restrict_pattern(const BitMatrix& mat, int line, const std::vector<int>& support,
                          bool by_row) {
  uint64_t mask = 0;
  for (size_t t = 0; t < support.size(); ++t) {
    bool bit = by_row ? mat.get(line, support[t]) : mat.get(support[t], line);
    if (bit) mask |= uint64_t{1} << t;
  }
  return mask;
}

// Shared shape of the two support LPs: distribution variables over `dist`
// indices plus eps, constraints "every designated pattern within eps of every
// achievable pattern".
ratlp::LinearProgram pattern_lp(const std::vector<uint64_t>& achievable,
                                const std::vector<uint64_t>& designated, int width) {
  ratlp::LinearProgram lp(width + 1);
  const int eps = width;
  for (int j = 0; j < width; ++j) lp.lower[j] = Rat(0);
  lp.lower[eps] = Rat(0);
  lp.upper[eps] = Rat(1);
  lp.objective[eps] = 1;
  {
    std::vector<Rat> ones(width + 1);
    for (int j = 0; j < width; ++j) ones[j] = 1;
    lp.add_constraint(std::move(ones), ratlp::Relation::eq, Rat(1));
  }
  std::set<std::pair<uint64_t, uint64_t>> seen;
  for (uint64_t d : designated)
    for (uint64_t a : achievable) {
      if (a == d || !seen.insert({d, a}).second) continue;
      std::vector<Rat> row(width + 1);
      for (int t = 0; t < width; ++t) {
        int diff = static_cast<int>((a >> t) & 1) - static_cast<int>((d >> t) & 1);
        if (diff) row[t] = diff;
      }
      row[eps] = -1;
      lp.add_constraint(std::move(row), ratlp::Relation::le, Rat(0));
    }
  return lp;
}

}  // namespace

ratlp::LinearProgram build_row_support_lp(const WinLoseGame& g, const SupportPair& sp) {
  check_support_pair(g, sp);
  if (sp.cols.size() > 63 || sp.rows.size() > 63)
    throw std::invalid_argument("support sizes above 63 are not supported");
  // Row player: patterns of A rows restricted to the column support.
  std::vector<uint64_t> achievable;
  {
    std::set<uint64_t> pats;
    for (int l = 0; l < g.m; ++l) pats.insert(restrict_pattern(g.A, l, sp.cols, true));
    achievable.assign(pats.begin(), pats.end());
  }
  std::vector<uint64_t> designated;
  for (int i : sp.rows) designated.push_back(restrict_pattern(g.A, i, sp.cols, true));
  return pattern_lp(achievable, designated, static_cast<int>(sp.cols.size()));
}

ratlp::LinearProgram build_col_support_lp(const WinLoseGame& g, const SupportPair& sp) {
  check_support_pair(g, sp);
  if (sp.cols.size() > 63 || sp.rows.size() > 63)
    throw std::invalid_argument("support sizes above 63 are not supported");
  // Column player: patterns of B columns restricted to the row support.
  std::vector<uint64_t> achievable;
  {
    std::set<uint64_t> pats;
    for (int l = 0; l < g.n; ++l) pats.insert(restrict_pattern(g.B, l, sp.rows, false));
    achievable.assign(pats.begin(), pats.end());
  }
  std::vector<uint64_t> designated;
  for (int j : sp.cols) designated.push_back(restrict_pattern(g.B, j, sp.rows, false));
  return pattern_lp(achievable, designated, static_cast<int>(sp.rows.size()));
}

EpsResult min_eps_for_supports(const WinLoseGame& g, const SupportPair& sp) {
  auto row_lp = build_row_support_lp(g, sp);
  auto col_lp = build_col_support_lp(g, sp);
  auto row_sol = ratlp::solve(row_lp);
  auto col_sol = ratlp::solve(col_lp);
  // eps = 1 with any distribution is always feasible in a win-lose game.
  if (row_sol.status != ratlp::LpStatus::optimal || col_sol.status != ratlp::LpStatus::optimal)
    throw std::logic_error("min_eps_for_supports: support LP unexpectedly not optimal");

  std::vector<Rat> q(g.n), p(g.m);
  for (size_t t = 0; t < sp.cols.size(); ++t) q[sp.cols[t]] = row_sol.x[t];
  for (size_t t = 0; t < sp.rows.size(); ++t) p[sp.rows[t]] = col_sol.x[t];
  EpsResult res;
  res.eps = std::max(row_sol.value, col_sol.value);
  res.witness = Profile{MixedStrategy(std::move(p)), MixedStrategy(std::move(q))};
  res.supports = sp;
  return res;
}

namespace {

// Enumeration key order for tie-breaking: lexicographically smallest
// (S1, S2), sequences compared element-wise.
bool support_pair_less(const SupportPair& a, const SupportPair& b) {
  if (a.rows != b.rows) return a.rows < b.rows;
  return a.cols < b.cols;
}

struct SearchCandidate {
  bool has = false;
  EpsResult result;
};

void offer(SearchCandidate& best, EpsResult&& cand) {
  if (!best.has || cand.eps < best.result.eps ||
      (cand.eps == best.result.eps && support_pair_less(cand.supports, best.result.supports))) {
    best.result = std::move(cand);
    best.has = true;
  }
}

}  // namespace

SearchResult best_wsne_up_to_support(const WinLoseGame& g, int s, uint64_t budget, int jobs) {
  if (s < 1 || s > std::min(g.m, g.n))
    throw std::invalid_argument("best_wsne_up_to_support: require 1 <= s <= min(m,n)");

  // Saturating item counts: anything past the cap is far beyond any budget,
  // so precision there is irrelevant.
  constexpr uint64_t cap = uint64_t{1} << 61;
  auto sat_mul = [](uint64_t a, uint64_t b) -> uint64_t {
    if (a != 0 && b > cap / a) return cap;
    uint64_t r = a * b;
    return r > cap ? cap : r;
  };

  // Blocks of fixed support sizes, ordered by (|S1|, |S2|); inside a block
  // pairs run in colex order of S1, then S2.
  struct Block {
    int s1, s2;
    uint64_t count1, count2, items, offset;
  };
  std::vector<Block> blocks;
  uint64_t total = 0;
  for (int s1 = 1; s1 <= s; ++s1)
    for (int s2 = 1; s2 <= s; ++s2) {
      Block b{s1, s2, binom_sat(g.m, s1), binom_sat(g.n, s2), 0, total};
      b.items = sat_mul(b.count1, b.count2);
      blocks.push_back(b);
      total = std::min(cap, total + b.items);
    }
  uint64_t inspect = std::min(total, budget);

  auto chunk = [&](IndexRange r) -> SearchCandidate {
    SearchCandidate best;
    if (r.begin >= r.end) return best;
    size_t bi = 0;
    while (bi + 1 < blocks.size() && blocks[bi + 1].offset <= r.begin) ++bi;
    uint64_t idx = r.begin;
    while (idx < r.end && bi < blocks.size()) {
      const Block& b = blocks[bi];
      uint64_t local = idx - b.offset;
      std::vector<int> s1set = subset_unrank_colex(local / b.count2, b.s1);
      std::vector<int> s2set = subset_unrank_colex(local % b.count2, b.s2);
      uint64_t block_end = std::min(r.end, b.offset + b.items);
      for (; idx < block_end; ++idx) {
        offer(best, min_eps_for_supports(g, SupportPair{s1set, s2set}));
        if (!next_subset_colex(s2set, g.n)) {
          s2set = first_subset(b.s2);
          next_subset_colex(s1set, g.m);
        }
      }
      ++bi;
    }
    return best;
  };

  auto candidates = map_ranges(inspect, jobs, chunk);
  SearchCandidate best;
  for (auto& c : candidates)
    if (c.has) offer(best, std::move(c.result));

  SearchResult res;
  res.best = std::move(best.result);
  res.exhaustive = inspect == total;
  res.inspected = inspect;
  res.total = total;
  return res;
}

NoSmallWsneCertificate certify_no_small_wsne(const WinLoseGame& g, int s,
                                             const Rat& eps_threshold,
                                             const Tournament* t, int construction_k,
                                             uint64_t budget, int jobs) {
  if (s < 1) throw std::invalid_argument("certify_no_small_wsne: s must be positive");
  if (eps_threshold > 1)
    throw std::invalid_argument(
        "certify_no_small_wsne: thresholds above 1 are unprovable in win-lose games");
  NoSmallWsneCertificate cert;
  cert.s = s;
  cert.threshold = eps_threshold;
  BipartiteDigraph d = game_to_digraph(g);

  bool covered = true;
  for (int size = 1; size <= s && covered; ++size) {
    KCoverageResult r = t ? check_k_covered_sufficient(*t, construction_k, size, jobs)
                          : check_k_covered_exact(d, size, budget, jobs);
    covered = r.status == CoverageStatus::covered;
    cert.coverage.push_back(std::move(r));
  }
  if (!covered) {
    cert.failure = "coverage hypothesis failed: some support of size <= s lacks a "
                   "payoff-1 best response";
    return cert;
  }

  cert.digon = has_digon(d);
  if (cert.digon) {
    cert.failure = "digon present";
    return cert;
  }

  cert.short_cycle = shortest_cycle(d, 2 * s);
  if (cert.short_cycle) {
    cert.failure = "directed cycle of length <= 2s present";
    return cert;
  }

  cert.certified = true;
  return cert;
}

}  // namespace wsne
