#pragma once

#include "wsne/bits.hpp"
#include "wsne/rational.hpp"
#include "wsne/tournament.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wsne {

/// {0,1}-payoff bimatrix game. A holds the row player's payoffs, B the
/// column player's.
struct WinLoseGame {
  int m = 0;  // rows
  int n = 0;  // columns
  BitMatrix A;
  BitMatrix B;

  WinLoseGame() = default;
  WinLoseGame(int m_, int n_) : m(m_), n(n_), A(m_, n_), B(m_, n_) {}
  bool operator==(const WinLoseGame&) const = default;
};

/// Directed bipartite graph; arcs run only between the two sides.
struct BipartiteDigraph {
  int left_size = 0;
  int right_size = 0;
  BitMatrix lr;  // left_size x right_size
  BitMatrix rl;  // right_size x left_size

  BipartiteDigraph() = default;
  BipartiteDigraph(int l, int r) : left_size(l), right_size(r), lr(l, r), rl(r, l) {}
  bool operator==(const BipartiteDigraph&) const = default;
};

enum class Side { left, right };

struct BVertex {
  Side side = Side::left;
  int index = 0;
  bool operator==(const BVertex&) const = default;
};

/// Same-side vertex collection (side is part of the type, so a mixed-side
/// query is unrepresentable).
struct VertexSet {
  Side side = Side::left;
  std::vector<int> indices;  // strictly increasing
};

/// Bijection between k-subsets of [0, n_nodes) and column indices
/// [0, C(n_nodes,k)), colexicographic on subsets.
class ColumnIndexMap {
 public:
  ColumnIndexMap() = default;
  /// Throws std::overflow_error if C(n_nodes,k) exceeds the index width.
  ColumnIndexMap(int n_nodes, int k);

  int k() const { return k_; }
  int n_nodes() const { return n_nodes_; }
  uint64_t count() const { return count_; }

  uint64_t rank(const NodeSet& s) const;
  NodeSet unrank(uint64_t column) const;

 private:
  int n_nodes_ = 0, k_ = 0;
  uint64_t count_ = 0;
};

/// Builds the auxiliary game of a tournament: one row per node, one column
/// per k-subset of nodes. B[i][X] = 1 iff i lies in X; A[i][X] = 1 iff i
/// dominates X.
std::pair<WinLoseGame, ColumnIndexMap> build_auxiliary_game(const Tournament& t, int k);

/// Game <-> digraph correspondence: arc (r_i, c_j) iff B[i][j] = 1 and arc
/// (c_j, r_i) iff A[i][j] = 1. The two functions are mutually inverse,
/// bit-exactly.
BipartiteDigraph game_to_digraph(const WinLoseGame& g);
WinLoseGame digraph_to_game(const BipartiteDigraph& d);

/// Smallest opposite-side vertex receiving an arc from every member of w,
/// or nullopt. w must be nonempty and in range.
std::optional<int> is_covered(const BipartiteDigraph& g, const VertexSet& w);

enum class CoverageStatus { covered, uncovered, inconclusive, budget_exceeded };

struct KCoverageResult {
  CoverageStatus status = CoverageStatus::inconclusive;
  std::string mode;  // "exact" or "sufficient"
  std::optional<VertexSet> witness;            // uncovered same-side k-set
  std::optional<NodeSet> domination_witness;   // sufficient mode diagnostic
  uint64_t inspected = 0;
  uint64_t total = 0;
  std::string note;
};

/// Exact check: enumerates every k-subset of the left side (lex order), then
/// of the right side, and reports the first uncovered one. Inspects at most
/// `budget` subsets; running out is reported as budget_exceeded, never as a
/// verdict.
KCoverageResult check_k_covered_exact(const BipartiteDigraph& g, int k,
                                      uint64_t budget = 1'000'000, int jobs = 1);

/// Sufficient condition for G(T, construction_k): the row side is covered by
/// construction (cover_k <= construction_k), and cover_k columns span at most
/// cover_k * construction_k nodes, so m-domination of the tournament at
/// m = cover_k * construction_k covers the column side. A true verdict implies
/// the exact check would also say covered; anything else is inconclusive.
KCoverageResult check_k_covered_sufficient(const Tournament& t, int construction_k,
                                           int cover_k, int jobs = 1);

/// Smallest (left,right) pair joined by arcs both ways, or nullopt.
std::optional<std::pair<int, int>> has_digon(const BipartiteDigraph& g);

/// Directed cycle of minimum length as a vertex list (closing arc implied),
/// restricted to length <= max_len when max_len > 0. BFS from every vertex.
std::optional<std::vector<BVertex>> shortest_cycle(const BipartiteDigraph& g,
                                                   int max_len = 0);

/// Length of the shortest directed cycle (always even), nullopt if acyclic.
std::optional<int> shortest_cycle_length(const BipartiteDigraph& g);

/// Exact value of C(C(N,k), k) * ((2^(k^2) - 1) / 2^(k^2))^(N - k^2), the
/// union-bound expression whose value below 1 certifies that a k-covered
/// instance exists on N nodes. Requires N > k^2.
Rat union_bound_value(int N, int k);

/// Base of the logarithms in the asymptotic inequality check. The natural
/// base reproduces e^(k^2 log 2) = 2^(k^2); base two turns that factor into
/// e^(k^2).
enum class LogBase { natural, two };

/// Certified evaluation of  e^(k^2 log 2) * k * log n < n^(1/k)  with
/// outward-rounded interval arithmetic: true only when the inequality holds
/// for certain. Requires n >= 2, k >= 1.
bool check_asymptotic_inequality(int64_t n, int k, LogBase base = LogBase::natural);

}  // namespace wsne
