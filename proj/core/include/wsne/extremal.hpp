#pragma once

#include "wsne/auxgame.hpp"
#include "wsne/equilibrium.hpp"
#include "wsne/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wsne {

/// Bipartite digraph with positive rational vertex weights summing to 1 on
/// each side.
struct WeightedBipartiteDigraph {
  BipartiteDigraph graph;
  std::vector<Rat> left_weights;
  std::vector<Rat> right_weights;
};

/// Throws std::invalid_argument unless weights are positive, match the side
/// sizes and sum to exactly 1 per side.
void validate_weighted(const WeightedBipartiteDigraph& w);

/// Pivot-relative decomposition of a bipartite digraph: out-neighbours A1,
/// in-neighbours B1, two-arc-path sources B2, and the untouched remainder C1
/// of the side opposite the pivot. Ratios are normalized by the size of the
/// side each set lives in.
struct NeighborhoodDecomposition {
  BVertex pivot;
  std::vector<int> a1, b1, b2, c1;
  Rat alpha1, beta1, beta2, gamma1;
};

/// Loop-free digraph; digons permitted.
struct GeneralDigraph {
  int n = 0;
  BitMatrix arcs;  // n x n

  GeneralDigraph() = default;
  explicit GeneralDigraph(int n_) : n(n_), arcs(n_, n_) {}
  void add_arc(int u, int v);
};

/// Minimum in-degree over both sides (0 for an arcless graph).
int min_in_degree(const BipartiteDigraph& h);

/// Shortest directed cycle of length <= max_len (even), as a vertex list.
std::optional<std::vector<BVertex>> has_short_cycle(const BipartiteDigraph& h, int max_len);

enum class ChProperty { cycle_le_4, pure_4_cycle };
enum class ChVerdict { holds, counterexample, budget_exceeded };

struct ChResult {
  ChVerdict verdict = ChVerdict::budget_exceeded;
  std::optional<BipartiteDigraph> counterexample;
  uint64_t inspected = 0;
  uint64_t total = 0;
};

/// Scans k x k bipartite digraphs with minimum in-degree >= d for the chosen
/// property. k <= 3 scans every one of the 2^(2k^2) arc sets and returns the
/// lex-smallest counterexample (arc-code order: lr rows then rl rows,
/// row-major). Larger k enumerates left-side-sorted representatives with
/// per-vertex in-degree pruning -- sound for the verdict, still exhaustive up
/// to left relabeling -- and may exhaust the budget.
ChResult verify_bipartite_ch(int k, int d, ChProperty prop,
                             uint64_t budget = 100'000'000, int jobs = 1);

/// Directed 6-cycle with every vertex replaced by t clones: a 3t x 3t
/// bipartite graph, all in- and out-degrees exactly t, shortest cycle 6.
BipartiteDigraph sixcycle_blowup(int t);

/// Least L such that every L * weight is integral (lcm of denominators).
Int default_blowup_scale(const WeightedBipartiteDigraph& w);

/// Replaces every vertex by L*w_v unweighted clones inheriting all arcs,
/// giving an L x L bipartite graph. Throws std::invalid_argument naming the
/// first vertex whose scaled weight is non-integral.
BipartiteDigraph blowup(const WeightedBipartiteDigraph& w, const Int& L);

/// Subgraph of the game's digraph induced by the profile's supports, with
/// the probabilities as vertex weights.
WeightedBipartiteDigraph profile_to_weighted_graph(const WinLoseGame& g, const Profile& prof);

NeighborhoodDecomposition decompose_neighborhoods(const BipartiteDigraph& h, BVertex v);

enum class ConjectureVerdict { holds_via_cycle, holds_via_undominated_triple, counterexample };

struct ConjectureResult {
  ConjectureVerdict verdict = ConjectureVerdict::counterexample;
  std::vector<int> cycle;   // directed cycle of length <= 3, when found
  std::vector<int> triple;  // undominated 3-set, when found
};

/// Tests the dichotomy "short cycle or undominated triple" on one digraph.
/// A counterexample verdict means the input refutes it -- callers are
/// expected to treat that as front-page news, not an error.
ConjectureResult check_conjecture_dmp(const GeneralDigraph& d);

}  // namespace wsne
