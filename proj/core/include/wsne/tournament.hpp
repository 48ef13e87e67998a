#pragma once

#include "wsne/bits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wsne {

/// Strictly increasing node indices. Bounds against a concrete node count are
/// checked where the set is used.
class NodeSet {
 public:
  NodeSet() = default;
  /// Throws std::invalid_argument unless ids are strictly increasing and >= 0.
  explicit NodeSet(std::vector<int> ids);
  static NodeSet from_unsorted(std::vector<int> ids);

  const std::vector<int>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(int v) const;
  int max_id() const { return ids_.empty() ? -1 : ids_.back(); }

  bool operator==(const NodeSet&) const = default;

 private:
  std::vector<int> ids_;
};

struct GeneratorInfo {
  enum class Kind { random, paley, explicit_ };
  Kind kind = Kind::explicit_;
  std::optional<uint64_t> seed;  // random
  std::optional<int> q;          // paley
};

/// Complete orientation of all node pairs. The canonical form is one bit per
/// unordered pair {i,j}, i<j, in lexicographic pair order; bit set means the
/// arc runs i -> j. Out-/in-neighbourhood bitsets are materialized once at
/// construction; instances are immutable and safe to query concurrently.
class Tournament {
 public:
  /// Fair-coin orientation of every pair, one mt19937_64 draw per pair in
  /// lexicographic pair order (LSB of the draw). Deterministic in (n, seed).
  static Tournament random(int n, uint64_t seed);

  /// Quadratic-residue tournament on a prime q = 3 (mod 4): arc i -> j iff
  /// (j - i) mod q is a nonzero square. q = 1 (mod 4) would make the residue
  /// relation symmetric, hence the congruence is enforced.
  static Tournament paley(int q);

  /// From a '0'/'1' orientation string of length n(n-1)/2 in pair order.
  static Tournament from_orientation(int n, const std::string& bits,
                                     GeneratorInfo gen = {});

  int size() const { return n_; }
  bool arc(int u, int v) const { return out_.get(u, v); }
  std::span<const uint64_t> out_neighbors(int u) const { return out_.row(u); }
  std::span<const uint64_t> in_neighbors(int u) const { return in_.row(u); }
  int out_degree(int u) const { return out_.row_popcount(u); }
  int in_degree(int u) const { return in_.row_popcount(u); }

  std::string orientation_string() const;
  const GeneratorInfo& generator() const { return gen_; }

  bool operator==(const Tournament& o) const {
    return n_ == o.n_ && out_ == o.out_;
  }

 private:
  Tournament(int n, GeneratorInfo gen) : n_(n), gen_(gen), out_(n, n), in_(n, n) {}
  void finish_in_matrix();

  int n_ = 0;
  GeneratorInfo gen_;
  BitMatrix out_;  // n x n, no diagonal
  BitMatrix in_;
};

/// True iff u is outside S and has an arc to every member of S.
bool dominates(const Tournament& t, int u, const NodeSet& s);

/// Smallest node dominating S, or nullopt. A node inside S never qualifies
/// (it would need an arc to itself).
std::optional<int> find_dominator(const Tournament& t, const NodeSet& s);

struct DominationResult {
  bool dominated = false;          // every node set of size <= m has a dominator
  std::optional<NodeSet> witness;  // smallest undominated set, size-then-lex
};

/// Checks all node sets of size 1..m in size-then-lex order, short-circuiting
/// on the first undominated set. Requires 1 <= m < n. `jobs` partitions each
/// size class; the reported witness is order-independent.
DominationResult is_m_dominated(const Tournament& t, int m, int jobs = 1);

}  // namespace wsne
