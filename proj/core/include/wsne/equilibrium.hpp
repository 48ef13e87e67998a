#pragma once

#include "wsne/auxgame.hpp"
#include "wsne/ratlp.hpp"
#include "wsne/tournament.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wsne {

/// Exact-rational probability vector. Entries are >= 0 and sum to exactly 1.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  /// Throws std::invalid_argument on negative entries or sum != 1.
  explicit MixedStrategy(std::vector<Rat> probs);

  static MixedStrategy pure(int dim, int index);
  static MixedStrategy uniform_on(int dim, const std::vector<int>& support);

  int dim() const { return static_cast<int>(p_.size()); }
  const std::vector<Rat>& probs() const { return p_; }
  const Rat& at(int i) const { return p_[i]; }
  std::vector<int> support() const;

  bool operator==(const MixedStrategy&) const = default;

 private:
  std::vector<Rat> p_;
};

struct Profile {
  MixedStrategy row;  // dimension m
  MixedStrategy col;  // dimension n
};

/// Designated support index sets, strictly increasing, nonempty.
struct SupportPair {
  std::vector<int> rows;
  std::vector<int> cols;
};

struct EpsResult {
  Rat eps;
  Profile witness;
  SupportPair supports;
};

/// Exact A.q and p^T.B.
std::vector<Rat> row_payoffs(const WinLoseGame& g, const MixedStrategy& q);
std::vector<Rat> col_payoffs(const WinLoseGame& g, const MixedStrategy& p);

/// Smallest eps making the profile an eps-WSNE: the larger over the two
/// players of (best-response payoff - worst payoff used with positive
/// probability). Always within [0,1] for win-lose games.
Rat wsne_epsilon(const WinLoseGame& g, const Profile& prof);

/// The two independent LPs behind min_eps_for_supports: the row LP constrains
/// q (a distribution on sp.cols) so that every designated row of sp.rows is
/// within eps of a best response; variables are q entries in sp.cols order,
/// then eps. Identical payoff patterns are collapsed before emitting
/// constraints, which leaves the optimum untouched. The column LP mirrors it.
ratlp::LinearProgram build_row_support_lp(const WinLoseGame& g, const SupportPair& sp);
ratlp::LinearProgram build_col_support_lp(const WinLoseGame& g, const SupportPair& sp);

/// Exact minimum eps over profiles whose supports lie inside the designated
/// sets, every designated index being constrained even at probability zero.
/// Decomposes into the two LPs above; the result is the larger optimum and
/// the witness assembles both LP solutions. wsne_epsilon of the witness can
/// be strictly smaller when the witness drops a designated index from its
/// actual support; it equals eps whenever the supports coincide.
EpsResult min_eps_for_supports(const WinLoseGame& g, const SupportPair& sp);

struct SearchResult {
  EpsResult best;
  bool exhaustive = false;
  uint64_t inspected = 0;
  uint64_t total = 0;
};

/// Minimum of min_eps_for_supports over all support pairs with sizes <= s,
/// enumerated size-then-colex; eps ties break to the lexicographically
/// smallest (S1, S2). Inspects at most `budget` pairs (a deterministic prefix
/// of the enumeration) and flags the result non-exhaustive when truncated.
SearchResult best_wsne_up_to_support(const WinLoseGame& g, int s,
                                     uint64_t budget = 1'000'000, int jobs = 1);

/// Combinatorial certificate that no support pair with sizes <= s admits an
/// eps-WSNE with eps < 1: the game's digraph must be t-covered for every
/// t <= s, digon-free, and free of directed cycles of length <= 2s. Coverage
/// runs exactly (within budget), or through the tournament domination
/// sufficient condition when the originating tournament is supplied.
struct NoSmallWsneCertificate {
  bool certified = false;
  int s = 0;
  Rat threshold = 1;  // the proven bound: no eps-WSNE with eps < threshold
  std::vector<KCoverageResult> coverage;  // per cover size 1..s
  std::optional<std::pair<int, int>> digon;
  std::optional<std::vector<BVertex>> short_cycle;  // length <= 2s if present
  std::string failure;  // empty when certified
};

NoSmallWsneCertificate certify_no_small_wsne(
    const WinLoseGame& g, int s, const Rat& eps_threshold = Rat(1),
    const Tournament* t = nullptr, int construction_k = 0,
    uint64_t budget = 10'000'000, int jobs = 1);

}  // namespace wsne
