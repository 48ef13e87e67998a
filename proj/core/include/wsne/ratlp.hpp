#pragma once

#include "wsne/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wsne::ratlp {

enum class Relation { le, eq, ge };

struct Constraint {
  std::vector<Rat> coeffs;
  Relation rel = Relation::le;
  Rat rhs;
};

/// Dense LP, minimization. Variable bounds are part of the problem (nullopt
/// means unbounded on that side); everything is exact rational.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rat> objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rat>> lower;
  std::vector<std::optional<Rat>> upper;

  explicit LinearProgram(int nvars = 0)
      : num_vars(nvars), objective(nvars), lower(nvars), upper(nvars) {}

  void add_constraint(std::vector<Rat> coeffs, Relation rel, Rat rhs);
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rat value;            // meaningful only when optimal
  std::vector<Rat> x;   // primal assignment, empty unless optimal
};

/// Two-phase primal simplex with Bland's anti-cycling rule on an exact
/// rational tableau. The returned assignment is a vertex of the feasible
/// region and satisfies every constraint exactly.
LpSolution solve(const LinearProgram& lp);

/// Independent certificate check. Optimal claims are re-checked for exact
/// feasibility and, when the instance is small enough (all variables bounded
/// on at least one side and at most `budget` candidate bases), for optimality
/// by exhaustive vertex enumeration. Infeasible/unbounded claims are checked
/// by re-solving.
bool verify(const LinearProgram& lp, const LpSolution& claimed,
            uint64_t budget = 300'000);

}  // namespace wsne::ratlp
