#pragma once

#include <optional>
#include <vector>

#include "csn/matrix.hpp"

namespace csn {

enum class Rel { Le, Ge, Eq };
enum class LpSense { Min, Max };

struct LpRow {
  Vec coeffs;
  Rel rel;
  Rat rhs;
};

/// A linear program over free (unrestricted) variables. Bounds, when
/// needed, are expressed as ordinary rows; a variable may instead be
/// declared nonnegative, which tightens the feasible set exactly like
/// an x ≥ 0 row but is cheaper to solve.
struct LpProblem {
  int num_vars = 0;
  std::vector<LpRow> rows;
  std::vector<bool> nonneg;  // empty means all variables are free
  std::optional<Vec> objective;
  LpSense sense = LpSense::Min;

  explicit LpProblem(int vars = 0) : num_vars(vars) {}

  void add_row(Vec coeffs, Rel rel, Rat rhs);
  void add_le(Vec coeffs, Rat rhs) { add_row(std::move(coeffs), Rel::Le, std::move(rhs)); }
  void add_ge(Vec coeffs, Rat rhs) { add_row(std::move(coeffs), Rel::Ge, std::move(rhs)); }
  void add_eq(Vec coeffs, Rat rhs) { add_row(std::move(coeffs), Rel::Eq, std::move(rhs)); }
  void set_objective(Vec coeffs, LpSense s);
  void mark_nonneg(int var);
  bool var_nonneg(int var) const {
    return !nonneg.empty() && nonneg[size_t(var)];
  }
};

/// Result of an exact solve.
///
/// Feasible/Optimal carry a witness that satisfies every row exactly.
/// Infeasible carries Farkas multipliers, one per row: each multiplier
/// applies to its row in ≤-canonical form (Ge rows negated), must be
/// ≥ 0 on inequality rows and is free on equality rows, and the
/// combination of the rows yields cᵀx ≤ r with r < 0, where c vanishes
/// on free variables and is ≥ 0 on nonnegative ones.
struct LpOutcome {
  enum class Status { Feasible, Optimal, Infeasible, Unbounded };
  Status status;
  Vec witness;
  Rat value;
  Vec farkas;

  bool feasible() const {
    return status == Status::Feasible || status == Status::Optimal;
  }
};

/// Two-phase exact simplex with Bland's rule. Deterministic: identical
/// problems produce identical outcomes.
LpOutcome lp_solve(const LpProblem& p);

/// Exact substitution check of a witness against every row.
bool witness_valid(const LpProblem& p, const Vec& x);

/// Exact check of an infeasibility certificate.
bool farkas_valid(const LpProblem& p, const Vec& multipliers);

}  // namespace csn
