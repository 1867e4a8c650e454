#pragma once

#include <optional>
#include <vector>

#include "srs/geometry.hpp"
#include "srs/rational.hpp"

namespace srs::detail {

/// Outcome of maximizing a common slack t in [0, 1] over a constraint system:
/// every Gt constraint is tightened to a.x + b - t >= 0, Ge and Eq kept.
struct SlackResult {
  bool closure_feasible = false;
  Rational max_slack;   // meaningful only when closure_feasible
  RationalPoint point;  // an optimal point when closure_feasible
};

SlackResult maximize_strict_slack(const ConvexCell& cell);

/// Dense dictionary simplex over exact rationals: maximize c.z subject to
/// M z <= h, z >= 0.  Bland's rule; returns nullopt when infeasible.
/// The objective is assumed bounded.
struct LpSolution {
  Rational value;
  std::vector<Rational> z;
};

std::optional<LpSolution> solve_standard_lp(const std::vector<std::vector<Rational>>& M,
                                            const std::vector<Rational>& h,
                                            const std::vector<Rational>& c);

}  // namespace srs::detail
