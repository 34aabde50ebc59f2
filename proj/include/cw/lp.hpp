#ifndef CW_LP_HPP
#define CW_LP_HPP

#include "cw/matrix.hpp"
#include "cw/rational.hpp"

namespace cw {

enum class LpStatus { Optimal, Unbounded, Infeasible };
enum class Sense { Maximize, Minimize };

struct LpResult {
  LpStatus status;
  Rational value;  // valid when Optimal
  Vec solution;    // valid when Optimal; a vertex whenever the region is pointed
};

/// Exact optimum of  sense{ objective^T x : eq_lhs x = eq_rhs, ineq_lhs x <= ineq_rhs }
/// over free x. Two-phase simplex with Bland's rule; an optimal solution is
/// pulled to a vertex by tightening kernel directions of its tight rows.
LpResult lp_solve(const Vec& objective, Sense sense, const Matrix& eq_lhs,
                  const Vec& eq_rhs, const Matrix& ineq_lhs, const Vec& ineq_rhs);

}  // namespace cw

#endif
