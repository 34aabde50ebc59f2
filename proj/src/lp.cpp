#include "cw/lp.hpp"

#include <optional>
#include <stdexcept>

#include "cw/linalg.hpp"

namespace cw {

namespace {

// Simplex on  min{ cost^T z : table z = rhs, z >= 0 }  with Bland's rule.
// The tableau is kept fully reduced: basic columns are unit columns.
class Simplex {
 public:
  Simplex(std::vector<Vec> table, Vec rhs)
      : table_(std::move(table)), rhs_(std::move(rhs)) {
    m_ = table_.size();
    n_ = m_ ? table_[0].size() : 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (rhs_[i] < 0) {
        for (auto& x : table_[i]) x = -x;
        rhs_[i] = -rhs_[i];
      }
    }
  }

  // Returns false when the auxiliary optimum is positive (infeasible system).
  bool phase_one() {
    // Append artificial columns forming an identity basis.
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) table_[k].push_back(k == i ? 1 : 0);
      basis_.push_back(n_ + i);
    }
    std::size_t total = n_ + m_;
    Vec cost(total, Rational(0));
    for (std::size_t j = n_; j < total; ++j) cost[j] = 1;
    run(cost);
    Rational aux = objective_value(cost);
    if (aux != 0) return false;
    drive_out_artificials();
    // Drop artificial columns.
    for (auto& row : table_) row.resize(n_);
    return true;
  }

  // Returns false on unboundedness.
  bool phase_two(const Vec& cost) { return run(cost); }

  Vec solution() const {
    Vec z(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) z[basis_[i]] = rhs_[i];
    return z;
  }

 private:
  Rational objective_value(const Vec& cost) const {
    Rational v(0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < cost.size()) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  Vec reduced_costs(const Vec& cost) const {
    std::size_t total = table_.empty() ? 0 : table_[0].size();
    Vec red(cost.begin(), cost.begin() + total);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= cost.size()) continue;  // artificial stuck on a redundant row
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < total; ++j) red[j] -= cb * table_[i][j];
    }
    return red;
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational p = table_[row][col];
    for (auto& x : table_[row]) x /= p;
    rhs_[row] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || table_[i][col] == 0) continue;
      Rational f = table_[i][col];
      for (std::size_t j = 0; j < table_[i].size(); ++j)
        table_[i][j] -= f * table_[row][j];
      rhs_[i] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  bool run(const Vec& cost) {
    for (;;) {
      Vec red = reduced_costs(cost);
      std::size_t total = red.size();
      std::size_t enter = total;
      for (std::size_t j = 0; j < total; ++j) {
        if (red[j] < 0) {
          enter = j;  // Bland: smallest improving index
          break;
        }
      }
      if (enter == total) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (table_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / table_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (table_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < n_) pivot(i, col);
      // else: redundant row; the artificial stays basic at value 0.
    }
  }

  std::vector<Vec> table_;
  Vec rhs_;
  std::vector<std::size_t> basis_;
  std::size_t m_ = 0, n_ = 0;
};

// Moves an optimal point to a vertex of the feasible region: while the tight
// rows do not pin x down, walk a kernel direction to a new tight row. At an
// optimum every such direction is objective-neutral, so the value is kept.
Vec purify_to_vertex(Vec x, const Matrix& eq_lhs, const Matrix& ineq_lhs,
                     const Vec& ineq_rhs) {
  std::size_t n = x.size();
  for (std::size_t guard = 0; guard <= n; ++guard) {
    Matrix stack(0, n);
    for (std::size_t i = 0; i < eq_lhs.rows(); ++i) stack.append_row(eq_lhs.row(i));
    Vec slack(ineq_lhs.rows());
    for (std::size_t i = 0; i < ineq_lhs.rows(); ++i) {
      slack[i] = ineq_rhs[i] - ineq_lhs.row_dot(i, x);
      if (slack[i] == 0) stack.append_row(ineq_lhs.row(i));
    }
    auto kernel = kernel_basis(stack);
    if (kernel.empty()) return x;
    const Vec& g = kernel.front();
    auto ratio_along = [&](const Vec& dir) -> std::optional<Rational> {
      std::optional<Rational> lambda;
      for (std::size_t i = 0; i < ineq_lhs.rows(); ++i) {
        Rational a = ineq_lhs.row_dot(i, dir);
        if (a <= 0) continue;
        Rational r = slack[i] / a;
        if (!lambda || r < *lambda) lambda = r;
      }
      return lambda;
    };
    if (auto lam = ratio_along(g)) {
      x = add(x, scale(*lam, g));
    } else if (auto lam2 = ratio_along(negate(g))) {
      x = add(x, scale(-*lam2, g));
    } else {
      return x;  // the region is not pointed along g
    }
  }
  return x;
}

}  // namespace

LpResult lp_solve(const Vec& objective, Sense sense, const Matrix& eq_lhs,
                  const Vec& eq_rhs, const Matrix& ineq_lhs, const Vec& ineq_rhs) {
  std::size_t n = objective.size();
  if ((eq_lhs.rows() && eq_lhs.cols() != n) || (ineq_lhs.rows() && ineq_lhs.cols() != n) ||
      eq_lhs.rows() != eq_rhs.size() || ineq_lhs.rows() != ineq_rhs.size())
    throw std::invalid_argument("lp_solve: dimension mismatch");

  std::size_t m_eq = eq_lhs.rows(), m_ineq = ineq_lhs.rows();
  std::size_t cols = 2 * n + m_ineq;  // x+, x-, slacks
  std::vector<Vec> table;
  Vec rhs;
  for (std::size_t i = 0; i < m_eq; ++i) {
    Vec row(cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = eq_lhs.at(i, j);
      row[n + j] = -eq_lhs.at(i, j);
    }
    table.push_back(std::move(row));
    rhs.push_back(eq_rhs[i]);
  }
  for (std::size_t i = 0; i < m_ineq; ++i) {
    Vec row(cols, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = ineq_lhs.at(i, j);
      row[n + j] = -ineq_lhs.at(i, j);
    }
    row[2 * n + i] = 1;
    table.push_back(std::move(row));
    rhs.push_back(ineq_rhs[i]);
  }

  Vec cost(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = (sense == Sense::Maximize) ? -objective[j] : objective[j];
    cost[j] = c;
    cost[n + j] = -c;
  }

  Simplex simplex(std::move(table), std::move(rhs));
  if (!simplex.phase_one()) return {LpStatus::Infeasible, Rational(0), {}};
  if (!simplex.phase_two(cost)) return {LpStatus::Unbounded, Rational(0), {}};

  Vec z = simplex.solution();
  Vec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = z[j] - z[n + j];
  x = purify_to_vertex(std::move(x), eq_lhs, ineq_lhs, ineq_rhs);
  return {LpStatus::Optimal, dot(objective, x), std::move(x)};
}

}  // namespace cw
