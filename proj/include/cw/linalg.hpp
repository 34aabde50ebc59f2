#ifndef CW_LINALG_HPP
#define CW_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "cw/matrix.hpp"
#include "cw/rational.hpp"

namespace cw {

/// Exact rank over the rationals, by Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Basis of ker(m); empty iff m has full column rank. Basis vectors follow
/// the free columns of the row echelon form in ascending order.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Determinant of a square matrix.
Rational determinant(const Matrix& m);

/// Solves m x = rhs when the solution exists and is unique, otherwise nullopt.
std::optional<Vec> solve_unique(const Matrix& m, const Vec& rhs);

/// The unique integer vector with coprime components that is a positive
/// multiple of v. Throws on the zero vector.
Vec normalize_coprime(const Vec& v);

/// Flips sign so the first nonzero component is positive.
Vec canonical_sign(const Vec& v);

/// Incremental Gaussian eliminator over an augmented system [row | rhs],
/// supporting push/pop for subset enumeration. Column count is fixed.
class Eliminator {
 public:
  explicit Eliminator(std::size_t cols) : cols_(cols), is_pivot_col_(cols, 0) {}

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }

  /// Eliminates (row, rhs) against the stored pivot rows and records the
  /// result. Returns true if the rank increased. An inconsistent row
  /// (zero row with nonzero rhs) is recorded as rank-preserving but flagged.
  bool push(const Vec& row, const Rational& rhs);
  bool push(const Vec& row) { return push(row, Rational(0)); }
  void pop();

  bool consistent() const { return inconsistent_depth_ == 0; }

  /// When rank() == cols − 1: the kernel direction of the homogeneous system.
  Vec kernel_vector() const;

  /// When rank() == cols and the system is consistent: the unique solution.
  Vec solve() const;

 private:
  struct Entry {
    Vec row;             // eliminated row (empty when rank-preserving)
    Rational rhs;
    std::size_t pivot;   // pivot column (valid when row nonzero)
    bool increased;
    bool inconsistent;
  };
  std::size_t cols_;
  std::vector<Entry> entries_;
  std::vector<std::size_t> pivots_;      // insertion order
  std::vector<char> is_pivot_col_;       // lazily sized to cols_
  int inconsistent_depth_ = 0;
};

}  // namespace cw

#endif
