#ifndef CW_MATRIX_HPP
#define CW_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cw/rational.hpp"

namespace cw {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  /// Convenience for literals of small integer matrices.
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Rational row_dot(std::size_t r, const Vec& x) const;
  Vec multiply(const Vec& x) const;

  Matrix transpose() const;
  Matrix select_rows(const std::vector<std::size_t>& indices) const;
  Matrix select_columns(const std::vector<std::size_t>& indices) const;
  /// Rows of *this followed by rows of other. An empty matrix stacks with anything.
  Matrix vstack(const Matrix& other) const;
  void append_row(const Vec& r);

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace cw

#endif
