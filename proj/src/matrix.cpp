#include "cw/matrix.hpp"

#include <stdexcept>

namespace cw {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vec> rs;
  for (const auto& row : rows) {
    Vec r;
    for (long x : row) r.emplace_back(x);
    rs.push_back(std::move(r));
  }
  return from_rows(rs);
}

Vec Matrix::row(std::size_t r) const {
  Vec out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

Rational Matrix::row_dot(std::size_t r, const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("row_dot: dimension mismatch");
  Rational s(0);
  for (std::size_t j = 0; j < cols_; ++j) s += at(r, j) * x[j];
  return s;
}

Vec Matrix::multiply(const Vec& x) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = row_dot(i, x);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& indices) const {
  Matrix m(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw std::out_of_range("select_rows: index out of range");
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(indices[i], j);
  }
  return m;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& indices) const {
  Matrix m(rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) throw std::out_of_range("select_columns: index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, indices[j]);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (cols_ != other.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(rows_ + other.rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
  for (std::size_t i = 0; i < other.rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(rows_ + i, j) = other.at(i, j);
  return m;
}

void Matrix::append_row(const Vec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("append_row: dimension mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

}  // namespace cw
