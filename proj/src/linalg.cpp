#include "cw/linalg.hpp"

#include <stdexcept>

namespace cw {

namespace {

// Row echelon form in place; returns pivot columns in elimination order.
std::vector<std::size_t> echelon(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < cols && next_row < rows.size(); ++col) {
    std::size_t sel = next_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next_row], rows[sel]);
    for (std::size_t i = next_row + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[next_row][col];
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[next_row][j];
    }
    pivot_cols.push_back(col);
    ++next_row;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return echelon(rows, m.cols()).size();
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  std::size_t n = m.cols();
  if (n == 0) return {};
  std::vector<Vec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  auto pivot_cols = echelon(rows, n);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;

  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(n, Rational(0));
    v[free_col] = 1;
    // Back-substitute through the pivot rows in reverse.
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
      std::size_t pc = pivot_cols[k];
      Rational s(0);
      for (std::size_t j = pc + 1; j < n; ++j) s += rows[k][j] * v[j];
      v[pc] = -s / rows[k][pc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && rows[sel][col] == 0) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      std::swap(rows[col], rows[sel]);
      det = -det;
    }
    det *= rows[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[col][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[col][j];
    }
  }
  return det;
}

std::optional<Vec> solve_unique(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_unique: dimension mismatch");
  Eliminator el(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) el.push(m.row(i), rhs[i]);
  if (!el.consistent() || el.rank() != m.cols()) return std::nullopt;
  return el.solve();
}

Vec normalize_coprime(const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("zero vector has no coprime normalization");
  BigInt lcm(1);
  for (const auto& x : v) {
    if (x == 0) continue;
    lcm = boost::multiprecision::lcm(lcm, denominator(x));
  }
  std::vector<BigInt> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    ints[i] = numerator(v[i]) * (lcm / denominator(v[i]));
  BigInt g(0);
  for (const auto& x : ints) g = boost::multiprecision::gcd(g, x);
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g);
  return out;
}

Vec canonical_sign(const Vec& v) {
  for (const auto& x : v) {
    if (x > 0) return v;
    if (x < 0) return negate(v);
  }
  return v;
}

bool Eliminator::push(const Vec& row, const Rational& rhs) {
  if (row.size() != cols_) throw std::invalid_argument("Eliminator: dimension mismatch");
  Entry e;
  e.rhs = rhs;
  Vec r = row;
  // Eliminate against existing pivot rows in insertion order.
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Entry& pe = entries_[pivots_[k]];
    std::size_t pc = pe.pivot;
    if (r[pc] == 0) continue;
    Rational f = r[pc] / pe.row[pc];
    for (std::size_t j = 0; j < cols_; ++j) r[j] -= f * pe.row[j];
    e.rhs -= f * pe.rhs;
  }
  std::size_t pivot = cols_;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (r[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot == cols_) {
    e.increased = false;
    e.inconsistent = (e.rhs != 0);
    if (e.inconsistent) ++inconsistent_depth_;
    entries_.push_back(std::move(e));
    return false;
  }
  e.row = std::move(r);
  e.pivot = pivot;
  e.increased = true;
  e.inconsistent = false;
  entries_.push_back(std::move(e));
  pivots_.push_back(entries_.size() - 1);
  is_pivot_col_[pivot] = 1;
  return true;
}

void Eliminator::pop() {
  if (entries_.empty()) throw std::logic_error("Eliminator: pop on empty stack");
  const Entry& e = entries_.back();
  if (e.increased) {
    is_pivot_col_[e.pivot] = 0;
    pivots_.pop_back();
  }
  if (e.inconsistent) --inconsistent_depth_;
  entries_.pop_back();
}

Vec Eliminator::kernel_vector() const {
  if (rank() + 1 != cols_) throw std::logic_error("Eliminator: kernel is not one-dimensional");
  std::size_t free_col = cols_;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!is_pivot_col_[j]) {
      free_col = j;
      break;
    }
  }
  Vec v(cols_, Rational(0));
  v[free_col] = 1;
  for (std::size_t k = pivots_.size(); k-- > 0;) {
    const Entry& pe = entries_[pivots_[k]];
    Rational s(0);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != pe.pivot && pe.row[j] != 0) s += pe.row[j] * v[j];
    }
    v[pe.pivot] = -s / pe.row[pe.pivot];
  }
  return v;
}

Vec Eliminator::solve() const {
  if (rank() != cols_) throw std::logic_error("Eliminator: system is not full rank");
  if (!consistent()) throw std::logic_error("Eliminator: system is inconsistent");
  Vec v(cols_, Rational(0));
  for (std::size_t k = pivots_.size(); k-- > 0;) {
    const Entry& pe = entries_[pivots_[k]];
    Rational s(0);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != pe.pivot && pe.row[j] != 0) s += pe.row[j] * v[j];
    }
    v[pe.pivot] = (pe.rhs - s) / pe.row[pe.pivot];
  }
  return v;
}

}  // namespace cw
