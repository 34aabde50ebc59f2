#include "cw/polyhedron.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cw/linalg.hpp"

namespace cw {

Polyhedron::Polyhedron(Matrix eq_in, Vec eq_rhs_in, Matrix ineq_in, Vec ineq_rhs_in)
    : eq(std::move(eq_in)),
      eq_rhs(std::move(eq_rhs_in)),
      ineq(std::move(ineq_in)),
      ineq_rhs(std::move(ineq_rhs_in)) {
  if (ineq.rows() == 0 && eq.rows() == 0)
    throw std::invalid_argument("polyhedron needs at least one row to fix the dimension");
  dim = ineq.rows() ? ineq.cols() : eq.cols();
  if (eq.rows() && eq.cols() != dim)
    throw std::invalid_argument("polyhedron: eq/ineq column mismatch");
  if (eq.rows() != eq_rhs.size() || ineq.rows() != ineq_rhs.size())
    throw std::invalid_argument("polyhedron: right-hand side size mismatch");
}

Polyhedron Polyhedron::from_inequalities(Matrix ineq, Vec ineq_rhs) {
  return Polyhedron(Matrix(0, ineq.cols()), Vec{}, std::move(ineq), std::move(ineq_rhs));
}

Polyhedron Polyhedron::box(std::size_t n) {
  Matrix b(2 * n, n);
  Vec d(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    b.at(i, i) = 1;
    d[i] = 1;
    b.at(n + i, i) = -1;
    d[n + i] = 0;
  }
  return from_inequalities(std::move(b), std::move(d));
}

EnumLimits EnumLimits::from_env() {
  EnumLimits limits;
  if (const char* env = std::getenv("CW_ENUM_LIMIT")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) {
      limits.max_dim = static_cast<std::size_t>(v);
      limits.max_rows = 2 * static_cast<std::size_t>(v);
    }
  }
  return limits;
}

bool contains(const Polyhedron& p, const Vec& x) {
  if (x.size() != p.dim) throw std::invalid_argument("contains: dimension mismatch");
  for (std::size_t i = 0; i < p.eq.rows(); ++i)
    if (p.eq.row_dot(i, x) != p.eq_rhs[i]) return false;
  for (std::size_t i = 0; i < p.ineq.rows(); ++i)
    if (p.ineq.row_dot(i, x) > p.ineq_rhs[i]) return false;
  return true;
}

TightSet tight_rows(const Polyhedron& p, const Vec& x) {
  if (!contains(p, x)) throw std::invalid_argument("tight_rows: point not in polyhedron");
  TightSet t;
  t.point = x;
  for (std::size_t i = 0; i < p.ineq.rows(); ++i)
    if (p.ineq.row_dot(i, x) == p.ineq_rhs[i]) t.rows.push_back(i);
  return t;
}

bool is_vertex(const Polyhedron& p, const Vec& x) {
  TightSet t = tight_rows(p, x);
  Matrix stack(0, p.dim);
  for (std::size_t i = 0; i < p.eq.rows(); ++i) stack.append_row(p.eq.row(i));
  for (auto i : t.rows) stack.append_row(p.ineq.row(i));
  return rank(stack) == p.dim;
}

std::vector<Vec> enumerate_vertices(const Polyhedron& p, const EnumLimits& limits) {
  if (p.dim > limits.max_dim || p.ineq.rows() > std::max(limits.max_rows, 2 * limits.max_dim))
    throw std::runtime_error("instance too large for enumeration");

  Eliminator el(p.dim);
  std::size_t eq_rank = 0;
  for (std::size_t i = 0; i < p.eq.rows(); ++i)
    if (el.push(p.eq.row(i), p.eq_rhs[i])) ++eq_rank;
  std::set<Vec> found;
  if (!el.consistent()) return {};
  if (p.dim == 0) return {};

  std::size_t m = p.ineq.rows();
  // DFS over inequality rows in ascending order; each pushed row must raise
  // the rank, so leaves are bases of size dim.
  auto dfs = [&](auto&& self, std::size_t next) -> void {
    if (el.rank() == p.dim) {
      if (el.consistent()) {
        Vec x = el.solve();
        if (contains(p, x)) found.insert(std::move(x));
      }
      return;
    }
    if (next == m || el.rank() + (m - next) < p.dim) return;
    for (std::size_t i = next; i < m; ++i) {
      if (el.push(p.ineq.row(i), p.ineq_rhs[i])) {
        self(self, i + 1);
      }
      el.pop();
      if (el.rank() + (m - i - 1) < p.dim) break;
    }
  };
  dfs(dfs, 0);
  return {found.begin(), found.end()};
}

namespace {

void minor_search(const Matrix& m, std::size_t k, std::vector<std::size_t>& rows,
                  std::vector<std::size_t>& cols, std::size_t next_row,
                  std::size_t next_col, bool picking_rows, bool& ok) {
  if (!ok) return;
  if (picking_rows) {
    if (rows.size() == k) {
      minor_search(m, k, rows, cols, 0, 0, false, ok);
      return;
    }
    for (std::size_t i = next_row; i + (k - rows.size()) <= m.rows(); ++i) {
      rows.push_back(i);
      minor_search(m, k, rows, cols, i + 1, 0, true, ok);
      rows.pop_back();
      if (!ok) return;
    }
    return;
  }
  if (cols.size() == k) {
    Matrix sub(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = m.at(rows[a], cols[b]);
    Rational det = determinant(sub);
    if (det != 0 && det != 1 && det != -1) ok = false;
    return;
  }
  for (std::size_t j = next_col; j + (k - cols.size()) <= m.cols(); ++j) {
    cols.push_back(j);
    minor_search(m, k, rows, cols, 0, j + 1, false, ok);
    cols.pop_back();
    if (!ok) return;
  }
}

}  // namespace

bool is_totally_unimodular(const Matrix& m, std::size_t bound) {
  std::size_t limit = std::min(m.rows(), m.cols());
  if (limit > bound)
    throw std::runtime_error("matrix too large for exhaustive total-unimodularity check");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m.at(i, j);
      if (x != 0 && x != 1 && x != -1) return false;
    }
  bool ok = true;
  for (std::size_t k = 2; k <= limit && ok; ++k) {
    std::vector<std::size_t> rows, cols;
    minor_search(m, k, rows, cols, 0, 0, true, ok);
  }
  return ok;
}

std::vector<std::size_t> shared_facet_rows(const Polyhedron& p, const Vec& v, const Vec& w) {
  TightSet tv = tight_rows(p, v);
  TightSet tw = tight_rows(p, w);
  std::vector<std::size_t> out;
  std::set_intersection(tv.rows.begin(), tv.rows.end(), tw.rows.begin(), tw.rows.end(),
                        std::back_inserter(out));
  return out;
}

Polyhedron drop_duplicate_rows(const Polyhedron& p) {
  std::set<std::pair<Vec, Rational>> seen;
  Matrix ineq(0, p.dim);
  Vec rhs;
  for (std::size_t i = 0; i < p.ineq.rows(); ++i) {
    auto key = std::make_pair(p.ineq.row(i), p.ineq_rhs[i]);
    if (seen.insert(key).second) {
      ineq.append_row(key.first);
      rhs.push_back(key.second);
    }
  }
  return Polyhedron(p.eq, p.eq_rhs, std::move(ineq), std::move(rhs));
}

namespace {

struct LineReader {
  std::istream& in;
  std::size_t line_number = 0;
  bool next(std::string& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_number;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto l = line.find_first_not_of(" \t\r");
      if (l == std::string::npos) continue;
      auto r = line.find_last_not_of(" \t\r");
      out = line.substr(l, r - l + 1);
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("line " + std::to_string(line_number) + ": " + msg);
  }
};

std::pair<Vec, Rational> parse_constraint_row(LineReader& reader, const std::string& line,
                                              std::size_t n) {
  auto bar = line.find('|');
  if (bar == std::string::npos) reader.fail("expected 'coeffs | rhs'");
  std::istringstream lhs(line.substr(0, bar));
  Vec row;
  std::string tok;
  while (lhs >> tok) row.push_back(parse_rational(tok));
  if (row.size() != n) reader.fail("expected " + std::to_string(n) + " coefficients");
  std::string rhs_text = line.substr(bar + 1);
  std::istringstream rhs_in(rhs_text);
  if (!(rhs_in >> tok)) reader.fail("missing right-hand side");
  Rational rhs = parse_rational(tok);
  if (rhs_in >> tok) reader.fail("trailing tokens after right-hand side");
  return {std::move(row), std::move(rhs)};
}

}  // namespace

Polyhedron read_polyhedron(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw std::runtime_error("line 0: empty polyhedron file");
  std::istringstream head(line);
  std::string kw;
  std::size_t n = 0;
  if (!(head >> kw >> n) || kw != "n") reader.fail("expected header 'n <dim>'");

  Matrix eq(0, n), ineq(0, n);
  Vec eq_rhs, ineq_rhs;
  while (reader.next(line)) {
    std::istringstream sec(line);
    std::string tag;
    std::size_t count = 0;
    if (!(sec >> tag >> count) || (tag != "EQ" && tag != "LE"))
      reader.fail("expected section 'EQ <rows>' or 'LE <rows>'");
    for (std::size_t i = 0; i < count; ++i) {
      if (!reader.next(line)) reader.fail("unexpected end of file inside " + tag + " section");
      auto [row, rhs] = parse_constraint_row(reader, line, n);
      if (tag == "EQ") {
        eq.append_row(row);
        eq_rhs.push_back(rhs);
      } else {
        ineq.append_row(row);
        ineq_rhs.push_back(rhs);
      }
    }
  }
  if (eq.rows() == 0 && ineq.rows() == 0) reader.fail("polyhedron has no rows");
  return Polyhedron(std::move(eq), std::move(eq_rhs), std::move(ineq), std::move(ineq_rhs));
}

Polyhedron read_polyhedron_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polyhedron file: " + path);
  try {
    return read_polyhedron(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_polyhedron(std::ostream& out, const Polyhedron& p) {
  out << "n " << p.dim << "\n";
  out << "EQ " << p.eq.rows() << "\n";
  for (std::size_t i = 0; i < p.eq.rows(); ++i) {
    for (std::size_t j = 0; j < p.dim; ++j) out << (j ? " " : "") << p.eq.at(i, j);
    out << " | " << p.eq_rhs[i] << "\n";
  }
  out << "LE " << p.ineq.rows() << "\n";
  for (std::size_t i = 0; i < p.ineq.rows(); ++i) {
    for (std::size_t j = 0; j < p.dim; ++j) out << (j ? " " : "") << p.ineq.at(i, j);
    out << " | " << p.ineq_rhs[i] << "\n";
  }
}

void write_polyhedron_file(const std::string& path, const Polyhedron& p) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  write_polyhedron(out, p);
}

}  // namespace cw
