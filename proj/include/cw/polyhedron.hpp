#ifndef CW_POLYHEDRON_HPP
#define CW_POLYHEDRON_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cw/matrix.hpp"
#include "cw/rational.hpp"

namespace cw {

/// General-form polyhedron { x : eq x = eq_rhs, ineq x <= ineq_rhs } in R^dim.
/// eq may have zero rows. Redundant and duplicate rows are kept as given.
struct Polyhedron {
  Matrix eq;
  Vec eq_rhs;
  Matrix ineq;
  Vec ineq_rhs;
  std::size_t dim = 0;

  Polyhedron() = default;
  Polyhedron(Matrix eq_in, Vec eq_rhs_in, Matrix ineq_in, Vec ineq_rhs_in);

  static Polyhedron from_inequalities(Matrix ineq, Vec ineq_rhs);
  static Polyhedron box(std::size_t n);  // unit box [0,1]^n
};

struct TightSet {
  Vec point;
  std::vector<std::size_t> rows;  // sorted indices into ineq
};

/// Enumeration size guards. CW_ENUM_LIMIT=<k> (CLI) sets max_dim=k, max_rows=2k.
struct EnumLimits {
  std::size_t max_dim = 12;
  std::size_t max_rows = 24;
  static EnumLimits from_env();
};

bool contains(const Polyhedron& p, const Vec& x);
TightSet tight_rows(const Polyhedron& p, const Vec& x);
bool is_vertex(const Polyhedron& p, const Vec& x);

/// All basic feasible solutions, deduplicated and sorted lexicographically.
std::vector<Vec> enumerate_vertices(const Polyhedron& p, const EnumLimits& limits = {});

/// Exhaustive determinant check over square submatrices; pre min(rows, cols) <= bound.
bool is_totally_unimodular(const Matrix& m, std::size_t bound = 8);

/// Rows tight at both points. w lies in the union of facets incident to v iff
/// this set, intersected with the rows tight at v, is nonempty.
std::vector<std::size_t> shared_facet_rows(const Polyhedron& p, const Vec& v, const Vec& w);

/// Drops exact duplicate (row, rhs) pairs from ineq. Never applied implicitly.
Polyhedron drop_duplicate_rows(const Polyhedron& p);

/// Line-oriented text format:
///   n <dim>
///   EQ <rows>    followed by rows "a_1 ... a_n | b_i"
///   LE <rows>    followed by rows "b_1 ... b_n | d_i"
/// Rationals as "p/q"; blank lines and "#" comments ignored.
Polyhedron read_polyhedron(std::istream& in);
Polyhedron read_polyhedron_file(const std::string& path);
void write_polyhedron(std::ostream& out, const Polyhedron& p);
void write_polyhedron_file(const std::string& path, const Polyhedron& p);

}  // namespace cw

#endif
