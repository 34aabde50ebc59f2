#include "cw/circuits.hpp"

#include <set>
#include <stdexcept>

#include "cw/linalg.hpp"

namespace cw {

bool is_circuit(const Polyhedron& p, const Vec& g) {
  if (g.size() != p.dim) throw std::invalid_argument("is_circuit: dimension mismatch");
  if (is_zero(g)) return false;
  if (!is_integral(g)) return false;
  BigInt gcd_all(0);
  for (const auto& x : g) gcd_all = boost::multiprecision::gcd(gcd_all, numerator(x));
  if (gcd_all != 1) return false;
  for (std::size_t i = 0; i < p.eq.rows(); ++i)
    if (p.eq.row_dot(i, g) != 0) return false;
  Matrix stack(0, p.dim);
  for (std::size_t i = 0; i < p.eq.rows(); ++i) stack.append_row(p.eq.row(i));
  for (std::size_t i = 0; i < p.ineq.rows(); ++i)
    if (p.ineq.row_dot(i, g) == 0) stack.append_row(p.ineq.row(i));
  return rank(stack) == p.dim - 1;
}

std::size_t scan_circuit_kernels(const Polyhedron& p, const EnumLimits& limits,
                                 const std::function<void(const Vec&)>& fn) {
  if (p.dim > limits.max_dim || p.ineq.rows() > limits.max_rows)
    throw std::runtime_error("instance too large for enumeration");
  if (p.dim == 0) return 0;

  Eliminator el(p.dim);
  for (std::size_t i = 0; i < p.eq.rows(); ++i) el.push(p.eq.row(i));
  std::size_t target = p.dim - 1;
  std::size_t m = p.ineq.rows();
  std::size_t leaves = 0;
  // Rows are prescaled to integer entries: kernels and ranks are unchanged
  // and denominator-free arithmetic keeps the eliminations cheap.
  std::vector<Vec> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec row = p.ineq.row(i);
    if (!is_zero(row)) row = normalize_coprime(row);
    rows.push_back(std::move(row));
  }

  // DFS over inequality rows; a branch stops as soon as the stacked rank hits
  // dim − 1, where the one-dimensional kernel is a (scaled) circuit: its full
  // vanishing row set cannot exceed rank dim − 1, because the kernel line
  // already lies inside it.
  auto dfs = [&](auto&& self, std::size_t next) -> void {
    if (el.rank() == target) {
      ++leaves;
      fn(el.kernel_vector());
      return;
    }
    if (el.rank() + (m - next) < target) return;
    for (std::size_t i = next; i < m; ++i) {
      if (el.push(rows[i])) {
        self(self, i + 1);
      }
      el.pop();
      if (el.rank() + (m - i - 1) < target) break;
    }
  };
  if (el.rank() <= target) dfs(dfs, 0);
  return leaves;
}

std::vector<Vec> enumerate_circuits(const Polyhedron& p, const EnumLimits& limits) {
  std::set<Vec> circuits;
  scan_circuit_kernels(p, limits, [&](const Vec& kernel) {
    circuits.insert(canonical_sign(normalize_coprime(kernel)));
  });
  return {circuits.begin(), circuits.end()};
}

CircuitModel build_circuit_model(const Polyhedron& p) {
  std::size_t n = p.dim, m = p.ineq.rows(), total = n + 2 * m;
  Matrix eq(0, total);
  Vec eq_rhs;
  for (std::size_t i = 0; i < p.eq.rows(); ++i) {
    Vec row(total, Rational(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = p.eq.at(i, j);
    eq.append_row(row);
    eq_rhs.push_back(Rational(0));
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vec row(total, Rational(0));
    for (std::size_t j = 0; j < n; ++j) row[j] = p.ineq.at(i, j);
    row[n + i] = -1;
    row[n + m + i] = 1;
    eq.append_row(row);
    eq_rhs.push_back(Rational(0));
  }
  // With y+, y− >= 0 the 1-norm row collapses to a single equality.
  Vec norm_row(total, Rational(0));
  for (std::size_t k = n; k < total; ++k) norm_row[k] = 1;
  eq.append_row(norm_row);
  eq_rhs.push_back(Rational(1));

  Matrix ineq(0, total);
  Vec ineq_rhs;
  for (std::size_t k = n; k < total; ++k) {
    Vec row(total, Rational(0));
    row[k] = -1;
    ineq.append_row(row);
    ineq_rhs.push_back(Rational(0));
  }

  CircuitModel out;
  out.model = Polyhedron(std::move(eq), std::move(eq_rhs), std::move(ineq), std::move(ineq_rhs));
  out.source = p;
  out.n = n;
  out.m = m;
  return out;
}

CircuitModel build_sc_face(const Polyhedron& p, const Vec& v, const Vec& w) {
  if (!is_vertex(p, v) || !is_vertex(p, w))
    throw std::invalid_argument("build_sc_face: endpoints must be vertices");
  CircuitModel cm = build_circuit_model(p);
  std::size_t total = cm.n + 2 * cm.m;
  for (std::size_t i = 0; i < cm.m; ++i) {
    Rational bv = p.ineq.row_dot(i, v);
    Rational bw = p.ineq.row_dot(i, w);
    if (bv >= bw) {
      Vec row(total, Rational(0));
      row[cm.yplus_index(i)] = 1;
      cm.model.eq.append_row(row);
      cm.model.eq_rhs.push_back(Rational(0));
    }
    if (bv <= bw) {
      Vec row(total, Rational(0));
      row[cm.yminus_index(i)] = 1;
      cm.model.eq.append_row(row);
      cm.model.eq_rhs.push_back(Rational(0));
    }
  }
  return cm;
}

std::optional<Vec> model_vertex_to_circuit(const CircuitModel& cm, const Vec& vertex) {
  if (vertex.size() != cm.n + 2 * cm.m)
    throw std::invalid_argument("model_vertex_to_circuit: dimension mismatch");
  if (!is_vertex(cm.model, vertex))
    throw std::invalid_argument("model_vertex_to_circuit: input is not a model vertex");
  Vec x(vertex.begin(), vertex.begin() + cm.n);
  if (is_zero(x)) return std::nullopt;
  Vec g = normalize_coprime(x);
  if (!is_circuit(cm.source, g))
    throw std::logic_error("model vertex with nonzero x-part did not yield a circuit");
  return g;
}

}  // namespace cw
