#include "cw/tu_algorithms.hpp"

#include <stdexcept>

#include "cw/circuits.hpp"
#include "cw/linalg.hpp"
#include "cw/lp.hpp"

namespace cw {

namespace {

void check_preconditions(const Polyhedron& p, const Vec& v, const Vec& w, bool check_tu,
                         const char* who) {
  if (v == w) throw std::invalid_argument(std::string(who) + ": identical endpoints");
  if (!is_vertex(p, v) || !is_vertex(p, w))
    throw std::invalid_argument(std::string(who) + ": endpoints must be vertices");
  if (check_tu) {
    Matrix stacked(0, p.dim);
    for (std::size_t i = 0; i < p.eq.rows(); ++i) stacked.append_row(p.eq.row(i));
    for (std::size_t i = 0; i < p.ineq.rows(); ++i) stacked.append_row(p.ineq.row(i));
    if (!is_totally_unimodular(stacked))
      throw std::invalid_argument(std::string(who) + ": description is not totally unimodular");
  }
}

void fix_variable(CircuitModel& cm, std::size_t index) {
  Vec row(cm.n + 2 * cm.m, Rational(0));
  row[index] = 1;
  cm.model.eq.append_row(row);
  cm.model.eq_rhs.push_back(Rational(0));
}

// Maximizes y+(j) over the restricted model; a positive optimum yields the
// circuit carried by the optimal vertex's x-part.
std::optional<Vec> extract_circuit(const CircuitModel& cm, std::size_t j) {
  std::size_t total = cm.n + 2 * cm.m;
  Vec obj(total, Rational(0));
  obj[cm.yplus_index(j)] = 1;
  LpResult lp = lp_solve(obj, Sense::Maximize, cm.model.eq, cm.model.eq_rhs, cm.model.ineq,
                         cm.model.ineq_rhs);
  if (lp.status != LpStatus::Optimal || lp.value <= 0) return std::nullopt;
  Vec xpart(lp.solution.begin(), lp.solution.begin() + cm.n);
  Vec g = normalize_coprime(xpart);
  if (!is_circuit(cm.source, g))
    throw std::logic_error("restricted circuit model yielded a non-circuit");
  return g;
}

}  // namespace

std::optional<Vec> tu_incident_facet_step(const Polyhedron& p, const Vec& v, const Vec& w,
                                          bool check_tu) {
  check_preconditions(p, v, w, check_tu, "tu_incident_facet_step");
  std::size_t m = p.ineq.rows();
  for (std::size_t j = 0; j < m; ++j) {
    Rational bjv = p.ineq.row_dot(j, v);
    Rational bjw = p.ineq.row_dot(j, w);
    if (!(bjv < bjw && bjw == p.ineq_rhs[j])) continue;
    Rational kappa = bjw - bjv;
    CircuitModel cm = build_circuit_model(p);
    fix_variable(cm, cm.yminus_index(j));
    for (std::size_t i = 0; i < m; ++i)
      if (p.ineq_rhs[i] - p.ineq.row_dot(i, v) < kappa) fix_variable(cm, cm.yplus_index(i));
    if (auto g = extract_circuit(cm, j)) return g;
  }
  return std::nullopt;
}

std::optional<Vec> tu_scm_step(const Polyhedron& p, const Vec& v, const Vec& w, bool check_tu) {
  check_preconditions(p, v, w, check_tu, "tu_scm_step");
  std::size_t m = p.ineq.rows();
  for (std::size_t j = 0; j < m; ++j) {
    Rational bjv = p.ineq.row_dot(j, v);
    Rational bjw = p.ineq.row_dot(j, w);
    if (!(bjv < bjw && bjw == p.ineq_rhs[j])) continue;
    Rational kappa = bjw - bjv;
    CircuitModel cm = build_sc_face(p, v, w);
    fix_variable(cm, cm.yminus_index(j));
    for (std::size_t i = 0; i < m; ++i) {
      Rational gap = p.ineq.row_dot(i, w) - p.ineq.row_dot(i, v);
      if (gap < 0) gap = -gap;
      if (gap < kappa) {
        fix_variable(cm, cm.yplus_index(i));
        fix_variable(cm, cm.yminus_index(i));
      }
    }
    if (auto g = extract_circuit(cm, j)) return g;
  }
  return std::nullopt;
}

}  // namespace cw
