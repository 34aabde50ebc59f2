#include "cw/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cw/circuits.hpp"
#include "cw/linalg.hpp"
#include "cw/walks.hpp"

namespace cw {

namespace {

std::size_t face_rank(const Polyhedron& p, const std::vector<std::size_t>& rows) {
  Matrix stack(0, p.dim);
  for (std::size_t i = 0; i < p.eq.rows(); ++i) stack.append_row(p.eq.row(i));
  for (auto i : rows) stack.append_row(p.ineq.row(i));
  return rank(stack);
}

std::size_t polytope_dim(const Polyhedron& p) {
  Matrix stack(0, p.dim);
  for (std::size_t i = 0; i < p.eq.rows(); ++i) stack.append_row(p.eq.row(i));
  return p.dim - rank(stack);
}

void require_simple(const Polyhedron& p, const std::vector<Vec>& vertices) {
  Polyhedron dedup = drop_duplicate_rows(p);
  std::size_t dim = polytope_dim(p);
  for (const auto& v : vertices) {
    if (tight_rows(dedup, v).rows.size() != dim)
      throw std::invalid_argument("condition stated for simple polytopes");
  }
}

}  // namespace

std::vector<Vec> adjacent_vertices(const Polyhedron& p, const Vec& v,
                                   const std::vector<Vec>& vertices) {
  std::vector<Vec> out;
  for (const auto& w : vertices) {
    if (w == v) continue;
    if (face_rank(p, shared_facet_rows(p, v, w)) == p.dim - 1) out.push_back(w);
  }
  return out;
}

InnerCone inner_cone(const Polyhedron& p, const Vec& v, const EnumLimits& limits) {
  if (!is_vertex(p, v)) throw std::invalid_argument("inner_cone: apex must be a vertex");
  InnerCone cone;
  cone.apex = v;
  for (const auto& w : adjacent_vertices(p, v, enumerate_vertices(p, limits)))
    cone.generators.push_back(normalize_coprime(sub(w, v)));
  std::sort(cone.generators.begin(), cone.generators.end());
  return cone;
}

InnerCone restricted_inner_cone(const Polyhedron& p, const Vec& v, const Vec& w,
                                const EnumLimits& limits) {
  if (!is_vertex(p, v) || !is_vertex(p, w))
    throw std::invalid_argument("restricted_inner_cone: endpoints must be vertices");
  auto shared = shared_facet_rows(p, v, w);
  InnerCone cone;
  cone.apex = v;
  for (const auto& x : adjacent_vertices(p, v, enumerate_vertices(p, limits))) {
    bool in_face = true;
    for (auto i : shared)
      if (p.ineq.row_dot(i, x) != p.ineq_rhs[i]) {
        in_face = false;
        break;
      }
    if (in_face) cone.generators.push_back(normalize_coprime(sub(x, v)));
  }
  std::sort(cone.generators.begin(), cone.generators.end());
  return cone;
}

bool check_symmetric_inner_cone(const Polyhedron& p, const Vec& v, const Vec& w,
                                const EnumLimits& limits) {
  auto vertices = enumerate_vertices(p, limits);
  require_simple(p, vertices);
  InnerCone at_v = restricted_inner_cone(p, v, w, limits);
  InnerCone at_w = restricted_inner_cone(p, w, v, limits);
  std::set<Vec> lhs(at_v.generators.begin(), at_v.generators.end());
  std::set<Vec> rhs;
  for (const auto& g : at_w.generators) rhs.insert(normalize_coprime(negate(g)));
  return lhs == rhs;
}

ParallelotopeVerdict is_nd_parallelotope(const Polyhedron& p, const EnumLimits& limits) {
  auto vertices = enumerate_vertices(p, limits);
  require_simple(p, vertices);
  ParallelotopeVerdict verdict;
  verdict.holds = true;
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      std::size_t face_dim = p.dim - face_rank(p, shared_facet_rows(p, vertices[a], vertices[b]));
      verdict.max_face_dim = std::max(verdict.max_face_dim, face_dim);
      if (!check_symmetric_inner_cone(p, vertices[a], vertices[b], limits))
        verdict.holds = false;
    }
  }
  return verdict;
}

EdgeWalkWitness all_maximal_steps_are_edge_steps(const Polyhedron& p, const EnumLimits& limits) {
  auto vertices = enumerate_vertices(p, limits);
  auto circuits = enumerate_circuits(p, limits);
  EdgeWalkWitness witness;
  for (const auto& v : vertices) {
    auto adjacent = adjacent_vertices(p, v, vertices);
    std::set<Vec> adjacent_set(adjacent.begin(), adjacent.end());
    for (const auto& canonical : circuits) {
      for (const Vec& g : {canonical, negate(canonical)}) {
        StepResult sr = max_step(p, v, g, /*validate=*/false);
        if (sr.kind != StepResult::Kind::Step) continue;
        if (!adjacent_set.count(sr.point)) {
          witness.all_edge_steps = false;
          witness.from = v;
          witness.direction = g;
          witness.lambda = sr.lambda;
          witness.to = sr.point;
          return witness;
        }
      }
    }
  }
  return witness;
}

}  // namespace cw
