#ifndef CW_GEOMETRY_HPP
#define CW_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "cw/polyhedron.hpp"

namespace cw {

struct InnerCone {
  Vec apex;
  std::vector<Vec> generators;  // coprime integer edge directions, sorted
};

/// Edge directions of edges incident to the vertex v.
InnerCone inner_cone(const Polyhedron& p, const Vec& v, const EnumLimits& limits = {});

/// Generators of the inner cone of v lying in the minimal face containing
/// v and w (rows tight at both stay tight).
InnerCone restricted_inner_cone(const Polyhedron& p, const Vec& v, const Vec& w,
                                const EnumLimits& limits = {});

/// Restricted inner cones of v and w are opposite as generator sets.
/// Requires a simple polytope (throws otherwise).
bool check_symmetric_inner_cone(const Polyhedron& p, const Vec& v, const Vec& w,
                                const EnumLimits& limits = {});

struct ParallelotopeVerdict {
  bool holds = false;
  std::size_t max_face_dim = 0;  // d*: largest minimal-face dimension over vertex pairs
};

/// Symmetric inner cone condition over all vertex pairs.
ParallelotopeVerdict is_nd_parallelotope(const Polyhedron& p, const EnumLimits& limits = {});

/// Exhaustively checks that every maximal step from every vertex lands on an
/// adjacent vertex. The witness carries the first offending step.
struct EdgeWalkWitness {
  bool all_edge_steps = true;
  Vec from;
  Vec direction;
  Rational lambda{0};
  Vec to;
};

EdgeWalkWitness all_maximal_steps_are_edge_steps(const Polyhedron& p,
                                                 const EnumLimits& limits = {});

/// Vertices adjacent to v: shared tight rows stacked on eq have rank dim − 1.
std::vector<Vec> adjacent_vertices(const Polyhedron& p, const Vec& v,
                                   const std::vector<Vec>& vertices);

}  // namespace cw

#endif
