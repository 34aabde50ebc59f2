#ifndef CW_GADGETS_HPP
#define CW_GADGETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cw/network_flow.hpp"
#include "cw/polyhedron.hpp"

namespace cw {

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

bool is_bipartite(const Graph& g);

/// { x >= 0 : sum of x over edges at j <= 1 for every vertex j }; degree rows
/// come first (by vertex index), then the nonnegativity rows (by edge index).
Polyhedron build_matching_polytope(const Graph& g);

/// Derived constants of the reduction instance, all exact identities:
///   omega0 = −W − n + 1, omega_eps = omega0 + eps, r = |E(H)| − n + 1,
///   delta = −omega0 − W/(2r) + 1/2, T = 2 r delta + 1,
///   alpha = (T−1) eps / (T delta).
struct ReductionConstants {
  Rational W;
  Rational eps;
  Rational omega0;
  Rational omega_eps;
  BigInt r;
  Rational delta;
  Rational T;
  Rational alpha;
  std::size_t digraph_nodes = 0;
};

ReductionConstants derive_constants(const Rational& W, const Rational& eps,
                                    std::size_t digraph_nodes, std::size_t aux_edges);

/// Bipartite double-cover-style graph over a digraph with distinguished s, t:
/// split vertices v_a/v_b for v != t, a matching edge per split pair, one edge
/// per digraph arc, and pendant edges at s and t carrying the +-W objective.
struct AuxGraph {
  Graph graph;
  std::vector<Rational> edge_cost;
  std::vector<std::string> vertex_names;
  std::size_t digraph_nodes = 0;
  Rational W;
  std::vector<std::size_t> split_matching_edges;  // one per v in N \ {t}
  std::size_t t_pendant_edge = 0;                 // edge {t, t'}, cost +W
  std::size_t s_pendant_edge = 0;                 // edge {s', s_a}, cost −W
};

AuxGraph build_aux_graph(const Digraph& d, std::size_t s, std::size_t t, const Rational& W);

/// Matching polytope cut by the objective threshold c^T x >= omega_eps
/// (stored as −c^T x <= −omega_eps), together with the row index of the
/// threshold and the start vertex (split matchings plus the t-pendant edge).
struct ThresholdInstance {
  Polyhedron polytope;
  std::size_t threshold_row = 0;
  Vec start_vertex;
  Vec objective;  // c
  ReductionConstants constants;
};

ThresholdInstance build_threshold_polytope(const AuxGraph& h, const Rational& eps);

/// Replaces the threshold facet by supporting rows q_i^T x <= r(i) through an
/// interior reference point z; every row is tight at z, exactly.
struct TiltedInstance {
  Polyhedron polytope;          // the matching polytope plus the q rows
  Vec reference_point;          // z, interior to the matching polytope
  Vec min_cost_matching;        // y with c^T y = omega0
  Vec start_vertex;             // same start vertex as the threshold instance
  std::vector<std::size_t> source_rows;  // matching-polytope rows whose facet meets the threshold facet
  std::vector<Rational> row_shift;       // p(i) per source row
  ReductionConstants constants;
};

TiltedInstance build_tilted_polytope(const AuxGraph& h, const Rational& eps);

/// Exhaustive check that circuits stepping from the start vertex into the
/// rows tight at z (tilted instance) are exactly the circuits stepping into
/// the threshold facet (threshold instance).
struct StepEquivalenceReport {
  bool equal = false;
  std::vector<Vec> tilted_entering;
  std::vector<Vec> threshold_entering;
  std::size_t tilted_circuit_count = 0;
  std::size_t threshold_circuit_count = 0;
};

StepEquivalenceReport check_step_equivalence(const AuxGraph& h, const Rational& eps,
                                             const EnumLimits& limits);

/// Random 2-in-2-out Eulerian digraphs. Decomposable instances are unions of
/// two arc-disjoint Hamiltonian dicycles; non-decomposable ones are sampled
/// and certified by the circuit-distance oracle (verdict "greater than 2").
Digraph generate_eulerian_2regular(std::size_t nodes, bool decomposable, std::uint64_t seed);

/// Hand-built non-decomposable 2-in-2-out instances (4, 5, and 6 nodes).
std::vector<Digraph> nondecomposable_library();

/// Union of two arc-disjoint Hamiltonian 6-cycles (outer ring plus chords).
Digraph six_node_double_hamiltonian();

/// Small digraphs with a Hamiltonian s->t path (s = 0, t = last node) used by
/// the reduction instances: 2, 4, and 5 nodes.
std::vector<Digraph> sample_hamiltonian_digraphs();

}  // namespace cw

#endif
