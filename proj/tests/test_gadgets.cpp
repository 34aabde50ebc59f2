#include <set>

#include "cw/circuits.hpp"
#include "cw/gadgets.hpp"
#include "cw/linalg.hpp"
#include "cw/lp.hpp"
#include "cw/network_flow.hpp"
#include "cw/oracles.hpp"
#include "doctest.h"

using namespace cw;

namespace {

// 4-node digraph with a Hamiltonian 0 -> 1 -> 2 -> 3 path and back-arcs.
Digraph four_node_digraph() { return sample_hamiltonian_digraphs()[2]; }

}  // namespace

TEST_CASE("bipartite matching polytope") {
  Graph single{2, {{0, 1}}};
  auto iv = enumerate_vertices(build_matching_polytope(single));
  CHECK(iv == std::vector<Vec>{{Rational(0)}, {Rational(1)}});

  Graph path3{3, {{0, 1}, {1, 2}}};
  Polyhedron tri = build_matching_polytope(path3);
  auto tv = enumerate_vertices(tri);
  CHECK(tv.size() == 3);  // empty, {01}, {12}

  // Matchings of the 4-cycle: empty, four single edges, two perfect.
  Graph c4{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  CHECK(enumerate_vertices(build_matching_polytope(c4)).size() == 7);

  Graph odd{3, {{0, 1}, {1, 2}, {2, 0}}};
  CHECK_THROWS_AS(build_matching_polytope(odd), std::invalid_argument);
}

TEST_CASE("aux graph construction") {
  Digraph d = four_node_digraph();
  AuxGraph h = build_aux_graph(d, 0, 3, Rational(100));
  CHECK(h.graph.vertices == 9);
  CHECK(h.graph.edges.size() == 10);  // 3 matching + 5 arc + 2 pendant
  CHECK(is_bipartite(h.graph));
  std::size_t zero_cost = 0, minus_one = 0, plus_w = 0, minus_w = 0;
  for (const auto& c : h.edge_cost) {
    if (c == 0) ++zero_cost;
    if (c == -1) ++minus_one;
    if (c == Rational(100)) ++plus_w;
    if (c == Rational(-100)) ++minus_w;
  }
  CHECK(zero_cost == 3);
  CHECK(minus_one == 5);
  CHECK(plus_w == 1);
  CHECK(minus_w == 1);

  Digraph single{2, {{0, 1}}};
  AuxGraph hs = build_aux_graph(single, 0, 1, Rational(20));
  CHECK(hs.graph.vertices == 5);  // s_a, s_b, t, s', t'
  CHECK(hs.graph.edges.size() == 4);

  Digraph out_of_t{2, {{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(build_aux_graph(out_of_t, 0, 1, Rational(20)), std::invalid_argument);
}

TEST_CASE("reduction constants identities") {
  ReductionConstants c = derive_constants(Rational(100), Rational(1, 2), 4, 10);
  CHECK(c.omega0 == Rational(-103));
  CHECK(c.omega_eps == Rational(-103) + Rational(1, 2));
  CHECK(c.r == 2);
  CHECK(c.delta == -c.omega0 + (c.W - Rational(c.r)) / (2 * Rational(c.r)));
  CHECK(c.T == 2 * Rational(c.r) * c.delta + 1);
  CHECK(c.alpha == (c.T - 1) * c.eps / (c.T * c.delta));
  CHECK(c.W - c.omega_eps > 1);
  CHECK(c.alpha > 0);
  CHECK(c.alpha < 1);
}

TEST_CASE("threshold polytope and its start vertex") {
  Digraph d = four_node_digraph();
  AuxGraph h = build_aux_graph(d, 0, 3, Rational(40));
  ThresholdInstance inst = build_threshold_polytope(h, Rational(1, 2));
  CHECK(inst.polytope.ineq.rows() == 19 + 1);
  CHECK(inst.threshold_row == 19);
  CHECK(contains(inst.polytope, inst.start_vertex));
  CHECK(is_vertex(inst.polytope, inst.start_vertex));
  CHECK(dot(inst.objective, inst.start_vertex) == Rational(40));

  // Minimum of the objective over the matching polytope is omega0.
  Polyhedron base = build_matching_polytope(h.graph);
  LpResult lp = lp_solve(inst.objective, Sense::Minimize, base.eq, base.eq_rhs, base.ineq,
                         base.ineq_rhs);
  REQUIRE(lp.status == LpStatus::Optimal);
  CHECK(lp.value == inst.constants.omega0);
}

TEST_CASE("tilted polytope invariants") {
  for (std::size_t which : {0, 1, 2}) {
    Digraph d = sample_hamiltonian_digraphs()[which];
    AuxGraph h = build_aux_graph(d, 0, d.nodes - 1, Rational(10 * d.nodes));
    TiltedInstance inst = build_tilted_polytope(h, Rational(1, 2));
    const ReductionConstants& c = inst.constants;

    // The reference point sits strictly inside the matching polytope at the
    // prescribed objective value.
    Polyhedron base = build_matching_polytope(h.graph);
    Vec cost = h.edge_cost;
    CHECK(dot(cost, inst.reference_point) == c.omega0 + (c.T - 1) / c.T * c.eps);
    for (std::size_t i = 0; i < base.ineq.rows(); ++i)
      CHECK(base.ineq.row_dot(i, inst.reference_point) < base.ineq_rhs[i]);

    // Every added row is tight at the reference point, exactly.
    REQUIRE(inst.polytope.ineq.rows() == base.ineq.rows() + inst.source_rows.size());
    for (std::size_t k = 0; k < inst.source_rows.size(); ++k) {
      std::size_t row = base.ineq.rows() + k;
      CHECK(inst.polytope.ineq.row_dot(row, inst.reference_point) ==
            inst.polytope.ineq_rhs[row]);
    }

    // Tilted rows are valid for the threshold polytope: maximizing each over
    // it never exceeds the right-hand side.
    ThresholdInstance thr = build_threshold_polytope(h, Rational(1, 2));
    for (std::size_t k = 0; k < inst.source_rows.size(); ++k) {
      std::size_t row = base.ineq.rows() + k;
      LpResult lp = lp_solve(inst.polytope.ineq.row(row), Sense::Maximize, thr.polytope.eq,
                             thr.polytope.eq_rhs, thr.polytope.ineq, thr.polytope.ineq_rhs);
      REQUIRE(lp.status == LpStatus::Optimal);
      CHECK(lp.value <= inst.polytope.ineq_rhs[row]);
    }
  }
}

TEST_CASE("tilted construction rejects instances without a cheap enough matching") {
  // Remove the Hamiltonian path: 0 -> 2 only, no path through 1.
  Digraph d{3, {{0, 2}, {0, 1}}};
  AuxGraph h = build_aux_graph(d, 0, 2, Rational(30));
  CHECK_THROWS_WITH_AS(build_tilted_polytope(h, Rational(1, 2)),
                       "instance lacks Hamiltonian path witness", std::runtime_error);
}

TEST_CASE("step equivalence on the single-arc instance") {
  Digraph d = sample_hamiltonian_digraphs()[0];
  AuxGraph h = build_aux_graph(d, 0, 1, Rational(20));
  StepEquivalenceReport report = check_step_equivalence(h, Rational(1, 2), EnumLimits{20, 40});
  CHECK(report.equal);
  CHECK(report.threshold_circuit_count > 0);
  CHECK(report.tilted_circuit_count > 0);
  CHECK(!report.threshold_entering.empty());
}

TEST_CASE("eulerian generators") {
  Digraph dec = generate_eulerian_2regular(3, true, 5);
  CHECK(dec.arcs.size() == 6);  // complete digraph on 3 nodes
  for (std::size_t v = 0; v < 3; ++v) {
    std::size_t in = 0, out = 0;
    for (auto [a, b] : dec.arcs) {
      if (a == v) ++out;
      if (b == v) ++in;
    }
    CHECK(in == 2);
    CHECK(out == 2);
  }

  Digraph dec6 = generate_eulerian_2regular(6, true, 7);
  FlowNetwork net = unit_circulation(dec6);
  auto circuits = enumerate_cycle_circuits(net);
  Polyhedron p = build_flow_polytope(net);
  Vec zero(dec6.arcs.size(), Rational(0)), full(dec6.arcs.size(), Rational(1));
  DistanceVerdict v = circuit_distance(p, zero, full, 2, &circuits);
  CHECK(v.within);
  CHECK(v.distance == 2);

  Digraph hard = generate_eulerian_2regular(5, false, 11);
  FlowNetwork hard_net = unit_circulation(hard);
  auto hard_circuits = enumerate_cycle_circuits(hard_net);
  Polyhedron hard_p = build_flow_polytope(hard_net);
  Vec hz(hard.arcs.size(), Rational(0)), hf(hard.arcs.size(), Rational(1));
  CHECK(!circuit_distance(hard_p, hz, hf, 2, &hard_circuits).within);
}

TEST_CASE("hand-built non-decomposable instances are certified by the oracle") {
  for (const Digraph& g : nondecomposable_library()) {
    FlowNetwork net = unit_circulation(g);
    auto circuits = enumerate_cycle_circuits(net);
    Polyhedron p = build_flow_polytope(net);
    Vec zero(g.arcs.size(), Rational(0)), full(g.arcs.size(), Rational(1));
    CHECK(!circuit_distance(p, zero, full, 2, &circuits).within);
    // 2-in-2-out sanity
    for (std::size_t v = 0; v < g.nodes; ++v) {
      std::size_t in = 0, out = 0;
      for (auto [a, b] : g.arcs) {
        if (a == v) ++out;
        if (b == v) ++in;
      }
      CHECK(in == 2);
      CHECK(out == 2);
    }
  }
}

TEST_CASE("chorded six-cycle decomposes into its two hamiltonian rings") {
  Digraph g = six_node_double_hamiltonian();
  CHECK(g.arcs.size() == 12);
  FlowNetwork net = unit_circulation(g);
  auto circuits = enumerate_cycle_circuits(net);
  Polyhedron p = build_flow_polytope(net);
  Vec zero(12, Rational(0)), full(12, Rational(1));
  DistanceVerdict v = circuit_distance(p, zero, full, 2, &circuits);
  CHECK(v.within);
  CHECK(v.distance == 2);
}
