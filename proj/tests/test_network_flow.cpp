#include <set>
#include <sstream>

#include "cw/circuits.hpp"
#include "cw/gadgets.hpp"
#include "cw/linalg.hpp"
#include "cw/network_flow.hpp"
#include "cw/oracles.hpp"
#include "doctest.h"

using namespace cw;

namespace {

Digraph directed_triangle() { return Digraph{3, {{0, 1}, {1, 2}, {2, 0}}}; }

// Diamond network with a middle arc: 4 nodes pushing 4 units left to right.
FlowNetwork diamond_network() {
  FlowNetwork n;
  n.nodes = 4;
  n.arcs = {{0, 1, Rational(2)},
            {0, 2, Rational(3)},
            {1, 2, Rational(2)},
            {1, 3, Rational(1)},
            {2, 3, Rational(4)}};
  n.balances = {Rational(-4), Rational(0), Rational(0), Rational(4)};
  return n;
}

std::set<Vec> to_set(const std::vector<Vec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("flow polytope construction") {
  Polyhedron tri = build_circulation_01(directed_triangle());
  CHECK(tri.dim == 3);
  CHECK(tri.eq.rows() == 3);
  CHECK(tri.ineq.rows() == 6);
  auto vertices = enumerate_vertices(tri);
  CHECK(to_set(vertices) ==
        std::set<Vec>{Vec(3, Rational(0)), Vec(3, Rational(1))});

  // Single arc with balances (-1, 1): the flow is forced.
  FlowNetwork single{2, {{0, 1, Rational(1)}}, {Rational(-1), Rational(1)}};
  auto forced = enumerate_vertices(build_flow_polytope(single));
  CHECK(forced == std::vector<Vec>{Vec{Rational(1)}});

  // Two disjoint directed triangles: product structure, four vertices.
  Digraph two{6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}};
  CHECK(enumerate_vertices(build_circulation_01(two)).size() == 4);
}

TEST_CASE("residual network reproduces the worked diamond example") {
  FlowNetwork n = diamond_network();
  Vec flow{Rational(2), Rational(2), Rational(2), Rational(0), Rational(4)};
  REQUIRE(is_feasible_flow(n, flow));
  ResidualNetwork r = residual(n, flow);
  REQUIRE(r.arcs.size() == 6);
  auto expect = [&](std::size_t idx, std::size_t tail, std::size_t head, const Rational& cap,
                    bool reversed, std::size_t origin) {
    CHECK(r.arcs[idx].tail == tail);
    CHECK(r.arcs[idx].head == head);
    CHECK(r.arcs[idx].capacity == cap);
    CHECK(r.arcs[idx].reversed == reversed);
    CHECK(r.arcs[idx].arc_index == origin);
  };
  expect(0, 1, 0, Rational(2), true, 0);   // saturated: only reversed
  expect(1, 0, 2, Rational(1), false, 1);  // капacity 3, flow 2: forward 1
  expect(2, 2, 0, Rational(2), true, 1);   // ... and reversed 2
  expect(3, 2, 1, Rational(2), true, 2);   // saturated middle arc
  expect(4, 1, 3, Rational(1), false, 3);  // unused arc: forward only
  expect(5, 3, 2, Rational(4), true, 4);   // saturated: only reversed
}

TEST_CASE("residual of zero and full flows on unit capacities") {
  FlowNetwork n = unit_circulation(directed_triangle());
  ResidualNetwork zero = residual(n, Vec(3, Rational(0)));
  CHECK(zero.arcs.size() == 3);
  for (const auto& a : zero.arcs) CHECK(!a.reversed);
  ResidualNetwork full = residual(n, Vec(3, Rational(1)));
  CHECK(full.arcs.size() == 3);
  for (const auto& a : full.arcs) CHECK(a.reversed);
  CHECK_THROWS_AS(residual(n, Vec(3, Rational(2))), std::invalid_argument);
}

TEST_CASE("cycle to circuit") {
  FlowNetwork tri = unit_circulation(directed_triangle());
  CHECK(cycle_to_circuit(tri, {{0, true}, {1, true}, {2, true}}) ==
        Vec{Rational(1), Rational(1), Rational(1)});

  FlowNetwork two_cycle = unit_circulation(Digraph{2, {{0, 1}, {1, 0}}});
  CHECK(cycle_to_circuit(two_cycle, {{0, true}, {1, true}}) == Vec{Rational(1), Rational(1)});

  // Undirected 4-cycle with one arc against its orientation.
  FlowNetwork four = unit_circulation(Digraph{4, {{0, 1}, {1, 2}, {3, 2}, {3, 0}}});
  Vec g = cycle_to_circuit(four, {{0, true}, {1, true}, {2, false}, {3, true}});
  CHECK(g == Vec{Rational(1), Rational(1), Rational(-1), Rational(1)});

  CHECK_THROWS_AS(cycle_to_circuit(tri, {{0, true}, {0, false}}), std::invalid_argument);
}

TEST_CASE("cycle circuits match description-based enumeration") {
  std::vector<Digraph> graphs = {
      directed_triangle(),
      {2, {{0, 1}, {1, 0}}},
      {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}},
      {3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}}},
  };
  for (const auto& g : graphs) {
    FlowNetwork n = unit_circulation(g);
    Polyhedron p = build_flow_polytope(n);
    auto from_cycles = enumerate_cycle_circuits(n);
    auto from_rows = enumerate_circuits(p);
    CHECK(to_set(from_cycles) == to_set(from_rows));
    for (const auto& c : from_cycles) {
      for (const auto& entry : c) CHECK((entry == 0 || entry == 1 || entry == -1));
    }
  }
}

TEST_CASE("feasible circuits at a flow are the residual dicycles") {
  Digraph g{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}};
  FlowNetwork n = unit_circulation(g);
  Polyhedron p = build_flow_polytope(n);
  auto circuits = enumerate_cycle_circuits(n);
  for (const auto& x : enumerate_vertices(p)) {
    ResidualNetwork r = residual(n, x);
    for (const auto& canonical : circuits) {
      for (const Vec& dir : {canonical, negate(canonical)}) {
        StepResult sr = max_step(p, x, dir, false);
        bool feasible = sr.kind == StepResult::Kind::Step;
        // A direction is a residual dicycle iff every +1 arc has forward
        // residual capacity and every −1 arc has reversed capacity.
        bool residual_ok = true;
        for (std::size_t e = 0; e < dir.size(); ++e) {
          if (dir[e] == 1 && !(x[e] < n.arcs[e].capacity)) residual_ok = false;
          if (dir[e] == -1 && !(x[e] > 0)) residual_ok = false;
        }
        CHECK(feasible == residual_ok);
      }
    }
  }
}

TEST_CASE("nf incident facet step") {
  FlowNetwork tri = unit_circulation(directed_triangle());
  Vec zero(3, Rational(0)), full(3, Rational(1));
  auto g = nf_incident_facet_step(tri, zero, full);
  REQUIRE(g.has_value());
  CHECK(*g == Vec{Rational(1), Rational(1), Rational(1)});

  CHECK(!nf_incident_facet_step(tri, zero, zero).has_value());

  Digraph six = six_node_double_hamiltonian();
  FlowNetwork n = unit_circulation(six);
  Polyhedron p = build_flow_polytope(n);
  Vec z(12, Rational(0)), f(12, Rational(1));
  auto step = nf_incident_facet_step(n, z, f);
  REQUIRE(step.has_value());
  CHECK(is_circuit(p, *step));
  StepResult sr = max_step(p, z, *step);
  REQUIRE(sr.kind == StepResult::Kind::Step);
  CHECK(!shared_facet_rows(p, sr.point, f).empty());
}

TEST_CASE("nf scm step") {
  FlowNetwork tri = unit_circulation(directed_triangle());
  Vec zero(3, Rational(0)), full(3, Rational(1));
  auto g = nf_scm_step(tri, zero, full);
  REQUIRE(g.has_value());
  CHECK(*g == Vec{Rational(1), Rational(1), Rational(1)});
  CHECK(!nf_scm_step(tri, full, full).has_value());

  Digraph six = six_node_double_hamiltonian();
  FlowNetwork n = unit_circulation(six);
  Polyhedron p = build_flow_polytope(n);
  Vec z(12, Rational(0)), f(12, Rational(1));
  auto step = nf_scm_step(n, z, f);
  REQUIRE(step.has_value());
  CHECK(is_sign_compatible(p.ineq, *step, sub(f, z)));
  StepResult sr = max_step(p, z, *step);
  REQUIRE(sr.kind == StepResult::Kind::Step);
  CHECK(is_sign_compatible(p.ineq, *step, sub(f, sr.point)));
}

TEST_CASE("network text format round trip") {
  FlowNetwork n = diamond_network();
  std::stringstream io;
  write_network(io, n);
  FlowNetwork back = read_network(io);
  CHECK(back.nodes == n.nodes);
  REQUIRE(back.arcs.size() == n.arcs.size());
  for (std::size_t e = 0; e < n.arcs.size(); ++e) {
    CHECK(back.arcs[e].tail == n.arcs[e].tail);
    CHECK(back.arcs[e].head == n.arcs[e].head);
    CHECK(back.arcs[e].capacity == n.arcs[e].capacity);
  }
  CHECK(back.balances == n.balances);

  std::stringstream fio;
  Vec flow{Rational(2), Rational(2), Rational(2), Rational(0), Rational(4)};
  write_flow(fio, flow);
  CHECK(read_flow(fio, 5) == flow);

  std::stringstream bad("nodes 2\narc 0 5 1\n");
  CHECK_THROWS_WITH_AS(read_network(bad), "line 2: arc endpoint out of range",
                       std::runtime_error);
}
