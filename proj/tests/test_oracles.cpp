#include "cw/circuits.hpp"
#include "cw/gadgets.hpp"
#include "cw/linalg.hpp"
#include "cw/network_flow.hpp"
#include "cw/oracles.hpp"
#include "doctest.h"

using namespace cw;

namespace {

const Vec kOrigin{Rational(0), Rational(0)};
const Vec kOnes{Rational(1), Rational(1)};

// Wide hexagon with vertices (0,0), (1,2), (9,3), (10,0), (9,-3), (1,-2):
// a long chord circuit enters a facet at the far vertex, but no maximal step
// is sign-compatible in both required ways.
Polyhedron wide_hexagon() {
  return Polyhedron::from_inequalities(
      Matrix::from_ints({{-2, 1}, {-1, 8}, {3, 1}, {3, -1}, {-1, -8}, {-2, -1}}),
      {Rational(0), Rational(15), Rational(30), Rational(30), Rational(15), Rational(0)});
}

}  // namespace

TEST_CASE("circuit distance on boxes") {
  Polyhedron square = Polyhedron::box(2);
  CHECK(circuit_distance(square, kOrigin, kOrigin, 0).distance == 0);
  DistanceVerdict v = circuit_distance(square, kOrigin, kOnes, 2);
  CHECK(v.within);
  CHECK(v.distance == 2);
  CHECK(verify_walk(square, kOrigin, kOnes, v.walk, false).accepted);
  CHECK(!circuit_distance(square, kOrigin, kOnes, 1).within);
  CHECK_THROWS_AS(circuit_distance(square, {Rational(1, 2), Rational(0)}, kOnes, 1),
                  std::invalid_argument);
}

TEST_CASE("distances on the chorded six-cycle circulation polytope") {
  Digraph g = six_node_double_hamiltonian();
  FlowNetwork n = unit_circulation(g);
  Polyhedron p = build_flow_polytope(n);
  auto circuits = enumerate_cycle_circuits(n);
  Vec zero(12, Rational(0)), full(12, Rational(1));

  DistanceVerdict circ = circuit_distance(p, zero, full, 2, &circuits);
  CHECK(circ.within);
  CHECK(circ.distance == 2);
  CHECK(verify_walk(p, zero, full, circ.walk, false).accepted);

  DistanceVerdict scm = scm_circuit_distance(p, zero, full, 2, &circuits);
  CHECK(scm.within);
  CHECK(scm.distance == 2);

  DistanceVerdict decomp = sc_decomp_distance(p, zero, full, 2, &circuits);
  CHECK(decomp.within);
  CHECK(decomp.distance == 2);
}

TEST_CASE("scm distance exceeds circuit distance when sign compatibility blocks") {
  // From (1,0) to (0,1) on the triangle the single-step walk uses (-1,1);
  // on this stretched triangle only incompatible two-step walks exist.
  Polyhedron p = Polyhedron::from_inequalities(
      Matrix::from_ints({{-1, 0}, {0, -1}, {1, 2}}),
      {Rational(0), Rational(0), Rational(2)});
  Vec right{Rational(2), Rational(0)}, top{Rational(0), Rational(1)};
  DistanceVerdict circ = circuit_distance(p, right, top, 2);
  CHECK(circ.within);
  DistanceVerdict scm = scm_circuit_distance(p, right, top, 2);
  CHECK(scm.within);
  CHECK(scm.distance >= circ.distance);
}

TEST_CASE("sc decomposition distance basics") {
  Polyhedron square = Polyhedron::box(2);
  DistanceVerdict single =
      sc_decomp_distance(square, kOrigin, {Rational(1), Rational(0)}, 2);
  CHECK(single.within);
  CHECK(single.distance == 1);
  DistanceVerdict two = sc_decomp_distance(square, kOrigin, kOnes, 2);
  CHECK(two.within);
  CHECK(two.distance == 2);
  CHECK(!sc_decomp_distance(square, kOrigin, kOnes, 1).within);
}

TEST_CASE("geometric distance") {
  Polyhedron square = Polyhedron::box(2);
  auto d = geometric_distance(square, kOrigin, {Rational(1), Rational(0)}, 2, 1);
  REQUIRE(d.has_value());
  CHECK(*d == RadicalSum::from_rational(2, Rational(1)));

  Digraph g = six_node_double_hamiltonian();
  FlowNetwork n = unit_circulation(g);
  Polyhedron p = build_flow_polytope(n);
  auto circuits = enumerate_cycle_circuits(n);
  Vec zero(12, Rational(0)), full(12, Rational(1));

  auto sup = geometric_distance(p, zero, full, kSupNorm, 4, &circuits);
  REQUIRE(sup.has_value());
  CHECK(*sup == RadicalSum::from_rational(kSupNorm, Rational(2)));

  auto euclid = geometric_distance(p, zero, full, 2, 4, &circuits);
  REQUIRE(euclid.has_value());
  CHECK(*euclid == RadicalSum::radical(2, Rational(2), Rational(6)));
}

TEST_CASE("facet step search") {
  Polyhedron square = Polyhedron::box(2);
  // rows: x <= 1, y <= 1, -x <= 0, -y <= 0
  auto to_right = facet_step_bruteforce(square, kOrigin, 0);
  REQUIRE(to_right.has_value());
  CHECK(*to_right == Vec{Rational(1), Rational(0)});

  // Facet -x <= 0 is already tight at the origin; the north step stays on it.
  auto along = facet_step_bruteforce(square, kOrigin, 2);
  REQUIRE(along.has_value());
  CHECK(*along == Vec{Rational(0), Rational(1)});

  Polyhedron tri = Polyhedron::from_inequalities(
      Matrix::from_ints({{-1, 0}, {0, -1}, {1, 1}}),
      {Rational(0), Rational(0), Rational(1)});
  auto hyp = facet_step_bruteforce(tri, kOrigin, 2);
  REQUIRE(hyp.has_value());
  StepResult sr = max_step(tri, kOrigin, *hyp);
  CHECK(tri.ineq.row_dot(2, sr.point) == Rational(1));

  CHECK_THROWS_AS(facet_step_bruteforce(square, kOrigin, 9), std::invalid_argument);
}

TEST_CASE("incident facet step search") {
  Polyhedron square = Polyhedron::box(2);
  auto g = incident_facet_step_bruteforce(square, kOrigin, kOnes);
  REQUIRE(g.has_value());
  StepResult sr = max_step(square, kOrigin, *g);
  CHECK(!shared_facet_rows(square, sr.point, kOnes).empty());

  // u = v: a step staying on a tight row of v qualifies.
  auto self_step = incident_facet_step_bruteforce(square, kOrigin, kOrigin);
  REQUIRE(self_step.has_value());
}

TEST_CASE("hexagon: incident facet step yes, scm step no") {
  Polyhedron hex = wide_hexagon();
  Vec x{Rational(0), Rational(0)}, y{Rational(10), Rational(0)};
  REQUIRE(is_vertex(hex, x));
  REQUIRE(is_vertex(hex, y));

  auto incident = incident_facet_step_bruteforce(hex, x, y);
  REQUIRE(incident.has_value());
  StepResult sr = max_step(hex, x, *incident);
  CHECK(!shared_facet_rows(hex, sr.point, y).empty());

  CHECK(!scm_step_bruteforce(hex, x, y).has_value());
}

TEST_CASE("scm step on the square") {
  Polyhedron square = Polyhedron::box(2);
  auto g = scm_step_bruteforce(square, kOrigin, kOnes);
  REQUIRE(g.has_value());
  Vec u = sub(kOnes, kOrigin);
  CHECK(is_sign_compatible(square.ineq, *g, u));
  StepResult sr = max_step(square, kOrigin, *g);
  CHECK(sr.kind == StepResult::Kind::Step);
  CHECK(is_sign_compatible(square.ineq, *g, sub(kOnes, sr.point)));

  CHECK(!scm_step_bruteforce(square, kOrigin, kOrigin).has_value());
}

TEST_CASE("sup-norm distance equals step count on 0/1 circulations") {
  Digraph tri{3, {{0, 1}, {1, 2}, {2, 0}}};
  FlowNetwork n = unit_circulation(tri);
  Polyhedron p = build_flow_polytope(n);
  Vec zero(3, Rational(0)), full(3, Rational(1));
  auto circuits = enumerate_cycle_circuits(n);
  DistanceVerdict steps = circuit_distance(p, zero, full, 3, &circuits);
  auto sup = geometric_distance(p, zero, full, kSupNorm, 3, &circuits);
  REQUIRE(steps.within);
  REQUIRE(sup.has_value());
  CHECK(*sup == RadicalSum::from_rational(kSupNorm, Rational(steps.distance)));
}
