#include <random>

#include "cw/linalg.hpp"
#include "cw/lp.hpp"
#include "cw/polyhedron.hpp"
#include "doctest.h"

using namespace cw;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational(" 2/4 ") == Rational(1, 2));  // lowest terms
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(denominator(parse_rational("3/-6")) > 0);  // sign moves to the numerator
  CHECK(parse_rational("3/-6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(parse_vector("(1/2, -1, 3)") == Vec{Rational(1, 2), Rational(-1), Rational(3)});
  CHECK(format_vector({Rational(1, 2), Rational(-2)}) == "(1/2, -2)");
}

TEST_CASE("rational field axioms on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 15);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (b != 0) CHECK(a / b * b == a);
    CHECK(a - a == 0);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(2)) == 2);
  CHECK(rank(Matrix(3, 4)) == 0);
  CHECK(rank(Matrix::from_ints({{1, 2}, {2, 4}, {0, 1}})) == 2);
}

TEST_CASE("rank equals rank of the transpose on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 5);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix::identity(2)).empty());
  auto one_row = kernel_basis(Matrix::from_ints({{1, 1}}));
  REQUIRE(one_row.size() == 1);
  CHECK(one_row[0][0] == -one_row[0][1]);

  // Node-arc incidence of the directed triangle: kernel spanned by all-ones.
  Matrix incidence = Matrix::from_ints({{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}});
  auto basis = kernel_basis(incidence);
  REQUIRE(basis.size() == 1);
  CHECK(normalize_coprime(basis[0]) == Vec{Rational(1), Rational(1), Rational(1)});
}

TEST_CASE("kernel vectors multiply to zero on random matrices") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> entry(-3, 3), rows(1, 4), cols(2, 6);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m(rows(rng), cols(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    for (const auto& v : kernel_basis(m)) CHECK(is_zero(m.multiply(v)));
  }
}

TEST_CASE("normalize_coprime") {
  CHECK(normalize_coprime({Rational(1, 2), Rational(-1, 3)}) == Vec{Rational(3), Rational(-2)});
  CHECK(normalize_coprime({Rational(2), Rational(4), Rational(6)}) ==
        Vec{Rational(1), Rational(2), Rational(3)});
  CHECK(normalize_coprime({Rational(-5), Rational(0), Rational(0)}) ==
        Vec{Rational(-1), Rational(0), Rational(0)});
  CHECK_THROWS_WITH_AS(normalize_coprime({Rational(0), Rational(0)}),
                       "zero vector has no coprime normalization", std::invalid_argument);
}

TEST_CASE("normalize_coprime is idempotent on random vectors") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), len(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Vec v(len(rng));
    bool zero = true;
    for (auto& x : v) {
      x = Rational(num(rng), den(rng));
      if (x != 0) zero = false;
    }
    if (zero) continue;
    Vec once = normalize_coprime(v);
    CHECK(normalize_coprime(once) == once);
  }
}

TEST_CASE("lp examples") {
  // max x over 0 <= x <= 1
  Matrix b = Matrix::from_ints({{1}, {-1}});
  Vec d{Rational(1), Rational(0)};
  LpResult r = lp_solve({Rational(1)}, Sense::Maximize, Matrix(0, 1), {}, b, d);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 1);
  CHECK(r.solution == Vec{Rational(1)});

  // max x over x >= 0
  Matrix only_lower = Matrix::from_ints({{-1}});
  LpResult unb = lp_solve({Rational(1)}, Sense::Maximize, Matrix(0, 1), {}, only_lower,
                          {Rational(0)});
  CHECK(unb.status == LpStatus::Unbounded);

  // max x + y over the unit square
  Polyhedron square = Polyhedron::box(2);
  LpResult corner = lp_solve({Rational(1), Rational(1)}, Sense::Maximize, square.eq,
                             square.eq_rhs, square.ineq, square.ineq_rhs);
  REQUIRE(corner.status == LpStatus::Optimal);
  CHECK(corner.value == 2);
  CHECK(corner.solution == Vec{Rational(1), Rational(1)});

  // infeasible: x <= -1, x >= 0
  Matrix infeas = Matrix::from_ints({{1}, {-1}});
  LpResult inf = lp_solve({Rational(1)}, Sense::Maximize, Matrix(0, 1), {}, infeas,
                          {Rational(-1), Rational(0)});
  CHECK(inf.status == LpStatus::Infeasible);

  CHECK_THROWS_AS(lp_solve({Rational(1)}, Sense::Maximize, Matrix(0, 1), {},
                           Matrix::from_ints({{1, 0}}), {Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("lp agrees with exhaustive vertex enumeration on random bounded systems") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> entry(-3, 3), rhs(1, 5), ncoef(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 4;
    Polyhedron box = Polyhedron::box(n);
    std::size_t extra = ncoef(rng);
    for (std::size_t i = 0; i < extra && box.ineq.rows() < 8; ++i) {
      Vec row(n);
      for (auto& x : row) x = entry(rng);
      box.ineq.append_row(row);
      box.ineq_rhs.push_back(rhs(rng));  // rhs >= 1 keeps the origin feasible
    }
    Vec obj(n);
    for (auto& x : obj) x = entry(rng);
    LpResult lp = lp_solve(obj, Sense::Maximize, box.eq, box.eq_rhs, box.ineq, box.ineq_rhs);
    REQUIRE(lp.status == LpStatus::Optimal);
    auto vertices = enumerate_vertices(box);
    REQUIRE(!vertices.empty());
    Rational best = dot(obj, vertices[0]);
    for (const auto& v : vertices) best = std::max(best, dot(obj, v));
    CHECK(lp.value == best);
    CHECK(is_vertex(box, lp.solution));
  }
}

TEST_CASE("lp basic solution is a vertex with a full-rank tight set") {
  Polyhedron square = Polyhedron::box(2);
  // Degenerate objective: the whole top edge is optimal.
  LpResult r = lp_solve({Rational(0), Rational(1)}, Sense::Maximize, square.eq, square.eq_rhs,
                        square.ineq, square.ineq_rhs);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 1);
  CHECK(is_vertex(square, r.solution));
}
