#include "cw/walks.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "cw/circuits.hpp"
#include "cw/linalg.hpp"
#include "cw/lp.hpp"

namespace cw {

StepResult max_step(const Polyhedron& p, const Vec& x, const Vec& g, bool validate) {
  if (validate) {
    if (!contains(p, x)) throw std::invalid_argument("max_step: point not in polyhedron");
    if (!is_circuit(p, g)) throw std::invalid_argument("max_step: direction is not a circuit");
  }
  std::optional<Rational> lambda;
  for (std::size_t i = 0; i < p.ineq.rows(); ++i) {
    Rational a = p.ineq.row_dot(i, g);
    if (a <= 0) continue;
    Rational r = (p.ineq_rhs[i] - p.ineq.row_dot(i, x)) / a;
    if (!lambda || r < *lambda) lambda = r;
  }
  if (!lambda) return {StepResult::Kind::Unbounded, Rational(0), {}};
  if (*lambda == 0) return {StepResult::Kind::NotAStep, Rational(0), x};
  return {StepResult::Kind::Step, *lambda, add(x, scale(*lambda, g))};
}

bool is_sign_compatible(const Matrix& b, const Vec& u, const Vec& v) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (b.row_dot(i, u) * b.row_dot(i, v) < 0) return false;
  }
  return true;
}

WalkVerdict verify_walk(const Polyhedron& p, const Vec& from, const Vec& to, const Walk& walk,
                        bool require_sign_compatible) {
  if (from.size() != p.dim || to.size() != p.dim)
    throw std::invalid_argument("verify_walk: endpoint dimension mismatch");
  if (!contains(p, from))
    return {false, 4, 0, "start point is not feasible"};
  Vec x = from;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    const WalkStep& step = walk[k];
    if (step.direction.size() != p.dim)
      return {false, 1, k, "direction has wrong dimension"};
    if (!is_circuit(p, step.direction))
      return {false, 1, k, "direction is not a circuit"};
    if (step.length <= 0)
      return {false, 2, k, "step length is not positive"};
    Vec next = add(x, scale(step.length, step.direction));
    if (!contains(p, next))
      return {false, 4, k, "prefix point leaves the polyhedron"};
    StepResult sr = max_step(p, x, step.direction, /*validate=*/false);
    if (sr.kind != StepResult::Kind::Step || sr.lambda != step.length)
      return {false, 5, k, "step length is not maximal"};
    x = std::move(next);
  }
  if (x != to) return {false, 3, walk.size(), "walk does not reach the target"};
  if (require_sign_compatible) {
    for (std::size_t i = 0; i < walk.size(); ++i)
      for (std::size_t j = i + 1; j < walk.size(); ++j)
        if (!is_sign_compatible(p.ineq, walk[i].direction, walk[j].direction))
          return {false, 6, j, "steps are not pairwise sign-compatible"};
  }
  return {true, 0, walk.size(), "walk accepted"};
}

Decomposition greedy_sc_decomposition(const Polyhedron& p, const Vec& x, const Vec& y) {
  if (!contains(p, x) || !contains(p, y))
    throw std::invalid_argument("greedy_sc_decomposition: endpoints must be feasible");
  Decomposition out;
  out.difference = sub(y, x);
  Vec u = out.difference;
  if (is_zero(u)) return out;

  std::size_t m = p.ineq.rows();
  for (std::size_t guard = 0; guard <= p.dim && !is_zero(u); ++guard) {
    Vec bu(m);
    bool any = false;
    for (std::size_t i = 0; i < m; ++i) {
      bu[i] = p.ineq.row_dot(i, u);
      if (bu[i] != 0) any = true;
    }
    if (!any)
      throw std::runtime_error(
          "greedy_sc_decomposition: residual annihilates every inequality row");

    // Face of the circuit model matching the sign pattern of the residual.
    CircuitModel cm = build_circuit_model(p);
    std::size_t total = cm.n + 2 * cm.m;
    for (std::size_t i = 0; i < m; ++i) {
      if (bu[i] <= 0) {
        Vec row(total, Rational(0));
        row[cm.yplus_index(i)] = 1;
        cm.model.eq.append_row(row);
        cm.model.eq_rhs.push_back(Rational(0));
      }
      if (bu[i] >= 0) {
        Vec row(total, Rational(0));
        row[cm.yminus_index(i)] = 1;
        cm.model.eq.append_row(row);
        cm.model.eq_rhs.push_back(Rational(0));
      }
    }
    LpResult lp = lp_solve(Vec(total, Rational(0)), Sense::Maximize, cm.model.eq,
                           cm.model.eq_rhs, cm.model.ineq, cm.model.ineq_rhs);
    if (lp.status != LpStatus::Optimal)
      throw std::runtime_error("greedy_sc_decomposition: sign-pattern face is empty");
    Vec xpart(lp.solution.begin(), lp.solution.begin() + cm.n);
    if (is_zero(xpart))
      throw std::runtime_error("greedy_sc_decomposition: face vertex has zero x-part");
    Vec g = normalize_coprime(xpart);

    // Largest step keeping the remaining residual sign-compatible.
    std::optional<Rational> lambda;
    for (std::size_t i = 0; i < m; ++i) {
      Rational a = p.ineq.row_dot(i, g);
      if (a == 0) continue;
      Rational r = bu[i] / a;
      if (r <= 0)
        throw std::logic_error("greedy_sc_decomposition: face produced an incompatible circuit");
      if (!lambda || r < *lambda) lambda = r;
    }
    if (!lambda)
      throw std::logic_error("greedy_sc_decomposition: circuit with empty row support");
    out.steps.push_back({g, *lambda});
    u = sub(u, scale(*lambda, g));
  }
  if (!is_zero(u))
    throw std::logic_error("greedy_sc_decomposition: failed to exhaust the residual");
  return out;
}

RadicalSum RadicalSum::radical(int p, const Rational& coef, const Rational& radicand) {
  if (p < 2) throw std::invalid_argument("radical terms need p >= 2");
  if (radicand < 0) throw std::invalid_argument("negative radicand");
  RadicalSum out = zero(p);
  if (coef == 0 || radicand == 0) return out;
  // c * (a/b)^(1/p) = (c/b) * (a b^(p-1))^(1/p)
  BigInt a = numerator(radicand), b = denominator(radicand);
  Rational c = coef / Rational(b);
  BigInt k = a;
  for (int i = 0; i < p - 1; ++i) k *= b;
  // Pull p-th powers out of k by trial division.
  BigInt outside(1), inside(1);
  BigInt n = k;
  for (BigInt q(2); q * q <= n; ++q) {
    if (n % q != 0) continue;
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    for (int i = 0; i < e / p; ++i) outside *= q;
    for (int i = 0; i < e % p; ++i) inside *= q;
  }
  inside *= n;  // leftover prime
  c *= Rational(outside);
  if (inside == 1) {
    out.rational_part = c;
  } else {
    out.terms.push_back({c, inside});
  }
  return out;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& other) {
  if (p != other.p) throw std::invalid_argument("RadicalSum: mixed norms");
  rational_part += other.rational_part;
  std::map<BigInt, Rational> merged;
  for (const auto& t : terms) merged[t.radicand] += t.coef;
  for (const auto& t : other.terms) merged[t.radicand] += t.coef;
  terms.clear();
  for (auto& [rad, coef] : merged)
    if (coef != 0) terms.push_back({coef, rad});
  return *this;
}

namespace {

// [lo, hi] with lo^p <= k <= hi^p, refined by bisection.
struct RootInterval {
  Rational lo, hi;
  BigInt k;
  int p;
  void refine() {
    Rational mid = (lo + hi) / 2;
    Rational power(1);
    for (int i = 0; i < p; ++i) power *= mid;
    if (power <= Rational(k))
      lo = mid;
    else
      hi = mid;
  }
};

RootInterval initial_interval(const BigInt& k, int p) {
  BigInt lo(0), hi(1);
  while (boost::multiprecision::pow(hi, static_cast<unsigned>(p)) < k) hi <<= 1;
  lo = hi >> 1;
  return {Rational(lo), Rational(hi), k, p};
}

}  // namespace

int RadicalSum::compare(const RadicalSum& other) const {
  if (p != other.p) throw std::invalid_argument("RadicalSum: mixed norms");
  RadicalSum diff = *this;
  RadicalSum neg = other;
  for (auto& t : neg.terms) t.coef = -t.coef;
  neg.rational_part = -neg.rational_part;
  diff += neg;
  if (diff.terms.empty()) {
    if (diff.rational_part > 0) return 1;
    if (diff.rational_part < 0) return -1;
    return 0;
  }
  // Distinct canonical radicands are linearly independent over Q, so the
  // difference is nonzero; interval refinement must separate it from 0.
  std::vector<RootInterval> roots;
  for (const auto& t : diff.terms) roots.push_back(initial_interval(t.radicand, p));
  for (int iter = 0; iter < 4096; ++iter) {
    Rational lo = diff.rational_part, hi = diff.rational_part;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const Rational& c = diff.terms[i].coef;
      if (c > 0) {
        lo += c * roots[i].lo;
        hi += c * roots[i].hi;
      } else {
        lo += c * roots[i].hi;
        hi += c * roots[i].lo;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    for (auto& r : roots) r.refine();
  }
  throw std::logic_error("RadicalSum: comparison did not separate");
}

std::string RadicalSum::str() const {
  std::string out;
  if (rational_part != 0 || terms.empty()) out = to_string(rational_part);
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += to_string(t.coef) + "*" + t.radicand.str() + "^(1/" + std::to_string(p) + ")";
  }
  return out;
}

RadicalSum step_norm(const WalkStep& step, int p) {
  if (p == kSupNorm) {
    Rational best(0);
    for (const auto& x : step.direction) {
      Rational a = x < 0 ? Rational(-x) : x;
      if (a > best) best = a;
    }
    return RadicalSum::from_rational(kSupNorm, step.length * best);
  }
  if (p == 1) {
    Rational sum(0);
    for (const auto& x : step.direction) sum += (x < 0 ? Rational(-x) : x);
    return RadicalSum::from_rational(1, step.length * sum);
  }
  Rational sum(0);
  for (const auto& x : step.direction) {
    Rational a = x < 0 ? Rational(-x) : x;
    Rational power(1);
    for (int i = 0; i < p; ++i) power *= a;
    sum += power;
  }
  return RadicalSum::radical(p, step.length, sum);
}

RadicalSum walk_length(const Walk& walk, int p) {
  RadicalSum total = RadicalSum::zero(p);
  for (const auto& step : walk) total += step_norm(step, p);
  return total;
}

}  // namespace cw
