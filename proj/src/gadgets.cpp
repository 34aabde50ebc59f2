#include "cw/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "cw/circuits.hpp"
#include "cw/linalg.hpp"
#include "cw/lp.hpp"
#include "cw/oracles.hpp"

namespace cw {

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.vertices, -1);
  std::vector<std::vector<std::size_t>> adj(g.vertices);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (std::size_t s = 0; s < g.vertices; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Polyhedron build_matching_polytope(const Graph& g) {
  if (!is_bipartite(g))
    throw std::invalid_argument("build_matching_polytope: graph is not bipartite");
  std::size_t m = g.edges.size();
  Matrix ineq(g.vertices + m, m);
  Vec rhs(g.vertices + m);
  for (std::size_t e = 0; e < m; ++e) {
    ineq.at(g.edges[e].first, e) = 1;
    ineq.at(g.edges[e].second, e) = 1;
  }
  for (std::size_t j = 0; j < g.vertices; ++j) rhs[j] = 1;
  for (std::size_t e = 0; e < m; ++e) {
    ineq.at(g.vertices + e, e) = -1;
    rhs[g.vertices + e] = 0;
  }
  return Polyhedron::from_inequalities(std::move(ineq), std::move(rhs));
}

ReductionConstants derive_constants(const Rational& W, const Rational& eps,
                                    std::size_t digraph_nodes, std::size_t aux_edges) {
  ReductionConstants c;
  c.W = W;
  c.eps = eps;
  c.digraph_nodes = digraph_nodes;
  c.omega0 = -W - Rational(digraph_nodes) + 1;
  c.omega_eps = c.omega0 + eps;
  // free_count is the number of cost −1 edges left free by a minimum
  // matching. It is 0 exactly for the single-arc instance, where the
  // perturbation denominator degenerates; any positive weight works there.
  BigInt free_count = BigInt(aux_edges) - BigInt(2 * digraph_nodes);
  if (free_count < 0) free_count = 0;
  BigInt r = free_count < 1 ? BigInt(1) : free_count;
  c.r = r;
  c.delta = -c.omega0 + (W - Rational(free_count)) / (2 * Rational(r));
  c.T = 2 * Rational(r) * c.delta + 1;
  c.alpha = (c.T - 1) * eps / (c.T * c.delta);
  return c;
}

AuxGraph build_aux_graph(const Digraph& d, std::size_t s, std::size_t t, const Rational& W) {
  if (s == t || s >= d.nodes || t >= d.nodes)
    throw std::invalid_argument("build_aux_graph: need distinct nodes s, t");
  for (auto [tail, head] : d.arcs)
    if (tail == t)
      throw std::invalid_argument("build_aux_graph: arcs leaving t are not supported");

  AuxGraph h;
  h.digraph_nodes = d.nodes;
  h.W = W;
  // Split copies v_a, v_b for each v != t, then t, s', t'.
  std::vector<std::size_t> a_index(d.nodes, 0), b_index(d.nodes, 0);
  std::size_t next = 0;
  for (std::size_t v = 0; v < d.nodes; ++v) {
    if (v == t) continue;
    a_index[v] = next++;
    b_index[v] = next++;
    h.vertex_names.push_back("v" + std::to_string(v) + "_a");
    h.vertex_names.push_back("v" + std::to_string(v) + "_b");
  }
  std::size_t t_index = next++;
  h.vertex_names.push_back("t");
  std::size_t s_prime = next++;
  h.vertex_names.push_back("s'");
  std::size_t t_prime = next++;
  h.vertex_names.push_back("t'");
  h.graph.vertices = next;

  for (std::size_t v = 0; v < d.nodes; ++v) {
    if (v == t) continue;
    h.split_matching_edges.push_back(h.graph.edges.size());
    h.graph.edges.emplace_back(a_index[v], b_index[v]);
    h.edge_cost.push_back(Rational(0));
  }
  for (auto [tail, head] : d.arcs) {
    std::size_t to = head == t ? t_index : a_index[head];
    h.graph.edges.emplace_back(b_index[tail], to);
    h.edge_cost.push_back(Rational(-1));
  }
  h.s_pendant_edge = h.graph.edges.size();
  h.graph.edges.emplace_back(s_prime, a_index[s]);
  h.edge_cost.push_back(-W);
  h.t_pendant_edge = h.graph.edges.size();
  h.graph.edges.emplace_back(t_index, t_prime);
  h.edge_cost.push_back(W);
  return h;
}

namespace {

Vec start_vertex_of(const AuxGraph& h) {
  Vec u(h.graph.edges.size(), Rational(0));
  for (auto e : h.split_matching_edges) u[e] = 1;
  u[h.t_pendant_edge] = 1;
  return u;
}

}  // namespace

ThresholdInstance build_threshold_polytope(const AuxGraph& h, const Rational& eps) {
  ThresholdInstance out;
  out.constants = derive_constants(h.W, eps, h.digraph_nodes, h.graph.edges.size());
  out.objective = h.edge_cost;
  Polyhedron base = build_matching_polytope(h.graph);
  out.threshold_row = base.ineq.rows();
  Vec row = negate(h.edge_cost);
  base.ineq.append_row(row);
  base.ineq_rhs.push_back(-out.constants.omega_eps);
  out.polytope = std::move(base);
  out.start_vertex = start_vertex_of(h);
  return out;
}

TiltedInstance build_tilted_polytope(const AuxGraph& h, const Rational& eps) {
  TiltedInstance out;
  out.constants = derive_constants(h.W, eps, h.digraph_nodes, h.graph.edges.size());
  const ReductionConstants& c = out.constants;
  Polyhedron base = build_matching_polytope(h.graph);
  const Vec& cost = h.edge_cost;

  LpResult lp = lp_solve(cost, Sense::Minimize, Matrix(0, cost.size()), Vec{}, base.ineq,
                         base.ineq_rhs);
  if (lp.status != LpStatus::Optimal || lp.value != c.omega0)
    throw std::runtime_error("instance lacks Hamiltonian path witness");
  out.min_cost_matching = lp.solution;

  Vec perturbation(cost.size());
  for (std::size_t e = 0; e < cost.size(); ++e)
    perturbation[e] = out.min_cost_matching[e] == 1 ? Rational(-1)
                                                    : Rational(1) / (2 * Rational(c.r));
  if (dot(cost, perturbation) != c.delta)
    throw std::logic_error("perturbation cost does not match the derived constant");
  out.reference_point = add(out.min_cost_matching, scale(c.alpha, perturbation));
  if (dot(cost, out.reference_point) != c.omega0 + (c.T - 1) / c.T * eps)
    throw std::logic_error("reference point misses its objective value");
  for (std::size_t i = 0; i < base.ineq.rows(); ++i) {
    if (base.ineq.row_dot(i, out.reference_point) >= base.ineq_rhs[i])
      throw std::runtime_error(
          "perturbed reference point is not interior; instance too lean (a vertex of the "
          "digraph has too many arcs relative to the unmatched edge count)");
  }

  // Rows whose facet meets the threshold facet, found by LP feasibility of
  // { x in P(H) : c^T x = omega_eps, B_i^T x = d(i) }.
  Matrix eq(0, cost.size());
  eq.append_row(cost);
  Vec eq_rhs{c.omega_eps};
  for (std::size_t i = 0; i < base.ineq.rows(); ++i) {
    Matrix eq_i = eq;
    Vec eq_i_rhs = eq_rhs;
    eq_i.append_row(base.ineq.row(i));
    eq_i_rhs.push_back(base.ineq_rhs[i]);
    LpResult feas = lp_solve(Vec(cost.size(), Rational(0)), Sense::Maximize, eq_i, eq_i_rhs,
                             base.ineq, base.ineq_rhs);
    if (feas.status != LpStatus::Optimal) continue;
    out.source_rows.push_back(i);
  }

  Polyhedron tilted = base;
  for (auto i : out.source_rows) {
    // p(i) = (B_i x_i − B_i z) / (c^T x_i − c^T z) with B_i x_i = d(i) and
    // c^T x_i = omega_eps; the denominator is exactly eps / T.
    Rational p_i = (base.ineq_rhs[i] - base.ineq.row_dot(i, out.reference_point)) * c.T / eps;
    out.row_shift.push_back(p_i);
    Vec q = sub(base.ineq.row(i), scale(p_i, cost));
    Rational r_i = base.ineq_rhs[i] - p_i * c.omega_eps;
    if (dot(q, out.reference_point) != r_i)
      throw std::logic_error("tilted row is not tight at the reference point");
    tilted.ineq.append_row(q);
    tilted.ineq_rhs.push_back(r_i);
  }
  out.polytope = std::move(tilted);
  out.start_vertex = start_vertex_of(h);
  return out;
}

namespace {

// 128-bit hash of a kernel direction, canonicalized by dividing through the
// first nonzero entry (so both scale and sign collapse). With at most a few
// million distinct directions the collision probability is negligible, which
// keeps the circuit counters exact without storing full vectors.
struct DirectionHash {
  std::uint64_t h1 = 0x9e3779b97f4a7c15ULL, h2 = 0xc2b2ae3d27d4eb4fULL;
  void mix(std::uint64_t x) {
    h1 = (h1 ^ x) * 0x100000001b3ULL;
    h2 = (h2 + x) * 0xff51afd7ed558ccdULL;
    h2 ^= h2 >> 29;
  }
  void mix_mpz(mpz_srcptr z) {
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(z->_mp_size)));
    int limbs = z->_mp_size < 0 ? -z->_mp_size : z->_mp_size;
    for (int i = 0; i < limbs; ++i) mix(static_cast<std::uint64_t>(z->_mp_d[i]));
  }
  std::pair<std::uint64_t, std::uint64_t> value() const { return {h1, h2}; }
};

std::pair<std::uint64_t, std::uint64_t> canonical_direction_hash(const Vec& kernel) {
  std::size_t first = 0;
  while (first < kernel.size() && kernel[first] == 0) ++first;
  DirectionHash hash;
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    hash.mix(i);
    if (kernel[i] == 0) continue;
    Rational scaled = kernel[i] / kernel[first];
    mpq_srcptr raw = scaled.backend().data();
    hash.mix_mpz(mpq_numref(raw));
    hash.mix_mpz(mpq_denref(raw));
  }
  return hash.value();
}

// Circuits (both signs) whose maximal step from u lands on one of the target
// rows, collected over a streaming kernel scan; also counts distinct circuits.
struct EnteringScan {
  std::set<Vec> entering;
  std::size_t circuit_count = 0;
};

EnteringScan scan_entering(const Polyhedron& p, const Vec& u,
                           const std::vector<std::size_t>& target_rows,
                           const EnumLimits& limits) {
  EnteringScan out;
  std::vector<std::size_t> tight_u = tight_rows(p, u).rows;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::size_t m = p.ineq.rows();

  scan_circuit_kernels(p, limits, [&](const Vec& kernel) {
    if (!seen.insert(canonical_direction_hash(kernel)).second) return;
    ++out.circuit_count;
    for (bool flip : {false, true}) {
      Vec g = flip ? negate(kernel) : kernel;
      bool feasible = true;
      for (auto i : tight_u) {
        if (p.ineq.row_dot(i, g) > 0) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      std::optional<Rational> lambda;
      for (std::size_t i = 0; i < m; ++i) {
        Rational a = p.ineq.row_dot(i, g);
        if (a <= 0) continue;
        Rational r = (p.ineq_rhs[i] - p.ineq.row_dot(i, u)) / a;
        if (!lambda || r < *lambda) lambda = r;
      }
      if (!lambda || *lambda <= 0) continue;
      Vec landing = add(u, scale(*lambda, g));
      for (auto i : target_rows) {
        if (p.ineq.row_dot(i, landing) == p.ineq_rhs[i]) {
          out.entering.insert(normalize_coprime(g));
          break;
        }
      }
    }
  });
  return out;
}

}  // namespace

StepEquivalenceReport check_step_equivalence(const AuxGraph& h, const Rational& eps,
                                             const EnumLimits& limits) {
  StepEquivalenceReport report;
  ThresholdInstance threshold = build_threshold_polytope(h, eps);
  TiltedInstance tilted = build_tilted_polytope(h, eps);
  const Vec& u = threshold.start_vertex;

  EnteringScan thr =
      scan_entering(threshold.polytope, u, {threshold.threshold_row}, limits);
  EnteringScan tlt = scan_entering(tilted.polytope, u,
                                   tight_rows(tilted.polytope, tilted.reference_point).rows,
                                   limits);

  report.threshold_circuit_count = thr.circuit_count;
  report.tilted_circuit_count = tlt.circuit_count;
  report.threshold_entering.assign(thr.entering.begin(), thr.entering.end());
  report.tilted_entering.assign(tlt.entering.begin(), tlt.entering.end());
  report.equal = thr.entering == tlt.entering;
  return report;
}

namespace {

std::vector<std::size_t> random_hamiltonian_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

std::set<std::pair<std::size_t, std::size_t>> cycle_arcs(const std::vector<std::size_t>& order) {
  std::set<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < order.size(); ++i)
    arcs.emplace(order[i], order[(i + 1) % order.size()]);
  return arcs;
}

bool strongly_connected(const Digraph& g) {
  auto reach = [&](bool reverse_arcs) {
    std::vector<char> seen(g.nodes, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto [a, b] : g.arcs) {
        if (reverse_arcs) std::swap(a, b);
        if (a == v && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    return std::count(seen.begin(), seen.end(), 1) == static_cast<long>(g.nodes);
  };
  return g.nodes > 0 && reach(false) && reach(true);
}

}  // namespace

Digraph generate_eulerian_2regular(std::size_t nodes, bool decomposable, std::uint64_t seed) {
  if (nodes < 3) throw std::invalid_argument("generate_eulerian_2regular: need at least 3 nodes");
  std::mt19937_64 rng(seed);

  if (decomposable) {
    for (int attempt = 0; attempt < 4096; ++attempt) {
      auto first = cycle_arcs(random_hamiltonian_order(nodes, rng));
      auto second = cycle_arcs(random_hamiltonian_order(nodes, rng));
      bool disjoint = true;
      for (const auto& arc : second)
        if (first.count(arc)) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      Digraph g;
      g.nodes = nodes;
      g.arcs.assign(first.begin(), first.end());
      g.arcs.insert(g.arcs.end(), second.begin(), second.end());
      std::sort(g.arcs.begin(), g.arcs.end());
      return g;
    }
    throw std::runtime_error("no decomposable instance found within retry budget");
  }

  for (int attempt = 0; attempt < 4096; ++attempt) {
    // Two arc-disjoint successor permutations without fixed points.
    std::vector<std::size_t> pi1(nodes), pi2(nodes);
    std::iota(pi1.begin(), pi1.end(), 0);
    std::iota(pi2.begin(), pi2.end(), 0);
    std::shuffle(pi1.begin(), pi1.end(), rng);
    std::shuffle(pi2.begin(), pi2.end(), rng);
    bool ok = true;
    for (std::size_t i = 0; i < nodes && ok; ++i)
      if (pi1[i] == i || pi2[i] == i || pi1[i] == pi2[i]) ok = false;
    if (!ok) continue;
    Digraph g;
    g.nodes = nodes;
    for (std::size_t i = 0; i < nodes; ++i) g.arcs.emplace_back(i, pi1[i]);
    for (std::size_t i = 0; i < nodes; ++i) g.arcs.emplace_back(i, pi2[i]);
    std::sort(g.arcs.begin(), g.arcs.end());
    if (!strongly_connected(g)) continue;
    // Certify with the distance oracle: full flow more than two steps away.
    FlowNetwork net = unit_circulation(g);
    Polyhedron poly = build_flow_polytope(net);
    auto circuits = enumerate_cycle_circuits(net);
    Vec zero(g.arcs.size(), Rational(0)), full(g.arcs.size(), Rational(1));
    DistanceVerdict verdict = circuit_distance(poly, zero, full, 2, &circuits);
    if (!verdict.within) return g;
  }
  throw std::runtime_error("no non-decomposable instance found within retry budget");
}

std::vector<Digraph> nondecomposable_library() {
  std::vector<Digraph> out;
  out.push_back(Digraph{4,
                        {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 0}, {2, 3}, {3, 0}, {3, 1}}});
  out.push_back(Digraph{5,
                        {{0, 1}, {0, 2}, {1, 2}, {1, 4}, {2, 0}, {2, 3}, {3, 1}, {3, 4},
                         {4, 0}, {4, 3}}});
  out.push_back(Digraph{6,
                        {{0, 1}, {0, 2}, {1, 2}, {1, 4}, {2, 0}, {2, 3}, {3, 4}, {3, 5},
                         {4, 1}, {4, 5}, {5, 0}, {5, 3}}});
  return out;
}

Digraph six_node_double_hamiltonian() {
  Digraph g;
  g.nodes = 6;
  // Descending ring plus a second arc-disjoint Hamiltonian cycle of chords.
  g.arcs = {{1, 0}, {2, 1}, {3, 2}, {4, 3}, {5, 4}, {0, 5},
            {2, 0}, {4, 2}, {1, 4}, {5, 1}, {3, 5}, {0, 3}};
  return g;
}

std::vector<Digraph> sample_hamiltonian_digraphs() {
  std::vector<Digraph> out;
  out.push_back(Digraph{2, {{0, 1}}});
  out.push_back(Digraph{3, {{0, 1}, {1, 2}, {0, 2}, {1, 0}}});
  out.push_back(Digraph{4, {{0, 1}, {1, 2}, {0, 3}, {2, 0}, {2, 3}}});
  return out;
}

}  // namespace cw
