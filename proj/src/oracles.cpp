#include "cw/oracles.hpp"

#include <map>
#include <stdexcept>

#include "cw/circuits.hpp"
#include "cw/linalg.hpp"
#include "cw/lp.hpp"

namespace cw {

namespace {

std::vector<Vec> resolve_circuits(const Polyhedron& p, const std::vector<Vec>* circuits,
                                  const EnumLimits& limits) {
  if (circuits) return *circuits;
  return enumerate_circuits(p, limits);
}

void require_vertex(const Polyhedron& p, const Vec& x, const char* who) {
  if (!is_vertex(p, x)) throw std::invalid_argument(std::string(who) + ": not a vertex");
}

std::vector<int> sign_pattern(const Matrix& b, const Vec& g) {
  std::vector<int> s(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Rational v = b.row_dot(i, g);
    s[i] = v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  return s;
}

}  // namespace

std::vector<Vec> signed_directions(const std::vector<Vec>& circuits) {
  std::vector<Vec> dirs;
  dirs.reserve(2 * circuits.size());
  for (const auto& g : circuits) {
    dirs.push_back(g);
    dirs.push_back(negate(g));
  }
  return dirs;
}

DistanceVerdict circuit_distance(const Polyhedron& p, const Vec& x, const Vec& y,
                                 std::size_t k, const std::vector<Vec>* circuits,
                                 const EnumLimits& limits) {
  require_vertex(p, x, "circuit_distance");
  require_vertex(p, y, "circuit_distance");
  if (x == y) return {true, 0, {}};
  auto dirs = signed_directions(resolve_circuits(p, circuits, limits));

  struct Node {
    std::size_t parent;  // index into nodes
    WalkStep step;
  };
  std::vector<Node> nodes;
  std::map<Vec, std::size_t> visited;  // point -> node index
  nodes.push_back({0, {}});
  visited.emplace(x, 0);
  std::vector<std::pair<Vec, std::size_t>> frontier{{x, 0}};

  for (std::size_t depth = 1; depth <= k && !frontier.empty(); ++depth) {
    std::vector<std::pair<Vec, std::size_t>> next;
    for (const auto& [pt, node_id] : frontier) {
      for (const auto& g : dirs) {
        StepResult sr = max_step(p, pt, g, /*validate=*/false);
        if (sr.kind != StepResult::Kind::Step) continue;
        if (visited.count(sr.point)) continue;
        nodes.push_back({node_id, {g, sr.lambda}});
        std::size_t id = nodes.size() - 1;
        if (sr.point == y) {
          Walk walk;
          for (std::size_t cur = id; cur != 0; cur = nodes[cur].parent)
            walk.push_back(nodes[cur].step);
          std::reverse(walk.begin(), walk.end());
          return {true, depth, std::move(walk)};
        }
        visited.emplace(sr.point, id);
        next.emplace_back(sr.point, id);
      }
    }
    frontier = std::move(next);
  }
  return {false, k, {}};
}

DistanceVerdict scm_circuit_distance(const Polyhedron& p, const Vec& x, const Vec& y,
                                     std::size_t k, const std::vector<Vec>* circuits,
                                     const EnumLimits& limits) {
  require_vertex(p, x, "scm_circuit_distance");
  require_vertex(p, y, "scm_circuit_distance");
  if (x == y) return {true, 0, {}};
  auto dirs = signed_directions(resolve_circuits(p, circuits, limits));
  std::vector<std::vector<int>> dir_signs;
  dir_signs.reserve(dirs.size());
  for (const auto& g : dirs) dir_signs.push_back(sign_pattern(p.ineq, g));

  struct Node {
    std::size_t parent;
    WalkStep step;
  };
  std::vector<Node> nodes{{0, {}}};
  using State = std::pair<Vec, std::vector<int>>;  // point, sign join of B g_i so far
  std::map<State, std::size_t> visited;
  State start{x, std::vector<int>(p.ineq.rows(), 0)};
  visited.emplace(start, 0);
  std::vector<std::pair<State, std::size_t>> frontier{{start, 0}};

  for (std::size_t depth = 1; depth <= k && !frontier.empty(); ++depth) {
    std::vector<std::pair<State, std::size_t>> next;
    for (const auto& [state, node_id] : frontier) {
      const auto& [pt, sigma] = state;
      Vec remaining = sub(y, pt);
      for (std::size_t d = 0; d < dirs.size(); ++d) {
        const auto& g = dirs[d];
        const auto& gs = dir_signs[d];
        bool compatible = true;
        for (std::size_t i = 0; i < gs.size() && compatible; ++i)
          if (gs[i] * sigma[i] < 0) compatible = false;
        if (!compatible) continue;
        if (!is_sign_compatible(p.ineq, g, remaining)) continue;
        StepResult sr = max_step(p, pt, g, /*validate=*/false);
        if (sr.kind != StepResult::Kind::Step) continue;
        std::vector<int> joined = sigma;
        for (std::size_t i = 0; i < gs.size(); ++i)
          if (joined[i] == 0) joined[i] = gs[i];
        State ns{sr.point, std::move(joined)};
        if (visited.count(ns)) continue;
        nodes.push_back({node_id, {g, sr.lambda}});
        std::size_t id = nodes.size() - 1;
        if (sr.point == y) {
          Walk walk;
          for (std::size_t cur = id; cur != 0; cur = nodes[cur].parent)
            walk.push_back(nodes[cur].step);
          std::reverse(walk.begin(), walk.end());
          WalkVerdict verdict = verify_walk(p, x, y, walk, /*require_sign_compatible=*/true);
          if (!verdict.accepted)
            throw std::logic_error("scm_circuit_distance: search produced an invalid walk");
          return {true, depth, std::move(walk)};
        }
        visited.emplace(ns, id);
        next.emplace_back(std::move(ns), id);
      }
    }
    frontier = std::move(next);
  }
  return {false, k, {}};
}

DistanceVerdict sc_decomp_distance(const Polyhedron& p, const Vec& x, const Vec& y,
                                   std::size_t k, const std::vector<Vec>* circuits,
                                   const EnumLimits& limits) {
  require_vertex(p, x, "sc_decomp_distance");
  require_vertex(p, y, "sc_decomp_distance");
  Vec u = sub(y, x);
  if (is_zero(u)) return {true, 0, {}};
  auto dirs = signed_directions(resolve_circuits(p, circuits, limits));
  std::vector<Vec> cand;
  for (const auto& g : dirs)
    if (is_sign_compatible(p.ineq, g, u)) cand.push_back(g);

  std::size_t c = cand.size();
  std::vector<std::vector<char>> pairwise(c, std::vector<char>(c, 0));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i; j < c; ++j)
      pairwise[i][j] = pairwise[j][i] = is_sign_compatible(p.ineq, cand[i], cand[j]);

  // For each pairwise-compatible subset of size r, decide whether u is a
  // strictly positive combination: maximize t subject to sum(lambda_i g_i) = u,
  // lambda_i >= t, t <= 1.
  auto feasible = [&](const std::vector<std::size_t>& subset) -> std::optional<Walk> {
    std::size_t r = subset.size();
    Matrix eq(0, r + 1);
    Vec eq_rhs;
    for (std::size_t coord = 0; coord < p.dim; ++coord) {
      Vec row(r + 1, Rational(0));
      for (std::size_t i = 0; i < r; ++i) row[i] = cand[subset[i]][coord];
      eq.append_row(row);
      eq_rhs.push_back(u[coord]);
    }
    Matrix ineq(0, r + 1);
    Vec ineq_rhs;
    for (std::size_t i = 0; i < r; ++i) {
      Vec row(r + 1, Rational(0));
      row[r] = 1;
      row[i] = -1;
      ineq.append_row(row);  // t - lambda_i <= 0
      ineq_rhs.push_back(Rational(0));
    }
    {
      Vec row(r + 1, Rational(0));
      row[r] = 1;
      ineq.append_row(row);  // t <= 1
      ineq_rhs.push_back(Rational(1));
    }
    Vec obj(r + 1, Rational(0));
    obj[r] = 1;
    LpResult lp = lp_solve(obj, Sense::Maximize, eq, eq_rhs, ineq, ineq_rhs);
    if (lp.status != LpStatus::Optimal || lp.value <= 0) return std::nullopt;
    Walk steps;
    for (std::size_t i = 0; i < r; ++i) steps.push_back({cand[subset[i]], lp.solution[i]});
    return steps;
  };

  std::optional<Walk> witness;
  std::vector<std::size_t> subset;
  auto search = [&](auto&& self, std::size_t next, std::size_t r) -> bool {
    if (subset.size() == r) {
      if (auto w = feasible(subset)) {
        witness = std::move(w);
        return true;
      }
      return false;
    }
    for (std::size_t i = next; i + (r - subset.size()) <= c; ++i) {
      bool ok = true;
      for (auto s : subset)
        if (!pairwise[s][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      subset.push_back(i);
      if (self(self, i + 1, r)) return true;
      subset.pop_back();
    }
    return false;
  };
  for (std::size_t r = 1; r <= k; ++r) {
    subset.clear();
    if (search(search, 0, r)) return {true, r, std::move(*witness)};
  }
  return {false, k, {}};
}

std::optional<RadicalSum> geometric_distance(const Polyhedron& p, const Vec& x, const Vec& y,
                                             int norm_p, std::size_t step_cap,
                                             const std::vector<Vec>* circuits,
                                             const EnumLimits& limits) {
  require_vertex(p, x, "geometric_distance");
  require_vertex(p, y, "geometric_distance");
  if (x == y) return RadicalSum::zero(norm_p);
  auto dirs = signed_directions(resolve_circuits(p, circuits, limits));
  std::vector<std::pair<Vec, RadicalSum>> layer{{x, RadicalSum::zero(norm_p)}};
  std::optional<RadicalSum> best;

  for (std::size_t depth = 1; depth <= step_cap && !layer.empty(); ++depth) {
    std::map<Vec, RadicalSum> next;
    for (const auto& [pt, len] : layer) {
      for (const auto& g : dirs) {
        StepResult sr = max_step(p, pt, g, /*validate=*/false);
        if (sr.kind != StepResult::Kind::Step) continue;
        RadicalSum cand = len + step_norm({g, sr.lambda}, norm_p);
        if (best && !(cand < *best)) continue;
        if (sr.point == y) {
          best = cand;
          continue;
        }
        auto it = next.find(sr.point);
        if (it == next.end())
          next.emplace(sr.point, std::move(cand));
        else if (cand < it->second)
          it->second = std::move(cand);
      }
    }
    layer.assign(next.begin(), next.end());
  }
  return best;
}

std::optional<Vec> facet_step_bruteforce(const Polyhedron& p, const Vec& u,
                                         std::size_t facet_row,
                                         const std::vector<Vec>* circuits,
                                         const EnumLimits& limits) {
  if (facet_row >= p.ineq.rows())
    throw std::invalid_argument("facet_step_bruteforce: row index out of range");
  if (!contains(p, u)) throw std::invalid_argument("facet_step_bruteforce: point not in polyhedron");
  for (const auto& g : signed_directions(resolve_circuits(p, circuits, limits))) {
    StepResult sr = max_step(p, u, g, /*validate=*/false);
    if (sr.kind != StepResult::Kind::Step) continue;
    if (p.ineq.row_dot(facet_row, sr.point) == p.ineq_rhs[facet_row]) return g;
  }
  return std::nullopt;
}

std::optional<Vec> incident_facet_step_bruteforce(const Polyhedron& p, const Vec& u,
                                                  const Vec& v,
                                                  const std::vector<Vec>* circuits,
                                                  const EnumLimits& limits) {
  require_vertex(p, v, "incident_facet_step_bruteforce");
  if (!contains(p, u))
    throw std::invalid_argument("incident_facet_step_bruteforce: point not in polyhedron");
  TightSet tv = tight_rows(p, v);
  for (const auto& g : signed_directions(resolve_circuits(p, circuits, limits))) {
    StepResult sr = max_step(p, u, g, /*validate=*/false);
    if (sr.kind != StepResult::Kind::Step) continue;
    for (auto i : tv.rows)
      if (p.ineq.row_dot(i, sr.point) == p.ineq_rhs[i]) return g;
  }
  return std::nullopt;
}

std::optional<Vec> scm_step_bruteforce(const Polyhedron& p, const Vec& v, const Vec& w,
                                       const std::vector<Vec>* circuits,
                                       const EnumLimits& limits) {
  require_vertex(p, v, "scm_step_bruteforce");
  require_vertex(p, w, "scm_step_bruteforce");
  Vec u = sub(w, v);
  for (const auto& g : signed_directions(resolve_circuits(p, circuits, limits))) {
    if (!is_sign_compatible(p.ineq, g, u)) continue;
    StepResult sr = max_step(p, v, g, /*validate=*/false);
    if (sr.kind != StepResult::Kind::Step) continue;
    if (!is_sign_compatible(p.ineq, g, sub(w, sr.point))) continue;
    return g;
  }
  return std::nullopt;
}

}  // namespace cw
