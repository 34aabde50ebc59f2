#include "cw/network_flow.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cw/linalg.hpp"

namespace cw {

Polyhedron build_flow_polytope(const FlowNetwork& n) {
  std::size_t m = n.arcs.size();
  if (n.balances.size() != n.nodes)
    throw std::invalid_argument("build_flow_polytope: balance vector size mismatch");
  Matrix eq(n.nodes, m);
  for (std::size_t e = 0; e < m; ++e) {
    eq.at(n.arcs[e].head, e) += 1;
    eq.at(n.arcs[e].tail, e) -= 1;
  }
  Matrix ineq(2 * m, m);
  Vec rhs(2 * m);
  for (std::size_t e = 0; e < m; ++e) {
    ineq.at(e, e) = 1;
    rhs[e] = n.arcs[e].capacity;
    ineq.at(m + e, e) = -1;
    rhs[m + e] = 0;
  }
  return Polyhedron(std::move(eq), n.balances, std::move(ineq), std::move(rhs));
}

FlowNetwork unit_circulation(const Digraph& g) {
  FlowNetwork n;
  n.nodes = g.nodes;
  n.balances.assign(g.nodes, Rational(0));
  for (auto [tail, head] : g.arcs) n.arcs.push_back({tail, head, Rational(1)});
  return n;
}

Polyhedron build_circulation_01(const Digraph& g) {
  return build_flow_polytope(unit_circulation(g));
}

bool is_feasible_flow(const FlowNetwork& n, const Vec& flow) {
  if (flow.size() != n.arcs.size()) return false;
  for (std::size_t e = 0; e < n.arcs.size(); ++e)
    if (flow[e] < 0 || flow[e] > n.arcs[e].capacity) return false;
  Vec net(n.nodes, Rational(0));
  for (std::size_t e = 0; e < n.arcs.size(); ++e) {
    net[n.arcs[e].head] += flow[e];
    net[n.arcs[e].tail] -= flow[e];
  }
  return net == n.balances;
}

ResidualNetwork residual(const FlowNetwork& n, const Vec& flow) {
  if (!is_feasible_flow(n, flow)) throw std::invalid_argument("residual: flow is not feasible");
  ResidualNetwork r;
  r.nodes = n.nodes;
  for (std::size_t e = 0; e < n.arcs.size(); ++e) {
    Rational forward = n.arcs[e].capacity - flow[e];
    if (forward > 0) r.arcs.push_back({n.arcs[e].tail, n.arcs[e].head, forward, false, e});
    if (flow[e] > 0) r.arcs.push_back({n.arcs[e].head, n.arcs[e].tail, flow[e], true, e});
  }
  return r;
}

Vec cycle_to_circuit(const FlowNetwork& n,
                     const std::vector<std::pair<std::size_t, bool>>& cycle) {
  if (cycle.size() < 2) throw std::invalid_argument("cycle_to_circuit: cycle too short");
  Vec g(n.arcs.size(), Rational(0));
  std::set<std::size_t> used_arcs, used_nodes;
  auto ends = [&](std::size_t idx, bool forward) {
    const Arc& a = n.arcs.at(idx);
    return forward ? std::make_pair(a.tail, a.head) : std::make_pair(a.head, a.tail);
  };
  std::size_t start = ends(cycle[0].first, cycle[0].second).first;
  std::size_t current = start;
  for (const auto& [idx, forward] : cycle) {
    auto [from, to] = ends(idx, forward);
    if (from != current) throw std::invalid_argument("cycle_to_circuit: arcs do not chain");
    if (!used_arcs.insert(idx).second)
      throw std::invalid_argument("cycle_to_circuit: arc used twice");
    if (!used_nodes.insert(from).second)
      throw std::invalid_argument("cycle_to_circuit: node visited twice");
    g[idx] = forward ? 1 : -1;
    current = to;
  }
  if (current != start) throw std::invalid_argument("cycle_to_circuit: cycle is not closed");
  return g;
}

std::vector<Vec> enumerate_cycle_circuits(const FlowNetwork& n) {
  std::size_t m = n.arcs.size();
  // Undirected incidence: (arc index, other endpoint, traversed forward?)
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, bool>>> adj(n.nodes);
  for (std::size_t e = 0; e < m; ++e) {
    adj[n.arcs[e].tail].emplace_back(e, n.arcs[e].head, true);
    adj[n.arcs[e].head].emplace_back(e, n.arcs[e].tail, false);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::set<Vec> out;
  // Cycles are generated once each: anchored at their smallest arc index,
  // traversed along that arc's orientation.
  for (std::size_t anchor = 0; anchor < m; ++anchor) {
    std::size_t target = n.arcs[anchor].tail;
    std::vector<std::pair<std::size_t, bool>> path{{anchor, true}};
    std::vector<char> node_used(n.nodes, 0);
    node_used[target] = 1;
    std::vector<char> arc_used(m, 0);
    arc_used[anchor] = 1;

    auto dfs = [&](auto&& self, std::size_t current) -> void {
      if (node_used[current] && current != target) return;
      for (const auto& [e, next, forward] : adj[current]) {
        if (e <= anchor || arc_used[e]) continue;
        if (next == target) {
          path.emplace_back(e, forward);
          out.insert(cycle_to_circuit(n, path));
          path.pop_back();
          continue;
        }
        if (node_used[next]) continue;
        node_used[current] = 1;
        arc_used[e] = 1;
        path.emplace_back(e, forward);
        self(self, next);
        path.pop_back();
        arc_used[e] = 0;
        node_used[current] = current == target;
      }
    };
    dfs(dfs, n.arcs[anchor].head);
  }
  return {out.begin(), out.end()};
}

namespace {

// Dicycle through seed in the given residual arcs; node-simple, never using
// two residual copies of one original arc. Neighbor order: ascending arc index.
std::optional<std::vector<const ResidualArc*>> dicycle_through(
    const ResidualNetwork& r, const ResidualArc& seed) {
  std::vector<std::vector<const ResidualArc*>> adj(r.nodes);
  for (const auto& a : r.arcs) adj[a.tail].push_back(&a);

  std::vector<const ResidualArc*> path{&seed};
  std::vector<char> node_used(r.nodes, 0);
  std::vector<char> arc_used;
  arc_used.assign(seed.arc_index + 1, 0);
  auto mark = [&](std::size_t idx, char v) {
    if (idx >= arc_used.size()) arc_used.resize(idx + 1, 0);
    arc_used[idx] = v;
  };
  mark(seed.arc_index, 1);
  node_used[seed.tail] = 1;

  auto dfs = [&](auto&& self, std::size_t current) -> bool {
    if (current == seed.tail) return true;
    if (node_used[current]) return false;
    node_used[current] = 1;
    for (const ResidualArc* a : adj[current]) {
      if (a->arc_index < arc_used.size() && arc_used[a->arc_index]) continue;
      mark(a->arc_index, 1);
      path.push_back(a);
      if (self(self, a->head)) return true;
      path.pop_back();
      mark(a->arc_index, 0);
    }
    node_used[current] = 0;
    return false;
  };
  if (dfs(dfs, seed.head)) return path;
  return std::nullopt;
}

Vec residual_cycle_to_circuit(const FlowNetwork& n,
                              const std::vector<const ResidualArc*>& cycle) {
  std::vector<std::pair<std::size_t, bool>> arcs;
  for (const ResidualArc* a : cycle) arcs.emplace_back(a->arc_index, !a->reversed);
  return cycle_to_circuit(n, arcs);
}

struct PinnedArc {
  std::size_t index;
  bool reversed;  // seed as reversed residual copy (flow must come off the arc)
  Rational gap;   // |y(e) − x(e)|
};

std::vector<PinnedArc> pinned_arcs(const FlowNetwork& n, const Vec& x, const Vec& y) {
  std::vector<PinnedArc> m;
  for (std::size_t e = 0; e < n.arcs.size(); ++e) {
    if (x[e] > y[e] && y[e] == 0) m.push_back({e, true, x[e] - y[e]});
    if (x[e] < y[e] && y[e] == n.arcs[e].capacity) m.push_back({e, false, y[e] - x[e]});
  }
  return m;
}

void check_flows(const FlowNetwork& n, const Vec& x, const Vec& y, const char* who) {
  if (!is_feasible_flow(n, x) || !is_feasible_flow(n, y))
    throw std::invalid_argument(std::string(who) + ": flows are not feasible");
}

}  // namespace

std::optional<Vec> nf_incident_facet_step(const FlowNetwork& n, const Vec& x, const Vec& y) {
  check_flows(n, x, y, "nf_incident_facet_step");
  ResidualNetwork full = residual(n, x);
  for (const PinnedArc& pin : pinned_arcs(n, x, y)) {
    ResidualNetwork pruned;
    pruned.nodes = full.nodes;
    const ResidualArc* seed = nullptr;
    for (const auto& a : full.arcs) {
      if (a.capacity < pin.gap) continue;
      pruned.arcs.push_back(a);
    }
    for (const auto& a : pruned.arcs)
      if (a.arc_index == pin.index && a.reversed == pin.reversed) seed = &a;
    if (!seed) continue;  // cannot happen: the pinned arc has capacity == gap
    if (auto cycle = dicycle_through(pruned, *seed))
      return residual_cycle_to_circuit(n, *cycle);
  }
  return std::nullopt;
}

std::optional<Vec> nf_scm_step(const FlowNetwork& n, const Vec& x, const Vec& y) {
  check_flows(n, x, y, "nf_scm_step");
  ResidualNetwork full = residual(n, x);
  for (const PinnedArc& pin : pinned_arcs(n, x, y)) {
    const Rational& kappa = pin.gap;
    ResidualNetwork pruned;
    pruned.nodes = full.nodes;
    const ResidualArc* seed = nullptr;
    for (const auto& a : full.arcs) {
      std::size_t e = a.arc_index;
      // Only move flow toward y: forward copies survive when x(e) < y(e),
      // reversed copies when x(e) > y(e).
      if (x[e] <= y[e] && a.reversed) continue;
      if (x[e] >= y[e] && !a.reversed) continue;
      // Maximality: arcs that would overshoot a step of length kappa.
      Rational gap = y[e] - x[e];
      if (gap < 0) gap = -gap;
      if (gap < kappa) continue;
      pruned.arcs.push_back(a);
    }
    for (const auto& a : pruned.arcs)
      if (a.arc_index == pin.index && a.reversed == pin.reversed) seed = &a;
    if (!seed) continue;
    if (auto cycle = dicycle_through(pruned, *seed))
      return residual_cycle_to_circuit(n, *cycle);
  }
  return std::nullopt;
}

namespace {

struct LineScanner {
  std::istream& in;
  std::size_t line_number = 0;
  bool next(std::istringstream& out) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_number;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out = std::istringstream(line);
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("line " + std::to_string(line_number) + ": " + msg);
  }
};

}  // namespace

FlowNetwork read_network(std::istream& in) {
  LineScanner scan{in};
  std::istringstream line;
  if (!scan.next(line)) throw std::runtime_error("line 0: empty network file");
  std::string kw;
  std::size_t k = 0;
  if (!(line >> kw >> k) || kw != "nodes") scan.fail("expected header 'nodes <k>'");
  FlowNetwork n;
  n.nodes = k;
  n.balances.assign(k, Rational(0));
  while (scan.next(line)) {
    if (!(line >> kw)) continue;
    if (kw == "arc") {
      std::size_t tail = 0, head = 0;
      std::string cap;
      if (!(line >> tail >> head >> cap)) scan.fail("expected 'arc <tail> <head> <capacity>'");
      if (tail >= k || head >= k) scan.fail("arc endpoint out of range");
      n.arcs.push_back({tail, head, parse_rational(cap)});
    } else if (kw == "balance") {
      std::size_t node = 0;
      std::string value;
      if (!(line >> node >> value)) scan.fail("expected 'balance <node> <value>'");
      if (node >= k) scan.fail("balance node out of range");
      n.balances[node] = parse_rational(value);
    } else {
      scan.fail("unknown directive '" + kw + "'");
    }
  }
  return n;
}

FlowNetwork read_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open network file: " + path);
  try {
    return read_network(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_network(std::ostream& out, const FlowNetwork& n) {
  out << "nodes " << n.nodes << "\n";
  for (const auto& a : n.arcs)
    out << "arc " << a.tail << " " << a.head << " " << a.capacity << "\n";
  for (std::size_t i = 0; i < n.nodes; ++i)
    if (n.balances[i] != 0) out << "balance " << i << " " << n.balances[i] << "\n";
}

void write_network_file(const std::string& path, const FlowNetwork& n) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  write_network(out, n);
}

Vec read_flow(std::istream& in, std::size_t num_arcs) {
  LineScanner scan{in};
  std::istringstream line;
  Vec flow(num_arcs, Rational(0));
  while (scan.next(line)) {
    std::string kw, value;
    std::size_t idx = 0;
    if (!(line >> kw >> idx >> value) || kw != "flow")
      scan.fail("expected 'flow <arcindex> <value>'");
    if (idx >= num_arcs) scan.fail("arc index out of range");
    flow[idx] = parse_rational(value);
  }
  return flow;
}

Vec read_flow_file(const std::string& path, std::size_t num_arcs) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open flow file: " + path);
  try {
    return read_flow(in, num_arcs);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_flow(std::ostream& out, const Vec& flow) {
  for (std::size_t i = 0; i < flow.size(); ++i)
    if (flow[i] != 0) out << "flow " << i << " " << flow[i] << "\n";
}

}  // namespace cw
