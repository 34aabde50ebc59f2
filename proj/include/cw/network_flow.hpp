#ifndef CW_NETWORK_FLOW_HPP
#define CW_NETWORK_FLOW_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cw/polyhedron.hpp"

namespace cw {

struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational capacity{0};
};

struct FlowNetwork {
  std::size_t nodes = 0;
  std::vector<Arc> arcs;
  Vec balances;  // node balance b(i); flow conservation is (in − out) = b(i)
};

struct Digraph {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

struct ResidualArc {
  std::size_t tail = 0;
  std::size_t head = 0;
  Rational capacity{0};
  bool reversed = false;     // true: flow can be pushed back against the arc
  std::size_t arc_index = 0; // originating arc
};

struct ResidualNetwork {
  std::size_t nodes = 0;
  std::vector<ResidualArc> arcs;  // ascending arc_index, forward before reversed
};

/// Feasible flows: incidence eq rows (one per node), ineq (I; −I), rhs (u; 0).
Polyhedron build_flow_polytope(const FlowNetwork& n);

FlowNetwork unit_circulation(const Digraph& g);  // zero balances, unit capacities
Polyhedron build_circulation_01(const Digraph& g);

bool is_feasible_flow(const FlowNetwork& n, const Vec& flow);
ResidualNetwork residual(const FlowNetwork& n, const Vec& flow);

/// A simple undirected cycle given as (arc index, traversed along orientation?)
/// in traversal order; returns the {0, +-1} circuit vector.
Vec cycle_to_circuit(const FlowNetwork& n, const std::vector<std::pair<std::size_t, bool>>& cycle);

/// All simple undirected cycles as circuits, canonical sign, sorted.
std::vector<Vec> enumerate_cycle_circuits(const FlowNetwork& n);

/// Residual-network cycle search: for each arc pinned to a bound by y but not
/// by x, prune small-capacity residual arcs and look for a dicycle through it.
std::optional<Vec> nf_incident_facet_step(const FlowNetwork& n, const Vec& x, const Vec& y);

/// Sign-compatible variant: residual arcs against the direction of y − x and
/// arcs with |y − x| below the pinned gap are deleted before the search.
std::optional<Vec> nf_scm_step(const FlowNetwork& n, const Vec& x, const Vec& y);

/// Text format: "nodes <k>", then "arc <tail> <head> <capacity>" per arc and
/// optional "balance <node> <value>" lines; "#" comments and blank lines ignored.
FlowNetwork read_network(std::istream& in);
FlowNetwork read_network_file(const std::string& path);
void write_network(std::ostream& out, const FlowNetwork& n);
void write_network_file(const std::string& path, const FlowNetwork& n);

/// Flow blocks: "flow <arcindex> <value>" per line; unspecified arcs carry 0.
Vec read_flow(std::istream& in, std::size_t num_arcs);
Vec read_flow_file(const std::string& path, std::size_t num_arcs);
void write_flow(std::ostream& out, const Vec& flow);

}  // namespace cw

#endif
