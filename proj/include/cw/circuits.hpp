#ifndef CW_CIRCUITS_HPP
#define CW_CIRCUITS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "cw/polyhedron.hpp"

namespace cw {

/// True iff g is a circuit of p: nonzero integral coprime, in ker(eq), and the
/// rows of ineq vanishing on g stacked on eq have rank dim − 1.
bool is_circuit(const Polyhedron& p, const Vec& g);

/// All circuits up to sign, each with its first nonzero component positive,
/// sorted lexicographically. For each returned g, −g is implicitly a circuit.
std::vector<Vec> enumerate_circuits(const Polyhedron& p, const EnumLimits& limits = {});

/// Streaming form of the row-subset scan behind enumerate_circuits: fn is
/// called on the kernel direction of every stacked row subset of rank
/// dim − 1 (the same circuit may be seen many times, with varying scale).
/// Returns the number of subsets visited.
std::size_t scan_circuit_kernels(const Polyhedron& p, const EnumLimits& limits,
                                 const std::function<void(const Vec&)>& fn);

/// Auxiliary polyhedron over (x, y+, y−) in R^{n+2m} whose vertices with
/// nonzero x-part are exactly the scaled circuits of the source polyhedron:
///   eq x = 0,  ineq x = y+ − y−,  sum(y+) + sum(y−) = 1,  y+, y− >= 0.
/// There are additionally m spurious vertices with y+(i) = y−(i) = 1/2.
struct CircuitModel {
  Polyhedron model;
  Polyhedron source;
  std::size_t n = 0;  // source dimension
  std::size_t m = 0;  // source inequality rows

  std::size_t x_index(std::size_t j) const { return j; }
  std::size_t yplus_index(std::size_t i) const { return n + i; }
  std::size_t yminus_index(std::size_t i) const { return n + m + i; }
};

CircuitModel build_circuit_model(const Polyhedron& p);

/// The face of the circuit model carrying the circuits sign-compatible with
/// w − v: fixes y+(j) = 0 where B_j v >= B_j w and y−(j) = 0 where B_j v <= B_j w.
CircuitModel build_sc_face(const Polyhedron& p, const Vec& v, const Vec& w);

/// Extracts the circuit from a model vertex; nullopt for a spurious vertex
/// (zero x-part). Throws if the input is not a vertex of the model.
std::optional<Vec> model_vertex_to_circuit(const CircuitModel& model, const Vec& vertex);

}  // namespace cw

#endif
