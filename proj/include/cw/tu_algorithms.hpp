#ifndef CW_TU_ALGORITHMS_HPP
#define CW_TU_ALGORITHMS_HPP

#include <optional>

#include "cw/polyhedron.hpp"

namespace cw {

/// Polynomial-time incident-facet step for totally-unimodular descriptions
/// (circuit entries in {0, +-1}). For each row j tight at w but slack at v,
/// restricts the circuit model so any found circuit has maximal step length
/// exactly B_j w − B_j v, landing on row j. Rows are scanned ascending.
/// check_tu runs the (capped, exhaustive) TU test on the stacked description.
std::optional<Vec> tu_incident_facet_step(const Polyhedron& p, const Vec& v, const Vec& w,
                                          bool check_tu = false);

/// Same loop over the sign-compatible face of the circuit model, with the
/// fixes y+(i) = y−(i) = 0 wherever |B_i w − B_i v| < kappa; returns a
/// sign-compatible maximal circuit or nullopt.
std::optional<Vec> tu_scm_step(const Polyhedron& p, const Vec& v, const Vec& w,
                               bool check_tu = false);

}  // namespace cw

#endif
