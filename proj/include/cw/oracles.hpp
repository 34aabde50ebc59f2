#ifndef CW_ORACLES_HPP
#define CW_ORACLES_HPP

#include <optional>
#include <vector>

#include "cw/walks.hpp"

namespace cw {

/// Brute-force solvers for the step-bounded distance problems. All searches
/// run over maximal steps only and memoize exact rational points. A null
/// `circuits` means enumerate from the description (subject to `limits`);
/// callers with structure (network flows) pass a precomputed set.
struct DistanceVerdict {
  bool within;            // false means "greater than k"
  std::size_t distance;   // valid when within
  Walk walk;              // witness walk when within and distance > 0
};

DistanceVerdict circuit_distance(const Polyhedron& p, const Vec& x, const Vec& y,
                                 std::size_t k, const std::vector<Vec>* circuits = nullptr,
                                 const EnumLimits& limits = {});

/// Minimum size of a sign-compatible circuit decomposition of y − x.
DistanceVerdict sc_decomp_distance(const Polyhedron& p, const Vec& x, const Vec& y,
                                   std::size_t k, const std::vector<Vec>* circuits = nullptr,
                                   const EnumLimits& limits = {});

/// Circuit walks that are also sign-compatible decompositions of y − x.
DistanceVerdict scm_circuit_distance(const Polyhedron& p, const Vec& x, const Vec& y,
                                     std::size_t k, const std::vector<Vec>* circuits = nullptr,
                                     const EnumLimits& limits = {});

/// Minimum total p-norm length over circuit walks with at most step_cap steps;
/// nullopt when y is unreachable within the cap.
std::optional<RadicalSum> geometric_distance(const Polyhedron& p, const Vec& x, const Vec& y,
                                             int norm_p, std::size_t step_cap,
                                             const std::vector<Vec>* circuits = nullptr,
                                             const EnumLimits& limits = {});

/// Scans circuits for one whose maximal step from u lands on the given row.
std::optional<Vec> facet_step_bruteforce(const Polyhedron& p, const Vec& u,
                                         std::size_t facet_row,
                                         const std::vector<Vec>* circuits = nullptr,
                                         const EnumLimits& limits = {});

/// ... lands in some facet incident to the vertex v.
std::optional<Vec> incident_facet_step_bruteforce(const Polyhedron& p, const Vec& u,
                                                  const Vec& v,
                                                  const std::vector<Vec>* circuits = nullptr,
                                                  const EnumLimits& limits = {});

/// A circuit g with: g sign-compatible with w − v, max_step(v, g) a real step,
/// and g sign-compatible with w − max_step(v, g).
std::optional<Vec> scm_step_bruteforce(const Polyhedron& p, const Vec& v, const Vec& w,
                                       const std::vector<Vec>* circuits = nullptr,
                                       const EnumLimits& limits = {});

/// Both signs of each canonical circuit, in scan order (g before −g).
std::vector<Vec> signed_directions(const std::vector<Vec>& circuits);

}  // namespace cw

#endif
