#pragma once

#include <optional>
#include <utility>

#include "crooked/crooked_plane.hpp"

namespace crooked {

struct OracleReport {
  bool disjoint = false;
  std::optional<Vec3<Rat>> witness;  // a common point when not disjoint
  int piece_i = -1, piece_j = -1;    // indices into pieces() when the witness came from a piece pair
};

// Exact decision procedure for the intersection of two crooked planes, by
// pairwise intersection of their sixteen closed planar strata. Witnesses are
// rational points on both surfaces.
OracleReport intersects_exact(const CrookedPlane<Rat>& c1, const CrookedPlane<Rat>& c2);

// Sampled float-mode check. One-sided: a returned witness is a near-common
// point (both membership residuals below tol); nullopt does not certify
// disjointness.
std::optional<Vec3<double>> approx_intersection(const CrookedPlane<double>& c1, const CrookedPlane<double>& c2,
                                                int samples_per_axis = 40, double span = 8.0, double tol = 1e-7);

// Disjointness of closed crooked half-spaces: boundaries disjoint and each
// vertex exterior to the other half-space.
bool halfspaces_disjoint(const CrookedHalfSpace<Rat>& a, const CrookedHalfSpace<Rat>& b);

}  // namespace crooked
