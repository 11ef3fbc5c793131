#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "crooked/crooked_plane.hpp"
#include "crooked/isometry.hpp"
#include "crooked/oracle.hpp"

namespace crooked {

enum class EndKind { Hyperbolic, Parabolic };

// Boundary generators g1, g2, g3 with g1 g2 g3 = I in SO(2,1)^0, decorated by
// positive fixed vectors and the null endpoints of their axes.
struct DecoratedGroup {
  std::array<Mat2<Rat>, 3> sl2;
  std::array<LinearIso<Rat>, 3> lin;
  std::array<EndKind, 3> ends;
  std::array<Vec3<Rat>, 3> dec;              // positive vectors v1, v2, v3
  std::array<bool, 3> dec_normalized{};      // unit spacelike (hyperbolic ends)
  std::array<Vec3<Rat>, 3> x_plus, x_minus;  // attracting/repelling ideal points
};

// Decorate the group generated by two SL(2) lifts. Hyperbolic ends are
// normalized to unit spacelike vectors, parabolic ends carry the traceless
// projection of the lift, optionally rescaled per end.
DecoratedGroup build_decorated(const Mat2<Rat>& g1, const Mat2<Rat>& g2,
                               const std::array<std::optional<Rat>, 3>& scales = {});

// Translational parts of gamma1, gamma2; gamma3's is forced by the relation.
struct Cocycle {
  Vec3<Rat> u1, u2;
};

Vec3<Rat> cocycle_u3(const DecoratedGroup& g, const Cocycle& u);

using MuTriple = std::array<Rat, 3>;

// (alpha(gamma1), alpha(gamma2), alpha(gamma3)) against the decoration.
MuTriple mu_of(const DecoratedGroup& g, const Cocycle& u);

// mu as a linear map on (u1, u2) in R^6; rank 3 for nonsolvable groups.
std::array<std::array<Rat, 6>, 3> mu_matrix(const DecoratedGroup& g);

// Any preimage cocycle of a target triple (minimum-norm solve).
Cocycle mu_inverse(const DecoratedGroup& g, const MuTriple& target);

// Unit spacelike directions of the arcs joining consecutive ideal points:
// v_i = (x_i^+ x x_{i+1}^+) / (x_i^+ . x_{i+1}^+), consistently oriented.
std::array<Vec3<Rat>, 3> lamination_vectors(const DecoratedGroup& g);

struct PairCheck {
  int i = 0, j = 0;
  PairType type;
  bool closed_form = false;
  bool oracle_disjoint = false;
  std::optional<Vec3<Rat>> witness;
};

struct Weights {
  std::array<Rat, 3> p{Rat(1, 2), Rat(1, 2), Rat(1, 2)};
  std::array<Rat, 3> q{Rat(1, 2), Rat(1, 2), Rat(1, 2)};
};

struct DomainTriple {
  std::array<Vec3<Rat>, 3> lam;
  std::array<Rat, 3> a, b;  // vertex weights: p_i = a_i x_i^+ - b_i x_{i+1}^+
  std::array<Vec3<Rat>, 3> vertex;
  Cocycle coc;
  std::vector<PairCheck> checks;
  bool certified = false;
};

// The positive-triple construction: beta products, convex-split weights,
// vertices, pairwise disjointness (closed form and exact oracle), and a
// cocycle realizing mu exactly.
DomainTriple solve_vertices(const DecoratedGroup& g, const MuTriple& mu, const Weights& w = {});

struct QuadDomain {
  // Walls in the order (minus1, plus1, minus2, plus2); gamma_i maps wall
  // minus_i onto the complement of the interior of wall plus_i.
  std::array<CrookedHalfSpace<Rat>, 4> walls;
  AffineIso<Rat> gamma1, gamma2;
  Rat shrink;  // vertex perturbation parameter found by the search
  std::vector<PairCheck> checks;
  bool pairings_ok = false;
  bool certified = false;
  std::vector<std::string> notes;
};

// Four-wall fundamental-domain candidate for the deformation; the free vertex
// is moved along the mu-preserving family until the exact oracle certifies
// all six disjointnesses. Properness itself is not claimed.
QuadDomain quad_domain(const DecoratedGroup& g, const DomainTriple& triple, const MuTriple& mu,
                       int max_steps = 64);

struct SignReportItem {
  std::vector<int> word;  // letters 1, -1, 2, -2
  IsoClass cls;
  std::optional<SignClass> sign;  // absent for skipped (elliptic/identity) words
};

struct SignReport {
  std::vector<SignReportItem> items;
  bool opposite_signs_found = false;
  std::pair<int, int> offending;  // indices into items when found
};

// Evaluates sign(alpha) on word images; an opposite-sign pair certifies that
// the deformation is not proper.
SignReport check_signs(const DecoratedGroup& g, const Cocycle& u, const std::vector<std::vector<int>>& words);

AffineIso<Rat> word_image(const DecoratedGroup& g, const Cocycle& u, const std::vector<int>& word);

struct TraceSlice {
  std::array<Mat2<Rat>, 3> rep;
  Rat b3;
};

// Normalized representation with prescribed generator traces; the product of
// the three matrices is verified to lie in {+-I}.
TraceSlice trace_slice_representation(const Rat& a1, const Rat& a2, const Rat& a3);

struct TraceSliceF {
  std::array<Mat2<double>, 3> rep;
  double b3;
};

TraceSliceF trace_slice_representation(double a1, double a2, double a3);

}  // namespace crooked
