#pragma once

#include <optional>
#include <utility>

#include "crooked/isometry.hpp"
#include "crooked/vec.hpp"

namespace crooked {

namespace detail {

// C(v,p) = C(-v,p): canonical direction is primitive with the first nonzero
// coordinate positive.
template <class S>
Vec3<S> canonical_direction(const Vec3<S>& v) {
  Vec3<S> c = primitive(v);
  int s = sgn(c.x);
  if (s == 0) s = sgn(c.y);
  if (s == 0) s = sgn(c.z);
  return s < 0 ? -c : c;
}

}  // namespace detail

template <class S>
struct CrookedPlane {
  Vec3<S> v;  // spacelike direction, canonical representative
  Vec3<S> p;  // vertex

  friend bool operator==(const CrookedPlane&, const CrookedPlane&) = default;
};

template <class S>
CrookedPlane<S> crooked_plane(const Vec3<S>& v, const Vec3<S>& p) {
  if (!is_spacelike(v)) fail(Errc::NotSpacelike, "crooked plane direction must be spacelike");
  return {detail::canonical_direction(v), p};
}

// H(v,p): the side of C(v,p) reached from p + v + v^-.
template <class S>
struct CrookedHalfSpace {
  Vec3<S> v;  // signed spacelike direction, primitive scale
  Vec3<S> p;

  CrookedPlane<S> boundary() const { return crooked_plane(v, p); }
  CrookedHalfSpace complement() const { return {-v, p}; }
};

template <class S>
CrookedHalfSpace<S> crooked_half_space(const Vec3<S>& v, const Vec3<S>& p) {
  if (!is_spacelike(v)) fail(Errc::NotSpacelike, "crooked half-space direction must be spacelike");
  return {primitive(v), p};
}

// Membership in the closed half-space
//   { d.v >= 0 and d.vplus <= 0 } u { d.v <= 0 and d.vminus >= 0 },  d = q - p.
// Boundary is exactly membership in C(v,p).
template <class S>
Region hs_contains(const CrookedHalfSpace<S>& h, const Vec3<S>& q) {
  NullFrame<S> f = null_frame(h.v);
  Vec3<S> d = q - h.p;
  int s = sign_strict(inner(d, h.v));
  if (s > 0) {
    int a = sign_strict(inner(d, f.plus));
    return a < 0 ? Region::Interior : (a == 0 ? Region::Boundary : Region::Exterior);
  }
  if (s < 0) {
    int b = sign_strict(inner(d, f.minus));
    return b > 0 ? Region::Interior : (b == 0 ? Region::Boundary : Region::Exterior);
  }
  int a = sign_strict(inner(d, f.plus));
  int b = sign_strict(inner(d, f.minus));
  if (a < 0 && b > 0) return Region::Interior;
  if (a > 0 && b < 0) return Region::Exterior;
  return Region::Boundary;
}

// One closed planar stratum of a crooked plane: a supporting plane through
// `origin` spanned by (d1, d2), cut by at most two functional constraints
// inner(x - origin, normals[i]) >= 0.
template <class S>
struct PlanarPiece {
  Vec3<S> origin, d1, d2;
  std::array<Vec3<S>, 2> normals{};
  int n_constraints = 0;
};

enum class PieceKind { WingPlus = 0, WingMinus = 1, StemFuture = 2, StemPast = 3 };

// The two wings and the two stem quadrants; their closures cover C(v,p).
template <class S>
std::array<PlanarPiece<S>, 4> pieces(const CrookedPlane<S>& c) {
  NullFrame<S> f = null_frame(c.v);
  std::array<PlanarPiece<S>, 4> out;
  out[0] = {c.p, f.plus, c.v, {c.v, Vec3<S>{}}, 1};
  out[1] = {c.p, f.minus, c.v, {-c.v, Vec3<S>{}}, 1};
  out[2] = {c.p, f.minus, f.plus, {-f.plus, -f.minus}, 2};
  out[3] = {c.p, f.minus, f.plus, {f.plus, f.minus}, 2};
  return out;
}

template <class S>
CrookedPlane<S> image(const AffineIso<S>& gamma, const CrookedPlane<S>& c) {
  return crooked_plane(gamma.linear(c.v), gamma(c.p));
}

// Interior point of H, guaranteed by the membership dispatch: d = v + k vminus
// has d.v > 0 and d.vplus < 0.
template <class S>
Vec3<S> interior_witness(const CrookedHalfSpace<S>& h, int k = 1) {
  NullFrame<S> f = null_frame(h.v);
  return h.p + h.v + S(k) * f.minus;
}

template <class S>
CrookedHalfSpace<S> image_halfspace(const AffineIso<S>& gamma, const CrookedHalfSpace<S>& h) {
  CrookedHalfSpace<S> cand = crooked_half_space(gamma.linear(h.v), gamma(h.p));
  for (int k = 1; k <= 5; ++k) {
    Vec3<S> w = gamma(interior_witness(h, k));
    try {
      Region r = hs_contains(cand, w);
      if (r == Region::Interior) return cand;
      if (r == Region::Exterior) return cand.complement();
    } catch (const Error& e) {
      if (e.code() != Errc::Indeterminate) throw;
    }
  }
  fail(Errc::Indeterminate, "no witness settled the image half-space side");
}

namespace detail {

// Exact test for A > s1 sqrt(n1) + s2 sqrt(n2) with s1, s2 >= 0, n1, n2 > 0,
// by two rounds of squaring.
template <class S>
bool gt_sqrt_sum(const S& a, const S& s1, const S& n1, const S& s2, const S& n2) {
  if constexpr (!scalar_traits<S>::is_exact) {
    return sign_strict(a - (s1 * std::sqrt(n1) + s2 * std::sqrt(n2))) > 0;
  } else {
    if (sgn(a) <= 0) return false;
    S c = a * a - s1 * s1 * n1 - s2 * s2 * n2;
    if (sgn(c) <= 0) return false;
    return sgn(c * c - S(4) * s1 * s1 * s2 * s2 * n1 * n2) > 0;
  }
}

template <class S>
void require_co_pair(const Vec3<S>& v1, const Vec3<S>& v2, PairType expected) {
  PairType t = pair_type(v1, v2);
  if (t != expected) fail(Errc::WrongPairType, "direction vectors have the wrong pair type");
  if (!consistently_oriented(v1, v2)) fail(Errc::NotConsistentlyOriented, "direction vectors are not consistently oriented");
}

// True when a and b span the same future null ray.
template <class S>
bool same_null_ray(const Vec3<S>& a, const Vec3<S>& b) {
  Vec3<S> ax = {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  if constexpr (scalar_traits<S>::is_exact) return ax.is_zero();
  return euclid_norm2(ax) <= float_eps() * float_eps() * euclid_norm2(a) * euclid_norm2(b);
}

}  // namespace detail

// Disjointness of ultraparallel crooked planes:
//   (p2-p1).(v1 x v2) > |(p2-p1).v2| + |(p2-p1).v1|   for unit vectors;
// the exact route compares the scale-corrected form A > |q.v2| sqrt(v1.v1) +
// |q.v1| sqrt(v2.v2) without normalizing.
template <class S>
bool disjoint_ultraparallel(const CrookedPlane<S>& c1, const CrookedPlane<S>& c2, const Vec3<S>& v1, const Vec3<S>& v2) {
  detail::require_co_pair(v1, v2, PairType::Ultraparallel);
  Vec3<S> q = c2.p - c1.p;
  S a = inner(q, cross(v1, v2));
  S s1 = scalar_traits<S>::abs(inner(q, v2));
  S s2 = scalar_traits<S>::abs(inner(q, v1));
  return detail::gt_sqrt_sum(a, s1, inner(v1, v1), s2, inner(v2, v2));
}

template <class S>
bool disjoint_ultraparallel(const CrookedPlane<S>& c1, const CrookedPlane<S>& c2) {
  // Canonical directions of a consistently oriented pair may carry the wrong
  // signs; recover the signed pair (w1, w2) with w1.w2 < 0 and co holding.
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      Vec3<S> w1 = s1 < 0 ? -c1.v : c1.v;
      Vec3<S> w2 = s2 < 0 ? -c2.v : c2.v;
      if (consistently_oriented(w1, w2)) return disjoint_ultraparallel(c1, c2, w1, w2);
    }
  fail(Errc::NotConsistentlyOriented, "no signing of the directions is consistently oriented");
}

// Disjointness of asymptotic crooked planes labeled so that v1minus = v2plus:
//   (p2-p1).v1 < 0,  (p2-p1).v2 < 0,  (p2-p1).(v1plus x v2minus) > 0.
// The valid labeling (original or swapped order) is found internally.
template <class S>
bool disjoint_asymptotic(const CrookedPlane<S>& c1, const CrookedPlane<S>& c2, const Vec3<S>& v1_in, const Vec3<S>& v2_in) {
  detail::require_co_pair(v1_in, v2_in, PairType::Asymptotic);
  NullFrame<S> f1 = null_frame(v1_in);
  NullFrame<S> f2 = null_frame(v2_in);

  const Vec3<S>*vi, *vj;
  const Vec3<S>*pi, *pj;
  const NullFrame<S>*fi, *fj;
  if (detail::same_null_ray(f1.minus, f2.plus)) {
    vi = &v1_in; vj = &v2_in; pi = &c1.p; pj = &c2.p; fi = &f1; fj = &f2;
  } else if (detail::same_null_ray(f2.minus, f1.plus)) {
    vi = &v2_in; vj = &v1_in; pi = &c2.p; pj = &c1.p; fi = &f2; fj = &f1;
  } else {
    fail(Errc::LabelingFailed, "no ordering matches v1minus = v2plus");
  }

  Vec3<S> q = *pj - *pi;
  return sign_strict(inner(q, *vi)) < 0 && sign_strict(inner(q, *vj)) < 0 &&
         sign_strict(inner(q, cross(fi->plus, fj->minus))) > 0;
}

template <class S>
bool disjoint_asymptotic(const CrookedPlane<S>& c1, const CrookedPlane<S>& c2) {
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      Vec3<S> w1 = s1 < 0 ? -c1.v : c1.v;
      Vec3<S> w2 = s2 < 0 ? -c2.v : c2.v;
      if (consistently_oriented(w1, w2)) return disjoint_asymptotic(c1, c2, w1, w2);
    }
  fail(Errc::NotConsistentlyOriented, "no signing of the directions is consistently oriented");
}

namespace detail {

// Open-cone membership: does q = sum lambda_i g_i admit all-positive lambda?
// Exact for three independent generators and for four generators spanning R^3.
template <class S>
bool in_open_cone(const std::vector<Vec3<S>>& gens, const Vec3<S>& q) {
  if (gens.size() == 3) {
    S d = det3(gens[0], gens[1], gens[2]);
    if (sgn(d) == 0) return false;
    S l0 = det3(q, gens[1], gens[2]) / d;
    S l1 = det3(gens[0], q, gens[2]) / d;
    S l2 = det3(gens[0], gens[1], q) / d;
    return sgn(l0) > 0 && sgn(l1) > 0 && sgn(l2) > 0;
  }
  // Four generators: solutions form a line lambda0 + t k; intersect with the
  // open positive orthant.
  S d = det3(gens[0], gens[1], gens[2]);
  if (sgn(d) == 0) return false;
  // Particular solution with lambda3 = 0 and kernel from g3 = sum k_i g_i.
  S l0 = det3(q, gens[1], gens[2]) / d;
  S l1 = det3(gens[0], q, gens[2]) / d;
  S l2 = det3(gens[0], gens[1], q) / d;
  S k0 = det3(gens[3], gens[1], gens[2]) / d;
  S k1 = det3(gens[0], gens[3], gens[2]) / d;
  S k2 = det3(gens[0], gens[1], gens[3]) / d;
  // lambda(t) = (l0 - t k0, l1 - t k1, l2 - t k2, t) > 0
  S lam[4] = {l0, l1, l2, S(0)};
  S slope[4] = {-k0, -k1, -k2, S(1)};
  bool has_lo = false, has_hi = false;
  S lo{}, hi{};
  for (int i = 0; i < 4; ++i) {
    int ss = sgn(slope[i]);
    if (ss == 0) {
      if (sgn(lam[i]) <= 0) return false;
    } else if (ss > 0) {
      S bound = -lam[i] / slope[i];
      if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
    } else {
      S bound = -lam[i] / slope[i];
      if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
    }
  }
  if (has_lo && has_hi) return sgn(hi - lo) > 0;
  return true;
}

}  // namespace detail

// Sufficient vertex-cone condition: p2 - p1 in the open cone spanned by
// { v2minus, -v2plus, -v1minus, v1plus } (ultraparallel) or the three-ray
// cone { v2minus, -v2plus = -v1minus, v1plus } (asymptotic).
template <class S>
bool cone_disjoint(const CrookedPlane<S>& c1, const CrookedPlane<S>& c2, const Vec3<S>& v1_in, const Vec3<S>& v2_in) {
  PairType t = pair_type(v1_in, v2_in);
  if (t != PairType::Ultraparallel && t != PairType::Asymptotic)
    fail(Errc::WrongPairType, "cone test requires an ultraparallel or asymptotic pair");
  if (!consistently_oriented(v1_in, v2_in))
    fail(Errc::NotConsistentlyOriented, "cone test requires consistent orientation");

  NullFrame<S> f1 = null_frame(v1_in);
  NullFrame<S> f2 = null_frame(v2_in);
  if (t == PairType::Ultraparallel) {
    Vec3<S> q = c2.p - c1.p;
    return detail::in_open_cone<S>({f2.minus, -f2.plus, -f1.minus, f1.plus}, q);
  }
  if (detail::same_null_ray(f1.minus, f2.plus)) {
    Vec3<S> q = c2.p - c1.p;
    return detail::in_open_cone<S>({f2.minus, -f1.minus, f1.plus}, q);
  }
  if (detail::same_null_ray(f2.minus, f1.plus)) {
    Vec3<S> q = c1.p - c2.p;
    return detail::in_open_cone<S>({f1.minus, -f2.minus, f2.plus}, q);
  }
  fail(Errc::LabelingFailed, "no ordering matches v1minus = v2plus");
}

template <class S>
bool cone_disjoint(const CrookedPlane<S>& c1, const CrookedPlane<S>& c2) {
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      Vec3<S> w1 = s1 < 0 ? -c1.v : c1.v;
      Vec3<S> w2 = s2 < 0 ? -c2.v : c2.v;
      if (consistently_oriented(w1, w2)) return cone_disjoint(c1, c2, w1, w2);
    }
  fail(Errc::NotConsistentlyOriented, "no signing of the directions is consistently oriented");
}

// Ray entry into a crooked half-space: for future-pointing timelike w with
// w.v > 0 the ray q + t w lies in int H(v,p) for every t > T, where T is the
// last crossing of the two clauses d.v > 0, d.vplus < 0. For w.v < 0 the ray
// is eventually outside forever (nullopt).
template <class S>
std::optional<S> entry_time(const CrookedHalfSpace<S>& h, const Vec3<S>& q, const Vec3<S>& w) {
  CausalClass c = causal_type(w);
  if (c.kind != CausalKind::Timelike || c.dir != TimeDir::Future)
    fail(Errc::BadCausality, "ray direction must be future-pointing timelike");
  S wv = inner(w, h.v);
  int s = sgn(wv);
  if (s == 0) fail(Errc::TangentDirection, "ray direction is tangent to the stem plane");
  if (s < 0) return std::nullopt;
  NullFrame<S> f = null_frame(h.v);
  Vec3<S> d0 = q - h.p;
  S ts = -inner(d0, h.v) / wv;                          // d.v > 0 after ts
  S ta = -inner(d0, f.plus) / inner(w, f.plus);         // d.vplus < 0 after ta (w.vplus < 0)
  return ts > ta ? ts : ta;
}

}  // namespace crooked
