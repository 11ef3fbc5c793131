#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "crooked/scalar.hpp"

namespace crooked {

// Coordinates in the fixed basis (e1,e2,e3) with inner-product matrix
// diag(1,1,-1); future = positive z; Det(e1,e2,e3) = +1.
template <class S>
struct Vec3 {
  S x{}, y{}, z{};

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  friend Vec3 operator*(const S& s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  bool is_zero() const { return x == S(0) && y == S(0) && z == S(0); }
};

template <class S>
S inner(const Vec3<S>& u, const Vec3<S>& v) {
  return u.x * v.x + u.y * v.y - u.z * v.z;
}

template <class S>
S det3(const Vec3<S>& u, const Vec3<S>& v, const Vec3<S>& w) {
  return u.x * (v.y * w.z - v.z * w.y) - v.x * (u.y * w.z - u.z * w.y) + w.x * (u.y * v.z - u.z * v.y);
}

// Unique bilinear product with w . (u x v) = Det(w,u,v): the Euclidean cross
// product with the third component negated.
template <class S>
Vec3<S> cross(const Vec3<S>& u, const Vec3<S>& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.y * v.x - u.x * v.y};
}

template <class S>
S euclid_norm2(const Vec3<S>& v) {
  return v.x * v.x + v.y * v.y + v.z * v.z;
}

enum class CausalKind { Zero, Null, Timelike, Spacelike };
enum class TimeDir { None, Future, Past };

struct CausalClass {
  CausalKind kind;
  TimeDir dir;
  friend bool operator==(const CausalClass&, const CausalClass&) = default;
};

template <class S>
CausalClass causal_type(const Vec3<S>& v) {
  if (v.is_zero()) return {CausalKind::Zero, TimeDir::None};
  int s = sgn(inner(v, v));
  if (s > 0) return {CausalKind::Spacelike, TimeDir::None};
  // Causal nonzero vectors have z != 0.
  TimeDir dir = sign_strict(v.z) > 0 ? TimeDir::Future : TimeDir::Past;
  return {s == 0 ? CausalKind::Null : CausalKind::Timelike, dir};
}

template <class S>
bool is_spacelike(const Vec3<S>& v) {
  return sgn(inner(v, v)) > 0;
}

// Positive rescale to the canonical representative: coprime integer
// coordinates in exact mode, Euclidean unit in float mode.
Vec3<Rat> primitive(const Vec3<Rat>& v);
Vec3<double> primitive(const Vec3<double>& v);

// The two future-pointing null vectors of v-perp with (minus, plus, v)
// positively oriented. `normalized` marks Euclidean length 1; exact mode
// returns unnormalized primitive integer vectors instead (every consumer
// predicate is homogeneous in them up to positive scale).
template <class S>
struct NullFrame {
  Vec3<S> minus, plus;
  bool normalized = false;
};

namespace detail {

// Null directions in v-perp, scaled to z = 1: x,y solve x^2+y^2 = 1,
// v1 x + v2 y = v3. Rational iff v.v is a rational square.
template <class S>
std::array<Vec3<S>, 2> null_dirs(const Vec3<S>& v, const S& sqrt_vv) {
  S r2 = v.x * v.x + v.y * v.y;
  Vec3<S> a{(v.x * v.z + v.y * sqrt_vv) / r2, (v.y * v.z - v.x * sqrt_vv) / r2, S(1)};
  Vec3<S> b{(v.x * v.z - v.y * sqrt_vv) / r2, (v.y * v.z + v.x * sqrt_vv) / r2, S(1)};
  return {a, b};
}

}  // namespace detail

template <class S>
NullFrame<S> null_frame(const Vec3<S>& v) {
  if (!is_spacelike(v)) fail(Errc::NotSpacelike, "null_frame requires a spacelike vector");
  S vv = inner(v, v);
  NullFrame<S> f;
  if constexpr (scalar_traits<S>::is_exact) {
    auto root = sqrt_exact(vv);
    if (!root) fail(Errc::NotExactlyRepresentable, "null directions of " + rat_to_string(vv) + "-norm vector are irrational");
    auto [a, b] = detail::null_dirs(v, *root);
    f = {primitive(a), primitive(b), false};
  } else {
    auto [a, b] = detail::null_dirs(v, std::sqrt(vv));
    f = {primitive(a), primitive(b), true};
  }
  if (sgn(det3(f.minus, f.plus, v)) < 0) std::swap(f.minus, f.plus);
  return f;
}

enum class PairType { Ultraparallel, Asymptotic, Crossing, Degenerate };

template <class S>
PairType pair_type(const Vec3<S>& u, const Vec3<S>& v) {
  if (!is_spacelike(u) || !is_spacelike(v)) fail(Errc::NotSpacelike, "pair_type requires spacelike vectors");
  Vec3<S> c = cross(u, v);
  if constexpr (scalar_traits<S>::is_exact) {
    if (c.is_zero()) return PairType::Degenerate;
  } else {
    if (euclid_norm2(c) <= float_eps() * float_eps()) return PairType::Degenerate;
  }
  switch (sgn(inner(c, c))) {
    case 1: return PairType::Ultraparallel;
    case 0: return PairType::Asymptotic;
    default: return PairType::Crossing;
  }
}

namespace detail {

// u . v-frame products through symmetric functions of the two null
// directions, so no square root is ever taken:
//   (u.vplus)(u.vminus) has the sign of (u.v)^2 - (u.u)(v.v),
//   u.vplus + u.vminus  has the sign of v3(u1 v1 + u2 v2) - u3(v1^2 + v2^2).
template <class S>
bool frame_products_nonpositive(const Vec3<S>& u, const Vec3<S>& v) {
  S prod = inner(u, v) * inner(u, v) - inner(u, u) * inner(v, v);
  S sum = v.z * (u.x * v.x + u.y * v.y) - u.z * (v.x * v.x + v.y * v.y);
  return sgn(prod) >= 0 && sgn(sum) <= 0;
}

}  // namespace detail

template <class S>
bool consistently_oriented(const Vec3<S>& u, const Vec3<S>& v) {
  if (!is_spacelike(u) || !is_spacelike(v)) fail(Errc::NotSpacelike, "consistent orientation requires spacelike vectors");
  if (sgn(inner(u, v)) >= 0) return false;
  return detail::frame_products_nonpositive(u, v) && detail::frame_products_nonpositive(v, u);
}

template <class S>
bool consistently_oriented(const std::vector<Vec3<S>>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!consistently_oriented(vs[i], vs[j])) return false;
  return true;
}

enum class Region { Interior, Boundary, Exterior };

// Membership of the hyperbolic point [q + R+ w] in the half-plane HS(v).
template <class S>
Region hp_contains(const Vec3<S>& v, const Vec3<S>& w) {
  if (!is_spacelike(v)) fail(Errc::NotSpacelike, "hp_contains requires a spacelike direction");
  CausalClass c = causal_type(w);
  if ((c.kind != CausalKind::Timelike && c.kind != CausalKind::Null) || c.dir != TimeDir::Future)
    fail(Errc::BadCausality, "hp_contains requires a future-pointing causal ray direction");
  switch (sign_strict(inner(w, v))) {
    case 1: return Region::Interior;
    case 0: return Region::Boundary;
    default: return Region::Exterior;
  }
}

}  // namespace crooked
