#pragma once

#include "crooked/linalg.hpp"
#include "crooked/vec.hpp"

namespace crooked {

// The symmetric-matrix model of Minkowski space: psi(x,y,z) = [[x,y],[y,z]]
// with inner product (tr(XY) - tr(X)tr(Y))/2, so psi.psi = y^2 - xz = -det.
template <class S>
struct Sym2 {
  S x{}, y{}, z{};

  Mat2<S> mat() const { return {x, y, y, z}; }
  static Sym2 from_mat(const Mat2<S>& m) { return {m.a, m.b, m.d}; }

  friend Sym2 operator+(const Sym2& a, const Sym2& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Sym2 operator-(const Sym2& a, const Sym2& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  Sym2 operator-() const { return {-x, -y, -z}; }
  friend Sym2 operator*(const S& s, const Sym2& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Sym2&, const Sym2&) = default;
};

template <class S>
S sym_inner(const Sym2<S>& a, const Sym2<S>& b) {
  Mat2<S> p = a.mat() * b.mat();
  return (p.trace() - a.mat().trace() * b.mat().trace()) / S(2);
}

// Fixed isometry between the coordinate models: (a,b,c) <-> psi(c-a, b, c+a).
// sym_inner(bridge u, bridge v) = inner(u, v) identically.
template <class S>
Sym2<S> bridge(const Vec3<S>& v) {
  return {v.z - v.x, v.y, v.z + v.x};
}

template <class S>
Vec3<S> bridge_inv(const Sym2<S>& p) {
  return {(p.z - p.x) / S(2), p.y, (p.z + p.x) / S(2)};
}

// GL2 action psi -> A psi A^T; for det A = 1 this is the adjoint action on V.
template <class S>
Sym2<S> sym_act(const Mat2<S>& a, const Sym2<S>& p) {
  return Sym2<S>::from_mat(a * p.mat() * a.transpose());
}

}  // namespace crooked
