#pragma once

#include <array>
#include <optional>
#include <vector>

#include "crooked/vec.hpp"

namespace crooked {

template <class S>
struct Mat2 {
  S a{}, b{}, c{}, d{};  // [[a,b],[c,d]]

  static Mat2 identity() { return {S(1), S(0), S(0), S(1)}; }
  S trace() const { return a + d; }
  S det() const { return a * d - b * c; }
  Mat2 transpose() const { return {a, c, b, d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
            l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend Mat2 operator+(const Mat2& l, const Mat2& r) { return {l.a + r.a, l.b + r.b, l.c + r.c, l.d + r.d}; }
  friend Mat2 operator*(const S& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  // Inverse for det = 1 matrices.
  Mat2 inv_unimodular() const { return {d, -b, -c, a}; }
};

template <class S>
struct Mat3 {
  std::array<S, 9> m{};  // row-major

  static Mat3 identity() {
    Mat3 r;
    r.m = {S(1), S(0), S(0), S(0), S(1), S(0), S(0), S(0), S(1)};
    return r;
  }
  S& at(int i, int j) { return m[3 * i + j]; }
  const S& at(int i, int j) const { return m[3 * i + j]; }

  Vec3<S> apply(const Vec3<S>& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
  Vec3<S> col(int j) const { return {m[j], m[3 + j], m[6 + j]}; }
  static Mat3 from_cols(const Vec3<S>& c0, const Vec3<S>& c1, const Vec3<S>& c2) {
    Mat3 r;
    r.m = {c0.x, c1.x, c2.x, c0.y, c1.y, c2.y, c0.z, c1.z, c2.z};
    return r;
  }
  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
    return r;
  }
  S trace() const { return m[0] + m[4] + m[8]; }
  S det() const { return det3(col(0), col(1), col(2)); }

  friend Mat3 operator*(const Mat3& l, const Mat3& r) {
    Mat3 o;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        S s = S(0);
        for (int k = 0; k < 3; ++k) s += l.at(i, k) * r.at(k, j);
        o.at(i, j) = s;
      }
    return o;
  }
  friend Mat3 operator-(const Mat3& l, const Mat3& r) {
    Mat3 o;
    for (int i = 0; i < 9; ++i) o.m[i] = l.m[i] - r.m[i];
    return o;
  }
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

template <class S>
struct Mat4 {
  std::array<S, 16> m{};

  static Mat4 identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r.at(i, i) = S(1);
    return r;
  }
  S& at(int i, int j) { return m[4 * i + j]; }
  const S& at(int i, int j) const { return m[4 * i + j]; }
  Mat4 transpose() const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
    return r;
  }
  friend Mat4 operator*(const Mat4& l, const Mat4& r) {
    Mat4 o;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        S s = S(0);
        for (int k = 0; k < 4; ++k) s += l.at(i, k) * r.at(k, j);
        o.at(i, j) = s;
      }
    return o;
  }
  friend bool operator==(const Mat4&, const Mat4&) = default;

  Mat2<S> block(int bi, int bj) const {
    return {at(2 * bi, 2 * bj), at(2 * bi, 2 * bj + 1), at(2 * bi + 1, 2 * bj), at(2 * bi + 1, 2 * bj + 1)};
  }
  void set_block(int bi, int bj, const Mat2<S>& b) {
    at(2 * bi, 2 * bj) = b.a;
    at(2 * bi, 2 * bj + 1) = b.b;
    at(2 * bi + 1, 2 * bj) = b.c;
    at(2 * bi + 1, 2 * bj + 1) = b.d;
  }
};

// Row-reduce a dense matrix in place; returns the rank. Exact over Rat.
template <class S>
int row_reduce(std::vector<std::vector<S>>& rows) {
  size_t nr = rows.size();
  size_t nc = nr ? rows[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < nc && r < nr; ++c) {
    size_t piv = r;
    while (piv < nr && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == nr) continue;
    std::swap(rows[piv], rows[r]);
    for (size_t i = 0; i < nr; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      S f = rows[i][c] / rows[r][c];
      for (size_t j = c; j < nc; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

// Direction of the one-dimensional kernel of a rank-2 matrix.
template <class S>
std::optional<Vec3<S>> kernel_dir(const Mat3<S>& a) {
  Vec3<S> r0{a.m[0], a.m[1], a.m[2]};
  Vec3<S> r1{a.m[3], a.m[4], a.m[5]};
  Vec3<S> r2{a.m[6], a.m[7], a.m[8]};
  // Euclidean cross of two independent rows is orthogonal to all three.
  auto ecross = [](const Vec3<S>& u, const Vec3<S>& v) -> Vec3<S> {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
  };
  std::array<Vec3<S>, 3> cands = {ecross(r0, r1), ecross(r0, r2), ecross(r1, r2)};
  const Vec3<S>* best = nullptr;
  S best_n2 = S(0);
  for (const auto& c : cands) {
    S n2 = euclid_norm2(c);
    if (!best || n2 > best_n2) {
      best = &c;
      best_n2 = n2;
    }
  }
  if (sgn(best_n2) == 0) return std::nullopt;
  Vec3<S> k = *best;
  // Confirm it actually lies in the kernel (rank <= 1 inputs would fool the cross trick).
  Vec3<S> img = a.apply(k);
  if constexpr (scalar_traits<S>::is_exact) {
    if (!img.is_zero()) return std::nullopt;
  }
  return primitive(k);
}

}  // namespace crooked
