#pragma once

#include <optional>

#include "crooked/linalg.hpp"
#include "crooked/sym2.hpp"
#include "crooked/vec.hpp"

namespace crooked {

// Element of SO(2,1)^0, optionally carrying an SL(2) lift it was built from.
template <class S>
struct LinearIso {
  Mat3<S> m;
  std::optional<Mat2<S>> lift;

  Vec3<S> operator()(const Vec3<S>& v) const { return m.apply(v); }

  // Q M^T Q inverts any isometry of diag(1,1,-1).
  LinearIso inverse() const {
    Mat3<S> t = m.transpose();
    t.m[2] = -t.m[2];
    t.m[5] = -t.m[5];
    t.m[6] = -t.m[6];
    t.m[7] = -t.m[7];
    LinearIso r{t, std::nullopt};
    if (lift) r.lift = lift->inv_unimodular();
    return r;
  }

  friend LinearIso operator*(const LinearIso& a, const LinearIso& b) {
    LinearIso r{a.m * b.m, std::nullopt};
    if (a.lift && b.lift) r.lift = *a.lift * *b.lift;
    return r;
  }
};

namespace detail {

template <class S>
bool near_zero(const S& x) {
  if constexpr (scalar_traits<S>::is_exact)
    return x == S(0);
  else
    return scalar_traits<S>::abs(x) <= float_eps();
}

}  // namespace detail

template <class S>
bool preserves_form(const Mat3<S>& m) {
  // M^T Q M = Q, entrywise.
  Vec3<S> c0 = m.col(0), c1 = m.col(1), c2 = m.col(2);
  return detail::near_zero(inner(c0, c0) - S(1)) && detail::near_zero(inner(c1, c1) - S(1)) &&
         detail::near_zero(inner(c2, c2) + S(1)) && detail::near_zero(inner(c0, c1)) &&
         detail::near_zero(inner(c0, c2)) && detail::near_zero(inner(c1, c2));
}

template <class S>
LinearIso<S> linear_iso(const Mat3<S>& m) {
  if (!preserves_form(m)) fail(Errc::NotAnIsometry, "matrix does not preserve diag(1,1,-1)");
  if (sgn(m.det() - S(1)) != 0) fail(Errc::NotAnIsometry, "matrix has determinant -1");
  if (sgn(m.at(2, 2)) <= 0) fail(Errc::NotAnIsometry, "matrix reverses time orientation");
  return {m, std::nullopt};
}

// Adjoint action of SL(2,R) through the fixed model chain
// psi -> A psi A^T, Vec3 <-> psi via bridge. Kernel {+-I}.
template <class S>
LinearIso<S> sl2_adjoint(const Mat2<S>& a) {
  if (sgn(a.det() - S(1)) != 0) fail(Errc::NotUnimodular, "sl2_adjoint requires det 1");
  Vec3<S> cols[3];
  const Vec3<S> basis[3] = {{S(1), S(0), S(0)}, {S(0), S(1), S(0)}, {S(0), S(0), S(1)}};
  for (int j = 0; j < 3; ++j) cols[j] = bridge_inv(sym_act(a, bridge(basis[j])));
  return {Mat3<S>::from_cols(cols[0], cols[1], cols[2]), a};
}

enum class IsoClass { Hyperbolic, Parabolic, Elliptic, Identity };

template <class S>
IsoClass classify(const LinearIso<S>& g) {
  if (g.lift) {
    const Mat2<S>& a = *g.lift;
    S t = scalar_traits<S>::abs(a.trace());
    int c = sgn(t - S(2));
    if (c > 0) return IsoClass::Hyperbolic;
    if (c < 0) return IsoClass::Elliptic;
    bool center = detail::near_zero(a.b) && detail::near_zero(a.c);
    return center ? IsoClass::Identity : IsoClass::Parabolic;
  }
  S tr = g.m.trace();
  int c = sgn(tr - S(3));
  if (c > 0) return IsoClass::Hyperbolic;
  if (c < 0) {
    if (sgn(tr + S(1)) < 0) fail(Errc::NotAnIsometry, "trace below -1 cannot occur in SO(2,1)^0");
    return IsoClass::Elliptic;
  }
  Mat3<S> d = g.m - Mat3<S>::identity();
  for (const S& e : d.m)
    if (!detail::near_zero(e)) return IsoClass::Parabolic;
  return IsoClass::Identity;
}

namespace detail {

// Orientation test behind Definition "positive": v in Fix(g) is positive when
// (v, x, gx) is positively oriented for any causal non-eigenvector x, with
// Det(e1,e2,e3) = +1. Under this choice the deformations whose invariants are
// positive are the ones admitting positively extended crooked wall pairings.
template <class S>
int positivity_sign(const Mat3<S>& m, const Vec3<S>& v) {
  const Vec3<S> witnesses[6] = {{S(0), S(0), S(1)}, {S(1), S(0), S(2)},  {S(0), S(1), S(2)},
                                {S(1), S(1), S(2)}, {S(3), S(-1), S(4)}, {S(-2), S(3), S(5)}};
  for (const auto& x : witnesses) {
    S d = det3(v, x, m.apply(x));
    if constexpr (scalar_traits<S>::is_exact) {
      if (sgn(d) != 0) return sgn(d);
    } else {
      S scale = std::sqrt(euclid_norm2(v) * euclid_norm2(x));
      if (scalar_traits<S>::abs(d) > float_eps() * scale) return d > 0 ? 1 : -1;
    }
  }
  fail(Errc::Indeterminate, "no usable positivity witness");
}

}  // namespace detail

template <class S>
struct PositiveNeutral {
  Vec3<S> v;
  // Hyperbolic: v.v = 1. Parabolic: Euclidean length 1 (float mode only; the
  // exact-mode scale is the traceless projection of the SL2 lift).
  bool normalized = false;
};

// The positive fixed vector of a hyperbolic or parabolic isometry.
template <class S>
PositiveNeutral<S> positive_neutral(const LinearIso<S>& g) {
  IsoClass cls = classify(g);
  if (cls != IsoClass::Hyperbolic && cls != IsoClass::Parabolic)
    fail(Errc::NotHyperbolicOrParabolic, "neutral vector undefined for this class");

  Vec3<S> v;
  bool lift_scale = false;
  if (g.lift) {
    // Traceless projection of the lift, carried through the model chain.
    Mat2<S> half{g.lift->trace() / S(2), S(0), S(0), g.lift->trace() / S(2)};
    Mat2<S> ghat = *g.lift + (-half);
    Mat2<S> j2inv{S(0), S(-1), S(1), S(0)};
    Mat2<S> psi = ghat * j2inv;
    v = bridge_inv(Sym2<S>::from_mat(psi));
    lift_scale = true;
  } else {
    auto k = kernel_dir(g.m - Mat3<S>::identity());
    if (!k) fail(Errc::NotHyperbolicOrParabolic, "fixed space is not one-dimensional");
    v = *k;
  }

  if (detail::positivity_sign(g.m, v) < 0) v = -v;

  PositiveNeutral<S> out{v, false};
  if (cls == IsoClass::Hyperbolic) {
    S vv = inner(v, v);
    if constexpr (scalar_traits<S>::is_exact) {
      if (auto root = sqrt_exact(vv)) {
        out.v = (S(1) / *root) * v;
        out.normalized = true;
      }
    } else {
      out.v = (S(1) / std::sqrt(vv)) * v;
      out.normalized = true;
    }
  } else {
    if constexpr (!scalar_traits<S>::is_exact) {
      out.v = primitive(v);  // Euclidean length 1
      out.normalized = true;
    } else if (!lift_scale) {
      out.v = primitive(v);
    }
  }
  return out;
}

template <class S>
struct AffineIso {
  LinearIso<S> linear;
  Vec3<S> trans;

  Vec3<S> operator()(const Vec3<S>& x) const { return linear(x) + trans; }

  static AffineIso identity() { return {{Mat3<S>::identity(), Mat2<S>::identity()}, {}}; }
};

template <class S>
AffineIso<S> compose(const AffineIso<S>& a, const AffineIso<S>& b) {
  return {a.linear * b.linear, a.linear(b.trans) + a.trans};
}

template <class S>
AffineIso<S> invert(const AffineIso<S>& a) {
  LinearIso<S> li = a.linear.inverse();
  return {li, -li(a.trans)};
}

template <class S>
AffineIso<S> conjugate(const AffineIso<S>& eta, const AffineIso<S>& g) {
  return compose(eta, compose(g, invert(eta)));
}

// alpha_v(gamma) = (gamma(x) - x) . v, independent of the base point x.
template <class S>
S margulis(const AffineIso<S>& gamma, const Vec3<S>& v) {
  if (v.is_zero()) fail(Errc::NotFixedVector, "neutral vector must be nonzero");
  Vec3<S> dv = gamma.linear(v) - v;
  if constexpr (scalar_traits<S>::is_exact) {
    if (!dv.is_zero()) fail(Errc::NotFixedVector, "vector is not fixed by the linear part");
  } else {
    if (std::sqrt(euclid_norm2(dv)) > float_eps() * (1.0 + std::sqrt(euclid_norm2(v))))
      fail(Errc::NotFixedVector, "vector is not fixed by the linear part");
  }
  IsoClass cls = classify(gamma.linear);
  if (cls != IsoClass::Hyperbolic && cls != IsoClass::Parabolic && cls != IsoClass::Identity)
    fail(Errc::NotHyperbolicOrParabolic, "Margulis invariant undefined for elliptic elements");
  S alpha = inner(gamma.trans, v);
  // Base-point independence, checked rather than assumed.
  const Vec3<S> samples[4] = {{S(1), S(0), S(0)}, {S(0), S(1), S(1)}, {S(2), S(-1), S(3)}, {S(-1), S(2), S(-2)}};
  for (const auto& x : samples) {
    S ax = inner(gamma(x) - x, v);
    if constexpr (scalar_traits<S>::is_exact) {
      if (ax != alpha) fail(Errc::VerificationFailed, "Margulis invariant depends on base point");
    } else {
      if (scalar_traits<S>::abs(ax - alpha) > float_eps() * (1.0 + scalar_traits<S>::abs(alpha)))
        fail(Errc::VerificationFailed, "Margulis invariant depends on base point");
    }
  }
  return alpha;
}

enum class SignClass { Negative = -1, Zero = 0, Positive = 1 };

template <class S>
SignClass sign_of(const AffineIso<S>& gamma) {
  PositiveNeutral<S> n = positive_neutral(gamma.linear);
  return static_cast<SignClass>(sgn(margulis(gamma, n.v)));
}

}  // namespace crooked
