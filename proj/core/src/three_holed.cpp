#include "crooked/three_holed.hpp"

#include <cmath>
#include <cstdlib>

namespace crooked {

namespace {

// Euclidean gradient of the functional inner(., n).
Vec3<Rat> functional(const Vec3<Rat>& n) { return {n.x, n.y, -n.z}; }

bool parallel(const Vec3<Rat>& a, const Vec3<Rat>& b) { return cross(a, b).is_zero(); }

Rat dot6(const std::array<Rat, 6>& row, const Vec3<Rat>& u1, const Vec3<Rat>& u2) {
  return row[0] * u1.x + row[1] * u1.y + row[2] * u1.z + row[3] * u2.x + row[4] * u2.y + row[5] * u2.z;
}

}  // namespace

DecoratedGroup build_decorated(const Mat2<Rat>& g1, const Mat2<Rat>& g2,
                               const std::array<std::optional<Rat>, 3>& scales) {
  if (g1.det() != 1 || g2.det() != 1) fail(Errc::NotUnimodular, "generators must have determinant 1");
  DecoratedGroup g;
  g.sl2 = {g1, g2, (g1 * g2).inv_unimodular()};
  for (int i = 0; i < 3; ++i) g.lin[i] = sl2_adjoint(g.sl2[i]);
  if (!((g.lin[0] * g.lin[1] * g.lin[2]).m == Mat3<Rat>::identity()))
    fail(Errc::VerificationFailed, "generator relation failed in SO(2,1)");

  for (int i = 0; i < 3; ++i) {
    IsoClass c = classify(g.lin[i]);
    if (c == IsoClass::Hyperbolic) g.ends[i] = EndKind::Hyperbolic;
    else if (c == IsoClass::Parabolic) g.ends[i] = EndKind::Parabolic;
    else fail(Errc::EllipticGenerator, "generator " + std::to_string(i + 1) + " is elliptic or trivial");

    PositiveNeutral<Rat> n = positive_neutral(g.lin[i]);
    g.dec[i] = n.v;
    g.dec_normalized[i] = n.normalized;
    if (scales[i]) {
      if (g.ends[i] != EndKind::Parabolic) fail(Errc::BadInput, "decoration scales apply to parabolic ends only");
      if (sgn(*scales[i]) <= 0) fail(Errc::BadInput, "decoration scale must be positive");
      g.dec[i] = *scales[i] * g.dec[i];
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (cross(g.dec[i], g.dec[j]).is_zero()) fail(Errc::CoincidentAxes, "two generators share their fixed direction");

  for (int i = 0; i < 3; ++i) {
    if (g.ends[i] == EndKind::Parabolic) {
      g.x_plus[i] = g.dec[i];
      g.x_minus[i] = g.dec[i];
      continue;
    }
    NullFrame<Rat> f = null_frame(g.dec[i]);
    Vec3<Rat> img = g.lin[i](f.plus);
    if (!parallel(img, f.plus)) fail(Errc::VerificationFailed, "axis frame is not preserved");
    Rat kappa = f.plus.z != 0 ? img.z / f.plus.z : (f.plus.x != 0 ? img.x / f.plus.x : img.y / f.plus.y);
    if (kappa > 1) {
      g.x_plus[i] = f.plus;
      g.x_minus[i] = f.minus;
    } else {
      g.x_plus[i] = f.minus;
      g.x_minus[i] = f.plus;
    }
  }
  return g;
}

Vec3<Rat> cocycle_u3(const DecoratedGroup& g, const Cocycle& u) {
  return -(g.lin[2].m.apply(u.u1 + g.lin[0](u.u2)));
}

MuTriple mu_of(const DecoratedGroup& g, const Cocycle& u) {
  Vec3<Rat> u3 = cocycle_u3(g, u);
  return {margulis(AffineIso<Rat>{g.lin[0], u.u1}, g.dec[0]),
          margulis(AffineIso<Rat>{g.lin[1], u.u2}, g.dec[1]),
          margulis(AffineIso<Rat>{g.lin[2], u3}, g.dec[2])};
}

std::array<std::array<Rat, 6>, 3> mu_matrix(const DecoratedGroup& g) {
  // mu1 = u1 . d1, mu2 = u2 . d2, mu3 = -(u1 + L1 u2) . d3 since d3 is fixed
  // by L3 = (L1 L2)^{-1}.
  std::array<std::array<Rat, 6>, 3> m{};
  Vec3<Rat> f1 = functional(g.dec[0]);
  Vec3<Rat> f2 = functional(g.dec[1]);
  Vec3<Rat> f3 = functional(g.dec[2]);
  Vec3<Rat> w = g.lin[0].inverse()(g.dec[2]);
  Vec3<Rat> fw = functional(w);
  m[0] = {f1.x, f1.y, f1.z, Rat(0), Rat(0), Rat(0)};
  m[1] = {Rat(0), Rat(0), Rat(0), f2.x, f2.y, f2.z};
  m[2] = {-f3.x, -f3.y, -f3.z, -fw.x, -fw.y, -fw.z};
  std::vector<std::vector<Rat>> rows(3, std::vector<Rat>(6));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) rows[i][j] = m[i][j];
  if (row_reduce(rows) != 3) fail(Errc::RankDeficient, "mu is not onto; configuration is degenerate");
  return m;
}

Cocycle mu_inverse(const DecoratedGroup& g, const MuTriple& target) {
  auto m = mu_matrix(g);
  // Minimum-norm preimage u = M^T (M M^T)^{-1} mu.
  Mat3<Rat> gram;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rat s(0);
      for (int k = 0; k < 6; ++k) s += m[i][k] * m[j][k];
      gram.at(i, j) = s;
    }
  Rat d = gram.det();
  if (sgn(d) == 0) fail(Errc::RankDeficient, "gram matrix of mu is singular");
  Vec3<Rat> t{target[0], target[1], target[2]};
  Vec3<Rat> lambda{det3(t, gram.col(1), gram.col(2)) / d, det3(gram.col(0), t, gram.col(2)) / d,
                   det3(gram.col(0), gram.col(1), t) / d};
  std::array<Rat, 6> u{};
  Rat l[3] = {lambda.x, lambda.y, lambda.z};
  for (int k = 0; k < 6; ++k)
    for (int i = 0; i < 3; ++i) u[k] += m[i][k] * l[i];
  return {{u[0], u[1], u[2]}, {u[3], u[4], u[5]}};
}

std::array<Vec3<Rat>, 3> lamination_vectors(const DecoratedGroup& g) {
  std::array<Vec3<Rat>, 3> v;
  for (int i = 0; i < 3; ++i) {
    const Vec3<Rat>& a = g.x_plus[i];
    const Vec3<Rat>& b = g.x_plus[(i + 1) % 3];
    Rat den = inner(a, b);
    if (sgn(den) == 0) fail(Errc::DegenerateEndpoints, "consecutive ideal points are orthogonal");
    v[i] = (Rat(1) / den) * cross(a, b);
    if (!is_spacelike(v[i])) fail(Errc::DegenerateEndpoints, "arc direction is not spacelike");
  }
  if (!consistently_oriented(std::vector<Vec3<Rat>>{v[0], v[1], v[2]}))
    fail(Errc::VerificationFailed, "lamination directions are not consistently oriented");
  return v;
}

namespace {

PairCheck check_pair(const CrookedPlane<Rat>& ci, const CrookedPlane<Rat>& cj, const Vec3<Rat>& vi,
                     const Vec3<Rat>& vj, int i, int j) {
  PairCheck pc;
  pc.i = i;
  pc.j = j;
  pc.type = pair_type(vi, vj);
  if (pc.type == PairType::Asymptotic) pc.closed_form = disjoint_asymptotic(ci, cj, vi, vj);
  else if (pc.type == PairType::Ultraparallel) pc.closed_form = disjoint_ultraparallel(ci, cj, vi, vj);
  else fail(Errc::WrongPairType, "arc directions must be ultraparallel or asymptotic");
  OracleReport r = intersects_exact(ci, cj);
  pc.oracle_disjoint = r.disjoint;
  pc.witness = r.witness;
  return pc;
}

}  // namespace

DomainTriple solve_vertices(const DecoratedGroup& g, const MuTriple& mu, const Weights& w) {
  for (const Rat& m : mu) {
    if (sgn(m) > 0) continue;
    std::string msg = "all three invariants must share a sign and only the positive octant is constructed";
    if (sgn(m) < 0)
      msg += "; negatively extended boundary pieces are out of scope, negate the deformation instead";
    fail(Errc::NonPositiveMu, msg);
  }
  for (int i = 0; i < 3; ++i) {
    if (sgn(w.p[i]) <= 0 || sgn(w.q[i]) <= 0 || w.p[i] + w.q[i] != 1)
      fail(Errc::BadInput, "weights must be positive with p_i + q_i = 1");
  }

  Rat beta[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      beta[i][j] = -inner(g.x_plus[i], g.dec[j]);
      if (sgn(beta[i][j]) <= 0)
        fail(Errc::VerificationFailed, "nonpositive pairing product; generator directions are not in the standard configuration");
    }

  DomainTriple out;
  out.lam = lamination_vectors(g);
  out.a = {w.p[1] * mu[1] / beta[0][1], w.p[2] * mu[2] / beta[1][2], w.p[0] * mu[0] / beta[2][0]};
  out.b = {w.q[0] * mu[0] / beta[1][0], w.q[1] * mu[1] / beta[2][1], w.q[2] * mu[2] / beta[0][2]};
  for (int i = 0; i < 3; ++i) out.vertex[i] = out.a[i] * g.x_plus[i] - out.b[i] * g.x_plus[(i + 1) % 3];

  // Cocycle: gamma1 carries the wall at p3 to the wall at p1; u2 is the
  // smallest correction of the naive pairing hitting mu2 and mu3 exactly.
  Vec3<Rat> u1 = out.vertex[0] - g.lin[0](out.vertex[2]);
  Vec3<Rat> seed = out.vertex[1] - g.lin[1](out.vertex[0]);
  Vec3<Rat> n1 = g.dec[1];
  Vec3<Rat> n2 = g.lin[0].inverse()(g.dec[2]);
  Rat r1 = mu[1] - inner(seed, n1);
  Rat r2 = (-mu[2] - inner(u1, g.dec[2])) - inner(seed, n2);
  Vec3<Rat> e1 = functional(n1), e2 = functional(n2);
  Rat g11 = inner(n1, e1), g12 = inner(n2, e1), g22 = inner(n2, e2);
  Rat det = g11 * g22 - g12 * g12;
  if (sgn(det) == 0) fail(Errc::VerificationFailed, "mu constraints on u2 are degenerate");
  Rat x = (r1 * g22 - r2 * g12) / det;
  Rat y = (g11 * r2 - g12 * r1) / det;
  out.coc = {u1, seed + x * e1 + y * e2};

  MuTriple back = mu_of(g, out.coc);
  if (back != mu) fail(Errc::VerificationFailed, "reconstructed cocycle does not realize the target invariants");

  std::array<CrookedPlane<Rat>, 3> planes;
  for (int i = 0; i < 3; ++i) planes[i] = crooked_plane(out.lam[i], out.vertex[i]);
  out.certified = true;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    PairCheck pc = check_pair(planes[i], planes[j], out.lam[i], out.lam[j], i, j);
    out.certified = out.certified && pc.closed_form && pc.oracle_disjoint;
    out.checks.push_back(pc);
  }
  if (!out.certified) fail(Errc::VerificationFailed, "constructed walls are not pairwise disjoint");
  return out;
}

QuadDomain quad_domain(const DecoratedGroup& g, const DomainTriple& triple, const MuTriple& mu, int max_steps) {
  QuadDomain out;
  out.gamma1 = {g.lin[0], triple.coc.u1};

  // One-parameter mu-preserving family for the free wall: u2(t) = u2 + t dir.
  Vec3<Rat> n2 = g.lin[0].inverse()(g.dec[2]);
  Vec3<Rat> dir = cross(g.dec[1], n2);
  CrookedPlane<Rat> b2 = crooked_plane(triple.lam[1], triple.vertex[1]);
  CrookedPlane<Rat> bm1 = crooked_plane(triple.lam[2], triple.vertex[2]);

  for (int step = 0; step <= max_steps; ++step) {
    Rat t(0);
    if (step > 0) {
      int k = (step - 1) / 2;
      t = Rat(Int(1), Int(1) << k);
      if (step % 2 == 0) t = -t;
    }
    Cocycle coc{triple.coc.u1, triple.coc.u2 + t * dir};
    AffineIso<Rat> gamma2{g.lin[1], coc.u2};
    CrookedPlane<Rat> b1 = image(out.gamma1, bm1);
    CrookedPlane<Rat> bm2 = image(invert(gamma2), b2);

    const CrookedPlane<Rat>* ps[4] = {&bm1, &b1, &bm2, &b2};
    std::vector<PairCheck> checks;
    bool all = true;
    for (int i = 0; i < 4 && all; ++i)
      for (int j = i + 1; j < 4 && all; ++j) {
        OracleReport r = intersects_exact(*ps[i], *ps[j]);
        PairCheck pc;
        pc.i = i;
        pc.j = j;
        pc.type = pair_type(ps[i]->v, ps[j]->v);
        pc.oracle_disjoint = r.disjoint;
        pc.closed_form = r.disjoint;
        pc.witness = r.witness;
        checks.push_back(pc);
        all = all && r.disjoint;
      }
    if (!all) {
      if (step == max_steps) {
        out.checks = checks;
        std::string which = checks.empty() ? "" : (" pair (" + std::to_string(checks.back().i) + "," +
                                                   std::to_string(checks.back().j) + ") still meets");
        fail(Errc::SearchExhausted, "no admissible vertex found in " + std::to_string(max_steps) + " steps;" + which);
      }
      continue;
    }

    // Half-space sides: gamma_i(H_minus_i) is the closed complement of
    // H_plus_i by construction; search the two free signs.
    for (int s1 : {1, -1})
      for (int s2 : {1, -1}) {
        Vec3<Rat> w1 = s1 < 0 ? -triple.lam[2] : triple.lam[2];
        Vec3<Rat> w2 = s2 < 0 ? -triple.lam[1] : triple.lam[1];
        CrookedHalfSpace<Rat> hm1 = crooked_half_space(w1, triple.vertex[2]);
        CrookedHalfSpace<Rat> h1 = image_halfspace(out.gamma1, hm1).complement();
        CrookedHalfSpace<Rat> h2 = crooked_half_space(w2, triple.vertex[1]);
        CrookedHalfSpace<Rat> hm2 = image_halfspace(invert(gamma2), h2).complement();
        const CrookedHalfSpace<Rat>* hs[4] = {&hm1, &h1, &hm2, &h2};
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
          for (int j = i + 1; j < 4 && ok; ++j) ok = halfspaces_disjoint(*hs[i], *hs[j]);
        if (!ok) continue;

        // Pairing checks by witness transport both ways.
        bool pairings = true;
        for (int k = 1; k <= 4 && pairings; ++k) {
          pairings = hs_contains(h1, out.gamma1(interior_witness(hm1, k))) == Region::Exterior &&
                     hs_contains(hm1, invert(out.gamma1)(interior_witness(h1, k))) == Region::Exterior &&
                     hs_contains(h2, gamma2(interior_witness(hm2, k))) == Region::Exterior &&
                     hs_contains(hm2, invert(gamma2)(interior_witness(h2, k))) == Region::Exterior;
        }
        if (!pairings) continue;

        out.walls = {hm1, h1, hm2, h2};
        out.gamma2 = gamma2;
        out.shrink = t;
        out.checks = checks;
        out.pairings_ok = true;
        out.certified = true;
        out.notes.push_back("necessary conditions verified; crooked domain certified at boundary level");
        out.notes.push_back("properness of the group action is a consequence of the pairing structure and is not re-proved here");
        MuTriple back = mu_of(g, coc);
        if (back != mu) fail(Errc::VerificationFailed, "perturbed cocycle no longer realizes the target invariants");
        return out;
      }
  }
  fail(Errc::SearchExhausted, "no half-space signing certified all pairings");
}

AffineIso<Rat> word_image(const DecoratedGroup& g, const Cocycle& u, const std::vector<int>& word) {
  AffineIso<Rat> gens[2] = {{g.lin[0], u.u1}, {g.lin[1], u.u2}};
  AffineIso<Rat> acc = AffineIso<Rat>::identity();
  for (int letter : word) {
    if (letter == 0 || letter > 2 || letter < -2) fail(Errc::BadInput, "word letters must be +-1 or +-2");
    AffineIso<Rat> step = gens[std::abs(letter) - 1];
    if (letter < 0) step = invert(step);
    acc = compose(acc, step);
  }
  return acc;
}

SignReport check_signs(const DecoratedGroup& g, const Cocycle& u, const std::vector<std::vector<int>>& words) {
  SignReport rep;
  int pos = -1, neg = -1;
  for (const auto& w : words) {
    AffineIso<Rat> gamma = word_image(g, u, w);
    SignReportItem item;
    item.word = w;
    item.cls = classify(gamma.linear);
    if (item.cls == IsoClass::Hyperbolic || item.cls == IsoClass::Parabolic) {
      item.sign = sign_of(gamma);
      int idx = static_cast<int>(rep.items.size());
      if (*item.sign == SignClass::Positive && pos < 0) pos = idx;
      if (*item.sign == SignClass::Negative && neg < 0) neg = idx;
    }
    rep.items.push_back(item);
  }
  if (pos >= 0 && neg >= 0) {
    rep.opposite_signs_found = true;
    rep.offending = {pos, neg};
  }
  return rep;
}

namespace {

template <class S, class Slice>
Slice trace_slice_impl(const S& a1, const S& a2, const S& a3, const S& b3) {
  Slice out;
  out.b3 = b3;
  out.rep[0] = {a1, S(-1), S(1), S(0)};
  out.rep[1] = {S(0), -b3, S(1) / b3, a2};
  out.rep[2] = {b3, -a1 * b3 - a2, S(0), S(1) / b3};
  Mat2<S> prod = out.rep[0] * out.rep[1] * out.rep[2];
  Mat2<S> id = Mat2<S>::identity();
  bool ok;
  if constexpr (scalar_traits<S>::is_exact) {
    ok = prod == id || prod == -S(1) * id;
  } else {
    auto near = [](const Mat2<double>& m, const Mat2<double>& n) {
      return std::abs(m.a - n.a) < 1e-9 && std::abs(m.b - n.b) < 1e-9 && std::abs(m.c - n.c) < 1e-9 &&
             std::abs(m.d - n.d) < 1e-9;
    };
    ok = near(prod, id) || near(prod, -1.0 * id);
  }
  if (!ok) fail(Errc::RelationUnsatisfiable, "generator product does not project to the identity");
  return out;
}

}  // namespace

TraceSlice trace_slice_representation(const Rat& a1, const Rat& a2, const Rat& a3) {
  Rat disc = a3 * a3 - 4;
  if (sgn(disc) < 0) fail(Errc::NoRealB3, "third trace admits no real splitting");
  auto root = sqrt_exact(disc);
  if (!root) fail(Errc::NotExactlyRepresentable, "trace splitting is irrational");
  Rat b3 = (a3 + *root) / 2;
  return trace_slice_impl<Rat, TraceSlice>(a1, a2, a3, b3);
}

TraceSliceF trace_slice_representation(double a1, double a2, double a3) {
  double disc = a3 * a3 - 4;
  if (disc < 0) fail(Errc::NoRealB3, "third trace admits no real splitting");
  double b3 = (a3 + std::sqrt(disc)) / 2;
  return trace_slice_impl<double, TraceSliceF>(a1, a2, a3, b3);
}

}  // namespace crooked
