#include "crooked/oracle.hpp"

#include <vector>

namespace crooked {

namespace {

struct Lin1 {  // alpha r + beta >= 0
  Rat alpha, beta;
};

// Feasibility of closed one-variable constraints; returns a feasible point.
std::optional<Rat> feasible_1d(const std::vector<Lin1>& cons) {
  bool has_lo = false, has_hi = false;
  Rat lo, hi;
  for (const auto& c : cons) {
    int s = sgn(c.alpha);
    if (s == 0) {
      if (sgn(c.beta) < 0) return std::nullopt;
    } else if (s > 0) {
      Rat b = -c.beta / c.alpha;
      if (!has_lo || b > lo) { lo = b; has_lo = true; }
    } else {
      Rat b = -c.beta / c.alpha;
      if (!has_hi || b < hi) { hi = b; has_hi = true; }
    }
  }
  if (has_lo && has_hi) {
    if (lo > hi) return std::nullopt;
    return (lo + hi) / 2;
  }
  if (has_lo) return lo;
  if (has_hi) return hi;
  return Rat(0);
}

struct Lin2 {  // a s + b t + c >= 0
  Rat a, b, c;
};

// Fourier-Motzkin feasibility for closed half-planes in (s,t).
std::optional<std::pair<Rat, Rat>> feasible_2d(const std::vector<Lin2>& cons) {
  std::vector<Lin2> lowers, uppers;  // t >= ..., t <= ...
  std::vector<Lin1> s_only;
  for (const auto& c : cons) {
    int sb = sgn(c.b);
    if (sb > 0) lowers.push_back(c);
    else if (sb < 0) uppers.push_back(c);
    else s_only.push_back({c.a, c.c});
  }
  std::vector<Lin1> s_cons = s_only;
  for (const auto& l : lowers)
    for (const auto& u : uppers) {
      // t >= -(l.a s + l.c)/l.b  and  t <= -(u.a s + u.c)/u.b  combine to a
      // constraint on s: (-l.b) * upper_bound >= (-l.b) * lower_bound etc.
      // l.b > 0, u.b < 0: requirement -(u.a s + u.c)/u.b >= -(l.a s + l.c)/l.b
      // multiply by l.b * (-u.b) > 0:
      Rat a = l.b * (-u.a) - (-u.b) * (-l.a);
      Rat c = l.b * (-u.c) - (-u.b) * (-l.c);
      s_cons.push_back({a, c});
    }
  auto s0 = feasible_1d(s_cons);
  if (!s0) return std::nullopt;
  std::vector<Lin1> t_cons;
  for (const auto& c : cons)
    if (sgn(c.b) != 0) t_cons.push_back({c.b, c.a * *s0 + c.c});
  auto t0 = feasible_1d(t_cons);
  if (!t0) return std::nullopt;
  return std::make_pair(*s0, *t0);
}

std::optional<Vec3<Rat>> piece_pair_intersection(const PlanarPiece<Rat>& p, const PlanarPiece<Rat>& q) {
  Vec3<Rat> np = cross(p.d1, p.d2);
  Vec3<Rat> nq = cross(q.d1, q.d2);

  // Restriction of q's plane equation to p's parametrization x = o + s d1 + t d2.
  Rat c0 = inner(p.origin - q.origin, nq);
  Rat c1 = inner(p.d1, nq);
  Rat c2 = inner(p.d2, nq);

  auto point_at = [&](const Rat& s, const Rat& t) -> Vec3<Rat> {
    return p.origin + s * p.d1 + t * p.d2;
  };
  auto q_constraints_at = [&](std::vector<Lin2>& out) {
    for (int i = 0; i < q.n_constraints; ++i) {
      const Vec3<Rat>& n = q.normals[i];
      out.push_back({inner(p.d1, n), inner(p.d2, n), inner(p.origin - q.origin, n)});
    }
  };

  if (sgn(c1) == 0 && sgn(c2) == 0) {
    if (sgn(c0) != 0) return std::nullopt;  // parallel, distinct planes
    // Coplanar: 2D feasibility of both constraint sets in p's coordinates.
    std::vector<Lin2> cons;
    for (int i = 0; i < p.n_constraints; ++i)
      cons.push_back({inner(p.d1, p.normals[i]), inner(p.d2, p.normals[i]), Rat(0)});
    q_constraints_at(cons);
    auto st = feasible_2d(cons);
    if (!st) return std::nullopt;
    return point_at(st->first, st->second);
  }

  // The planes meet in the line (s,t) = base + r (-c2, c1).
  Rat s0, t0;
  if (sgn(c1) != 0) { s0 = -c0 / c1; t0 = 0; }
  else { s0 = 0; t0 = -c0 / c2; }

  std::vector<Lin2> cons;
  for (int i = 0; i < p.n_constraints; ++i)
    cons.push_back({inner(p.d1, p.normals[i]), inner(p.d2, p.normals[i]), Rat(0)});
  q_constraints_at(cons);

  std::vector<Lin1> line_cons;
  for (const auto& c : cons)
    line_cons.push_back({c.a * (-c2) + c.b * c1, c.a * s0 + c.b * t0 + c.c});
  auto r = feasible_1d(line_cons);
  if (!r) return std::nullopt;
  return point_at(s0 + *r * (-c2), t0 + *r * c1);
}

}  // namespace

OracleReport intersects_exact(const CrookedPlane<Rat>& c1, const CrookedPlane<Rat>& c2) {
  auto p1 = pieces(c1);
  auto p2 = pieces(c2);

  // Vertex-on-surface pre-checks give the simplest witnesses.
  CrookedHalfSpace<Rat> h2 = crooked_half_space(c2.v, c2.p);
  if (hs_contains(h2, c1.p) == Region::Boundary) return {false, c1.p, -1, -1};
  CrookedHalfSpace<Rat> h1 = crooked_half_space(c1.v, c1.p);
  if (hs_contains(h1, c2.p) == Region::Boundary) return {false, c2.p, -1, -1};

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (auto w = piece_pair_intersection(p1[i], p2[j])) return {false, *w, i, j};
  return {true, std::nullopt, -1, -1};
}

std::optional<Vec3<double>> approx_intersection(const CrookedPlane<double>& c1, const CrookedPlane<double>& c2,
                                                int samples_per_axis, double span, double tol) {
  auto strata = pieces(c1);
  CrookedHalfSpace<double> h2 = crooked_half_space(c2.v, c2.p);
  NullFrame<double> f2 = null_frame(h2.v);
  auto residual = [&](const Vec3<double>& q) {
    // Distance-like residual of membership in C(v2,p2): boundary has s = 0
    // clauses a <= 0 <= b, wings have a = 0 or b = 0.
    Vec3<double> d = q - h2.p;
    double s = inner(d, h2.v), a = inner(d, f2.plus), b = inner(d, f2.minus);
    double r1 = std::max(std::abs(a), std::max(-s, 0.0));  // wing-plus: a = 0, s >= 0
    double r2 = std::max(std::abs(b), std::max(s, 0.0));   // wing-minus: b = 0, s <= 0
    double r3 = std::max({std::abs(s), a, -b});  // future stem quadrant
    double r4 = std::max({std::abs(s), -a, b});  // past stem quadrant
    return std::min(std::min(r1, r2), std::min(r3, r4));
  };
  std::optional<Vec3<double>> best;
  double best_res = tol;
  for (const auto& pc : strata) {
    for (int i = 0; i <= samples_per_axis; ++i)
      for (int j = 0; j <= samples_per_axis; ++j) {
        double s = span * i / samples_per_axis;
        double t = span * (2.0 * j / samples_per_axis - (pc.n_constraints == 2 ? 0.0 : 1.0));
        // Stay inside the piece's own constraints.
        Vec3<double> w = pc.origin + s * pc.d1 + t * pc.d2;
        bool ok = true;
        for (int k = 0; k < pc.n_constraints; ++k)
          if (inner(w - pc.origin, pc.normals[k]) < 0) ok = false;
        if (!ok) continue;
        double r = residual(w);
        if (r < best_res) {
          best_res = r;
          best = w;
        }
      }
  }
  return best;
}

bool halfspaces_disjoint(const CrookedHalfSpace<Rat>& a, const CrookedHalfSpace<Rat>& b) {
  OracleReport r = intersects_exact(a.boundary(), b.boundary());
  if (!r.disjoint) return false;
  return hs_contains(a, b.p) == Region::Exterior && hs_contains(b, a.p) == Region::Exterior;
}

}  // namespace crooked
