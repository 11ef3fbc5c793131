#include "crooked/mesh.hpp"

#include <cmath>
#include <ostream>

namespace crooked {

namespace {

double edot(const Vec3<double>& a, const Vec3<double>& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Clip a polygon against the half-plane a*s + b*t + c >= 0 in parameter space.
using Pt = std::pair<double, double>;

std::vector<Pt> clip_halfplane(const std::vector<Pt>& poly, double a, double b, double c) {
  std::vector<Pt> out;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % n];
    double fp = a * p.first + b * p.second + c;
    double fq = a * q.first + b * q.second + c;
    if (fp >= 0) out.push_back(p);
    if ((fp >= 0) != (fq >= 0)) {
      double t = fp / (fp - fq);
      out.push_back({p.first + t * (q.first - p.first), p.second + t * (q.second - p.second)});
    }
  }
  return out;
}

}  // namespace

PlaneMesh mesh_crooked_plane(const CrookedPlane<double>& c, const std::string& name, double radius,
                             int segments) {
  static const char* piece_names[4] = {"wing_plus", "wing_minus", "stem_future", "stem_past"};
  PlaneMesh mesh;
  mesh.name = name;
  if (radius <= 0) return mesh;

  auto strata = pieces(c);
  for (int k = 0; k < 4; ++k) {
    const PlanarPiece<double>& pc = strata[k];
    // Euclidean orthonormal frame of the supporting plane.
    Vec3<double> e1 = pc.d1;
    double n1 = std::sqrt(edot(e1, e1));
    e1 = (1.0 / n1) * e1;
    Vec3<double> e2 = pc.d2 - edot(pc.d2, e1) * e1;
    double n2 = std::sqrt(edot(e2, e2));
    e2 = (1.0 / n2) * e2;

    // The ball cuts the plane in a disk around the foot point of the origin.
    double a0 = -edot(pc.origin, e1);
    double b0 = -edot(pc.origin, e2);
    Vec3<double> foot = pc.origin + a0 * e1 + b0 * e2;
    double r2 = radius * radius - edot(foot, foot);
    if (r2 <= 0) continue;
    double r = std::sqrt(r2);

    std::vector<Pt> poly;
    poly.reserve(segments);
    for (int i = 0; i < segments; ++i) {
      double ang = 2.0 * M_PI * i / segments;
      poly.push_back({a0 + r * std::cos(ang), b0 + r * std::sin(ang)});
    }
    for (int ci = 0; ci < pc.n_constraints && !poly.empty(); ++ci) {
      // inner(s e1 + t e2, n) >= 0 in parameters.
      const Vec3<double>& n = pc.normals[ci];
      poly = clip_halfplane(poly, inner(e1, n), inner(e2, n), 0.0);
    }
    if (poly.size() < 3) continue;
    MeshPolygon mp;
    mp.name = piece_names[k];
    for (const Pt& p : poly) mp.ring.push_back(pc.origin + p.first * e1 + p.second * e2);
    mesh.polys.push_back(std::move(mp));
  }
  return mesh;
}

void write_obj(std::ostream& os, const std::vector<PlaneMesh>& meshes) {
  os.precision(12);
  int base = 1;
  for (const auto& mesh : meshes) {
    for (const auto& poly : mesh.polys) {
      os << "o " << mesh.name << "_" << poly.name << "\n";
      for (const auto& v : poly.ring) os << "v " << v.x << " " << v.y << " " << v.z << "\n";
      for (size_t i = 1; i + 1 < poly.ring.size(); ++i)
        os << "f " << base << " " << base + i << " " << base + i + 1 << "\n";
      base += static_cast<int>(poly.ring.size());
    }
  }
}

}  // namespace crooked
