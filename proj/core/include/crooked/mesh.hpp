#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crooked/crooked_plane.hpp"

namespace crooked {

struct MeshPolygon {
  std::string name;  // wing_plus, wing_minus, stem_future, stem_past
  std::vector<Vec3<double>> ring;
};

struct PlaneMesh {
  std::string name;
  std::vector<MeshPolygon> polys;
};

// Clip each planar stratum of the crooked plane to the Euclidean ball of the
// given radius and polygonize the result. Deterministic for fixed inputs.
PlaneMesh mesh_crooked_plane(const CrookedPlane<double>& c, const std::string& name, double radius,
                             int segments = 64);

// Wavefront OBJ with one object per polygon and fan triangulation.
void write_obj(std::ostream& os, const std::vector<PlaneMesh>& meshes);

}  // namespace crooked
