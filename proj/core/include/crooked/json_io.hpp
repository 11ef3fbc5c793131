#pragma once

#include <json.hpp>

#include "crooked/symplectic.hpp"
#include "crooked/three_holed.hpp"

namespace crooked::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json rat_json(const Rat& x);
Rat rat_from(const json& j);

json vec_json(const Vec3<Rat>& v);
Vec3<Rat> vec_from(const json& j);

json mat2_json(const Mat2<Rat>& m);
Mat2<Rat> mat2_from(const json& j);

json mat3_json(const Mat3<Rat>& m);
Mat3<Rat> mat3_from(const json& j);

json sym2_json(const Sym2<Rat>& s);
Sym2<Rat> sym2_from(const json& j);

json sp4_json(const Sp4& m);

// Group element as {"sl2": [[..],[..]]} or {"so21": [[..],[..],[..]]}.
json element_json(const Mat2<Rat>& m);
LinearIso<Rat> element_from(const json& j);

struct GroupSpec {
  Mat2<Rat> g1, g2;
  std::array<std::optional<Rat>, 3> scales{};
};

json groupspec_json(const GroupSpec& g);
GroupSpec groupspec_from(const json& j);

json plane_json(const CrookedPlane<Rat>& c);
CrookedPlane<Rat> plane_from(const json& j);

json halfspace_json(const CrookedHalfSpace<Rat>& h);
CrookedHalfSpace<Rat> halfspace_from(const json& j);

json oracle_json(const OracleReport& r);

json checks_json(const std::vector<PairCheck>& checks);

json domain_doc(const GroupSpec& spec, const MuTriple& mu, const Weights& w, const DomainTriple& t,
                const QuadDomain* quad);

struct LoadedDomain {
  GroupSpec spec;
  MuTriple mu;
  DomainTriple triple;
  bool has_quad = false;
  std::array<CrookedHalfSpace<Rat>, 4> walls;
  Vec3<Rat> gamma2_trans;  // perturbed translational part of gamma2
  Rat shrink;
};

LoadedDomain domain_from(const json& j);

json theorem_b_doc(const TheoremBReport& rep, const Int& mu1, const Int& mu2, const Int& mu3);
std::string latex_matrix(const Sp4& m);

}  // namespace crooked::io
