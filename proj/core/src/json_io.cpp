#include "crooked/json_io.hpp"

#include <sstream>

namespace crooked::io {

namespace {

const char* pair_type_name(PairType t) {
  switch (t) {
    case PairType::Ultraparallel: return "ultraparallel";
    case PairType::Asymptotic: return "asymptotic";
    case PairType::Crossing: return "crossing";
    default: return "degenerate";
  }
}

}  // namespace

json rat_json(const Rat& x) { return rat_to_string(x); }

Rat rat_from(const json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  fail(Errc::BadInput, "expected a rational as \"p/q\" string or integer");
}

json vec_json(const Vec3<Rat>& v) { return json::array({rat_json(v.x), rat_json(v.y), rat_json(v.z)}); }

Vec3<Rat> vec_from(const json& j) {
  if (!j.is_array() || j.size() != 3) fail(Errc::BadInput, "expected a 3-vector");
  return {rat_from(j[0]), rat_from(j[1]), rat_from(j[2])};
}

json mat2_json(const Mat2<Rat>& m) {
  return json::array({json::array({rat_json(m.a), rat_json(m.b)}), json::array({rat_json(m.c), rat_json(m.d)})});
}

Mat2<Rat> mat2_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || j[1].size() != 2)
    fail(Errc::BadInput, "expected a 2x2 matrix");
  return {rat_from(j[0][0]), rat_from(j[0][1]), rat_from(j[1][0]), rat_from(j[1][1])};
}

json mat3_json(const Mat3<Rat>& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back(json::array({rat_json(m.at(i, 0)), rat_json(m.at(i, 1)), rat_json(m.at(i, 2))}));
  return rows;
}

Mat3<Rat> mat3_from(const json& j) {
  if (!j.is_array() || j.size() != 3) fail(Errc::BadInput, "expected a 3x3 matrix");
  Mat3<Rat> m;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 3) fail(Errc::BadInput, "expected a 3x3 matrix");
    for (int k = 0; k < 3; ++k) m.at(i, k) = rat_from(j[i][k]);
  }
  return m;
}

json sym2_json(const Sym2<Rat>& s) { return json::array({rat_json(s.x), rat_json(s.y), rat_json(s.z)}); }

Sym2<Rat> sym2_from(const json& j) {
  if (!j.is_array() || j.size() != 3) fail(Errc::BadInput, "expected [x,y,z] for a symmetric matrix");
  return {rat_from(j[0]), rat_from(j[1]), rat_from(j[2])};
}

json sp4_json(const Sp4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int k = 0; k < 4; ++k) row.push_back(rat_json(m.at(i, k)));
    rows.push_back(row);
  }
  return rows;
}

json element_json(const Mat2<Rat>& m) { return json{{"sl2", mat2_json(m)}}; }

LinearIso<Rat> element_from(const json& j) {
  if (j.contains("sl2")) return sl2_adjoint(mat2_from(j["sl2"]));
  if (j.contains("so21")) return linear_iso(mat3_from(j["so21"]));
  fail(Errc::BadInput, "group element must provide \"sl2\" or \"so21\"");
}

json groupspec_json(const GroupSpec& g) {
  json out{{"schema", kSchemaVersion},
           {"generators", json::array({element_json(g.g1), element_json(g.g2)})}};
  if (g.scales[0] || g.scales[1] || g.scales[2]) {
    json s = json::array();
    for (const auto& sc : g.scales) s.push_back(sc ? rat_json(*sc) : json(nullptr));
    out["scales"] = s;
  }
  return out;
}

GroupSpec groupspec_from(const json& j) {
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].size() != 2)
    fail(Errc::BadInput, "group spec needs exactly two generators");
  GroupSpec g;
  for (int i = 0; i < 2; ++i) {
    const json& e = j["generators"][i];
    if (!e.contains("sl2")) fail(Errc::BadInput, "the deformation pipeline requires \"sl2\" lifts");
    (i == 0 ? g.g1 : g.g2) = mat2_from(e["sl2"]);
  }
  if (j.contains("scales")) {
    const json& s = j["scales"];
    if (!s.is_array() || s.size() != 3) fail(Errc::BadInput, "scales must be an array of three entries");
    for (int i = 0; i < 3; ++i)
      if (!s[i].is_null()) g.scales[i] = rat_from(s[i]);
  }
  return g;
}

json plane_json(const CrookedPlane<Rat>& c) { return json{{"v", vec_json(c.v)}, {"p", vec_json(c.p)}}; }

CrookedPlane<Rat> plane_from(const json& j) {
  if (!j.contains("v") || !j.contains("p")) fail(Errc::BadInput, "crooked plane needs \"v\" and \"p\"");
  return crooked_plane(vec_from(j["v"]), vec_from(j["p"]));
}

json halfspace_json(const CrookedHalfSpace<Rat>& h) { return json{{"v", vec_json(h.v)}, {"p", vec_json(h.p)}}; }

CrookedHalfSpace<Rat> halfspace_from(const json& j) {
  if (!j.contains("v") || !j.contains("p")) fail(Errc::BadInput, "crooked half-space needs \"v\" and \"p\"");
  return crooked_half_space(vec_from(j["v"]), vec_from(j["p"]));
}

json oracle_json(const OracleReport& r) {
  json out{{"verdict", r.disjoint ? "disjoint" : "intersect"}};
  if (r.witness) out["witness"] = vec_json(*r.witness);
  if (r.piece_i >= 0) out["piece_pair"] = json::array({r.piece_i, r.piece_j});
  return out;
}

json checks_json(const std::vector<PairCheck>& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json e{{"i", c.i},
           {"j", c.j},
           {"pair_type", pair_type_name(c.type)},
           {"closed_form", c.closed_form},
           {"oracle", c.oracle_disjoint ? "disjoint" : "intersect"}};
    if (c.witness) e["witness"] = vec_json(*c.witness);
    arr.push_back(e);
  }
  return arr;
}

json domain_doc(const GroupSpec& spec, const MuTriple& mu, const Weights& w, const DomainTriple& t,
                const QuadDomain* quad) {
  json out{{"schema", kSchemaVersion},
           {"group", groupspec_json(spec)},
           {"mu", json::array({rat_json(mu[0]), rat_json(mu[1]), rat_json(mu[2])})},
           {"weights",
            {{"p", json::array({rat_json(w.p[0]), rat_json(w.p[1]), rat_json(w.p[2])})},
             {"q", json::array({rat_json(w.q[0]), rat_json(w.q[1]), rat_json(w.q[2])})}}},
           {"lamination", json::array({vec_json(t.lam[0]), vec_json(t.lam[1]), vec_json(t.lam[2])})},
           {"vertex_weights",
            {{"a", json::array({rat_json(t.a[0]), rat_json(t.a[1]), rat_json(t.a[2])})},
             {"b", json::array({rat_json(t.b[0]), rat_json(t.b[1]), rat_json(t.b[2])})}}},
           {"vertices", json::array({vec_json(t.vertex[0]), vec_json(t.vertex[1]), vec_json(t.vertex[2])})},
           {"cocycle", {{"u1", vec_json(t.coc.u1)}, {"u2", vec_json(t.coc.u2)}}},
           {"checks", checks_json(t.checks)},
           {"certified", t.certified}};
  if (quad) {
    json walls = json::array();
    for (const auto& h : quad->walls) walls.push_back(halfspace_json(h));
    out["quad"] = json{{"walls", walls},
                       {"gamma2_trans", vec_json(quad->gamma2.trans)},
                       {"shrink", rat_json(quad->shrink)},
                       {"checks", checks_json(quad->checks)},
                       {"pairings_ok", quad->pairings_ok},
                       {"certified", quad->certified},
                       {"notes", quad->notes}};
  }
  return out;
}

LoadedDomain domain_from(const json& j) {
  if (!j.contains("schema") || j["schema"].get<int>() != kSchemaVersion)
    fail(Errc::BadInput, "unsupported document schema");
  LoadedDomain d;
  d.spec = groupspec_from(j.at("group"));
  for (int i = 0; i < 3; ++i) d.mu[i] = rat_from(j.at("mu")[i]);
  for (int i = 0; i < 3; ++i) {
    d.triple.lam[i] = vec_from(j.at("lamination")[i]);
    d.triple.a[i] = rat_from(j.at("vertex_weights").at("a")[i]);
    d.triple.b[i] = rat_from(j.at("vertex_weights").at("b")[i]);
    d.triple.vertex[i] = vec_from(j.at("vertices")[i]);
  }
  d.triple.coc.u1 = vec_from(j.at("cocycle").at("u1"));
  d.triple.coc.u2 = vec_from(j.at("cocycle").at("u2"));
  d.triple.certified = j.value("certified", false);
  if (j.contains("quad")) {
    d.has_quad = true;
    const json& q = j["quad"];
    for (int i = 0; i < 4; ++i) d.walls[i] = halfspace_from(q.at("walls")[i]);
    d.gamma2_trans = vec_from(q.at("gamma2_trans"));
    d.shrink = rat_from(q.at("shrink"));
  }
  return d;
}

json theorem_b_doc(const TheoremBReport& rep, const Int& mu1, const Int& mu2, const Int& mu3) {
  return json{{"schema", kSchemaVersion},
              {"mu", json::array({mu1.str(), mu2.str(), mu3.str()})},
              {"gamma1", sp4_json(rep.gamma1)},
              {"gamma2", sp4_json(rep.gamma2)},
              {"checks",
               {{"integer_entries", rep.integer_entries},
                {"symplectic", rep.symplectic_ok},
                {"normalizes_translations", rep.normalizes_u},
                {"margulis_match", rep.margulis_ok},
                {"action_matches_affine", rep.action_matches_affine}}},
              {"mu_recomputed", json::array({rat_json(rep.mu_recomputed[0]), rat_json(rep.mu_recomputed[1]),
                                             rat_json(rep.mu_recomputed[2])})},
              {"mu3_against_printed_v3", rat_json(rep.mu3_against_printed_v3)},
              {"notes", rep.notes}};
}

std::string latex_matrix(const Sp4& m) {
  std::ostringstream os;
  os << "\\begin{bmatrix}\n";
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      os << rat_to_string(m.at(i, k));
      if (k < 3) os << " & ";
    }
    os << (i < 3 ? " \\\\" : "") << "\n";
  }
  os << "\\end{bmatrix}";
  return os.str();
}

}  // namespace crooked::io
