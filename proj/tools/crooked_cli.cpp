#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crooked/json_io.hpp"
#include "crooked/mesh.hpp"
#include "crooked/tiling.hpp"

namespace {

using crooked::Errc;
using crooked::Error;
using crooked::Rat;
using json = nlohmann::json;

constexpr int kExitBadInput = 2;
constexpr int kExitVerification = 3;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::VerificationFailed:
    case Errc::SearchExhausted:
    case Errc::FormulaMismatch:
    case Errc::Indeterminate:
    case Errc::RelationUnsatisfiable:
      return kExitVerification;
    default:
      return kExitBadInput;
  }
}

json load_json_arg(const std::string& arg) {
  // Inline JSON or a path to a JSON file.
  std::string text = arg;
  if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
    std::ifstream in(arg);
    if (!in) crooked::fail(Errc::BadInput, "cannot open " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) crooked::fail(Errc::BadInput, "malformed JSON: " + arg);
  return j;
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::filesystem::path p(out_path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  out << doc.dump(2) << "\n";
}

crooked::MuTriple parse_mu(const std::string& s) {
  crooked::MuTriple mu;
  std::stringstream ss(s);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',') && i < 3) mu[i++] = crooked::rat_from_string(item);
  if (i != 3) crooked::fail(Errc::BadInput, "expected --mu a,b,c");
  return mu;
}

const char* class_name(crooked::IsoClass c) {
  switch (c) {
    case crooked::IsoClass::Hyperbolic: return "hyperbolic";
    case crooked::IsoClass::Parabolic: return "parabolic";
    case crooked::IsoClass::Elliptic: return "elliptic";
    default: return "identity";
  }
}

struct GlobalOpts {
  std::string mode = "exact";
  double eps = 1e-9;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out;
};

int cmd_classify(const GlobalOpts& g, const std::string& element) {
  json e = load_json_arg(element);
  crooked::LinearIso<Rat> iso = crooked::io::element_from(e);
  json doc{{"schema", crooked::io::kSchemaVersion}, {"class", class_name(crooked::classify(iso))}};
  crooked::IsoClass c = crooked::classify(iso);
  if (c == crooked::IsoClass::Hyperbolic || c == crooked::IsoClass::Parabolic) {
    auto n = crooked::positive_neutral(iso);
    doc["positive_neutral"] = crooked::io::vec_json(n.v);
    doc["neutral_normalized"] = n.normalized;
  }
  emit(doc, g.out);
  return 0;
}

int cmd_margulis(const GlobalOpts& g, const std::string& element, const std::string& trans) {
  crooked::LinearIso<Rat> iso = crooked::io::element_from(load_json_arg(element));
  crooked::Vec3<Rat> u = crooked::io::vec_from(load_json_arg(trans));
  crooked::AffineIso<Rat> gamma{iso, u};
  auto n = crooked::positive_neutral(iso);
  Rat alpha = crooked::margulis(gamma, n.v);
  json doc{{"schema", crooked::io::kSchemaVersion},
           {"class", class_name(crooked::classify(iso))},
           {"neutral", crooked::io::vec_json(n.v)},
           {"alpha", crooked::io::rat_json(alpha)},
           {"sign", crooked::sgn(alpha)}};
  emit(doc, g.out);
  return 0;
}

int cmd_check_disjoint(const GlobalOpts& g, const std::string& a, const std::string& b) {
  crooked::CrookedPlane<Rat> ca = crooked::io::plane_from(load_json_arg(a));
  crooked::CrookedPlane<Rat> cb = crooked::io::plane_from(load_json_arg(b));
  crooked::OracleReport oracle = crooked::intersects_exact(ca, cb);
  json doc{{"schema", crooked::io::kSchemaVersion}, {"oracle", crooked::io::oracle_json(oracle)}};
  crooked::PairType t = crooked::pair_type(ca.v, cb.v);
  switch (t) {
    case crooked::PairType::Ultraparallel:
      doc["pair_type"] = "ultraparallel";
      try {
        doc["closed_form"] = crooked::disjoint_ultraparallel(ca, cb);
      } catch (const Error& e) {
        doc["closed_form_error"] = e.what();
      }
      break;
    case crooked::PairType::Asymptotic:
      doc["pair_type"] = "asymptotic";
      try {
        doc["closed_form"] = crooked::disjoint_asymptotic(ca, cb);
      } catch (const Error& e) {
        doc["closed_form_error"] = e.what();
      }
      break;
    case crooked::PairType::Crossing:
      doc["pair_type"] = "crossing";
      doc["note"] = "outside the closed-form criteria; oracle verdict only";
      break;
    default:
      doc["pair_type"] = "degenerate";
  }
  emit(doc, g.out);
  return 0;
}

int cmd_domain(const GlobalOpts& g, const std::string& group_path, const std::string& mu_arg,
               const std::string& split, bool quad) {
  crooked::io::GroupSpec spec = crooked::io::groupspec_from(load_json_arg(group_path));
  crooked::MuTriple mu = parse_mu(mu_arg);
  crooked::Weights w;
  if (!split.empty()) {
    std::stringstream ss(split);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',') && i < 3) {
      w.p[i] = crooked::rat_from_string(item);
      w.q[i] = Rat(1) - w.p[i];
      ++i;
    }
    if (i != 3) crooked::fail(Errc::BadInput, "expected --split p1,p2,p3");
  }
  crooked::DecoratedGroup dg = crooked::build_decorated(spec.g1, spec.g2, spec.scales);
  crooked::DomainTriple triple = crooked::solve_vertices(dg, mu, w);
  std::optional<crooked::QuadDomain> qd;
  if (quad) qd = crooked::quad_domain(dg, triple, mu);
  json doc = crooked::io::domain_doc(spec, mu, w, triple, qd ? &*qd : nullptr);
  emit(doc, g.out.empty() ? "domain.json" : g.out);
  return 0;
}

int cmd_sp4(const GlobalOpts& g, const std::string& mu_arg, bool latex) {
  crooked::MuTriple mu = parse_mu(mu_arg);
  for (const Rat& m : mu)
    if (boost::multiprecision::denominator(m) != 1 || m <= 0)
      crooked::fail(Errc::NonPositiveInteger, "generator construction requires three positive integers");
  crooked::Int m1 = boost::multiprecision::numerator(mu[0]);
  crooked::Int m2 = boost::multiprecision::numerator(mu[1]);
  crooked::Int m3 = boost::multiprecision::numerator(mu[2]);
  crooked::TheoremBReport rep = crooked::verify_theorem_b(m1, m2, m3, static_cast<unsigned>(g.seed));
  json doc = crooked::io::theorem_b_doc(rep, m1, m2, m3);
  if (latex) {
    doc["latex"] = json::array({crooked::io::latex_matrix(rep.gamma1), crooked::io::latex_matrix(rep.gamma2)});
  }
  emit(doc, g.out);
  return rep.all_ok() ? 0 : kExitVerification;
}

int cmd_mesh(const GlobalOpts& g, const std::string& domain_path, double radius, int segments,
             const std::string& out_dir) {
  crooked::io::LoadedDomain d = crooked::io::domain_from(load_json_arg(domain_path));
  std::filesystem::create_directories(out_dir);
  auto to_d = [](const crooked::Vec3<Rat>& v) {
    return crooked::Vec3<double>{v.x.convert_to<double>(), v.y.convert_to<double>(), v.z.convert_to<double>()};
  };
  std::vector<crooked::PlaneMesh> all;
  for (int i = 0; i < 3; ++i) {
    crooked::CrookedPlane<double> c = crooked::crooked_plane(to_d(d.triple.lam[i]), to_d(d.triple.vertex[i]));
    crooked::PlaneMesh m = crooked::mesh_crooked_plane(c, "plane_" + std::to_string(i), radius, segments);
    if (m.polys.empty()) std::cerr << "warning: plane_" << i << " does not meet the radius-" << radius << " ball\n";
    std::ofstream out(std::filesystem::path(out_dir) / ("plane_" + std::to_string(i) + ".obj"));
    crooked::write_obj(out, {m});
    all.push_back(std::move(m));
  }
  if (d.has_quad) {
    for (int i = 0; i < 4; ++i) {
      crooked::CrookedPlane<double> c = crooked::crooked_plane(to_d(d.walls[i].v), to_d(d.walls[i].p));
      crooked::PlaneMesh m = crooked::mesh_crooked_plane(c, "wall_" + std::to_string(i), radius, segments);
      std::ofstream out(std::filesystem::path(out_dir) / ("wall_" + std::to_string(i) + ".obj"));
      crooked::write_obj(out, {m});
      all.push_back(std::move(m));
    }
  }
  std::ofstream scene(std::filesystem::path(out_dir) / "scene.obj");
  crooked::write_obj(scene, all);
  return 0;
}

int cmd_tile(const GlobalOpts& g, const std::string& domain_path, int depth, int samples) {
  crooked::io::LoadedDomain d = crooked::io::domain_from(load_json_arg(domain_path));
  if (!d.has_quad) crooked::fail(Errc::BadInput, "tile audit needs a domain document with a quad section");
  crooked::DecoratedGroup dg = crooked::build_decorated(d.spec.g1, d.spec.g2, d.spec.scales);
  crooked::AffineIso<Rat> gamma1{dg.lin[0], d.triple.coc.u1};
  crooked::AffineIso<Rat> gamma2{dg.lin[1], d.gamma2_trans};
  crooked::TileReport rep = crooked::tile_audit(gamma1, gamma2, d.walls, depth, samples, g.seed, g.jobs);
  json doc{{"schema", crooked::io::kSchemaVersion},
           {"depth", depth},
           {"words", rep.words},
           {"wall_pairs", rep.wall_pairs},
           {"shared_walls", rep.shared_walls},
           {"intersections", rep.intersections},
           {"point_samples", rep.point_samples},
           {"multi_cover_points", rep.multi_cover_points},
           {"notes", rep.notes}};
  if (rep.first_violation) {
    doc["first_violation"] = json{{"word_a", rep.first_violation->word_a},
                                  {"word_b", rep.first_violation->word_b},
                                  {"wall_a", rep.first_violation->wall_a},
                                  {"wall_b", rep.first_violation->wall_b},
                                  {"witness", crooked::io::vec_json(rep.first_violation->witness)}};
  }
  emit(doc, g.out);
  return rep.ok() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crooked: proper affine deformations of the three-holed sphere"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--mode", g.mode, "scalar mode: exact|float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--eps", g.eps, "sign tolerance in float mode");
  app.add_option("--seed", g.seed, "seed for randomized audits");
  app.add_option("--jobs", g.jobs, "parallel workers for batch audits");
  app.add_option("--out", g.out, "output file (default stdout)");

  std::string element, trans, plane_a, plane_b, group_path, mu_arg, split, domain_path;
  bool quad = false, latex = false;
  double radius = 10.0;
  int segments = 64, depth = 3, samples = 200;
  std::string mesh_dir = "mesh";

  CLI::App* classify = app.add_subcommand("classify", "classify an isometry and report its positive neutral vector");
  classify->add_option("element", element, "group element JSON or path")->required();

  CLI::App* marg = app.add_subcommand("margulis", "Margulis invariant of an affine isometry");
  marg->add_option("element", element, "group element JSON or path")->required();
  marg->add_option("trans", trans, "translational part as [x,y,z]")->required();

  CLI::App* chk = app.add_subcommand("check-disjoint", "closed-form and oracle disjointness of two crooked planes");
  chk->add_option("a", plane_a, "first plane JSON or path")->required();
  chk->add_option("b", plane_b, "second plane JSON or path")->required();

  CLI::App* dom = app.add_subcommand("domain", "build and certify a crooked domain for a positive triple");
  dom->add_option("--group", group_path, "group spec JSON or path")->required();
  dom->add_option("--mu", mu_arg, "target invariants a,b,c")->required();
  dom->add_option("--split", split, "convex split p1,p2,p3 (q_i = 1 - p_i)");
  dom->add_flag("--quad", quad, "also build the four-wall domain");

  CLI::App* sp4 = app.add_subcommand("sp4", "integer symplectic generators for a positive integer triple");
  sp4->add_option("--mu", mu_arg, "positive integers a,b,c")->required();
  sp4->add_flag("--latex", latex, "include LaTeX renderings");

  CLI::App* mesh = app.add_subcommand("mesh", "export OBJ meshes of the domain walls");
  mesh->add_option("--domain", domain_path, "domain document path")->required();
  mesh->add_option("--radius", radius, "clipping ball radius");
  mesh->add_option("--segments", segments, "boundary segments per piece");
  mesh->add_option("--out-dir", mesh_dir, "output directory");

  CLI::App* tile = app.add_subcommand("tile", "audit translates of the domain walls at finite depth");
  tile->add_option("--domain", domain_path, "domain document with quad section")->required();
  tile->add_option("--depth", depth, "maximum word length");
  tile->add_option("--samples", samples, "random point samples");

  CLI11_PARSE(app, argc, argv);
  crooked::set_float_eps(g.eps);

  try {
    if (classify->parsed()) return cmd_classify(g, element);
    if (marg->parsed()) return cmd_margulis(g, element, trans);
    if (chk->parsed()) return cmd_check_disjoint(g, plane_a, plane_b);
    if (dom->parsed()) return cmd_domain(g, group_path, mu_arg, split, quad);
    if (sp4->parsed()) return cmd_sp4(g, mu_arg, latex);
    if (mesh->parsed()) return cmd_mesh(g, domain_path, radius, segments, mesh_dir);
    if (tile->parsed()) return cmd_tile(g, domain_path, depth, samples);
  } catch (const Error& e) {
    json err{{"schema", crooked::io::kSchemaVersion}, {"error", e.what()}};
    emit(err, g.out);
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
