#include "sphrect/json_io.hpp"

#include <cmath>

namespace sphrect {

using nlohmann::json;

json to_json(const AngleQuadruple& q) {
  return json::array({q[0], q[1], q[2], q[3]});
}

AngleQuadruple angles_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("angles: expected [A0,A1,A2,A3]");
  return AngleQuadruple(j[0].get<int>(), j[1].get<int>(), j[2].get<int>(),
                        j[3].get<int>());
}

json to_json(const NetParams& p) {
  return json{{"mu", p.mu}, {"nu", p.nu},   {"kappa", p.kappa}, {"i", p.i},
              {"k", p.k},   {"l", p.l},     {"m", p.m}};
}

NetParams netparams_from_json(const json& j) {
  return NetParams{j.at("mu").get<int>(), j.at("nu").get<int>(),
                   j.at("kappa").get<int>(), j.at("i").get<int>(),
                   j.at("k").get<int>(),   j.at("l").get<int>(),
                   j.at("m").get<int>()};
}

json to_json(const CountReport& r) {
  json j{{"exists", r.exists},
         {"special", r.special},
         {"m1", r.m1},
         {"m2", r.m2},
         {"n_special", r.n_special},
         {"first_type_count", r.first_type_count},
         {"total_marked_count", r.total_marked_count}};
  if (r.kappa_max) j["kappa_max"] = *r.kappa_max;
  else j["kappa_max"] = nullptr;
  return j;
}

json to_json(const NetGraph& g) {
  json verts = json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    verts.push_back({{"id", v}, {"role", to_string(g.vertices[v].role)}});
  json edges = json::array();
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    edges.push_back({{"id", e},
                     {"v", {g.edges[e].v0, g.edges[e].v1}},
                     {"label", to_string(g.edges[e].label)}});
  json faces = json::array();
  for (std::size_t f = 0; f < g.faces.size(); ++f)
    faces.push_back(
        {{"id", f},
         {"vertices", g.faces[f].v},
         {"edges", g.faces[f].e},
         {"type", g.faces[f].type == FaceType::Theta ? "theta" : "alpha"}});
  return json{{"angles", to_json(g.angles)},
              {"params", to_json(g.params)},
              {"vertices", verts},
              {"edges", edges},
              {"faces", faces},
              {"corners", g.corner},
              {"boundary",
               {{"vertices", g.boundary_vertices}, {"edges", g.boundary_edges}}}};
}

json to_json(const UnitaryRoot& r) {
  return json{{"a", r.a},
              {"lambda", r.lambda},
              {"residual", r.residual},
              {"bracket", {r.bracket_lo, r.bracket_hi}},
              {"period01", {r.p01.real(), r.p01.imag()}},
              {"period1a", {r.p1a.real(), r.p1a.imag()}}};
}

json to_json(const FamilyPoint& p) {
  json j{{"a", p.a}, {"K", p.K}, {"residual", p.residual}};
  if (std::isnan(p.lambda)) j["lambda"] = nullptr;
  else j["lambda"] = p.lambda;
  if (p.theta) j["theta"] = *p.theta;
  else j["theta"] = nullptr;
  return j;
}

json to_json(const FamilyCurve& c) {
  json pts = json::array();
  for (const auto& p : c.points) pts.push_back(to_json(p));
  return json{{"angles", to_json(c.angles)},
              {"branch", c.branch_index},
              {"derived_mirror", c.derived_mirror},
              {"points", pts},
              {"small_a_end", c.small_a_end == EndBehavior::ModulusToZero
                                  ? "modulus_to_zero"
                                  : "modulus_to_infinity"},
              {"K_crit_estimate", c.K_crit_est},
              {"monotone_intervals", c.monotone_intervals},
              {"lost", c.lost},
              {"end_note", c.end_note}};
}

json to_json(const LimitResult& r) {
  return json{{"angles", to_json(r.angles)},
              {"net_index", r.net_index},
              {"K_crit", r.K_crit},
              {"method", r.method == LimitMethod::Extrapolation
                             ? "extrapolation"
                             : "degenerate_sc"},
              {"error_estimate", r.err}};
}

json to_json(const ScSolution& s) {
  return json{{"b", s.b},
              {"K", s.K},
              {"poles", s.poles},
              {"residual", s.residual}};
}

}  // namespace sphrect
