#include "steklov/json_io.hpp"

#include <set>

namespace steklov {

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw error(errc::parse_error, "unknown field '" + it.key() + "' in " + where);
    }
  }
}

}  // namespace

Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw error(errc::parse_error, "graph JSON must be an object");
  reject_unknown(j, {"vertices", "edges"}, "graph");
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw error(errc::parse_error, "graph JSON needs a 'vertices' array");
  }
  std::vector<VertexSpec> vs;
  for (const auto& v : j["vertices"]) {
    if (!v.is_object()) throw error(errc::parse_error, "vertex entries must be objects");
    reject_unknown(v, {"id", "measure", "boundary"}, "vertex");
    if (!v.contains("id") || !v["id"].is_string()) {
      throw error(errc::parse_error, "vertex needs a string 'id'");
    }
    VertexSpec spec;
    spec.id = v["id"].get<std::string>();
    if (v.contains("measure")) {
      if (!v["measure"].is_number()) throw error(errc::parse_error, "'measure' must be a number");
      spec.measure = v["measure"].get<double>();
    }
    if (v.contains("boundary")) {
      if (!v["boundary"].is_boolean()) throw error(errc::parse_error, "'boundary' must be a bool");
      spec.boundary = v["boundary"].get<bool>();
    }
    vs.push_back(std::move(spec));
  }
  std::vector<EdgeSpec> es;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw error(errc::parse_error, "'edges' must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_object()) throw error(errc::parse_error, "edge entries must be objects");
      reject_unknown(e, {"u", "v", "weight"}, "edge");
      if (!e.contains("u") || !e.contains("v") || !e["u"].is_string() || !e["v"].is_string()) {
        throw error(errc::parse_error, "edge needs string endpoints 'u' and 'v'");
      }
      EdgeSpec spec;
      spec.u = e["u"].get<std::string>();
      spec.v = e["v"].get<std::string>();
      if (e.contains("weight")) {
        if (!e["weight"].is_number()) throw error(errc::parse_error, "'weight' must be a number");
        spec.weight = e["weight"].get<double>();
      }
      es.push_back(std::move(spec));
    }
  }
  return Graph(vs, es);
}

Graph graph_from_json_string(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw error(errc::parse_error, "malformed JSON");
  return graph_from_json(j);
}

json graph_to_json(const Graph& g) {
  json vertices = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back({{"id", g.id(v)}, {"measure", g.measure(v)}, {"boundary", g.is_boundary(v)}});
  }
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"u", g.id(e.u)}, {"v", g.id(e.v)}, {"weight", e.weight}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

json tolerances_to_json(const Tolerances& tol) {
  return {{"eig_group_rel", tol.eig_group_rel},
          {"zero_abs", tol.zero_abs},
          {"compare_abs", tol.compare_abs}};
}

json spectrum_report(const Graph& g, const std::vector<int>& zero_set, const Tolerances& tol) {
  auto spec = zero_set.empty() ? steklov_spectrum(g) : dirichlet_steklov_spectrum(g, zero_set);
  json report;
  json sigma = json::array();
  for (int i = 0; i < spec.eigenvalues.size(); ++i) sigma.push_back(spec.eigenvalues[i]);
  report["sigma"] = sigma;
  json groups = json::array();
  for (auto [a, b] : spec.multiplicity_groups(tol.eig_group_rel)) groups.push_back({a, b});
  report["multiplicity_groups"] = groups;
  if (zero_set.empty() && g.is_connected() && g.boundary_size() >= 2) {
    json z = json::array(), z1 = json::array();
    for (int v : zero_set_Z(g, tol)) z.push_back(g.id(v));
    for (int v : zero_set_Z1(g, tol)) z1.push_back(g.id(v));
    report["Z"] = z;
    report["Z1"] = z1;
  } else {
    report["Z"] = nullptr;
    report["Z1"] = nullptr;
  }
  report["tolerances"] = tolerances_to_json(tol);
  if (g.boundary_size() <= 1) {
    report["note"] = "sigma_i = +infinity for i >= 2";
  }
  return report;
}

}  // namespace steklov
