#include "steklov/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace steklov {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_vertex: return "DuplicateVertex";
    case errc::unknown_endpoint: return "UnknownEndpoint";
    case errc::non_positive_weight: return "NonPositiveWeight";
    case errc::loop_edge: return "LoopEdge";
    case errc::not_a_subgraph: return "NotASubgraph";
    case errc::not_a_comb: return "NotAComb";
    case errc::disconnected_graph: return "DisconnectedGraph";
    case errc::singular_interior: return "SingularInterior";
    case errc::not_boundary_vertex: return "NotBoundaryVertex";
    case errc::wedge_point_on_boundary: return "WedgePointOnBoundary";
    case errc::bad_parameter: return "BadParameter";
    case errc::tolerance_ambiguity: return "ToleranceAmbiguity";
    case errc::bad_wedge_point: return "BadWedgePoint";
    case errc::bad_certificate: return "BadCertificate";
    case errc::root_finding_failure: return "RootFindingFailure";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

Graph::Graph(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges) {
  ids_.reserve(vertices.size());
  for (const auto& vs : vertices) {
    if (index_.count(vs.id)) {
      throw error(errc::duplicate_vertex, "duplicate vertex id '" + vs.id + "'");
    }
    if (!(vs.measure > 0.0)) {
      throw error(errc::non_positive_weight,
                  "vertex '" + vs.id + "' has non-positive measure");
    }
    index_[vs.id] = static_cast<int>(ids_.size());
    ids_.push_back(vs.id);
    measure_.push_back(vs.measure);
    boundary_.push_back(vs.boundary ? 1 : 0);
  }
  adj_.resize(ids_.size());
  for (const auto& es : edges) {
    auto iu = index_.find(es.u);
    auto iv = index_.find(es.v);
    if (iu == index_.end() || iv == index_.end()) {
      throw error(errc::unknown_endpoint,
                  "edge {" + es.u + "," + es.v + "} references an unknown vertex");
    }
    int u = iu->second, v = iv->second;
    if (u == v) {
      throw error(errc::loop_edge, "loop edge at '" + es.u + "'");
    }
    if (!(es.weight > 0.0)) {
      throw error(errc::non_positive_weight,
                  "edge {" + es.u + "," + es.v + "} has non-positive weight");
    }
    auto key = std::minmax(u, v);
    if (!edge_set_.insert(key).second) {
      throw error(errc::duplicate_vertex,
                  "duplicate edge {" + es.u + "," + es.v + "}");
    }
    int e = static_cast<int>(edges_.size());
    edges_.push_back({u, v, es.weight});
    adj_[u].emplace_back(v, e);
    adj_[v].emplace_back(u, e);
  }
}

int Graph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw error(errc::unknown_endpoint, "unknown vertex id '" + id + "'");
  }
  return it->second;
}

std::optional<int> Graph::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Graph::boundary_indices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (boundary_[v]) out.push_back(v);
  return out;
}

std::vector<int> Graph::interior_indices() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (!boundary_[v]) out.push_back(v);
  return out;
}

int Graph::boundary_size() const {
  return static_cast<int>(std::count(boundary_.begin(), boundary_.end(), 1));
}

double Graph::boundary_measure() const {
  double m = 0.0;
  for (int v = 0; v < vertex_count(); ++v)
    if (boundary_[v]) m += measure_[v];
  return m;
}

bool Graph::has_edge(int u, int v) const {
  return edge_set_.count(std::minmax(u, v)) != 0;
}

double Graph::edge_weight(int u, int v) const {
  for (auto [nbr, e] : adj_[u])
    if (nbr == v) return edges_[e].weight;
  return 0.0;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return false;
  std::vector<char> seen(vertex_count(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int visited = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [nbr, e] : adj_[v]) {
      if (!seen[nbr]) {
        seen[nbr] = 1;
        ++visited;
        queue.push_back(nbr);
      }
    }
  }
  return visited == vertex_count();
}

bool Graph::is_unit_weight() const {
  for (double m : measure_)
    if (m != 1.0) return false;
  for (const auto& e : edges_)
    if (e.weight != 1.0) return false;
  return true;
}

bool Graph::is_tree() const {
  return is_connected() && edge_count() == vertex_count() - 1;
}

VertexSpec Graph::vertex_spec(int v) const {
  return {ids_[v], measure_[v], boundary_[v] != 0};
}

std::vector<VertexSpec> Graph::vertex_specs() const {
  std::vector<VertexSpec> out;
  out.reserve(ids_.size());
  for (int v = 0; v < vertex_count(); ++v) out.push_back(vertex_spec(v));
  return out;
}

std::vector<EdgeSpec> Graph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({ids_[e.u], ids_[e.v], e.weight});
  return out;
}

Graph build_graph(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges) {
  return Graph(vertices, edges);
}

Graph with_combinatorial_boundary(const Graph& g) {
  auto vs = g.vertex_specs();
  for (int v = 0; v < g.vertex_count(); ++v) vs[v].boundary = g.degree(v) <= 1;
  return Graph(vs, g.edge_specs());
}

Graph with_boundary(const Graph& g, const std::vector<std::string>& boundary_ids) {
  auto vs = g.vertex_specs();
  for (auto& s : vs) s.boundary = false;
  for (const auto& id : boundary_ids) vs[g.index_of(id)].boundary = true;
  return Graph(vs, g.edge_specs());
}

std::vector<int> combinatorial_boundary(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) <= 1) out.push_back(v);
  return out;
}

std::vector<int> leaves(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<int> hop_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [nbr, e] : g.adjacency(v)) {
      if (dist[nbr] < 0) {
        dist[nbr] = dist[v] + 1;
        queue.push_back(nbr);
      }
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  if (!g.is_connected()) {
    throw error(errc::disconnected_graph, "diameter of a disconnected graph");
  }
  int diam = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = hop_distances(g, v);
    diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
  }
  return diam;
}

double ToothDecomposition::tooth_boundary_measure(int base_vertex) const {
  double m = 0.0;
  for (int v : tooth_boundaries[base_vertex]) m += ambient->measure(v);
  return m;
}

bool is_subgraph(const Graph& ambient, const Graph& base) {
  for (const auto& id : base.ids())
    if (!ambient.find(id)) return false;
  for (const auto& e : base.edges()) {
    auto u = ambient.find(base.id(e.u));
    auto v = ambient.find(base.id(e.v));
    if (!u || !v || !ambient.has_edge(*u, *v)) return false;
    if (ambient.edge_weight(*u, *v) != e.weight) return false;
  }
  return true;
}

ToothDecomposition comb_decompose(const Graph& ambient, const Graph& base) {
  if (!is_subgraph(ambient, base)) {
    throw error(errc::not_a_subgraph, "base is not a subgraph of the ambient graph");
  }
  if (!base.is_connected() || !ambient.is_connected()) {
    throw error(errc::disconnected_graph, "comb decomposition requires connected graphs");
  }
  // Base edges referenced by ambient edge index.
  std::vector<char> is_base_edge(ambient.edge_count(), 0);
  for (const auto& e : base.edges()) {
    int u = ambient.index_of(base.id(e.u));
    int v = ambient.index_of(base.id(e.v));
    for (auto [nbr, idx] : ambient.adjacency(u))
      if (nbr == v) is_base_edge[idx] = 1;
  }
  // Connected components of the ambient graph minus the base's edges.
  std::vector<int> comp(ambient.vertex_count(), -1);
  int ncomp = 0;
  for (int s = 0; s < ambient.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [nbr, idx] : ambient.adjacency(v)) {
        if (!is_base_edge[idx] && comp[nbr] < 0) {
          comp[nbr] = ncomp;
          queue.push_back(nbr);
        }
      }
    }
    ++ncomp;
  }
  if (ncomp != base.vertex_count()) {
    throw error(errc::not_a_comb,
                "deleting the base edges leaves " + std::to_string(ncomp) +
                    " components, expected " + std::to_string(base.vertex_count()));
  }
  // Each component must contain exactly one base vertex.
  std::vector<int> base_vertex_of_comp(ncomp, -1);
  for (int b = 0; b < base.vertex_count(); ++b) {
    int av = ambient.index_of(base.id(b));
    int c = comp[av];
    if (base_vertex_of_comp[c] >= 0) {
      throw error(errc::not_a_comb, "a component contains two base vertices ('" +
                                        base.id(base_vertex_of_comp[c]) + "', '" +
                                        base.id(b) + "')");
    }
    base_vertex_of_comp[c] = b;
  }
  ToothDecomposition decomp;
  decomp.base = &base;
  decomp.ambient = &ambient;
  decomp.teeth.resize(base.vertex_count());
  decomp.tooth_boundaries.resize(base.vertex_count());
  decomp.tooth_of.resize(ambient.vertex_count());
  for (int v = 0; v < ambient.vertex_count(); ++v) {
    int b = base_vertex_of_comp[comp[v]];
    decomp.tooth_of[v] = b;
    decomp.teeth[b].push_back(v);
    if (ambient.is_boundary(v)) decomp.tooth_boundaries[b].push_back(v);
  }
  return decomp;
}

bool is_homotopy_faithful(const Graph& ambient, const Graph& base) {
  comb_decompose(ambient, base);  // throws when not a comb
  // Every non-base ambient edge lies inside a tooth, so all teeth are trees
  // iff the ambient graph adds exactly one edge per extra vertex.
  return ambient.edge_count() - base.edge_count() ==
         ambient.vertex_count() - base.vertex_count();
}

VertexFunction constant_extension(const ToothDecomposition& decomp, const VertexFunction& f) {
  VertexFunction out(decomp.ambient->vertex_count());
  for (int v = 0; v < decomp.ambient->vertex_count(); ++v) out[v] = f[decomp.tooth_of[v]];
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       const std::vector<std::string>& boundary_ids) {
  std::set<int> keep(vertices.begin(), vertices.end());
  std::set<std::string> bnd(boundary_ids.begin(), boundary_ids.end());
  std::vector<VertexSpec> vs;
  for (int v : vertices) {
    vs.push_back({g.id(v), g.measure(v), bnd.count(g.id(v)) != 0});
  }
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edges()) {
    if (keep.count(e.u) && keep.count(e.v)) {
      es.push_back({g.id(e.u), g.id(e.v), e.weight});
    }
  }
  return Graph(vs, es);
}

Graph tooth_subgraph(const ToothDecomposition& decomp, int base_vertex) {
  std::vector<std::string> bnd;
  for (int v : decomp.tooth_boundaries[base_vertex]) bnd.push_back(decomp.ambient->id(v));
  return induced_subgraph(*decomp.ambient, decomp.teeth[base_vertex], bnd);
}

namespace {

void append_copy(const Graph& g, const std::string& prefix, const std::string& z,
                 const std::string& glued_id, MeasurePolicy policy, double& glued_measure,
                 std::vector<VertexSpec>& vs, std::vector<EdgeSpec>& es,
                 std::unordered_map<std::string, std::string>& map) {
  int zi = g.index_of(z);
  if (g.is_boundary(zi)) {
    throw error(errc::wedge_point_on_boundary, "wedge point '" + z + "' is a boundary vertex");
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v == zi) {
      map[g.id(v)] = glued_id;
      if (policy == MeasurePolicy::additive) glued_measure += g.measure(v);
      continue;
    }
    std::string nid = prefix + g.id(v);
    map[g.id(v)] = nid;
    vs.push_back({nid, g.measure(v), g.is_boundary(v)});
  }
  for (const auto& e : g.edges()) {
    es.push_back({map[g.id(e.u)], map[g.id(e.v)], e.weight});
  }
}

}  // namespace

WedgeResult wedge_sum(const Graph& g1, const std::string& z1, const Graph& g2,
                      const std::string& z2, MeasurePolicy policy) {
  if (policy == MeasurePolicy::unit && (!g1.is_unit_weight() || !g2.is_unit_weight())) {
    throw error(errc::bad_parameter, "unit measure policy requires unit-weight operands");
  }
  WedgeResult out;
  out.glued_id = "1:" + z1;
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  double glued_measure = policy == MeasurePolicy::unit ? 1.0 : 0.0;
  vs.push_back({out.glued_id, 1.0, false});
  append_copy(g1, "1:", z1, out.glued_id, policy, glued_measure, vs, es, out.map1);
  append_copy(g2, "2:", z2, out.glued_id, policy, glued_measure, vs, es, out.map2);
  vs[0].measure = glued_measure;
  out.graph = Graph(vs, es);
  return out;
}

WedgeResult wedge_power(const Graph& g, const std::string& z, int r, MeasurePolicy policy) {
  if (r < 1) throw error(errc::bad_parameter, "wedge power requires r >= 1");
  if (policy == MeasurePolicy::unit && !g.is_unit_weight()) {
    throw error(errc::bad_parameter, "unit measure policy requires unit-weight operands");
  }
  WedgeResult out;
  out.glued_id = "1:" + z;
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  double glued_measure = policy == MeasurePolicy::unit ? 1.0 : 0.0;
  vs.push_back({out.glued_id, 1.0, false});
  for (int copy = 1; copy <= r; ++copy) {
    std::string prefix = std::to_string(copy) + ":";
    std::unordered_map<std::string, std::string> map;
    append_copy(g, prefix, z, out.glued_id, policy, glued_measure, vs, es, map);
    if (copy == 1) out.map1 = std::move(map);
    if (copy == 2) out.map2 = std::move(map);
  }
  vs[0].measure = glued_measure;
  out.graph = Graph(vs, es);
  return out;
}

}  // namespace steklov
