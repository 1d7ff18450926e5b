#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace steklov {

enum class errc {
  duplicate_vertex,
  unknown_endpoint,
  non_positive_weight,
  loop_edge,
  not_a_subgraph,
  not_a_comb,
  disconnected_graph,
  singular_interior,
  not_boundary_vertex,
  wedge_point_on_boundary,
  bad_parameter,
  tolerance_ambiguity,
  bad_wedge_point,
  bad_certificate,
  root_finding_failure,
  parse_error,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

const char* errc_name(errc code);

struct VertexSpec {
  std::string id;
  double measure = 1.0;
  bool boundary = false;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  double weight = 1.0;
};

/// Functions on vertices are plain vectors indexed in the graph's vertex
/// order; flows on edges are vectors indexed in the graph's edge order,
/// oriented from edge.u to edge.v.
using VertexFunction = Eigen::VectorXd;
using EdgeFunction = Eigen::VectorXd;

/// A finite simple weighted graph with a designated boundary vertex set.
/// Immutable after construction.
class Graph {
public:
  struct Edge {
    int u;
    int v;
    double weight;
  };

  Graph() = default;
  Graph(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges);

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int v) const { return ids_[v]; }
  int index_of(const std::string& id) const;  // throws unknown_endpoint
  std::optional<int> find(const std::string& id) const;

  double measure(int v) const { return measure_[v]; }
  bool is_boundary(int v) const { return boundary_[v] != 0; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbors of v as (neighbor index, edge index) pairs.
  const std::vector<std::pair<int, int>>& adjacency(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  std::vector<int> boundary_indices() const;
  std::vector<int> interior_indices() const;
  int boundary_size() const;
  double boundary_measure() const;

  bool has_edge(int u, int v) const;
  double edge_weight(int u, int v) const;  // 0 if not adjacent
  bool is_connected() const;
  bool is_unit_weight() const;
  bool is_tree() const;

  VertexSpec vertex_spec(int v) const;
  std::vector<VertexSpec> vertex_specs() const;
  std::vector<EdgeSpec> edge_specs() const;

private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<double> measure_;
  std::vector<char> boundary_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::set<std::pair<int, int>> edge_set_;
};

Graph build_graph(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges);

/// Copy of g with boundary recomputed as {v : deg v <= 1}.
Graph with_combinatorial_boundary(const Graph& g);
/// Copy of g with boundary replaced by the given ids.
Graph with_boundary(const Graph& g, const std::vector<std::string>& boundary_ids);

std::vector<int> combinatorial_boundary(const Graph& g);
std::vector<int> leaves(const Graph& g);

/// Max hop distance over vertex pairs; edge weights are ignored.
int diameter(const Graph& g);  // throws disconnected_graph
/// Hop distances from source; -1 for unreachable vertices.
std::vector<int> hop_distances(const Graph& g, int source);

/// Witness that `ambient` is a comb over `base`: deleting the base's edges
/// splits the ambient graph into one connected component per base vertex.
struct ToothDecomposition {
  const Graph* base = nullptr;
  const Graph* ambient = nullptr;
  std::vector<std::vector<int>> teeth;        // per base vertex: ambient indices
  std::vector<std::vector<int>> tooth_boundaries;  // ambient boundary within each tooth
  std::vector<int> tooth_of;                  // ambient index -> base index

  double tooth_boundary_measure(int base_vertex) const;
};

bool is_subgraph(const Graph& ambient, const Graph& base);
ToothDecomposition comb_decompose(const Graph& ambient, const Graph& base);
bool is_homotopy_faithful(const Graph& ambient, const Graph& base);

VertexFunction constant_extension(const ToothDecomposition& decomp, const VertexFunction& f);

/// The tooth at `base_vertex` as a standalone graph: induced vertices and
/// edges with restricted measures/weights, boundary = ambient boundary
/// within the tooth.
Graph tooth_subgraph(const ToothDecomposition& decomp, int base_vertex);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       const std::vector<std::string>& boundary_ids);

enum class MeasurePolicy {
  additive,  // glued measure = m(z1) + m(z2)
  unit,      // requires unit-weight inputs; glued measure = 1
};

struct WedgeResult {
  Graph graph;
  std::string glued_id;
  // Original id -> id in the wedge, one map per operand (the glued vertex
  // maps to glued_id in both).
  std::unordered_map<std::string, std::string> map1;
  std::unordered_map<std::string, std::string> map2;
};

WedgeResult wedge_sum(const Graph& g1, const std::string& z1, const Graph& g2,
                      const std::string& z2, MeasurePolicy policy = MeasurePolicy::additive);
WedgeResult wedge_power(const Graph& g, const std::string& z, int r,
                        MeasurePolicy policy = MeasurePolicy::additive);

}  // namespace steklov
