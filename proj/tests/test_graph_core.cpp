#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "steklov/families.hpp"
#include "steklov/graph.hpp"
#include "steklov/json_io.hpp"

using namespace steklov;

namespace {

Graph path3() { return make_path(3); }  // v0 - v1 - v2 - v3, endpoints boundary

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::parse_error;
}

}  // namespace

TEST_CASE("graph construction validates its input") {
  std::vector<VertexSpec> vs{{"a"}, {"b"}};
  CHECK(code_of([] {
          build_graph({{"a"}, {"a"}}, {});
        }) == errc::duplicate_vertex);
  CHECK(code_of([&] {
          build_graph(vs, {{"a", "c"}});
        }) == errc::unknown_endpoint);
  CHECK(code_of([&] {
          build_graph(vs, {{"a", "a"}});
        }) == errc::loop_edge);
  CHECK(code_of([&] {
          build_graph(vs, {{"a", "b"}, {"b", "a"}});
        }) == errc::duplicate_vertex);  // duplicate edge
  CHECK(code_of([&] {
          build_graph(vs, {{"a", "b", 0.0}});
        }) == errc::non_positive_weight);
  CHECK(code_of([] {
          build_graph({{"a", -1.0}}, {});
        }) == errc::non_positive_weight);
}

TEST_CASE("adjacency, measures, boundary queries") {
  Graph g = build_graph({{"a", 2.0, true}, {"b", 1.0, false}, {"c", 3.0, true}},
                        {{"a", "b", 2.0}, {"b", "c", 0.5}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.measure(g.index_of("a")) == 2.0);
  CHECK(g.is_boundary(g.index_of("c")));
  CHECK_FALSE(g.is_boundary(g.index_of("b")));
  CHECK(g.edge_weight(g.index_of("a"), g.index_of("b")) == 2.0);
  CHECK(g.edge_weight(g.index_of("a"), g.index_of("c")) == 0.0);
  CHECK(g.degree(g.index_of("b")) == 2);
  CHECK(g.boundary_measure() == 5.0);
  CHECK(g.is_connected());
  CHECK(g.is_tree());
  CHECK_FALSE(g.is_unit_weight());
}

TEST_CASE("combinatorial boundary = vertices of degree <= 1") {
  Graph star = make_regular_star(3, 2);
  auto b = combinatorial_boundary(star);
  CHECK(b.size() == 3);
  for (int v : b) CHECK(star.degree(v) == 1);
  Graph relabeled = with_boundary(star, {"o"});
  CHECK(relabeled.boundary_size() == 1);
  CHECK(relabeled.is_boundary(relabeled.index_of("o")));
  Graph back = with_combinatorial_boundary(relabeled);
  CHECK(back.boundary_size() == 3);
}

TEST_CASE("diameter and hop distances") {
  CHECK(diameter(make_path(5)) == 5);
  CHECK(diameter(make_regular_star(3, 2)) == 4);
  auto d = hop_distances(make_path(3), 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("JSON round trip with defaults and unknown-field rejection") {
  std::string text = R"({"vertices":[{"id":"x","boundary":true},{"id":"y"}],
                         "edges":[{"u":"x","v":"y"}]})";
  Graph g = graph_from_json_string(text);
  CHECK(g.measure(0) == 1.0);
  CHECK(g.edges()[0].weight == 1.0);
  CHECK(g.is_boundary(g.index_of("x")));
  CHECK_FALSE(g.is_boundary(g.index_of("y")));

  Graph again = graph_from_json(graph_to_json(g));
  CHECK(graph_to_json(again) == graph_to_json(g));

  CHECK(code_of([] {
          graph_from_json_string(R"({"vertices":[{"id":"x","color":1}],"edges":[]})");
        }) == errc::parse_error);
  CHECK(code_of([] {
          graph_from_json_string(R"({"vertices":[],"edges":[],"extra":0})");
        }) == errc::parse_error);
  CHECK(code_of([] { graph_from_json_string("not json"); }) == errc::parse_error);
}

TEST_CASE("subgraph recognition") {
  Graph ambient = make_regular_star(3, 2);
  Graph base = build_graph({{"o", 1.0, false}, {"a1.1", 1.0, true}}, {{"o", "a1.1"}});
  CHECK(is_subgraph(ambient, base));
  Graph not_sub = build_graph({{"o"}, {"zz"}}, {{"o", "zz"}});
  CHECK_FALSE(is_subgraph(ambient, not_sub));
  Graph wrong_weight = build_graph({{"o"}, {"a1.1"}}, {{"o", "a1.1", 2.0}});
  CHECK_FALSE(is_subgraph(ambient, wrong_weight));
}

TEST_CASE("comb decomposition of a regular comb") {
  Graph ambient = make_regular_comb(2, 2);  // base b0-b1-b2, teeth length 2
  Graph base = build_graph({{"b0", 1.0, true}, {"b1", 1.0, true}, {"b2", 1.0, true}},
                           {{"b0", "b1"}, {"b1", "b2"}});
  auto decomp = comb_decompose(ambient, base);
  CHECK(decomp.teeth.size() == 3);
  for (int x = 0; x < 3; ++x) {
    CHECK(decomp.teeth[x].size() == 3);  // base vertex + 2 tooth vertices
    CHECK(decomp.tooth_boundaries[x].size() == 1);
    CHECK(decomp.tooth_boundary_measure(x) == 1.0);
  }
  for (int v = 0; v < ambient.vertex_count(); ++v) {
    int x = decomp.tooth_of[v];
    CHECK(x >= 0);
    CHECK(x < 3);
  }

  // A cycle through two base vertices is not a comb: deleting base edges
  // leaves the two base vertices connected.
  Graph cyc = build_graph({{"b0"}, {"b1"}, {"c", 1.0, true}},
                          {{"b0", "b1"}, {"b0", "c"}, {"b1", "c"}});
  Graph base2 = build_graph({{"b0", 1.0, true}, {"b1", 1.0, true}}, {{"b0", "b1"}});
  CHECK(code_of([&] { comb_decompose(cyc, base2); }) == errc::not_a_comb);
}

TEST_CASE("homotopy faithfulness via the Euler count") {
  Graph base = build_graph({{"b0", 1.0, true}, {"b1", 1.0, true}}, {{"b0", "b1"}});
  Graph tree_teeth = build_graph({{"b0"}, {"b1"}, {"t", 1.0, true}},
                                 {{"b0", "b1"}, {"b0", "t"}});
  CHECK(is_homotopy_faithful(tree_teeth, base));

  // A cycle inside one tooth adds an edge without adding a vertex.
  Graph cyclic_tooth = build_graph(
      {{"b0"}, {"b1"}, {"t1"}, {"t2"}, {"u", 1.0, true}},
      {{"b0", "b1"}, {"b0", "t1"}, {"b0", "t2"}, {"t1", "t2"}, {"b1", "u"}});
  CHECK_FALSE(is_homotopy_faithful(cyclic_tooth, base));
}

TEST_CASE("constant extension lifts base functions tooth-wise") {
  Graph ambient = make_regular_comb(2, 1);
  Graph base = build_graph({{"b0", 1.0, true}, {"b1", 1.0, true}, {"b2", 1.0, true}},
                           {{"b0", "b1"}, {"b1", "b2"}});
  auto decomp = comb_decompose(ambient, base);
  VertexFunction f(3);
  f << 5.0, -1.0, 2.0;
  auto lifted = constant_extension(decomp, f);
  for (int v = 0; v < ambient.vertex_count(); ++v) {
    CHECK(lifted[v] == f[decomp.tooth_of[v]]);
  }
  CHECK(lifted[ambient.index_of("t1.1")] == -1.0);
}

TEST_CASE("tooth subgraphs keep ambient data") {
  Graph ambient = make_regular_comb(1, 2);
  Graph base = build_graph({{"b0", 1.0, true}, {"b1", 1.0, true}}, {{"b0", "b1"}});
  auto decomp = comb_decompose(ambient, base);
  Graph tooth = tooth_subgraph(decomp, base.index_of("b1"));
  CHECK(tooth.vertex_count() == 3);
  CHECK(tooth.edge_count() == 2);
  CHECK(tooth.boundary_size() == 1);
  CHECK(tooth.is_boundary(tooth.index_of("t1.2")));
}

TEST_CASE("wedge sum glues at interior vertices") {
  Graph p = with_boundary(make_path(2), {"v0", "v2"});  // v1 interior
  auto w = wedge_sum(p, "v1", p, "v1");
  CHECK(w.graph.vertex_count() == 5);
  CHECK(w.graph.edge_count() == 4);
  CHECK(w.graph.boundary_size() == 4);
  int z = w.graph.index_of(w.glued_id);
  CHECK_FALSE(w.graph.is_boundary(z));
  CHECK(w.graph.measure(z) == 2.0);  // additive policy
  CHECK(w.map1.at("v1") == w.glued_id);
  CHECK(w.map2.at("v1") == w.glued_id);
  CHECK(w.map1.at("v0") != w.map2.at("v0"));

  auto wu = wedge_sum(p, "v1", p, "v1", MeasurePolicy::unit);
  CHECK(wu.graph.measure(wu.graph.index_of(wu.glued_id)) == 1.0);

  CHECK(code_of([&] { wedge_sum(p, "v0", p, "v1"); }) == errc::wedge_point_on_boundary);
}

TEST_CASE("wedge power repeats the gluing") {
  Graph p = with_boundary(make_path(2), {"v0", "v2"});
  auto w = wedge_power(p, "v1", 3);
  CHECK(w.graph.vertex_count() == 3 * 2 + 1);
  CHECK(w.graph.edge_count() == 6);
  CHECK(w.graph.measure(w.graph.index_of(w.glued_id)) == 3.0);
  auto w1 = wedge_power(p, "v1", 1);
  CHECK(w1.graph.vertex_count() == 3);
}

TEST_CASE("induced subgraph restricts vertices, edges, boundary") {
  Graph g = path3();
  Graph sub = induced_subgraph(g, {0, 1, 2}, {"v0", "v2"});
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 2);
  CHECK(sub.boundary_size() == 2);
  CHECK_FALSE(sub.find("v3").has_value());
}
