#include <algorithm>

#include "doctest.h"
#include "sfc/graph.hpp"

using namespace sfc;

TEST_CASE("caterpillar ids and shape") {
  // spine 0,1,2 with two leaves on each end spine vertex
  LabelledGraph g = caterpillar(3, {2, 0, 2});
  CHECK(g.vertices() == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(g.edges().size() == 6);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 3);
  CHECK(g.leaf_count_at(0) == 2);
  CHECK(g.leaf_count_at(1) == 0);
  CHECK(g.leaves() == std::vector<int>{3, 4, 5, 6});
  CHECK(g.internal_vertices() == std::vector<int>{0, 1, 2});
  CHECK(g.is_tree());
  // 1 is internal but flanked by two internal vertices; 0 and 2 are corners
  CHECK(corner_vertices(g) == std::vector<int>{0, 2});
}

TEST_CASE("path corners") {
  LabelledGraph p5 = caterpillar(5, {0, 0, 0, 0, 0});
  CHECK(p5.internal_vertices() == std::vector<int>{1, 2, 3});
  CHECK(corner_vertices(p5) == std::vector<int>{1, 3});
}

TEST_CASE("two-spine caterpillar edge ids are lexicographic") {
  LabelledGraph g = caterpillar(2, {2, 1});
  // vertices: spine 0,1; leaves 2,3 on 0; leaf 4 on 1
  REQUIRE(g.edges().size() == 4);
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 1);
  CHECK(g.edges()[1].u == 0);
  CHECK(g.edges()[1].v == 2);
  CHECK(g.edges()[2].u == 0);
  CHECK(g.edges()[2].v == 3);
  CHECK(g.edges()[3].u == 1);
  CHECK(g.edges()[3].v == 4);
  for (int i = 0; i < 4; ++i) CHECK(g.edges()[i].id == i);
}

TEST_CASE("connectivity and forest predicates") {
  LabelledGraph two_edges({0, 1, 2, 3}, {{0, 1}, {2, 3}});
  CHECK(!two_edges.is_connected());
  CHECK(two_edges.is_forest());
  CHECK(!two_edges.is_tree());
  CHECK(two_edges.components().size() == 2);

  LabelledGraph tri({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(tri.is_connected());
  CHECK(!tri.is_forest());
  CHECK(tri.cyclomatic_number() == 1);
}

TEST_CASE("simple cycles") {
  LabelledGraph tri({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(tri.simple_cycles() == std::vector<std::vector<int>>{{0, 1, 2}});

  // 4-cycle with a chord: two triangles and the outer square
  LabelledGraph chord({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(chord.simple_cycles().size() == 3);

  LabelledGraph k4({0, 1, 2, 3},
                   {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(k4.cyclomatic_number() == 3);
  CHECK(k4.simple_cycles().size() == 7);  // four triangles, three squares

  LabelledGraph p3 = caterpillar(3, {0, 0, 0});
  CHECK(p3.simple_cycles().empty());
}

TEST_CASE("surgery keeps ids stable") {
  LabelledGraph g = caterpillar(3, {1, 0, 1});  // 5 vertices, 4 edges
  LabelledGraph h = g.remove_edge(1);
  CHECK(h.edges().size() == 3);
  for (const Edge& e : h.edges()) CHECK(e.id != 1);
  CHECK(h.vertices() == g.vertices());

  LabelledGraph r = g.remove_vertex(0);
  CHECK(std::find(r.vertices().begin(), r.vertices().end(), 0) ==
        r.vertices().end());
  for (const Edge& e : r.edges()) {
    CHECK(e.u != 0);
    CHECK(e.v != 0);
  }
}

TEST_CASE("rebuilding from explicit edges keeps ids") {
  LabelledGraph g = caterpillar(2, {2, 1}).remove_edge(1);
  LabelledGraph h = LabelledGraph::from_edges(g.vertices(), g.edges());
  CHECK(g == h);
  CHECK(h.edge_by_id(1) == nullptr);
  CHECK(h.edge_by_id(3) != nullptr);
}

TEST_CASE("star subgraph around a vertex") {
  LabelledGraph g = caterpillar(2, {2, 1});
  LabelledGraph st = star_graph(g, 0);
  CHECK(st.vertices() == std::vector<int>{0, 1, 2, 3});
  CHECK(st.edges().size() == 3);
  for (const Edge& e : st.edges()) CHECK(e.u == 0);
}

TEST_CASE("disjoint union with shifted ids") {
  LabelledGraph a({0, 1}, {{0, 1}});
  LabelledGraph b = shift_ids(a, 2);
  CHECK(b.vertices() == std::vector<int>{2, 3});
  LabelledGraph u = disjoint_union(a, b);
  CHECK(u.vertices().size() == 4);
  CHECK(u.edges().size() == 2);
  CHECK(u.is_forest());
  CHECK(u.components().size() == 2);
}

TEST_CASE("labels") {
  LabelledGraph g({0, 1, 2}, {{0, 1}, {1, 2}});
  CHECK(!g.has_labels());
  LabelledGraph h = g.with_labels({{0, 1}, {1, 2}, {2, 0}});
  CHECK(h.has_labels());
  CHECK(h.labels().at(1) == 2);
  CHECK(h.without_labels() == g);
  CHECK(graph_hash(g) != graph_hash(h));
  CHECK(graph_hash(g) == graph_hash(LabelledGraph({0, 1, 2}, {{0, 1}, {1, 2}})));
}

TEST_CASE("multidigraph basics") {
  MultiDigraph m({0, 1, 2}, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
  CHECK(m.dart_count() == 4);
  CHECK(m.multiplicity(0, 1) == 2);
  CHECK(m.multiplicity(1, 0) == 0);
  CHECK(m.out_degree(0) == 2);
  CHECK(m.out_degree(2) == 1);
  CHECK(m.in_degree(1) == 2);
  LabelledGraph un = m.underlying();
  CHECK(un.edges().size() == 3);
  CHECK(!m.underlying_is_forest());

  MultiDigraph r = m.remove_dart(0);
  CHECK(r.dart_count() == 3);
  CHECK(r.dart_by_id(0) == nullptr);
  CHECK(r.dart_by_id(1) != nullptr);
  CHECK(r.multiplicity(0, 1) == 1);
}

TEST_CASE("contracting a dart into its source") {
  // vertices u,v,w,x = 0,1,2,3; darts: 0: u->w, 1: w->v, 2: u->v, 3: w->x,
  // 4: v->x, 5: x->w. Contracting dart 0 removes everything aimed at w and
  // renames w to u, leaving two parallel u->v darts.
  MultiDigraph g({0, 1, 2, 3},
                 {{0, 2}, {2, 1}, {0, 1}, {2, 3}, {1, 3}, {3, 2}});
  MultiDigraph c = contract_target(g, 0);
  CHECK(c.vertices() == std::vector<int>{0, 1, 3});
  CHECK(c.dart_count() == 4);
  CHECK(c.dart_by_id(0) == nullptr);
  CHECK(c.dart_by_id(5) == nullptr);
  CHECK(c.multiplicity(0, 1) == 2);
  CHECK(c.multiplicity(0, 3) == 1);
  CHECK(c.multiplicity(1, 3) == 1);
}

TEST_CASE("contraction drops would-be loops") {
  // 0->1 and 1->0: contracting either discards the other
  MultiDigraph g({0, 1}, {{0, 1}, {1, 0}});
  MultiDigraph c = contract_target(g, 0);
  CHECK(c.vertices() == std::vector<int>{0});
  CHECK(c.dart_count() == 0);
}

TEST_CASE("multidigraph rebuild from darts") {
  MultiDigraph m({0, 1, 2}, {{0, 1}, {1, 2}});
  MultiDigraph r = m.remove_dart(0);
  MultiDigraph s = MultiDigraph::from_darts(r.vertices(), r.darts());
  CHECK(r == s);
}
