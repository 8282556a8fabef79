#include <doctest.h>

#include <algorithm>

#include "tcg/graph.hpp"

using namespace tcg;

namespace {

Graph pentagon() {
  Graph g(5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  return g;
}

Graph k3_plus_i4() {
  Graph g(7);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (g.adjacent(i, j)) h.add_edge(perm[i], perm[j]);
  return h;
}

}  // namespace

TEST_CASE("basic graph accessors") {
  Graph k5 = Graph::complete(5);
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 10);
  CHECK(k5.degree(0) == 4);
  Graph i4 = Graph::edgeless(4);
  CHECK(i4.edge_count() == 0);
  Graph g(3);
  g.add_edge(0, 2);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(1, 1));
}

TEST_CASE("components") {
  Components ci4 = components(Graph::edgeless(4));
  REQUIRE(ci4.summary.size() == 4);
  for (const ComponentInfo& c : ci4.summary) {
    CHECK(c.size == 1);
    CHECK(c.is_complete);
    CHECK(c.is_edgeless);
  }

  Components c4k6 = components(Graph::union_of_cliques(4, 6));
  REQUIRE(c4k6.summary.size() == 4);
  for (const ComponentInfo& c : c4k6.summary) {
    CHECK(c.size == 6);
    CHECK(c.is_complete);
    CHECK_FALSE(c.is_edgeless);
  }

  CHECK(components(Graph(0)).summary.empty());

  Components mixed = components(k3_plus_i4());
  REQUIRE(mixed.summary.size() == 5);
  CHECK(mixed.summary.front().size == 3);
  CHECK(mixed.summary.front().is_complete);
  // labels cover every vertex and match summary sizes
  std::vector<int> counts(mixed.summary.size(), 0);
  for (int id : mixed.labels) counts[id]++;
  for (size_t i = 0; i < counts.size(); ++i) CHECK(counts[i] == mixed.summary[i].size);
}

TEST_CASE("connectivity and regularity") {
  CHECK(is_connected(Graph::complete(5)));
  CHECK_FALSE(is_connected(Graph::union_of_cliques(4, 2)));
  CHECK(is_connected(pentagon()));

  CHECK(is_regular(Graph::complete(5)) == 4);
  CHECK(is_regular(Graph::union_of_cliques(4, 2)) == 1);
  CHECK(is_regular(pentagon()) == 2);
  CHECK_FALSE(is_regular(k3_plus_i4()).has_value());
}

TEST_CASE("disjoint union of equal cliques") {
  CHECK(disjoint_union_form(Graph::union_of_cliques(4, 2)) == std::pair{4, 2});
  CHECK(disjoint_union_form(Graph::edgeless(5)) == std::pair{5, 1});
  CHECK(disjoint_union_form(Graph::complete(6)) == std::pair{1, 6});
  CHECK_FALSE(disjoint_union_form(k3_plus_i4()).has_value());
  CHECK_FALSE(disjoint_union_form(pentagon()).has_value());
}

TEST_CASE("graph isomorphism") {
  Graph p = pentagon();
  auto id = graphs_isomorphic(p, p);
  REQUIRE(id.has_value());

  // relabelled pentagon
  Graph q = relabel(p, {3, 0, 4, 1, 2});
  auto iso = graphs_isomorphic(p, q);
  REQUIRE(iso.has_value());
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(p.adjacent(i, j) == q.adjacent((*iso)[i], (*iso)[j]));

  // K3 u I4 vs K2 u I5: same vertex count, different component profile
  Graph k2i5(7);
  k2i5.add_edge(0, 1);
  CHECK_FALSE(graphs_isomorphic(k3_plus_i4(), k2i5).has_value());

  // same degree sequence, non-isomorphic: C6 vs 2K3
  Graph c6(6);
  for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  CHECK_FALSE(graphs_isomorphic(c6, Graph::union_of_cliques(2, 3)).has_value());

  // large clique unions use the closed form
  CHECK(graphs_isomorphic(Graph::union_of_cliques(8, 30), Graph::union_of_cliques(8, 30))
            .has_value());

  CHECK_FALSE(graphs_isomorphic(pentagon(), Graph::complete(4)).has_value());
  Graph big(300);
  CHECK_THROWS_AS(graphs_isomorphic(big, big), Error);
}

TEST_CASE("dot export") {
  Graph empty(0);
  std::string dot = export_dot(empty);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("}") != std::string::npos);

  Graph k2 = Graph::complete(2);
  std::string dk2 = export_dot(k2);
  CHECK(dk2.find("0 -- 1") != std::string::npos);

  // deterministic
  CHECK(export_dot(pentagon()) == export_dot(pentagon()));
}

TEST_CASE("json round trip") {
  Graph p = pentagon();
  p.labels = {"a", "b", "c", "d", "e"};
  std::string text = export_json(p);
  Graph back = graph_from_json(text);
  CHECK(back.vertex_count() == 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(back.adjacent(i, j) == p.adjacent(i, j));
  CHECK(export_json(back) == text);
}
