#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"
#include "unitacq/unitacq.hpp"
#include "unitacq/verify.hpp"

using namespace unitacq;

TEST_CASE("edge list parsing") {
  auto g = parse_edge_list("0 1\n1 2");
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g == make_path(3));

  auto h = parse_edge_list("# comment\n\n  2 1  \n1 0 # trailing\n");
  CHECK(h == g);

  CHECK_THROWS_AS(parse_edge_list("0 1\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 0"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("-1 2"), ParseError);

  try {
    parse_edge_list("0 1\n\n1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("order pragma and isolated vertices") {
  auto k1 = parse_edge_list("# order 1\n");
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);
  auto g = parse_edge_list("# order 5\n0 1\n");
  CHECK(g.order() == 5);
  CHECK_FALSE(is_connected(g));
  CHECK_THROWS_AS(parse_edge_list("# order 2\n0 3\n"), ParseError);
}

TEST_CASE("graph invariants") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), StructuralError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), StructuralError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), StructuralError);
  auto g = Graph(5, {{3, 1}, {0, 3}, {3, 4}, {2, 3}});
  auto nb = g.neighbors(3);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 1, 2, 4});
  CHECK(g.degree(3) == 4);
  CHECK(g.min_degree() == 1);
  CHECK(g.max_degree() == 4);
  CHECK(g.adjacent(1, 3));
  CHECK_FALSE(g.adjacent(1, 2));
}

TEST_CASE("serialization round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    auto g = random_gnp(1 + rng() % 12, 0.4, rng);
    auto text = to_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(to_edge_list(parse_edge_list(text)) == text);
  }
  CHECK(to_edge_list(make_path(3)) == "# order 3\n0 1\n1 2\n");
  CHECK(to_dot(make_path(2)) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
}

TEST_CASE("diameter and girth examples") {
  CHECK(diameter(make_petersen()) == 2u);
  CHECK(diameter(make_complete(4)) == 1u);
  CHECK(diameter(make_cycle(8)) == 4u);
  CHECK_FALSE(diameter(parse_edge_list("# order 3\n0 1\n")).has_value());
  CHECK(girth(make_petersen()) == 5u);
  CHECK(girth(make_cycle(4)) == 4u);
  CHECK_FALSE(girth(make_path(6)).has_value());
  CHECK(girth(make_hoffman_singleton()) == 5u);
  CHECK(diameter(make_hoffman_singleton()) == 2u);
}

TEST_CASE("distances agree with the Floyd-Warshall oracle") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    auto g = random_gnp(1 + rng() % 9, 0.15 + 0.7 * detail::unit_draw(rng), rng);
    auto d = oracle::distances(g);
    auto ours = all_pairs_distances(g);
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = 0; b < g.order(); ++b) {
        int expect = d[a][b] >= oracle::kInf ? kUnreachable : d[a][b];
        REQUIRE(ours[a][b] == expect);
      }
    REQUIRE(diameter(g) == oracle::diameter(g));
    REQUIRE(girth(g) == oracle::girth(g));
    REQUIRE(is_connected(g) == oracle::diameter(g).has_value());
  }
}

TEST_CASE("cycles of a given length") {
  CHECK(cycles_of_length(make_complete(4), 3).size() == 4);
  CHECK(cycles_of_length(make_complete(4), 4).size() == 3);
  CHECK(cycles_of_length(make_cycle(5), 5) == std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}});
  CHECK(cycles_of_length(make_petersen(), 5).size() == 12);
  CHECK(cycles_of_length(make_petersen(), 4).empty());
  auto f1 = cycles_of_length(make_triangle_tail(), 3);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0] == std::vector<Vertex>{1, 2, 5});
}

TEST_CASE("induced subgraphs and isomorphism") {
  auto c6 = make_cycle(6);
  std::vector<Vertex> keep{0, 1, 2, 3};
  CHECK(induced_subgraph(c6, keep) == make_path(4));
  CHECK(are_isomorphic(make_caterpillar({2, 1}), make_caterpillar({1, 2})));
  CHECK_FALSE(are_isomorphic(make_path(5), make_star(4)));
  CHECK(are_isomorphic(make_J(), Graph(6, {{5, 4}, {4, 3}, {3, 2}, {2, 1}, {3, 0}})));
}

TEST_CASE("ascending trees") {
  auto star = make_star(4);
  auto view = RootedTreeView::bfs(star, 0, std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(is_ascending_tree(star, view, WeightConfig({2, 1, 1, 1, 1})));

  auto p3 = make_path(3);
  auto pv = RootedTreeView::bfs(p3, 0, std::vector<Vertex>{0, 1, 2});
  CHECK_FALSE(is_ascending_tree(p3, pv, WeightConfig({1, 1, 1})));
  CHECK(is_ascending_tree(p3, pv, WeightConfig({3, 2, 1})));

  // Root 2 with children of weights 0,1,1,1,1 (the emptied child is left out).
  auto t2 = make_star(5);
  auto tv = RootedTreeView::bfs(t2, 0, std::vector<Vertex>{0, 2, 3, 4, 5});
  CHECK(is_ascending_tree(t2, tv, WeightConfig({2, 0, 1, 1, 1, 1})));

  std::vector<std::pair<Vertex, Vertex>> bad{{1, 2}};
  CHECK_THROWS_AS(RootedTreeView::from_parents(p3, 0, bad), StructuralError);
  auto ok = RootedTreeView::from_parents(p3, 0, std::vector<std::pair<Vertex, Vertex>>{{1, 0}, {2, 1}});
  CHECK(ok.depth[2] == 2);
  RootedTreeView broken = ok;
  broken.parent[2] = 0;
  CHECK_THROWS_AS(is_ascending_tree(p3, broken, WeightConfig({3, 2, 1})), StructuralError);
}

TEST_CASE("raising the root weight keeps a tree ascending") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    auto t = random_tree(2 + rng() % 12, rng);
    auto [view, w] = random_ascending_tree(t, rng);
    REQUIRE(is_ascending_tree(t, view, w));
    auto w2 = w;
    ++w2[view.root];
    REQUIRE(is_ascending_tree(t, view, w2));
  }
}
