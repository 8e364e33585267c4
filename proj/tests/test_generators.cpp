#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "unitacq/unitacq.hpp"

using namespace unitacq;

TEST_CASE("named families") {
  CHECK(make_path(4).size() == 3);
  CHECK(make_cycle(6).size() == 6);
  CHECK(make_complete(5).size() == 10);
  CHECK(make_star(3).degree(0) == 3);
  auto pet = make_petersen();
  CHECK(pet.order() == 10);
  CHECK(pet.size() == 15);
  CHECK(pet.min_degree() == 3);
  CHECK(pet.max_degree() == 3);
  auto hs = make_hoffman_singleton();
  CHECK(hs.order() == 50);
  CHECK(hs.min_degree() == 7);
  CHECK(hs.max_degree() == 7);
  CHECK(make_Hk(4).order() == 8);
  CHECK_THROWS_AS(make_cycle(2), PreconditionError);
  CHECK_THROWS_AS(make_Hk(1), PreconditionError);
}

TEST_CASE("seven-vertex graph with one triangle") {
  auto g = make_triangle_tail();
  CHECK(g.order() == 7);
  CHECK(g.size() == 7);
  CHECK(cycles_of_length(g, 3).size() == 1);
  CHECK(is_connected(g));
  CHECK(unit_acquisition_number(g).value == 1);
  for (auto e : g.edges()) {
    auto h = g.without_edge(e.u, e.v);
    INFO("without " << e.u << "-" << e.v);
    if (is_connected(h)) {
      CHECK(unit_acquisition_number(h).value == 2);
    } else {
      // A bridge: both sides are nonempty, so at least two vertices remain.
      auto side = bfs_distances(h, e.u);
      std::vector<Vertex> a, b;
      for (Vertex v = 0; v < h.order(); ++v) (side[v] >= 0 ? a : b).push_back(v);
      auto total = unit_acquisition_number(induced_subgraph(h, a)).value +
                   unit_acquisition_number(induced_subgraph(h, b)).value;
      CHECK(total == 2);
    }
  }
}

TEST_CASE("ten-vertex caterpillar") {
  auto g = make_caterpillar10();
  CHECK(g.order() == 10);
  CHECK(g.max_degree() == 3);
  CHECK(is_tree(g));
  CHECK(unit_acquisition_number(g).value == 1);
}

TEST_CASE("chained double stars") {
  auto g45 = make_Gmk(4, 5);
  CHECK(g45.graph.order() == 34);
  CHECK(g45.graph.max_degree() == 5);
  CHECK(min_maximal_matching(g45.graph).size == 4);
  CHECK(g45.cut_pairs.size() == 3);
  for (auto [x, y] : g45.cut_pairs) {
    CHECK(g45.graph.degree(x) == 2);
    CHECK(g45.graph.degree(y) == 2);
  }
  CHECK(g45.warnings.empty());
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t k : {4, 5}) {
      auto gm = make_Gmk(m, k);
      CHECK(gm.graph.order() == 2 * k * m - 2 * (m - 1));
      CHECK(cut_lower_bound(gm.graph).value == m);
    }
  }
  CHECK_FALSE(make_Gmk(2, 3).warnings.empty());
  CHECK_THROWS_AS(make_Gmk(0, 4), PreconditionError);
}

TEST_CASE("diameter-4 extremal tree") {
  auto t = make_diameter4_tree(10);
  CHECK(t.order() == 10);
  CHECK(t.degree(0) == 3);
  for (auto c : t.neighbors(0)) CHECK(t.degree(c) == 3);
  CHECK(diameter(t) == 4u);
  CHECK_THROWS_AS(make_diameter4_tree(11), PreconditionError);
}

TEST_CASE("level-by-level trees") {
  auto t2 = make_Td(2, 5);
  CHECK(t2.graph.order() == 6);
  CHECK(t2.active_counts == std::vector<long long>{1, 4});
  auto t3 = make_Td(3, 5);
  CHECK(t3.graph.order() == 22);
  CHECK(t3.active_counts.back() == 11);
  CHECK(make_Td(4, 5).active_counts.back() == 28);
  for (std::size_t d = 1; d <= 8; ++d) {
    auto td = make_Td(d, 5);
    INFO("d = " << d);
    CHECK(is_tree(td.graph));
    auto fin = replay(td.graph, td.protocol);
    CHECK(support(fin) == 1);
    CHECK(td.active_counts == td_active_recurrence(d, 5));
    if (d >= 2) CHECK(td_closed_form(d) == td.active_counts.back());
  }
  CHECK(td_printed_closed_form(2) != td_active_recurrence(2, 5)[1]);

  auto t4 = make_Td(5, 4);
  CHECK(t4.active_counts == std::vector<long long>{1, 3, 5, 6, 3});
  CHECK(t4.graph.order() == 47);
  CHECK(t4.order_with_next_level == 56);
  CHECK(td_active_recurrence(6, 4).back() == -9);
  CHECK_THROWS_WITH(make_Td(6, 4), Catch::Matchers::ContainsSubstring("a_6 = -9"));
  CHECK_THROWS_AS(make_Td(0, 5), PreconditionError);
  CHECK_THROWS_AS(make_Td(3, 3), PreconditionError);
}

TEST_CASE("branching-4 counts satisfy the three-term form") {
  auto a = td_active_recurrence(5, 4);
  for (std::size_t t = 3; t < a.size(); ++t) CHECK(a[t] == 3 * (a[t - 1] - a[t - 2]));
}

TEST_CASE("random graphs are reproducible") {
  CHECK(random_gnp(8, 0.5, 1) == random_gnp(8, 0.5, 1));
  CHECK(random_gnp(2, 1.0, 3) == make_path(2));
  std::mt19937_64 a(4), b(4);
  CHECK(random_diameter2(9, 0.4, a) == random_diameter2(9, 0.4, b));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    CHECK(diameter(random_diameter2(5 + rng() % 8, 0.4, rng)) == 2u);
    auto t = random_tree(1 + rng() % 20, rng);
    CHECK(is_tree(t));
    auto tf = random_maximal_triangle_free(3 + rng() % 10, rng);
    CHECK(cycles_of_length(tf, 3).empty());
  }
  std::mt19937_64 r0(1);
  CHECK_THROWS_AS(random_diameter2(6, 0.0, r0, 10), PreconditionError);
}
