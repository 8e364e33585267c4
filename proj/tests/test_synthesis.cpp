#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "unitacq/unitacq.hpp"
#include "unitacq/verify.hpp"

using namespace unitacq;

namespace {

void check_outcome(const Graph& g, const SynthesisOutcome& o) {
  INFO(o.method << " on " << to_edge_list(g));
  auto fin = replay(g, o.protocol);
  REQUIRE(support(fin) == o.final_support);
  REQUIRE(fin.total() == g.order());
}

}  // namespace

TEST_CASE("special diameter-2 graphs") {
  auto c5 = make_cycle(5);
  auto o = diam2_protocol(c5);
  check_outcome(c5, o);
  CHECK(o.method == "special-C5");
  CHECK(o.final_support == 2);

  auto pet = make_petersen();
  auto p = diam2_protocol(pet);
  check_outcome(pet, p);
  CHECK(p.method == "special-petersen");
  CHECK(p.final_support == 2);

  auto star = make_star(6);
  auto s = diam2_protocol(star);
  check_outcome(star, s);
  CHECK(s.method == "star");
  CHECK(s.final_support == 1);

  auto hs = make_hoffman_singleton();
  auto h = diam2_protocol(hs);
  check_outcome(hs, h);
  CHECK(h.method == "diam2-girth5");
  CHECK(h.final_support == 1);

  CHECK_THROWS_AS(diam2_protocol(make_path(4)), PreconditionError);
  CHECK_THROWS_AS(diam2_protocol(make_complete(4)), PreconditionError);
}

TEST_CASE("each girth branch is exercised") {
  std::mt19937_64 rng(41);
  std::set<std::string> methods;
  for (int i = 0; i < 600; ++i) {
    Graph g = i % 2 ? random_maximal_triangle_free(5 + rng() % 10, rng)
                    : random_diameter2(4 + rng() % 12, 0.3 + 0.4 * detail::unit_draw(rng), rng);
    if (diameter(g) != 2u || is_c5(g) || is_petersen(g)) continue;
    auto o = diam2_protocol(g);
    check_outcome(g, o);
    REQUIRE(o.final_support == 1);
    methods.insert(o.method);
  }
  CHECK(methods.count("diam2-girth3") == 1);
  CHECK(methods.count("diam2-girth4") == 1);
}

TEST_CASE("diameter-2 protocols match exhaustive search") {
  SuiteOptions o;
  o.seed = 5;
  o.count = 300;
  auto r = verify_diameter2(o);
  for (const auto& c : r.claims) {
    INFO(c.claim);
    CHECK(c.pass());
  }
}

TEST_CASE("level-2 spanning tree protocol") {
  auto pet = make_petersen();
  auto o = level2_protocol(pet, 0);
  REQUIRE(o);
  check_outcome(pet, *o);
  CHECK(o->final_support == 2);
  CHECK(o->method == "level2");
  CHECK_FALSE(level2_protocol(make_path(7), 0));
  // No edge joins two level-2 vertices of a star.
  CHECK_FALSE(level2_protocol(make_star(5), 0));
  auto c5 = make_cycle(5);
  for (Vertex r = 0; r < 5; ++r) {
    auto o5 = level2_protocol(c5, r);
    REQUIRE(o5);
    check_outcome(c5, *o5);
    CHECK(o5->final_support == 2);
  }
}

TEST_CASE("partition protocols respect their bounds") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    auto g = random_connected(2 + rng() % 14, 0.1 + 0.5 * detail::unit_draw(rng), rng);
    auto r = radius2_partition_protocol(g);
    check_outcome(g, r);
    REQUIRE(r.final_support <= min_degree_bound(g));
    auto m = matching_partition_protocol(g);
    check_outcome(g, m);
    REQUIRE(m.final_support <= min_maximal_matching(g).size);
  }
}

TEST_CASE("matching partition on the chained double stars") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t k : {4, 5}) {
      auto gm = make_Gmk(m, k);
      auto o = matching_partition_protocol(gm.graph);
      check_outcome(gm.graph, o);
      CHECK(o.final_support == m);
    }
  }
}

TEST_CASE("recognizers") {
  CHECK(is_c5(make_cycle(5)));
  CHECK_FALSE(is_c5(make_cycle(6)));
  CHECK(is_petersen(make_petersen()));
  CHECK_FALSE(is_petersen(make_cycle(10)));
  // Relabelled Petersen graph.
  auto pet = make_petersen();
  std::vector<Edge> es;
  for (auto e : pet.edges()) es.push_back({9 - e.u, 9 - e.v});
  CHECK(is_petersen(Graph(10, es)));
}
