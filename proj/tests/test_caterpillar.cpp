#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "test_support.hpp"
#include "unitacq/unitacq.hpp"

using namespace unitacq;

namespace {

CaterpillarView view_of(const Graph& g) {
  auto r = recognize(g);
  REQUIRE(std::holds_alternative<CaterpillarView>(r));
  return std::get<CaterpillarView>(r);
}

}  // namespace

TEST_CASE("recognition") {
  auto k1 = view_of(parse_edge_list("# order 1\n"));
  CHECK(k1.spine == std::vector<Vertex>{0});
  auto k2 = view_of(make_path(2));
  CHECK(k2.spine.size() == 1);
  CHECK(k2.leaf_count(0) == 1);

  auto j = view_of(make_J());
  CHECK(j.spine.size() == 3);
  CHECK(j.k() == 1);
  CHECK(j.leaf_counts() == std::vector<std::size_t>{1, 1, 1});

  auto p8 = view_of(make_path(8));
  CHECK(p8.spine.size() == 6);
  CHECK(p8.leaf_counts() == std::vector<std::size_t>{1, 0, 0, 0, 0, 1});

  auto spider = recognize(make_spider());
  REQUIRE(std::holds_alternative<NotCaterpillar>(spider));
  CHECK(std::get<NotCaterpillar>(spider).branch_vertex == Vertex{0});

  auto cyc = recognize(make_cycle(5));
  REQUIRE(std::holds_alternative<NotCaterpillar>(cyc));
  CHECK(std::get<NotCaterpillar>(cyc).cycle_edge.has_value());

  CHECK(std::holds_alternative<NotCaterpillar>(recognize(parse_edge_list("# order 4\n0 1\n2 3\n"))));
}

TEST_CASE("pyramid sizes") {
  CHECK(ell(1) == 1);
  CHECK(ell(2) == 2);
  CHECK(ell(4) == 6);
  CHECK(ell(7) == 16);
  CHECK(ell(8) == 20);
  CHECK_THROWS_AS(ell(0), PreconditionError);
  CHECK(pyramid_cells(7).size() == 16);
  CHECK(pyramid_cells(8).size() == 20);
}

TEST_CASE("condition check") {
  CHECK(condition_check(view_of(make_J())).holds);
  // Spine of four: two internal vertices with one leaf each.
  auto c10 = view_of(make_caterpillar10());
  CHECK(c10.k() == 2);
  CHECK(c10.leaf_counts() == std::vector<std::size_t>{2, 1, 1, 2});
  CHECK(condition_check(c10).holds);

  auto p6 = view_of(make_path(6));
  auto c = condition_check(p6);
  CHECK_FALSE(c.holds);
  REQUIRE(c.violation);
  CHECK(c.violation->length == 1);
  CHECK(c.violation->first == 1);
  CHECK(c.violation->leaf_sum == 0);

  // Shortest violation is reported, leftmost among equals.
  auto g = make_caterpillar({1, 1, 1, 0, 1, 1});
  auto v = condition_check(view_of(g));
  REQUIRE(v.violation);
  CHECK(v.violation->length <= 2);
}

TEST_CASE("assignment") {
  auto c10 = view_of(make_caterpillar10());
  auto a = build_assignment(c10);
  REQUIRE(a);
  CHECK(a->pairs.size() == ell(2));
  for (const auto& p : a->pairs) CHECK(p.cell.height > p.cost());
  auto p = assignment_to_protocol(make_caterpillar10(), c10, *a);
  auto fin = replay(make_caterpillar10(), p);
  CHECK(support(fin) == 1);
  CHECK(fin.total() == 10);

  CHECK_FALSE(build_assignment(view_of(make_path(6))));
}

TEST_CASE("greedy value on named caterpillars") {
  auto j = view_of(make_J());
  CHECK(a_u_caterpillar(j).value == 1);
  auto p8 = a_u_caterpillar(view_of(make_path(8)));
  CHECK(p8.value == 2);
  CHECK(p8.pieces.size() == 2);
  CHECK(a_u_caterpillar(view_of(make_caterpillar10())).value == 1);
  CHECK(a_u_caterpillar(view_of(make_star(6))).value == 1);
  for (std::size_t n = 2; n <= 30; ++n) CHECK(a_u_caterpillar(view_of(make_path(n))).value == (n + 3) / 4);
}

TEST_CASE("piece protocols reach the greedy value") {
  for (const auto& g : enumerate_caterpillars(11)) {
    auto v = view_of(g);
    auto val = a_u_caterpillar(v);
    auto fin = replay(g, caterpillar_protocol(g, v, val));
    REQUIRE(support(fin) == val.value);
    std::set<Vertex> covered;
    for (const auto& p : val.pieces)
      for (auto x : piece_vertices(v, p)) REQUIRE(covered.insert(x).second);
    REQUIRE(covered.size() == g.order());
  }
}

TEST_CASE("enumeration matches brute-force tree classes") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<std::string> expect;
    for (const auto& t : oracle::labelled_trees(n)) {
      if (oracle::is_caterpillar(t)) expect.insert(oracle::tree_canon(t));
    }
    std::set<std::string> got;
    std::size_t emitted = 0;
    for (const auto& g : enumerate_caterpillars(n)) {
      if (g.order() != n) continue;
      ++emitted;
      got.insert(oracle::tree_canon(g));
    }
    INFO("n = " << n);
    CHECK(emitted == got.size());
    CHECK(got == expect);
  }
  CHECK(enumerate_caterpillars(12).size() == 560);
  CHECK(enumerate_caterpillars(1).size() == 1);
}

TEST_CASE("greedy value equals exhaustive search on every caterpillar up to 12 vertices") {
  std::size_t mismatches = 0;
  for (const auto& g : enumerate_caterpillars(12)) {
    auto v = view_of(g);
    auto exact = unit_acquisition_number(g);
    REQUIRE(exact.status == SolveStatus::Exact);
    if (a_u_caterpillar(v).value != exact.value) ++mismatches;
    if (v.spine.size() >= 3 && condition_check(v).holds != (exact.value == 1)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("linear scan on long caterpillars") {
  std::vector<std::size_t> d(2000, 1);
  auto g = make_caterpillar(d);
  auto v = view_of(g);
  auto val = a_u_caterpillar(v);
  CHECK(val.value >= 1);
  CHECK(support(replay(g, caterpillar_protocol(g, v, val))) == val.value);
}
