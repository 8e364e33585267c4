// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "unitacq/unitacq.hpp"
#include "unitacq/verify.hpp"

using namespace unitacq;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string summarize(const SuiteReport& r) {
  std::string s;
  for (const auto& c : r.claims) {
    if (!s.empty()) s += "; ";
    s += c.claim + " " + (c.pass() ? "ok" : "FAILED") + " (" + std::to_string(c.checked) + ")";
    for (const auto& f : c.failures) s += " [" + f + "]";
  }
  return s;
}

const std::size_t kJobs = std::max(1u, std::thread::hardware_concurrency());

Outcome paths_and_cycles() {
  auto t = std::chrono::steady_clock::now();
  SuiteOptions o;
  o.max_n = 12;
  o.jobs = 1;
  auto r = verify_paths_cycles(o);
  double s = seconds_since(t);
  return {r.pass() && s < 60, summarize(r) + ", " + std::to_string(s) + " s"};
}

Outcome seven_vertex_graph() {
  auto t = std::chrono::steady_clock::now();
  auto g = make_triangle_tail();
  auto base = unit_acquisition_number(g);
  bool ok = base.status == SolveStatus::Exact && base.value == 1;
  std::size_t deletions = 0;
  for (auto e : g.edges()) {
    auto h = g.without_edge(e.u, e.v);
    std::size_t a = 0;
    bool exact = true;
    if (is_connected(h)) {
      auto r = unit_acquisition_number(h);
      a = r.value;
      exact = r.status == SolveStatus::Exact;
    } else {
      auto side = bfs_distances(h, e.u);
      std::vector<Vertex> x, y;
      for (Vertex v = 0; v < h.order(); ++v) (side[v] >= 0 ? x : y).push_back(v);
      for (const auto& part : {x, y}) {
        auto r = unit_acquisition_number(induced_subgraph(h, part));
        a += r.value;
        exact = exact && r.status == SolveStatus::Exact;
      }
    }
    ok = ok && exact && a == 2;
    ++deletions;
  }
  double s = seconds_since(t);
  return {ok && deletions == 7 && s < 5,
          "a_u = " + std::to_string(base.value) + ", " + std::to_string(deletions) + " deletions, " +
              std::to_string(s) + " s"};
}

Outcome petersen() {
  auto t = std::chrono::steady_clock::now();
  auto g = make_petersen();
  auto r = unit_acquisition_number(g, {kDefaultStateBudget, true});
  auto l2 = level2_protocol(g, 0);
  auto d2 = diam2_protocol(g);
  bool ok = r.status == SolveStatus::Exact && r.value == 2 && l2 && support(replay(g, l2->protocol)) == 2 &&
            support(replay(g, d2.protocol)) == 2;
  double s = seconds_since(t);
  return {ok && s < 120, "a_u = " + std::to_string(r.value) + " (" + to_string(r.status) + "), " +
                             std::to_string(r.states_explored) + " states, " + std::to_string(s) + " s"};
}

Outcome caterpillars() {
  SuiteOptions o;
  o.max_n = 12;
  o.jobs = kJobs;
  auto r = verify_caterpillar_oracle(o);
  return {r.pass() && r.claims[0].checked == 560, summarize(r)};
}

Outcome diameter_two() {
  SuiteOptions o;
  o.max_n = 12;
  o.count = 1000;
  o.seed = 2024;
  o.jobs = kJobs;
  auto r = verify_diameter2(o);
  return {r.pass() && r.claims[0].checked >= 1000 && r.claims[1].checked >= 1000, summarize(r)};
}

Outcome bound_sandwich() {
  SuiteOptions o;
  o.max_n = 8;
  o.count = 10000;
  o.seed = 2024;
  o.jobs = kJobs;
  auto r = verify_bounds(o);
  return {r.pass() && r.claims[0].checked >= 10000, summarize(r)};
}

Outcome level_trees() {
  SuiteOptions o;
  o.max_n = 8;
  auto r = verify_td(o);
  return {r.pass(), summarize(r)};
}

Outcome chained_double_stars() {
  SuiteOptions o;
  o.max_n = 4;
  o.jobs = kJobs;
  auto r = verify_gmk(o);
  return {r.pass() && r.claims[0].checked == 8, summarize(r)};
}

Outcome max_weight() {
  SuiteOptions o;
  o.max_n = 11;
  o.count = 200;
  o.seed = 2024;
  o.jobs = kJobs;
  auto r = verify_max_weight(o);
  return {r.pass() && r.claims[2].checked >= 200, summarize(r)};
}

Outcome properties() {
  SuiteOptions o;
  o.count = 10000;
  o.max_n = 8;
  o.seed = 2024;
  o.jobs = kJobs;
  auto r = verify_properties(o);
  bool enough = std::all_of(r.claims.begin(), r.claims.end(), [](const ClaimResult& c) { return c.checked >= 10000; });
  return {r.pass() && enough, summarize(r)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"paths and cycles", paths_and_cycles},
      {"seven-vertex graph and its edge deletions", seven_vertex_graph},
      {"Petersen graph", petersen},
      {"caterpillar oracle", caterpillars},
      {"diameter-2 synthesis", diameter_two},
      {"bound sandwich", bound_sandwich},
      {"level-by-level trees", level_trees},
      {"chained double stars", chained_double_stars},
      {"maximum acquirable weight", max_weight},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %zu: %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
