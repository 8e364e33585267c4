// unitacq: command-line front end for the unit acquisition library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 solver budget exhausted.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unitacq/unitacq.hpp"
#include "unitacq/verify.hpp"

namespace {

using namespace unitacq;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kSchemaVersion = 1;

struct Flags {
  std::string input = "-";
  std::string format = "edgelist";
  bool json = false;
  std::uint64_t budget = kDefaultStateBudget;
  std::optional<std::uint64_t> seed;
  std::size_t max_n = 0;
  std::size_t jobs = 1;
  std::size_t count = 0;
  bool with_protocol = false;
  std::string method = "auto";
  std::string protocol_path;
  std::string suite;
  std::string family;
  std::vector<std::string> params;
  std::size_t branching = 5;
  double p = 0.5;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const Flags& f) { return parse_edge_list(read_input(f.input)); }

json edges_json(const std::vector<Edge>& es) {
  json out = json::array();
  for (auto e : es) out.push_back({e.u, e.v});
  return out;
}

json weights_json(const WeightConfig& w) { return w.values(); }

json inputs_json(const Flags& f, const Graph& g) {
  return {{"source", f.input}, {"order", g.order()}, {"size", g.size()}, {"graph_hash", graph_hash(g)}};
}

// Wraps a result body into the versioned report envelope.
json envelope(const std::string& command, json inputs, json results, double seconds) {
  return {{"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)},
          {"timing", {{"seconds", seconds}}}};
}

std::string moves_text(const Protocol& p) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << (i % 10 == 0 ? (i ? "\n  " : "  ") : " ") << p.moves[i].from << "->" << p.moves[i].to;
  }
  return out.str();
}

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------

int cmd_solve(const Flags& f) {
  Clock clock;
  auto g = load_graph(f);
  auto s = unit_acquisition_number(g, {f.budget, true});
  auto cut = cut_lower_bound(g);
  std::optional<MatchingResult> mm;
  if (g.size() > 0) mm = min_maximal_matching(g);
  auto deg = min_degree_bound(g);
  auto fin = replay(g, s.witness);

  if (f.json) {
    json certs = json::array();
    for (const auto& c : cut.certificates) certs.push_back({{"u", c.u}, {"v", c.v}, {"cut", c.cut}});
    json bounds = {{"cut_lower_bound", cut.value},
                   {"cut_vertices", cut.vertices},
                   {"cut_certificates", certs},
                   {"min_maximal_matching", mm ? json(mm->size) : json(nullptr)},
                   {"matching", mm ? edges_json(mm->edges) : json::array()},
                   {"degree_bound", deg}};
    json results = {{"status", to_string(s.status)},
                    {"a_u", s.value},
                    {"lower_bound", s.lower_bound},
                    {"states_explored", s.states_explored},
                    {"witness", protocol_to_json(g, s.witness)},
                    {"final_weights", weights_json(fin)},
                    {"final_support", support(fin)},
                    {"bounds", bounds}};
    std::cout << envelope("solve", inputs_json(f, g), results, clock.seconds()).dump(2) << '\n';
  } else {
    std::cout << "graph: " << g.order() << " vertices, " << g.size() << " edges\n";
    if (s.status == SolveStatus::Exact) {
      std::cout << "a_u = " << s.value << " (exact)\n";
    } else {
      std::cout << "a_u <= " << s.value << ", >= " << s.lower_bound << " (inconclusive: budget of " << f.budget
                << " states exhausted)\n";
    }
    std::cout << "states explored: " << s.states_explored << '\n';
    std::cout << "bounds:\n";
    std::cout << "  cut lower bound         " << cut.value << '\n';
    std::cout << "  min maximal matching    " << (mm ? std::to_string(mm->size) : "n/a") << '\n';
    std::cout << "  floor((n-1)/min degree) " << deg << '\n';
    std::cout << "witness: " << s.witness.size() << " moves, final support " << support(fin) << '\n';
    if (!s.witness.empty()) std::cout << moves_text(s.witness) << '\n';
  }
  return s.status == SolveStatus::Exact ? kExitOk : kExitInconclusive;
}

int cmd_caterpillar(const Flags& f) {
  Clock clock;
  auto g = load_graph(f);
  auto rec = recognize(g);
  if (auto* bad = std::get_if<NotCaterpillar>(&rec)) {
    std::string witness;
    if (bad->cycle_edge) {
      witness = "cycle through edge " + std::to_string(bad->cycle_edge->u) + "-" + std::to_string(bad->cycle_edge->v);
    }
    if (f.json) {
      json err = {{"reason", bad->reason}};
      if (bad->cycle_edge) err["cycle_edge"] = {bad->cycle_edge->u, bad->cycle_edge->v};
      if (bad->branch_vertex) err["branch_vertex"] = *bad->branch_vertex;
      std::cout << envelope("caterpillar", inputs_json(f, g), {{"error", err}}, clock.seconds()).dump(2) << '\n';
    }
    std::cerr << "error: not a caterpillar: " << bad->reason << (witness.empty() ? "" : " (" + witness + ")") << '\n';
    return kExitUsage;
  }
  const auto& view = std::get<CaterpillarView>(rec);
  auto value = a_u_caterpillar(view);
  auto protocol = caterpillar_protocol(g, view, value);
  auto fin = replay(g, protocol);

  std::optional<ConditionResult> cond;
  std::optional<Assignment> assignment;
  if (view.spine.size() >= 3) {
    cond = condition_check(view);
    if (cond->holds) assignment = build_assignment(view);
  }

  if (f.json) {
    json pieces = json::array();
    for (const auto& p : value.pieces) {
      pieces.push_back({{"first", p.first}, {"last", p.last}, {"vertices", piece_vertices(view, p)}});
    }
    json results = {{"spine", view.spine},
                    {"leaf_counts", view.leaf_counts()},
                    {"a_u", value.value},
                    {"pieces", pieces},
                    {"protocol", protocol_to_json(g, protocol)},
                    {"final_support", support(fin)}};
    if (cond) {
      json c = {{"holds", cond->holds}, {"sums_evaluated", cond->sums_evaluated}};
      if (cond->violation) {
        c["violation"] = {{"first", cond->violation->first},
                          {"length", cond->violation->length},
                          {"leaf_sum", cond->violation->leaf_sum},
                          {"required", ell(static_cast<long long>(cond->violation->length))}};
      }
      results["condition"] = c;
    } else {
      results["condition"] = nullptr;
    }
    if (assignment) {
      json pairs = json::array();
      for (const auto& a : assignment->pairs) {
        pairs.push_back({{"leaf", a.leaf}, {"source", a.source}, {"column", a.cell.column}, {"height", a.cell.height}});
      }
      results["assignment"] = {{"pairs", pairs}, {"unmatched", assignment->unmatched}, {"cost", assignment->cost}};
    }
    std::cout << envelope("caterpillar", inputs_json(f, g), results, clock.seconds()).dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "spine:";
  for (std::size_t i = 0; i < view.spine.size(); ++i) {
    std::cout << ' ' << view.spine[i] << '(' << view.leaf_count(i) << ')';
  }
  std::cout << "\na_u = " << value.value << '\n';
  if (!cond) {
    std::cout << "condition: no internal spine vertices\n";
  } else if (cond->holds) {
    std::cout << "condition: holds\n";
  } else {
    const auto& v = *cond->violation;
    std::cout << "condition: fails on the segment of length " << v.length << " at spine position " << v.first
              << ": " << v.leaf_sum << " leaves, needs " << ell(static_cast<long long>(v.length)) << '\n';
  }
  if (assignment) {
    std::cout << "assignment (leaf -> cell column,height), cost " << assignment->cost << ":\n";
    for (const auto& a : assignment->pairs) {
      std::cout << "  " << a.leaf << " -> " << a.cell.column << ',' << a.cell.height << '\n';
    }
  }
  std::cout << "pieces:";
  for (const auto& p : value.pieces) std::cout << " [" << p.first << ',' << p.last << ']';
  std::cout << "\nprotocol: " << protocol.size() << " moves, final support " << support(fin) << '\n';
  if (!protocol.empty()) std::cout << moves_text(protocol) << '\n';
  return kExitOk;
}

SynthesisOutcome synthesize(const Graph& g, const std::string& method) {
  auto level2_best = [&]() -> std::optional<SynthesisOutcome> {
    std::optional<SynthesisOutcome> best;
    for (Vertex r = 0; r < g.order(); ++r) {
      auto o = level2_protocol(g, r);
      if (o && (!best || o->final_support < best->final_support)) best = std::move(o);
    }
    return best;
  };
  if (method == "diam2") return diam2_protocol(g);
  if (method == "radius2") return radius2_partition_protocol(g);
  if (method == "matching") return matching_partition_protocol(g);
  if (method == "level2") {
    auto o = level2_best();
    if (!o) throw PreconditionError("no vertex has eccentricity at most 2");
    return *o;
  }
  // auto: every applicable synthesizer, smallest final support, first wins ties.
  std::vector<SynthesisOutcome> tried;
  auto d = diameter(g);
  if (d && *d == 2) tried.push_back(diam2_protocol(g));
  if (auto o = level2_best()) tried.push_back(std::move(*o));
  tried.push_back(radius2_partition_protocol(g));
  if (g.size() > 0) tried.push_back(matching_partition_protocol(g));
  return *std::min_element(tried.begin(), tried.end(), [](const auto& a, const auto& b) {
    return a.final_support < b.final_support;
  });
}

int cmd_synth(const Flags& f) {
  Clock clock;
  auto g = load_graph(f);
  auto out = synthesize(g, f.method);
  bool legal = true;
  std::string verdict = "ok";
  std::size_t replayed = 0;
  try {
    replayed = support(replay(g, out.protocol));
  } catch (const ReplayError& e) {
    legal = false;
    verdict = e.what();
  }
  bool ok = legal && replayed == out.final_support;
  if (f.json) {
    json results = {{"method", out.method},
                    {"note", out.note},
                    {"final_support", out.final_support},
                    {"protocol", protocol_to_json(g, out.protocol)},
                    {"replay", {{"legal", legal}, {"support", replayed}, {"verdict", verdict}}}};
    std::cout << envelope("synth", inputs_json(f, g), results, clock.seconds()).dump(2) << '\n';
  } else {
    std::cout << "method: " << out.method << '\n';
    if (!out.note.empty()) std::cout << "note: " << out.note << '\n';
    std::cout << "final support: " << out.final_support << '\n';
    std::cout << "replay: " << (ok ? "ok" : verdict) << '\n';
    std::cout << "protocol: " << out.protocol.size() << " moves\n";
    if (!out.protocol.empty()) std::cout << moves_text(out.protocol) << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

std::size_t param(const Flags& f, std::size_t i, const char* name) {
  if (i >= f.params.size()) throw UsageError("family '" + f.family + "' needs parameter <" + name + ">");
  const auto& s = f.params[i];
  auto v = detail::parse_uint(s);
  if (!v) throw UsageError("parameter <" + std::string(name) + "> must be a nonnegative integer, got '" + s + "'");
  return static_cast<std::size_t>(*v);
}

std::uint64_t require_seed(const Flags& f, const std::string& what) {
  if (!f.seed) throw UsageError(what + " is randomized and needs --seed");
  return *f.seed;
}

int cmd_generate(const Flags& f) {
  const auto& fam = f.family;
  Graph g;
  std::optional<TdResult> td;
  std::vector<std::string> warnings;
  std::size_t expected_params = 0;
  if (fam == "path") g = make_path(param(f, 0, "n")), expected_params = 1;
  else if (fam == "cycle") g = make_cycle(param(f, 0, "n")), expected_params = 1;
  else if (fam == "complete") g = make_complete(param(f, 0, "n")), expected_params = 1;
  else if (fam == "star") g = make_star(param(f, 0, "leaves")), expected_params = 1;
  else if (fam == "caterpillar") {
    std::vector<std::size_t> d;
    for (std::size_t i = 0; i < f.params.size(); ++i) d.push_back(param(f, i, "leaf count"));
    if (d.empty()) throw UsageError("family 'caterpillar' needs leaf counts per spine vertex");
    g = make_caterpillar(d);
    expected_params = d.size();
  } else if (fam == "J") g = make_J();
  else if (fam == "spider") g = make_spider();
  else if (fam == "triangle-tail") g = make_triangle_tail();
  else if (fam == "caterpillar10") g = make_caterpillar10();
  else if (fam == "petersen") g = make_petersen();
  else if (fam == "hoffman-singleton") g = make_hoffman_singleton();
  else if (fam == "H") g = make_Hk(param(f, 0, "k")), expected_params = 1;
  else if (fam == "G") {
    auto gm = make_Gmk(param(f, 0, "m"), param(f, 1, "k"));
    g = gm.graph;
    warnings = gm.warnings;
    expected_params = 2;
  } else if (fam == "T") {
    td = make_Td(param(f, 0, "d"), f.branching);
    g = td->graph;
    expected_params = 1;
  } else if (fam == "diameter4-tree") g = make_diameter4_tree(param(f, 0, "n")), expected_params = 1;
  else if (fam == "gnp") {
    g = random_gnp(param(f, 0, "n"), f.p, require_seed(f, "gnp"));
    expected_params = 1;
  } else if (fam == "diameter2") {
    std::mt19937_64 rng(require_seed(f, "diameter2"));
    g = random_diameter2(param(f, 0, "n"), f.p, rng);
    expected_params = 1;
  } else if (fam == "tree") {
    std::mt19937_64 rng(require_seed(f, "tree"));
    g = random_tree(param(f, 0, "n"), rng);
    expected_params = 1;
  } else {
    throw UsageError("unknown family '" + fam + "'");
  }
  if (f.params.size() > expected_params) throw UsageError("too many parameters for family '" + fam + "'");
  if (f.with_protocol && !td) throw UsageError("--with-protocol is only available for family 'T'");
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';

  const std::string text = f.format == "dot" ? to_dot(g) : to_edge_list(g);
  if (!f.json && !f.with_protocol) {
    std::cout << text;
    return kExitOk;
  }
  json results = {{"family", fam}, {"params", f.params}, {"format", f.format}, {"graph", text}};
  if (f.seed) results["seed"] = *f.seed;
  if (!warnings.empty()) results["warnings"] = warnings;
  if (td) {
    results["branching"] = f.branching;
    results["active_counts"] = td->active_counts;
    results["order_with_next_level"] = td->order_with_next_level;
    if (f.with_protocol) {
      results["protocol"] = protocol_to_json(g, td->protocol);
      results["ascend_prefix_len"] = td->ascend_prefix_len;
    }
  }
  std::cout << envelope("generate", {{"order", g.order()}, {"size", g.size()}, {"graph_hash", graph_hash(g)}},
                        results, 0.0)
                   .dump(2)
            << '\n';
  return kExitOk;
}

bool suite_is_randomized(const std::string& s) {
  return s == "diameter2" || s == "bounds" || s == "max-weight" || s == "properties";
}

int cmd_verify(const Flags& f) {
  Clock clock;
  std::vector<std::string> suites;
  if (f.suite == "all") {
    suites = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), f.suite) != suite_names().end()) {
    suites = {f.suite};
  } else {
    throw UsageError("unknown suite '" + f.suite + "'");
  }
  SuiteOptions o;
  o.max_n = f.max_n;
  o.jobs = f.jobs;
  o.count = f.count;
  o.budget = f.budget;
  for (const auto& s : suites) {
    if (suite_is_randomized(s)) o.seed = require_seed(f, "suite '" + s + "'");
  }

  bool all_pass = true;
  json reports = json::array();
  json timing = json::object();
  for (const auto& s : suites) {
    auto r = run_suite(s, o);
    all_pass = all_pass && r.pass();
    reports.push_back(to_json(r));
    timing[s] = r.seconds;
    if (!f.json) {
      std::cout << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << '\n';
      for (const auto& c : r.claims) {
        std::cout << "  " << (c.pass() ? "PASS" : "FAIL") << "  " << c.claim << "  (" << c.checked << " checked)\n";
        for (const auto& why : c.failures) std::cout << "        " << why << '\n';
      }
    }
  }
  if (f.json) {
    json inputs = {{"suite", f.suite}, {"max_n", f.max_n}, {"jobs", f.jobs}, {"count", f.count}, {"budget", f.budget}};
    if (f.seed) inputs["seed"] = *f.seed;
    auto env = envelope("verify", inputs, {{"pass", all_pass}, {"suites", reports}}, clock.seconds());
    env["timing"]["suites"] = timing;
    std::cout << env.dump(2) << '\n';
  }
  return all_pass ? kExitOk : kExitFailed;
}

int cmd_replay(const Flags& f) {
  Clock clock;
  auto g = load_graph(f);
  std::ifstream in(f.protocol_path);
  if (!in) throw UsageError("cannot read protocol '" + f.protocol_path + "'");
  json pj;
  try {
    pj = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("protocol is not valid JSON: ") + e.what());
  }
  // Whole reports are accepted; the protocol is looked up where commands put it.
  if (pj.contains("results")) {
    const auto& r = pj["results"];
    for (const char* key : {"witness", "protocol"}) {
      if (r.contains(key)) {
        pj = r[key];
        break;
      }
    }
  }
  auto p = protocol_from_json(g, pj);
  json results;
  int code = kExitOk;
  try {
    auto fin = replay(g, p);
    results = {{"legal", true}, {"moves", p.size()}, {"final_weights", weights_json(fin)}, {"final_support", support(fin)}};
    if (!f.json) {
      std::cout << "replay: ok, " << p.size() << " moves\nfinal support: " << support(fin) << "\nfinal weights:";
      for (auto x : fin.values()) std::cout << ' ' << x;
      std::cout << '\n';
    }
  } catch (const ReplayError& e) {
    code = kExitFailed;
    results = {{"legal", false}, {"moves", p.size()}, {"failed_at", e.index()}, {"reason", to_string(e.reason())}};
    if (!f.json) std::cout << "replay: " << e.what() << '\n';
  }
  if (f.json) std::cout << envelope("replay", inputs_json(f, g), results, clock.seconds()).dump(2) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unit acquisition number toolkit"};
  app.require_subcommand(1);
  Flags f;

  auto add_input = [&](CLI::App* c) {
    c->add_option("--input", f.input, "Edge-list file, or - for stdin")->capture_default_str();
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", f.json, "Emit a JSON report"); };
  auto add_budget = [&](CLI::App* c) {
    c->add_option("--budget", f.budget, "State budget for exhaustive search")->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "Exact unit acquisition number with witness and bounds");
  add_input(solve);
  add_json(solve);
  add_budget(solve);

  auto* cat = app.add_subcommand("caterpillar", "Linear-time value, condition check and protocol for caterpillars");
  add_input(cat);
  add_json(cat);

  auto* synth = app.add_subcommand("synth", "Constructive protocol synthesis");
  add_input(synth);
  add_json(synth);
  synth->add_option("--method", f.method, "auto, diam2, level2, radius2 or matching")
      ->check(CLI::IsMember({"auto", "diam2", "level2", "radius2", "matching"}))
      ->capture_default_str();

  auto* gen = app.add_subcommand("generate", "Emit a named graph family");
  gen->add_option("family", f.family,
                  "path, cycle, complete, star, caterpillar, J, spider, triangle-tail, caterpillar10, petersen, hoffman-singleton, "
                  "H, G, T, diameter4-tree, gnp, diameter2, tree")
      ->required();
  gen->add_option("params", f.params, "Family parameters");
  gen->add_option("--format", f.format, "edgelist or dot")
      ->check(CLI::IsMember({"edgelist", "dot"}))
      ->capture_default_str();
  gen->add_option("--seed", f.seed, "Seed for random families");
  gen->add_option("--p", f.p, "Edge probability for random families")->capture_default_str();
  gen->add_option("--branching", f.branching, "Branching for family T (4 or 5)")->capture_default_str();
  gen->add_flag("--with-protocol", f.with_protocol, "Include the construction protocol (family T)");
  add_json(gen);

  auto* ver = app.add_subcommand("verify", "Run a claim-checking suite");
  ver->add_option("suite", f.suite, "Suite name or 'all'")->required();
  ver->add_option("--seed", f.seed, "Seed (required for randomized suites)");
  ver->add_option("--max-n", f.max_n, "Scale limit; 0 picks the suite default")->capture_default_str();
  ver->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  ver->add_option("--count", f.count, "Sample size for randomized suites; 0 picks the default")->capture_default_str();
  add_budget(ver);
  add_json(ver);

  auto* rep = app.add_subcommand("replay", "Replay a protocol from the all-ones configuration");
  add_input(rep);
  add_json(rep);
  rep->add_option("--protocol", f.protocol_path, "Protocol JSON or a report containing one")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(f);
    if (*cat) return cmd_caterpillar(f);
    if (*synth) return cmd_synth(f);
    if (*gen) return cmd_generate(f);
    if (*ver) return cmd_verify(f);
    if (*rep) return cmd_replay(f);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
