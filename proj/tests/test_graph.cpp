#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "linkage/errors.hpp"
#include "linkage/graph.hpp"
#include "support.hpp"

using namespace linkage;
using testing_support::fixture;

namespace {

WeightedGraph triangle(double x, double y, double z) {
  return WeightedGraph({"v1", "v2", "v3"}, {{"v1", "v2", x}, {"v2", "v3", y}, {"v3", "v1", z}});
}

WeightedGraph complete4() {
  return WeightedGraph({"v1", "v2", "v3", "v4"}, {{"v1", "v2", 1}, {"v1", "v3", 1}, {"v1", "v4", 1},
                                                  {"v2", "v3", 1}, {"v2", "v4", 1}, {"v3", "v4", 1}});
}

// Edge subsets in which every touched vertex has degree 2 and which are connected.
std::set<std::vector<std::size_t>> cycle_oracle(const WeightedGraph& g) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t m = g.edge_count();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> deg(g.vertex_count(), 0);
    std::vector<std::size_t> es;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      es.push_back(i);
      ++deg[g.require_index(g.edges()[i].u)];
      ++deg[g.require_index(g.edges()[i].v)];
    }
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 0 && d != 2; })) continue;
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i : es) parent[find(g.require_index(g.edges()[i].u))] = find(g.require_index(g.edges()[i].v));
    std::set<std::size_t> roots;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (deg[v]) roots.insert(find(v));
    }
    if (roots.size() == 1) out.insert(es);
  }
  return out;
}

std::set<std::vector<std::size_t>> edge_sets(const std::vector<Cycle>& cs) {
  std::set<std::vector<std::size_t>> out;
  for (const Cycle& c : cs) {
    auto e = c.edges;
    std::sort(e.begin(), e.end());
    out.insert(e);
  }
  return out;
}

WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("n" + std::to_string(i));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_real_distribution<double> len(0.1, 3.0);
  std::vector<Edge> edges;
  while (edges.size() < m) {
    const std::size_t u = pick(rng), v = pick(rng);
    if (u != v) edges.push_back({names[u], names[v], len(rng)});
  }
  return WeightedGraph(names, edges);
}

}  // namespace

TEST_CASE("validate accepts a well-formed triangle") { CHECK(validate(triangle(3, 4, 5)).empty()); }

TEST_CASE("validate reports every violation") {
  const WeightedGraph g({"v1", "v2", "v2"},
                        {{"v1", "v1", 1.0}, {"v1", "v2", -1.0}, {"v1", "v9", 1.0}, {"v1", "v2", NAN}});
  const auto v = validate(g);
  std::multiset<ViolationKind> kinds;
  for (const auto& x : v) kinds.insert(x.kind);
  CHECK(kinds.count(ViolationKind::loop) == 1);
  CHECK(kinds.count(ViolationKind::negative_length) == 1);
  CHECK(kinds.count(ViolationKind::missing_vertex) == 1);
  CHECK(kinds.count(ViolationKind::duplicate_vertex) == 1);
  CHECK(kinds.count(ViolationKind::non_finite_length) == 1);
  CHECK(to_string(ViolationKind::loop) == "loop");
  CHECK(to_string(ViolationKind::negative_length) == "negative length");
}

TEST_CASE("cycle enumeration on the seven-vertex fixture") {
  const auto g = load_graph(fixture("four_ex2.json"));
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 9);
  const auto cs = enumerate_simple_cycles(g);
  CHECK(cs.size() == 7);
  CHECK(edge_sets(cs) == cycle_oracle(g));
}

TEST_CASE("trees have no cycles") {
  const WeightedGraph t({"a", "b", "c", "d"}, {{"a", "b", 1}, {"b", "c", 1}, {"b", "d", 1}});
  CHECK(enumerate_simple_cycles(t).empty());
}

TEST_CASE("K4 has four triangles and three squares") {
  const auto cs = enumerate_simple_cycles(complete4());
  REQUIRE(cs.size() == 7);
  CHECK(std::count_if(cs.begin(), cs.end(), [](const Cycle& c) { return c.vertices.size() == 3; }) == 4);
  CHECK(std::count_if(cs.begin(), cs.end(), [](const Cycle& c) { return c.vertices.size() == 4; }) == 3);
  CHECK(edge_sets(cs) == cycle_oracle(complete4()));
}

TEST_CASE("parallel edges form a 2-cycle") {
  const WeightedGraph g({"a", "b"}, {{"a", "b", 1.0}, {"b", "a", 2.0}});
  const auto cs = enumerate_simple_cycles(g);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].vertices.size() == 2);
  CHECK(cs[0].lengths.size() == 2);
}

TEST_CASE("cycle enumeration agrees with the subset oracle on random multigraphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_graph(rng, 3 + trial % 5, 4 + trial % 9);
    const auto cs = enumerate_simple_cycles(g);
    CHECK(edge_sets(cs) == cycle_oracle(g));
    CHECK(edge_sets(cs).size() == cs.size());
    for (const Cycle& c : cs) {
      REQUIRE(c.edges.size() == c.vertices.size());
      for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const Edge& e = g.edges()[c.edges[i]];
        const std::string& a = c.vertices[i];
        const std::string& b = c.vertices[(i + 1) % c.vertices.size()];
        CHECK(((e.u == a && e.v == b) || (e.u == b && e.v == a)));
        CHECK(c.lengths[i] == e.length);
      }
    }
    for (std::size_t i = 1; i < cs.size(); ++i) CHECK(cs[i - 1].vertices.size() <= cs[i].vertices.size());
  }
}

TEST_CASE("cycle enumeration is invariant under relabeling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(rng, 6, 10);
    std::vector<std::string> perm = g.vertices();
    std::shuffle(perm.begin(), perm.end(), rng);
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < perm.size(); ++i) rename[g.vertices()[i]] = "w" + perm[i];
    std::vector<std::string> names;
    for (const auto& v : g.vertices()) names.push_back(rename[v]);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({rename[e.u], rename[e.v], e.length});
    const WeightedGraph h(names, edges);
    CHECK(edge_sets(enumerate_simple_cycles(g)) == edge_sets(enumerate_simple_cycles(h)));
  }
}

TEST_CASE("cycle enumeration rejects large graphs") {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (int i = 0; i < 17; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 0; i < 17; ++i) edges.push_back({names[i], names[(i + 1) % 17], 1.0});
  CHECK_THROWS_AS(enumerate_simple_cycles(WeightedGraph(names, edges)), SizeLimitExceeded);
}

TEST_CASE("induced_sublengths") {
  const auto g = complete4();
  SUBCASE("empty subset is edgeless") {
    const auto h = induced_sublengths(g, {});
    CHECK(h.vertices() == g.vertices());
    CHECK(h.edge_count() == 0);
  }
  SUBCASE("full subset is the identity") {
    const std::vector<std::size_t> all{0, 1, 2, 3, 4, 5};
    CHECK(induced_sublengths(g, all) == g);
  }
  SUBCASE("order follows the original edge list") {
    const std::vector<std::size_t> some{4, 1};
    const auto h = induced_sublengths(g, some);
    REQUIRE(h.edge_count() == 2);
    CHECK(h.edges()[0] == g.edges()[1]);
    CHECK(h.edges()[1] == g.edges()[4]);
  }
  SUBCASE("unknown edge") {
    const std::vector<std::size_t> bad{9};
    CHECK_THROWS_AS(induced_sublengths(g, bad), InvalidInput);
  }
}

TEST_CASE("K33 minus v2v5") {
  std::vector<Edge> edges{{"v1", "v6", 1}, {"v1", "v2", 1}, {"v2", "v3", 1}, {"v3", "v4", 1}, {"v4", "v5", 1},
                          {"v5", "v6", 1}, {"v1", "v4", 1}, {"v3", "v6", 1}, {"v2", "v5", 1}};
  const WeightedGraph k33({"v1", "v2", "v3", "v4", "v5", "v6"}, edges);
  const auto g3 = without_edge(k33, "v5", "v2");
  CHECK(g3.edge_count() == 8);
  CHECK_FALSE(g3.find_edge("v2", "v5"));
  CHECK_THROWS_AS(without_edge(g3, "v2", "v5"), InvalidInput);
}

TEST_CASE("JSON round trip is byte-identical") {
  namespace fs = std::filesystem;
  for (const auto& entry : fs::directory_iterator(LINKAGE_FIXTURE_DIR)) {
    const auto name = entry.path().filename().string();
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    const auto doc = ss.str();
    if (doc.find("\"edges\"") == std::string::npos) continue;
    const auto g = load_graph(entry.path().string());
    const std::string once = graph_to_json(g);
    CAPTURE(name);
    CHECK(graph_to_json(parse_graph_json(once)) == once);
    CHECK(parse_graph_json(once).edges() == g.edges());
  }
  const auto tmp = fs::temp_directory_path() / "linkage_graph_roundtrip.json";
  const auto g = load_graph(fixture("h_3connex.json"));
  save_graph(g, tmp.string());
  CHECK(graph_to_json(load_graph(tmp.string())) == graph_to_json(g));
  fs::remove(tmp);
}

TEST_CASE("canonical output sorts vertices and keeps edge order") {
  const WeightedGraph g({"b", "a"}, {{"b", "a", 0.1}, {"a", "b", 2.5}});
  const auto text = graph_to_json(g);
  const auto vertices = text.find("\"vertices\"");
  REQUIRE(vertices != std::string::npos);
  CHECK(text.find("\"a\"", vertices) < text.find("\"b\"", vertices));
  const auto back = parse_graph_json(text);
  CHECK(back.edges() == g.edges());
  CHECK(text.back() == '\n');
}

TEST_CASE("graph JSON rejects malformed input") {
  CHECK_THROWS_AS(parse_graph_json("{"), InvalidInput);
  CHECK_THROWS_AS(parse_graph_json("[]"), InvalidInput);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices":["a"],"edges":[],"extra":1})"), InvalidInput);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b"}]})"), InvalidInput);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices":["a","b"],"edges":[{"u":"a","v":"b","length":1,"w":2}]})"),
                  InvalidInput);
  CHECK_THROWS_AS(load_graph("/nonexistent/graph.json"), InvalidInput);
}

TEST_CASE("residuals and pinning") {
  const auto g = triangle(3, 4, 5);
  Realization p{{Point(1, 1), Point(1, 4), Point(5, 4)}};
  CHECK(max_edge_residual(g, p) == doctest::Approx(0.0).epsilon(1e-15));
  const auto q = pin_realization(g, {"v2", "v1"}, p);
  CHECK(q.at(1).norm() == doctest::Approx(0.0));
  CHECK(q.at(0).x() == doctest::Approx(3.0));
  CHECK(q.at(0).y() == doctest::Approx(0.0));
  CHECK(max_edge_residual(g, q) < 1e-12);
  CHECK(check_pin(g, {"v1", "v2"}) == 3.0);
  const WeightedGraph path({"a", "b", "c"}, {{"a", "b", 1}, {"b", "c", 0}});
  CHECK_THROWS_AS(check_pin(path, {"a", "c"}), InvalidInput);
  CHECK_THROWS_AS(check_pin(path, {"b", "c"}), InvalidInput);
  CHECK_THROWS_AS(check_pin(path, {"a", "z"}), InvalidInput);
}
