#include "linkage/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "linkage/errors.hpp"

namespace linkage {

using nlohmann::json;

WeightedGraph::WeightedGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
}

std::optional<std::size_t> WeightedGraph::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeightedGraph::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw InvalidInput("unknown vertex '" + std::string(name) + "'");
  return *i;
}

std::optional<std::size_t> WeightedGraph::find_edge(std::string_view u, std::string_view v) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return i;
  }
  return std::nullopt;
}

double WeightedGraph::max_length() const {
  double m = 0.0;
  for (const Edge& e : edges_) m = std::max(m, e.length);
  return m;
}

double WeightedGraph::total_length() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.length;
  return s;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::loop: return "loop";
    case ViolationKind::missing_vertex: return "missing vertex";
    case ViolationKind::negative_length: return "negative length";
    case ViolationKind::duplicate_vertex: return "duplicate vertex";
    case ViolationKind::non_finite_length: return "non-finite length";
  }
  return "unknown";
}

std::vector<Violation> validate(const WeightedGraph& g) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  for (const auto& v : g.vertices()) {
    if (!seen.insert(v).second) {
      out.push_back({ViolationKind::duplicate_vertex, 0, "vertex '" + v + "' declared twice"});
    }
  }
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    const std::string where = "edge " + std::to_string(i) + " (" + e.u + "," + e.v + ")";
    if (e.u == e.v) out.push_back({ViolationKind::loop, i, where + ": loop"});
    for (const auto* end : {&e.u, &e.v}) {
      if (!g.index_of(*end)) {
        out.push_back({ViolationKind::missing_vertex, i, where + ": undeclared vertex '" + *end + "'"});
      }
    }
    if (!std::isfinite(e.length)) {
      out.push_back({ViolationKind::non_finite_length, i, where + ": non-finite length"});
    } else if (e.length < 0.0) {
      out.push_back({ViolationKind::negative_length, i, where + ": negative length"});
    }
  }
  return out;
}

double edge_residual(const WeightedGraph& g, const Realization& p, std::size_t edge_index) {
  const Edge& e = g.edges().at(edge_index);
  const Point& a = p.at(g.require_index(e.u));
  const Point& b = p.at(g.require_index(e.v));
  return std::abs((a - b).norm() - e.length);
}

std::vector<double> edge_residuals(const WeightedGraph& g, const Realization& p) {
  std::vector<double> out(g.edge_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = edge_residual(g, p, i);
  return out;
}

double max_edge_residual(const WeightedGraph& g, const Realization& p) {
  double m = 0.0;
  for (std::size_t i = 0; i < g.edge_count(); ++i) m = std::max(m, edge_residual(g, p, i));
  return m;
}

double check_pin(const WeightedGraph& g, const PinnedFrame& pin) {
  g.require_index(pin.origin);
  g.require_index(pin.axis);
  auto e = g.find_edge(pin.origin, pin.axis);
  if (!e) throw InvalidInput("pin vertices " + pin.origin + "," + pin.axis + " are not joined by an edge");
  const double l = g.edges()[*e].length;
  if (!(l > 0.0)) throw InvalidInput("pinned edge must have positive length");
  return l;
}

Realization pin_realization(const WeightedGraph& g, const PinnedFrame& pin, const Realization& p) {
  const Point o = p.at(g.require_index(pin.origin));
  const Point d = p.at(g.require_index(pin.axis)) - o;
  const double len = d.norm();
  if (len == 0.0) throw PreconditionViolation("pinned vertices coincide");
  const double c = d.x() / len;
  const double s = d.y() / len;
  Realization out;
  out.points.reserve(p.points.size());
  for (const Point& q : p.points) {
    const Point r = q - o;
    out.points.emplace_back(c * r.x() + s * r.y(), -s * r.x() + c * r.y());
  }
  out.points[g.require_index(pin.origin)] = Point::Zero();
  out.points[g.require_index(pin.axis)] = Point(len, 0.0);
  return out;
}

namespace {

struct CycleKey {
  std::vector<std::string> names;
  std::vector<std::size_t> edges;
  auto operator<=>(const CycleKey&) const = default;
};

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCycleVertices) {
    throw SizeLimitExceeded("cycle enumeration supports at most " + std::to_string(kMaxCycleVertices) +
                            " vertices, got " + std::to_string(n));
  }
  // rank vertices by name so the start vertex of each cycle is its smallest name
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return g.vertices()[a] < g.vertices()[b]; });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (edge, neighbour)
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    const std::size_t a = g.require_index(e.u);
    const std::size_t b = g.require_index(e.v);
    if (a == b) continue;
    adj[a].emplace_back(i, b);
    adj[b].emplace_back(i, a);
  }

  std::set<std::vector<std::size_t>> seen;
  std::set<CycleKey> found;
  std::vector<std::size_t> path;
  std::vector<std::size_t> path_edges;
  std::vector<bool> on_path(n, false);

  auto record = [&](std::size_t closing_edge) {
    std::vector<std::size_t> es = path_edges;
    es.push_back(closing_edge);
    std::vector<std::size_t> key = es;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return;
    // forward: path[0] -e0- path[1] ... path[k] -closing- path[0]
    CycleKey fwd, rev;
    for (std::size_t v : path) fwd.names.push_back(g.vertices()[v]);
    fwd.edges = es;
    rev.names.push_back(fwd.names.front());
    for (std::size_t i = fwd.names.size() - 1; i >= 1; --i) rev.names.push_back(fwd.names[i]);
    rev.edges.assign(es.rbegin(), es.rend());
    found.insert(std::min(fwd, rev));
  };

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t v) {
    for (auto [e, w] : adj[v]) {
      if (w == start) {
        if (path_edges.size() == 1 && e == path_edges.back()) continue;
        if (!path_edges.empty()) record(e);
        continue;
      }
      if (rank[w] < rank[start] || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      path_edges.push_back(e);
      dfs(start, w);
      path.pop_back();
      path_edges.pop_back();
      on_path[w] = false;
    }
  };

  for (std::size_t s : order) {
    path = {s};
    path_edges.clear();
    on_path.assign(n, false);
    on_path[s] = true;
    dfs(s, s);
  }

  std::vector<CycleKey> keys(found.begin(), found.end());
  std::stable_sort(keys.begin(), keys.end(), [](const CycleKey& a, const CycleKey& b) {
    if (a.names.size() != b.names.size()) return a.names.size() < b.names.size();
    return a < b;
  });
  std::vector<Cycle> out;
  out.reserve(keys.size());
  for (auto& k : keys) {
    Cycle c;
    c.vertices = std::move(k.names);
    c.edges = std::move(k.edges);
    for (std::size_t e : c.edges) c.lengths.push_back(g.edges()[e].length);
    out.push_back(std::move(c));
  }
  return out;
}

WeightedGraph induced_sublengths(const WeightedGraph& g, std::span<const std::size_t> edge_indices) {
  std::vector<bool> keep(g.edge_count(), false);
  for (std::size_t i : edge_indices) {
    if (i >= g.edge_count()) throw InvalidInput("unknown edge index " + std::to_string(i));
    if (keep[i]) throw InvalidInput("edge index " + std::to_string(i) + " listed twice");
    keep[i] = true;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (keep[i]) edges.push_back(g.edges()[i]);
  }
  return WeightedGraph(g.vertices(), std::move(edges));
}

WeightedGraph without_edge(const WeightedGraph& g, std::string_view u, std::string_view v) {
  auto e = g.find_edge(u, v);
  if (!e) throw InvalidInput("no edge " + std::string(u) + std::string(v));
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i != *e) rest.push_back(i);
  }
  return induced_sublengths(g, rest);
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      throw InvalidInput(where + ": unknown key '" + it.key() + "'");
    }
  }
}

}  // namespace

WeightedGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("graph JSON: top level must be an object");
  reject_unknown_keys(doc, {"vertices", "edges"}, "graph JSON");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw InvalidInput("graph JSON: 'vertices' array required");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw InvalidInput("graph JSON: 'edges' array required");
  }
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw InvalidInput("graph JSON: vertex identifiers must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object()) throw InvalidInput("graph JSON: edges must be objects");
    reject_unknown_keys(e, {"u", "v", "length"}, "graph JSON edge");
    if (!e.contains("u") || !e["u"].is_string() || !e.contains("v") || !e["v"].is_string()) {
      throw InvalidInput("graph JSON edge: 'u' and 'v' strings required");
    }
    if (!e.contains("length") || !e["length"].is_number()) {
      throw InvalidInput("graph JSON edge: numeric 'length' required");
    }
    edges.push_back({e["u"].get<std::string>(), e["v"].get<std::string>(), e["length"].get<double>()});
  }
  return WeightedGraph(std::move(vertices), std::move(edges));
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

std::string graph_to_json(const WeightedGraph& g) {
  std::vector<std::string> names = g.vertices();
  std::sort(names.begin(), names.end());
  json doc;
  doc["vertices"] = names;
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"length", e.length}});
  }
  return doc.dump(2) + "\n";
}

void save_graph(const WeightedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write graph file '" + path + "'");
  out << graph_to_json(g);
}

}  // namespace linkage
