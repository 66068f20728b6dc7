#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkage/geometry.hpp"

namespace linkage {

struct Edge {
  std::string u;
  std::string v;
  double length = 0.0;

  bool operator==(const Edge&) const = default;
};

/// A finite graph with a nonnegative length on every edge. Parallel edges are
/// distinct records; edge order is preserved.
///
/// Construction does not validate; call validate() for the violation list.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Position of `name` in vertices(), first occurrence.
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;

  /// Index of the first edge joining u and v (either orientation).
  std::optional<std::size_t> find_edge(std::string_view u, std::string_view v) const;

  double max_length() const;
  double total_length() const;

  bool operator==(const WeightedGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class ViolationKind { loop, missing_vertex, negative_length, duplicate_vertex, non_finite_length };

struct Violation {
  ViolationKind kind;
  std::size_t edge_index = 0;  // unused for duplicate_vertex
  std::string message;
};

std::string to_string(ViolationKind kind);

/// Every invariant violation of `g`; empty means ok.
std::vector<Violation> validate(const WeightedGraph& g);

/// Vertex positions aligned with the vertex order of the owning graph.
struct Realization {
  std::vector<Point> points;

  const Point& at(std::size_t i) const { return points.at(i); }
};

/// |d(p(u), p(v)) - l(uv)| for edge `edge_index`.
double edge_residual(const WeightedGraph& g, const Realization& p, std::size_t edge_index);
double max_edge_residual(const WeightedGraph& g, const Realization& p);
std::vector<double> edge_residuals(const WeightedGraph& g, const Realization& p);

/// Gauge fixing a directed edge: p(origin) = (0,0), p(axis) = (l, 0).
struct PinnedFrame {
  std::string origin;
  std::string axis;
};

/// Checks that origin/axis exist, are joined by an edge and that edge has
/// positive length; returns that length.
double check_pin(const WeightedGraph& g, const PinnedFrame& pin);

/// Applies the orientation-preserving isometry taking p into the pinned
/// frame. Requires p(origin) != p(axis).
Realization pin_realization(const WeightedGraph& g, const PinnedFrame& pin, const Realization& p);

struct Cycle {
  std::vector<std::string> vertices;  // cyclic sequence, canonical rotation
  std::vector<std::size_t> edges;     // edges[i] joins vertices[i], vertices[i+1]
  std::vector<double> lengths;
};

inline constexpr std::size_t kMaxCycleVertices = 16;

/// All simple cycles, each once up to rotation and reversal. A pair of
/// parallel edges is a 2-cycle. Sorted by length, then vertex names, then
/// edge indices. Throws SizeLimitExceeded above kMaxCycleVertices vertices.
std::vector<Cycle> enumerate_simple_cycles(const WeightedGraph& g);

/// Same vertex set, only the listed edges (kept in original order).
WeightedGraph induced_sublengths(const WeightedGraph& g, std::span<const std::size_t> edge_indices);

WeightedGraph without_edge(const WeightedGraph& g, std::string_view u, std::string_view v);

// JSON graph files: {"vertices": [...], "edges": [{"u":..,"v":..,"length":..}]}
WeightedGraph parse_graph_json(std::string_view text);
WeightedGraph load_graph(const std::string& path);
/// Canonical text: vertices sorted, edge order preserved, trailing newline.
std::string graph_to_json(const WeightedGraph& g);
void save_graph(const WeightedGraph& g, const std::string& path);

}  // namespace linkage
