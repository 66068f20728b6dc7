#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkage/graph.hpp"
#include "linkage/k33.hpp"

namespace linkage {

/// A pinned realization. Distance between two points is the largest
/// displacement of any vertex.
struct ConfigPoint {
  Realization realization;
  /// Sweep provenance, when the point came from the K_{3,3} sweep.
  std::optional<double> theta;
  std::optional<SignTuple> tuple;
};

double config_distance(const ConfigPoint& p, const ConfigPoint& q);

enum class CountMethod { sweep_exact, sampling };
enum class Dimension { isolated_point, positive_dimensional };

std::string to_string(CountMethod m);
std::string to_string(Dimension d);

/// Knots of a connecting path, each projected onto the constraint set.
struct PathCertificate {
  std::size_t from = 0;  // indices into the deduplicated sample list
  std::size_t to = 0;
  std::vector<Realization> knots;
  double max_residual = 0.0;
  /// Largest allowed displacement between consecutive knots.
  double step_limit = 0.0;
};

struct ComponentReport {
  int count = 0;
  /// The empty space counted as one component.
  int empty_as_one_count() const { return count > 0 ? count : 1; }
  CountMethod method = CountMethod::sweep_exact;
  std::vector<ConfigPoint> representatives;
  std::vector<Dimension> dimensions;
  /// Component holding the x-axis reflection of each representative (sweep only).
  std::vector<int> mirror_of;
  std::vector<std::string> notes;

  // sweep diagnostics
  std::size_t roots = 0;
  std::size_t marked_samples = 0;
  std::size_t glue_edges = 0;
  std::size_t continuum_samples = 0;

  // sampling diagnostics
  std::size_t feasible_samples = 0;
  std::size_t distinct_points = 0;
  std::vector<PathCertificate> certificates;
};

struct SweepCountOptions {
  std::size_t resolution = 20000;
  unsigned workers = 0;
};

/// Components of the pinned configuration space of (K_{3,3}, l), read off the
/// (theta, sign tuple) sweep of G_3. Throws InvalidInput for resolution < 1000.
ComponentReport k33_component_count(const K33Lengths& l, const SweepCountOptions& opts = {});

struct SamplingOptions {
  int samples = 500;
  std::uint64_t seed = 0;
  int knots = 32;
  int knot_iterations = 100;
  int neighbours = 6;
  unsigned workers = 0;
};

/// Sampling estimate: feasible pinned samples joined by projected straight
/// paths, bisected through projected midpoints when a straight path breaks.
/// Lower confidence than the sweep.
ComponentReport generic_component_count(const WeightedGraph& g, const PinnedFrame& pin,
                                        const SamplingOptions& opts = {});

/// Re-checks a certificate: every knot feasible and consecutive knots close.
bool verify_certificate(const WeightedGraph& g, const PathCertificate& c);

struct ParityResult {
  bool consistent = true;
  int count = 0;
  int empty_as_one_count = 1;
  std::string details;
};

/// Consistent iff the count with the empty space as one is one of 1, 2, 4, 6, 8.
ParityResult component_parity_check(const K33Lengths& l, const SweepCountOptions& opts = {});

}  // namespace linkage
