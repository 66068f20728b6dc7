#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linkage/graph.hpp"
#include "linkage/intervals.hpp"

namespace linkage {

/// Polygon inequality: max <= sum of the others (with 1e-12 relative slack).
/// A 2-cycle is a parallel pair. Throws InvalidInput for fewer than 2 lengths.
bool cycle_realizable(std::span<const double> lengths);

/// Admissible closing lengths of an open path:
/// [max(0, 2 max - sum), sum]. Throws InvalidInput on an empty list.
IntervalSet cycle_closure_interval(std::span<const double> path_lengths);

/// K4 lengths: a = v1v2, b = v2v4, c = v3v4, d = v1v3, alpha = v2v3, beta = v1v4.
struct K4Lengths {
  double a = 0, b = 0, c = 0, d = 0, alpha = 0, beta = 0;

  double max() const;
  /// Lengths of K4 from four points, in the labeling above.
  static K4Lengths from_points(const Point& v1, const Point& v2, const Point& v3, const Point& v4);
};

/// 5x5 bordered Cayley-Menger matrix, rows/cols ordered (border, v1, v2, v3, v4).
template <typename Scalar>
Eigen::Matrix<Scalar, 5, 5> cayley_menger_matrix(Scalar a, Scalar b, Scalar c, Scalar d,
                                                 Scalar alpha, Scalar beta) {
  const Scalar a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
  const Scalar al2 = alpha * alpha, be2 = beta * beta;
  Eigen::Matrix<Scalar, 5, 5> m;
  m << 0, 1, 1, 1, 1,
       1, 0, a2, d2, be2,
       1, a2, 0, al2, b2,
       1, d2, al2, 0, c2,
       1, be2, b2, c2, 0;
  return m;
}

double cayley_menger_det(const K4Lengths& k);

/// Zero tolerance for the determinant: it is homogeneous of degree 6 in the
/// lengths.
double cayley_menger_tolerance(const K4Lengths& k);

bool k4_realizable(const K4Lengths& k);

WeightedGraph k4_graph(const K4Lengths& k);

/// 1/2 sum_e (|p_u - p_v|^2 - l_e^2)^2 over a flat coordinate vector
/// (x0, y0, x1, y1, ...). Writes the gradient when `grad` is non-null.
double least_squares_objective(const WeightedGraph& g, const Eigen::VectorXd& x,
                               Eigen::VectorXd* grad = nullptr);

struct DescentOptions {
  int max_iterations = 500;
  double gradient_tol = 1e-12;
};

/// Levenberg-Marquardt from x0 with the coordinates flagged in `fixed`
/// (per vertex) held constant.
Eigen::VectorXd local_descent(const WeightedGraph& g, Eigen::VectorXd x0,
                              const std::vector<bool>& fixed, const DescentOptions& opts = {});

/// Verdict tolerance 1e-7 (1 + max length).
double feasibility_tolerance(const WeightedGraph& g);

struct RealizeOptions {
  int restarts = 100;
  std::uint64_t seed = 0;
  unsigned workers = 0;  // 0: hardware concurrency
  bool stop_at_first_success = true;
  /// Keep every feasible restart result, not just the best one.
  bool keep_feasible = false;
  std::optional<PinnedFrame> pin;
  DescentOptions descent;
};

struct RealizeReport {
  Realization best_realization;
  double best_residual = 0.0;
  int restarts_used = 0;
  int best_restart = -1;
  bool realized = false;
  double tolerance = 0.0;
  /// Max edge residual reached by every restart that ran, in index order.
  std::vector<double> restart_residuals;
  /// (restart index, realization) for each feasible restart when requested.
  std::vector<std::pair<int, Realization>> feasible;

  /// Counts of restart residuals per decade, keyed by floor(log10(residual)),
  /// exact zeros under key -300.
  std::map<int, int> residual_histogram() const;
};

/// Restarts are evaluated in fixed blocks so the result does not depend on
/// the worker count; with stop_at_first_success the search ends after the
/// first block containing a success.
RealizeReport attempt_realize(const WeightedGraph& g, const RealizeOptions& opts);
RealizeReport attempt_realize(const WeightedGraph& g, int restarts, std::uint64_t seed);

struct Extension {
  WeightedGraph graph;
  Realization witness;
};

/// Completes a partial realization: vertices without a position are placed at
/// (0, top + k) for the k-th such vertex (k from 1, top = max(0, max y)),
/// and every edge outside `sub_edges` gets its measured length. Throws
/// InvalidInput when the sub-edges are not realized within 1e-9 (1 + max).
Extension extend_to_realizable(const WeightedGraph& g, std::span<const std::size_t> sub_edges,
                               const std::map<std::string, Point>& sub_positions);

/// Same, realizing the subgraph first with attempt_realize.
Extension extend_to_realizable(const WeightedGraph& g, std::span<const std::size_t> sub_edges,
                               std::uint64_t seed = 0);

}  // namespace linkage
