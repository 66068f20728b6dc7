#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linkage/arcs.hpp"
#include "linkage/errors.hpp"
#include "linkage/geometry.hpp"
#include "linkage/graph.hpp"
#include "linkage/intervals.hpp"

namespace linkage {

/// K_{3,3} lengths: a = v1v6, b = v1v2, c = v2v3, d = v3v4, e = v4v5,
/// f = v5v6, alpha = v1v4, beta = v3v6, gamma = v2v5. Later-stage values are
/// optional.
struct K33Lengths {
  double a = 0, b = 0, c = 0, d = 0, e = 0;
  std::optional<double> f, alpha, beta, gamma;

  /// Sum of the lengths present.
  double scale() const;
  /// Throws InvalidInput naming the first missing field among f, alpha, beta, gamma up to `stage`.
  void require(int stage) const;
  std::vector<double> values() const;
};

/// Parses "a,b,c,d,e[,f[,alpha[,beta[,gamma]]]]".
K33Lengths parse_k33_lengths(const std::string& csv);
/// Reads {"a":..,"b":..,...} (unknown keys rejected) or a K_{3,3} graph file
/// on vertices v1..v6.
K33Lengths load_k33_lengths(const std::string& path);
std::string k33_lengths_to_json(const K33Lengths& l);

/// The graph on v1..v6 with every edge whose length is present.
WeightedGraph k33_graph(const K33Lengths& l);

enum class Stage { f, alpha, beta, gamma };
std::string to_string(Stage s);

struct StageReport {
  Stage stage = Stage::f;
  IntervalSet feasible_set;
  StageBounds bounds;
  /// Gamma stage only: sweep samples at which a circle intersection was a
  /// whole circle, and the hull of gamma values those continua reach.
  std::size_t continuum_samples = 0;
  IntervalSet continuum_gammas;
  /// Gamma stage only: more intervals than the four the staged analysis allows.
  bool exceeds_interval_bound = false;
  std::vector<std::string> notes;
};

StageReport f_interval(double a, double b, double c, double d, double e);
/// Throws PreconditionViolation when f is outside f_interval.
StageReport alpha_interval(double a, double b, double c, double d, double e, double f);

struct Workspaces {
  CircleArcSet w3;
  CircleArcSet w6;
};

/// Pinned frame p4 = (0,0), p1 = (alpha,0). Throws PreconditionViolation
/// when alpha is outside the alpha interval and EmptyWorkspace if either
/// workspace is empty.
Workspaces workspaces_g2(const K33Lengths& l);
StageReport beta_set(const K33Lengths& l);

/// Bit 2 set: s5 = -, bit 1: s3 = -, bit 0: s2 = -. Tuple 0 is (+,+,+).
using SignTuple = unsigned;
inline int sign_of(SignTuple t, int bit) { return (t >> bit) & 1u ? -1 : 1; }
std::string tuple_name(SignTuple t);

enum class PoseStatus { ok, infeasible, continuum };

struct G3Pose {
  PoseStatus status = PoseStatus::infeasible;
  std::array<Point, 6> p{};  // p[0] = v1 ... p[5] = v6
  /// Discriminants of the p5, p3, p2 intersections (in that order).
  std::array<double, 3> disc{};
  /// Which intersection (0: p5, 1: p3, 2: p2) was a continuum.
  int continuum_at = -1;
  double gamma = 0.0;
};

/// Evaluates G_3 = K_{3,3} - v2v5 from the angle theta of p6 around p1.
class G3Linkage {
 public:
  explicit G3Linkage(const K33Lengths& l);

  G3Pose pose(double theta, SignTuple t) const;
  /// Hull of gamma over a continuum pose (the free point sampled when it
  /// is p3); nullopt if nothing closes up.
  std::optional<Interval> continuum_range(const G3Pose& pose, SignTuple t) const;
  double tangency_tol() const { return tol_; }
  double coincide_tol() const { return coincide_; }
  const K33Lengths& lengths() const { return l_; }

 private:
  K33Lengths l_;
  double tol_;
  double coincide_;
};

/// theta_k = (k + 1/2 - N/2) 2 pi / N; mirror-symmetric, never exactly +-pi.
double grid_angle(std::size_t k, std::size_t n);

/// Poses on the sweep grid, indexed rows[tuple][k]. Filled in parallel over
/// k; the contents do not depend on the worker count.
struct PoseTable {
  std::size_t n = 0;
  std::array<std::vector<G3Pose>, 8> rows;
};

PoseTable tabulate_poses(const G3Linkage& link, std::size_t n, unsigned workers = 0);

struct BranchConfig {
  double theta = 0.0;
  SignTuple signs = 0;
};

struct SweepSample {
  std::size_t k = 0;
  BranchConfig config;
  bool continuum = false;
  double gamma = 0.0;  // meaningless for continuum samples
};

/// Every sample with PoseStatus ok or continuum, ordered by (k, tuple).
/// Identical for any worker count.
std::vector<SweepSample> sweep_g3(const K33Lengths& l, std::size_t resolution, unsigned workers = 0);

struct GammaOptions {
  std::size_t resolution = 20000;
  std::optional<double> merge_gap;  // default 1e-3 (a + ... + beta)
  unsigned workers = 0;
};

double default_merge_gap(const K33Lengths& l);

/// Throws InvalidInput for resolution < 1000.
StageReport gamma_set(const K33Lengths& l, const GammaOptions& opts = {});

/// Independent computation of the gamma set parametrized by the angle of p3
/// around p4. `seed` rotates the sample grid. Requires d > 0.
IntervalSet gamma_set_oracle(const K33Lengths& l, std::size_t samples, std::uint64_t seed,
                             std::optional<double> merge_gap = std::nullopt);

class StageChoiceError : public PreconditionViolation {
 public:
  StageChoiceError(Stage stage, double value, IntervalSet allowed);
  Stage stage;
  double value;
  IntervalSet allowed;
};

/// Reports for every stage whose input values are present, checking each
/// chosen value against the previous stage's set (tolerance 1e-9 scale).
std::vector<StageReport> staged_report(const K33Lengths& l, const GammaOptions& opts = {});

}  // namespace linkage
