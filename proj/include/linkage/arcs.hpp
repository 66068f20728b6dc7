#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkage/geometry.hpp"
#include "linkage/intervals.hpp"

namespace linkage {

enum class ArcKind { empty, full, around_zero, around_pi, pair };

std::string to_string(ArcKind kind);

/// Axis-symmetric subset of the circle with centre (center_x, 0) and radius
/// `radius`: the points at angle phi with |phi| in [lo, hi], 0 <= lo <= hi <= pi.
///
/// around_zero has lo == 0, around_pi has hi == pi, pair has 0 < lo and
/// hi < pi (lo == hi is a pair of points). A zero-radius circle is a point
/// and is reported as full.
struct CircleArcSet {
  double center_x = 0.0;
  double radius = 0.0;
  ArcKind kind = ArcKind::empty;
  double lo = 0.0;
  double hi = 0.0;

  bool is_empty() const { return kind == ArcKind::empty; }
  bool is_split() const { return kind == ArcKind::pair; }
  bool contains_angle(double phi, double tol = 1e-12) const;
  Point point_at(double phi) const;
};

/// A connected angular range [from, to] on one circle, to - from <= 2 pi.
struct ArcPiece {
  double from = 0.0;
  double to = 0.0;
};

/// Connected pieces of `s`: one for full and single arcs, the upper piece
/// then the lower piece for a pair, none when empty.
std::vector<ArcPiece> pieces(const CircleArcSet& s);

/// Points of the circle whose distance from (annulus_center_x, 0) lies in
/// [r_min, r_max]. Throws InvalidInput on negative radii or r_min > r_max.
CircleArcSet circle_annulus_arcs(double circle_center_x, double circle_radius,
                                 double annulus_center_x, double r_min, double r_max);

CircleArcSet reflect_x(const CircleArcSet& s);

struct StageBounds {
  std::optional<double> m;
  std::optional<double> M;
  std::optional<double> n;
  std::optional<double> N;
  std::optional<double> mu1;
  std::optional<double> mu2;
};

struct DistanceSet {
  IntervalSet set;
  StageBounds bounds;
};

/// Extremal distance between two arc pieces, from the finite candidate set
/// (endpoints, axis points, projections through the centres, intersections).
Interval piece_distance_range(const CircleArcSet& a, const ArcPiece& pa,
                              const CircleArcSet& b, const ArcPiece& pb);

/// {d(w, w') : w in A, w' in B}. Intervals closer than 1e-9 relative are
/// merged. Throws PreconditionViolation when either set is empty.
DistanceSet arc_distance_set(const CircleArcSet& a, const CircleArcSet& b);

}  // namespace linkage
