#pragma once

#include <Eigen/Core>
#include <cmath>

namespace linkage {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

using Point = Vec2<double>;

/// Reflection in the x-axis.
template <typename Derived>
Vec2<typename Derived::Scalar> reflect_x(const Eigen::MatrixBase<Derived>& p) {
  return {p.x(), -p.y()};
}

enum class IntersectionKind { none, point, continuum };

template <typename Scalar>
struct CircleIntersection {
  IntersectionKind kind = IntersectionKind::none;
  Vec2<Scalar> point = Vec2<Scalar>::Zero();
  /// Squared half-chord r1^2 - x^2; negative when the circles miss.
  Scalar discriminant = Scalar(0);
};

/// Intersects circle(c1, r1) with circle(c2, r2) and returns the branch
/// selected by `sign`: +1 is the point to the left of the directed line
/// c1 -> c2, -1 the point to the right.
///
/// Discriminants in [-tol, 0) are clamped to the tangency point. Centres
/// closer than `coincide_tol` are treated as coincident: equal radii give a
/// continuum, anything else no intersection.
///
/// The construction is exactly mirror-symmetric in floating point:
/// reflecting both centres in the x-axis and flipping `sign` yields the
/// bitwise reflection of the result.
template <typename Scalar>
CircleIntersection<Scalar> intersect_circles(const Vec2<Scalar>& c1, Scalar r1,
                                             const Vec2<Scalar>& c2, Scalar r2,
                                             int sign, Scalar tol,
                                             Scalar coincide_tol) {
  using std::abs;
  using std::hypot;
  using std::sqrt;
  CircleIntersection<Scalar> out;
  const Scalar dx = c2.x() - c1.x();
  const Scalar dy = c2.y() - c1.y();
  const Scalar dist = hypot(dx, dy);
  if (dist <= coincide_tol) {
    out.kind = abs(r1 - r2) <= coincide_tol ? IntersectionKind::continuum
                                             : IntersectionKind::none;
    out.discriminant = out.kind == IntersectionKind::continuum ? r1 * r1 : Scalar(-1);
    out.point = c1;
    return out;
  }
  const Scalar along = (dist * dist + r1 * r1 - r2 * r2) / (2 * dist);
  const Scalar disc = r1 * r1 - along * along;
  out.discriminant = disc;
  if (disc < -tol) return out;
  const Scalar half_chord = disc > 0 ? sqrt(disc) : Scalar(0);
  const Scalar ux = dx / dist;
  const Scalar uy = dy / dist;
  const Scalar s = sign >= 0 ? half_chord : -half_chord;
  out.point = Vec2<Scalar>(c1.x() + along * ux - s * uy, c1.y() + along * uy + s * ux);
  out.kind = IntersectionKind::point;
  return out;
}

}  // namespace linkage
