#include "linkage/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "linkage/errors.hpp"

namespace linkage {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double phi) {
  double w = std::remainder(phi, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

bool piece_contains(const ArcPiece& p, double phi, double tol) {
  if (p.to - p.from >= 2.0 * kPi - tol) return true;
  double x = phi;
  while (x < p.from - tol) x += 2.0 * kPi;
  while (x > p.from + 2.0 * kPi - tol) x -= 2.0 * kPi;
  return x <= p.to + tol;
}

}  // namespace

std::string to_string(ArcKind kind) {
  switch (kind) {
    case ArcKind::empty: return "empty";
    case ArcKind::full: return "full";
    case ArcKind::around_zero: return "arc_around_0";
    case ArcKind::around_pi: return "arc_around_pi";
    case ArcKind::pair: return "arc_pair";
  }
  return "unknown";
}

bool CircleArcSet::contains_angle(double phi, double tol) const {
  if (kind == ArcKind::empty) return false;
  if (kind == ArcKind::full) return true;
  const double a = std::abs(wrap_angle(phi));
  return a >= lo - tol && a <= hi + tol;
}

Point CircleArcSet::point_at(double phi) const {
  return {center_x + radius * std::cos(phi), radius * std::sin(phi)};
}

std::vector<ArcPiece> pieces(const CircleArcSet& s) {
  switch (s.kind) {
    case ArcKind::empty: return {};
    case ArcKind::full: return {{-kPi, kPi}};
    case ArcKind::around_zero: return {{-s.hi, s.hi}};
    case ArcKind::around_pi: return {{s.lo, 2.0 * kPi - s.lo}};
    case ArcKind::pair: return {{s.lo, s.hi}, {-s.hi, -s.lo}};
  }
  return {};
}

CircleArcSet circle_annulus_arcs(double cx, double r, double ax, double r_min, double r_max) {
  if (!(r >= 0.0) || !(r_min >= 0.0) || !(r_max >= r_min)) {
    throw InvalidInput("circle_annulus_arcs: need radii >= 0 and r_min <= r_max");
  }
  CircleArcSet out{cx, r, ArcKind::empty, 0.0, 0.0};
  const double delta = cx - ax;
  const double base = delta * delta + r * r;
  const double u = 2.0 * r * delta;
  const double scale = base + r_max * r_max;
  const double tol = 1e-12 * scale;
  if (std::abs(u) <= tol) {
    // distance to the annulus centre does not depend on the angle
    if (base >= r_min * r_min - tol && base <= r_max * r_max + tol) {
      out.kind = ArcKind::full;
      out.hi = kPi;
    }
    return out;
  }
  // r_min^2 <= base + u cos(phi) <= r_max^2
  double c_lo = (r_min * r_min - base) / u;
  double c_hi = (r_max * r_max - base) / u;
  if (u < 0.0) std::swap(c_lo, c_hi);
  const double ctol = tol / std::abs(u);
  if (c_lo > 1.0 + ctol || c_hi < -1.0 - ctol || c_lo > c_hi + ctol) return out;
  c_lo = std::clamp(c_lo, -1.0, 1.0);
  c_hi = std::clamp(c_hi, -1.0, 1.0);
  if (c_lo > c_hi) c_lo = c_hi;
  const bool reaches_zero = c_hi >= 1.0 - ctol;
  const bool reaches_pi = c_lo <= -1.0 + ctol;
  out.lo = reaches_zero ? 0.0 : std::acos(c_hi);
  out.hi = reaches_pi ? kPi : std::acos(c_lo);
  if (reaches_zero && reaches_pi) {
    out.kind = ArcKind::full;
  } else if (reaches_zero) {
    out.kind = ArcKind::around_zero;
  } else if (reaches_pi) {
    out.kind = ArcKind::around_pi;
  } else {
    out.kind = ArcKind::pair;
  }
  return out;
}

CircleArcSet reflect_x(const CircleArcSet& s) {
  // the representation is symmetric by construction
  return s;
}

Interval piece_distance_range(const CircleArcSet& a, const ArcPiece& pa,
                              const CircleArcSet& b, const ArcPiece& pb) {
  const double tol = 1e-12;
  auto candidates = [&](const CircleArcSet& self, const ArcPiece& own, const CircleArcSet& other,
                        const ArcPiece& theirs) {
    std::vector<double> phis{own.from, own.to, 0.0, kPi};
    for (double psi : {theirs.from, theirs.to}) {
      const Point q = other.point_at(psi);
      const double dir = std::atan2(q.y(), q.x() - self.center_x);
      phis.push_back(dir);
      phis.push_back(dir + kPi);
    }
    std::vector<double> kept;
    for (double phi : phis) {
      if (piece_contains(own, phi, tol)) kept.push_back(phi);
    }
    return kept;
  };
  const auto ca = candidates(a, pa, b, pb);
  const auto cb = candidates(b, pb, a, pa);
  double lo = INFINITY;
  double hi = 0.0;
  for (double phi : ca) {
    const Point p = a.point_at(phi);
    for (double psi : cb) {
      const double d = (p - b.point_at(psi)).norm();
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  // a common point of the two pieces makes the minimum zero
  const double dist = std::abs(b.center_x - a.center_x);
  if (dist > 0.0 && a.radius > 0.0 && b.radius > 0.0) {
    const double along = (dist * dist + a.radius * a.radius - b.radius * b.radius) / (2.0 * dist);
    const double disc = a.radius * a.radius - along * along;
    if (disc >= -1e-12 * (a.radius * a.radius + b.radius * b.radius)) {
      const double sgn = b.center_x > a.center_x ? 1.0 : -1.0;
      const double h = std::sqrt(std::max(disc, 0.0));
      for (double y : {h, -h}) {
        const Point w(a.center_x + sgn * along, y);
        const double phi = std::atan2(w.y(), w.x() - a.center_x);
        const double psi = std::atan2(w.y(), w.x() - b.center_x);
        if (piece_contains(pa, phi, tol) && piece_contains(pb, psi, tol)) lo = 0.0;
      }
    }
  }
  return {lo, hi};
}

DistanceSet arc_distance_set(const CircleArcSet& a, const CircleArcSet& b) {
  if (a.is_empty() || b.is_empty()) {
    throw PreconditionViolation("arc_distance_set: empty arc set");
  }
  const auto pa = pieces(a);
  const auto pb = pieces(b);
  std::vector<Interval> parts;
  for (const ArcPiece& x : pa) {
    for (const ArcPiece& y : pb) parts.push_back(piece_distance_range(a, x, b, y));
  }
  DistanceSet out;
  IntervalSet raw = IntervalSet::from(parts);
  const double top = raw.hull() ? raw.hull()->hi : 0.0;
  out.set = raw.merge_gaps(1e-9 * std::max(1.0, top));
  if (auto h = out.set.hull()) {
    out.bounds.m = h->lo;
    out.bounds.N = h->hi;
  }
  if (a.is_split() && b.is_split()) {
    out.bounds.M = piece_distance_range(a, pa[0], b, pb[0]).hi;
    out.bounds.n = piece_distance_range(a, pa[1], b, pb[0]).lo;
  }
  return out;
}

}  // namespace linkage
