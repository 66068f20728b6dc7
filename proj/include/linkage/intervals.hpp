#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linkage {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double center() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool operator==(const Interval&) const = default;
};

/// Finite union of disjoint closed intervals in [0, inf), sorted ascending.
/// Overlapping or touching inputs are merged on construction.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Normalizes arbitrary [lo, hi] pairs. Pairs with lo > hi are dropped,
  /// negative parts are clipped at 0.
  static IntervalSet from(std::vector<Interval> parts);
  static IntervalSet single(double lo, double hi) { return from({{lo, hi}}); }
  static IntervalSet point(double x) { return from({{x, x}}); }
  static IntervalSet empty() { return {}; }

  const std::vector<Interval>& intervals() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool is_empty() const { return parts_.empty(); }
  const Interval& operator[](std::size_t i) const { return parts_[i]; }

  bool contains(double x, double tol = 0.0) const;
  /// Index of the interval containing x (within tol), if any.
  std::optional<std::size_t> locate(double x, double tol = 0.0) const;
  std::optional<Interval> hull() const;

  /// Merges neighbours whose gap is <= gap.
  IntervalSet merge_gaps(double gap) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b);

std::string to_json(const IntervalSet& s);
/// One "lo,hi" row per interval, %.17g.
std::string to_csv(const IntervalSet& s);

}  // namespace linkage
