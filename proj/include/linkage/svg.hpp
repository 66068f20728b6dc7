#pragma once

#include <string>
#include <vector>

#include "linkage/arcs.hpp"
#include "linkage/geometry.hpp"
#include "linkage/graph.hpp"

namespace linkage {

/// A figure in plane coordinates. Rendered at 40 px per unit with y up and
/// the viewBox fitted to the content.
struct SvgScene {
  struct Dot {
    Point p;
    std::string label;
  };
  struct Segment {
    Point a, b;
  };
  struct Circle {
    Point c;
    double r = 0.0;
  };

  std::vector<Dot> dots;
  std::vector<Segment> segments;
  std::vector<Circle> circles;          // thin guide circles
  std::vector<CircleArcSet> arc_sets;   // stroked workspace arcs
  std::string title;

  void add_realization(const WeightedGraph& g, const Realization& p);
  /// Guide circle plus the highlighted arcs of `s`.
  void add_workspace(const CircleArcSet& s);
};

inline constexpr double kSvgPixelsPerUnit = 40.0;

std::string render_svg(const SvgScene& scene);

}  // namespace linkage
