#include "linkage/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace linkage {

void SvgScene::add_realization(const WeightedGraph& g, const Realization& p) {
  for (const Edge& e : g.edges()) {
    segments.push_back({p.points[g.require_index(e.u)], p.points[g.require_index(e.v)]});
  }
  for (std::size_t i = 0; i < g.vertex_count(); ++i) dots.push_back({p.points[i], g.vertices()[i]});
}

void SvgScene::add_workspace(const CircleArcSet& s) {
  circles.push_back({Point(s.center_x, 0.0), s.radius});
  if (!s.is_empty()) arc_sets.push_back(s);
}

namespace {

constexpr double kMargin = 1.0;  // plane units around the content

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  return s == "-0.000" ? "0.000" : s;
}

// Screen coordinates: y flipped.
double sx(double x) { return kSvgPixelsPerUnit * x; }
double sy(double y) { return -kSvgPixelsPerUnit * y; }

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string arc_path(const CircleArcSet& s, const ArcPiece& piece) {
  const Point a = s.point_at(piece.from);
  const Point b = s.point_at(piece.to);
  const double span = piece.to - piece.from;
  const double r = kSvgPixelsPerUnit * s.radius;
  // Counterclockwise in the plane is sweep-flag 0 once y is flipped.
  return "M " + fmt(sx(a.x())) + " " + fmt(sy(a.y())) + " A " + fmt(r) + " " + fmt(r) + " 0 " +
         (span > std::numbers::pi ? "1" : "0") + " 0 " + fmt(sx(b.x())) + " " + fmt(sy(b.y()));
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
  double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;
  bool first = true;
  auto grow = [&](double xa, double ya, double xb, double yb) {
    if (first) {
      x0 = xa, y0 = ya, x1 = xb, y1 = yb;
      first = false;
      return;
    }
    x0 = std::min(x0, xa), y0 = std::min(y0, ya), x1 = std::max(x1, xb), y1 = std::max(y1, yb);
  };
  for (const auto& d : scene.dots) grow(d.p.x(), d.p.y(), d.p.x(), d.p.y());
  for (const auto& s : scene.segments) {
    grow(s.a.x(), s.a.y(), s.a.x(), s.a.y());
    grow(s.b.x(), s.b.y(), s.b.x(), s.b.y());
  }
  for (const auto& c : scene.circles) grow(c.c.x() - c.r, c.c.y() - c.r, c.c.x() + c.r, c.c.y() + c.r);
  x0 -= kMargin, y0 -= kMargin, x1 += kMargin, y1 += kMargin;

  const double w = sx(x1) - sx(x0), h = sx(y1) - sx(y0);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(w) + "\" height=\"" +
         fmt(h) + "\" viewBox=\"" + fmt(sx(x0)) + " " + fmt(sy(y1)) + " " + fmt(w) + " " + fmt(h) + "\">\n";
  if (!scene.title.empty()) out += "  <title>" + escape(scene.title) + "</title>\n";
  // x-axis through the pinned edge
  out += "  <line x1=\"" + fmt(sx(x0)) + "\" y1=\"0.000\" x2=\"" + fmt(sx(x1)) +
         "\" y2=\"0.000\" stroke=\"#bbbbbb\" stroke-width=\"0.5\" stroke-dasharray=\"4 3\"/>\n";
  for (const auto& c : scene.circles) {
    out += "  <circle cx=\"" + fmt(sx(c.c.x())) + "\" cy=\"" + fmt(sy(c.c.y())) + "\" r=\"" +
           fmt(kSvgPixelsPerUnit * c.r) + "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.75\"/>\n";
  }
  for (const auto& s : scene.arc_sets) {
    if (s.kind == ArcKind::full || s.radius == 0.0) {
      out += "  <circle cx=\"" + fmt(sx(s.center_x)) + "\" cy=\"0.000\" r=\"" + fmt(kSvgPixelsPerUnit * s.radius) +
             "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
      continue;
    }
    for (const ArcPiece& piece : pieces(s)) {
      if (piece.to - piece.from <= 0.0) {
        const Point p = s.point_at(piece.from);
        out += "  <circle cx=\"" + fmt(sx(p.x())) + "\" cy=\"" + fmt(sy(p.y())) +
               "\" r=\"3.000\" fill=\"#d62728\"/>\n";
        continue;
      }
      out += "  <path d=\"" + arc_path(s, piece) + "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
    }
  }
  for (const auto& s : scene.segments) {
    out += "  <line x1=\"" + fmt(sx(s.a.x())) + "\" y1=\"" + fmt(sy(s.a.y())) + "\" x2=\"" + fmt(sx(s.b.x())) +
           "\" y2=\"" + fmt(sy(s.b.y())) + "\" stroke=\"#1f1f1f\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& d : scene.dots) {
    out += "  <circle cx=\"" + fmt(sx(d.p.x())) + "\" cy=\"" + fmt(sy(d.p.y())) + "\" r=\"3.500\" fill=\"#1f77b4\"/>\n";
    if (!d.label.empty()) {
      out += "  <text x=\"" + fmt(sx(d.p.x()) + 5.0) + "\" y=\"" + fmt(sy(d.p.y()) - 5.0) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(d.label) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace linkage
