#include "linkage/report_json.hpp"

#include <cmath>

namespace linkage::report {

namespace {

// NaN and infinities have no JSON spelling.
Json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

Json point(const Point& p) { return Json::array({number(p.x()), number(p.y())}); }

void put_optional(Json& j, const char* key, const std::optional<double>& v) {
  if (v) j[key] = number(*v);
}

}  // namespace

Json intervals(const IntervalSet& s) {
  Json arr = Json::array();
  for (const Interval& p : s.intervals()) arr.push_back(Json::array({number(p.lo), number(p.hi)}));
  return arr;
}

Json bounds(const StageBounds& b) {
  Json j = Json::object();
  put_optional(j, "m", b.m);
  put_optional(j, "M", b.M);
  put_optional(j, "n", b.n);
  put_optional(j, "N", b.N);
  put_optional(j, "mu1", b.mu1);
  put_optional(j, "mu2", b.mu2);
  return j;
}

Json arcs(const CircleArcSet& s) {
  return {{"center_x", number(s.center_x)},
          {"radius", number(s.radius)},
          {"kind", to_string(s.kind)},
          {"lo", number(s.lo)},
          {"hi", number(s.hi)}};
}

Json stage(const StageReport& r) {
  Json j;
  j["stage"] = to_string(r.stage);
  j["intervals"] = intervals(r.feasible_set);
  j["interval_count"] = r.feasible_set.size();
  j["bounds"] = bounds(r.bounds);
  if (r.stage == Stage::gamma) {
    j["continuum_samples"] = r.continuum_samples;
    j["continuum_gammas"] = intervals(r.continuum_gammas);
    j["exceeds_interval_bound"] = r.exceeds_interval_bound;
  }
  j["notes"] = r.notes;
  return j;
}

Json k33_lengths(const K33Lengths& l) {
  Json j;
  j["a"] = number(l.a);
  j["b"] = number(l.b);
  j["c"] = number(l.c);
  j["d"] = number(l.d);
  j["e"] = number(l.e);
  put_optional(j, "f", l.f);
  put_optional(j, "alpha", l.alpha);
  put_optional(j, "beta", l.beta);
  put_optional(j, "gamma", l.gamma);
  return j;
}

Json realization(const WeightedGraph& g, const Realization& p) {
  Json j = Json::object();
  for (std::size_t i = 0; i < g.vertex_count() && i < p.points.size(); ++i) {
    j[g.vertices()[i]] = point(p.points[i]);
  }
  return j;
}

Json realize(const WeightedGraph& g, const RealizeReport& r) {
  Json j;
  j["verdict"] = r.realized ? "realized" : "no-realization-found";
  j["best_residual"] = number(r.best_residual);
  j["tolerance"] = number(r.tolerance);
  j["restarts_used"] = r.restarts_used;
  j["best_restart"] = r.best_restart;
  j["coordinates"] = realization(g, r.best_realization);
  Json edges = Json::array();
  if (r.best_realization.points.size() == g.vertex_count()) {
    const auto res = edge_residuals(g, r.best_realization);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[i];
      edges.push_back({{"u", e.u}, {"v", e.v}, {"length", number(e.length)}, {"residual", number(res[i])}});
    }
  }
  j["edge_residuals"] = edges;
  Json hist = Json::array();
  for (const auto& [decade, n] : r.residual_histogram()) {
    hist.push_back({{"decade", decade}, {"restarts", n}});
  }
  j["residual_histogram"] = hist;
  return j;
}

Json cycles(const std::vector<Cycle>& cs) {
  Json arr = Json::array();
  for (const Cycle& c : cs) {
    Json lengths = Json::array();
    for (double x : c.lengths) lengths.push_back(number(x));
    arr.push_back({{"vertices", c.vertices},
                   {"edges", c.edges},
                   {"lengths", lengths},
                   {"realizable", cycle_realizable(c.lengths)}});
  }
  return {{"count", cs.size()}, {"cycles", arr}};
}

Json components(const WeightedGraph& g, const ComponentReport& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["count"] = r.count;
  j["empty_as_one_count"] = r.empty_as_one_count();
  Json comps = Json::array();
  for (std::size_t i = 0; i < r.representatives.size(); ++i) {
    const ConfigPoint& p = r.representatives[i];
    Json c;
    c["dimension"] = i < r.dimensions.size() ? to_string(r.dimensions[i]) : "unknown";
    if (p.theta) c["theta"] = number(*p.theta);
    if (p.tuple) c["tuple"] = tuple_name(*p.tuple);
    if (i < r.mirror_of.size()) c["mirror_of"] = r.mirror_of[i];
    c["representative"] = realization(g, p.realization);
    comps.push_back(std::move(c));
  }
  j["components"] = comps;
  if (r.method == CountMethod::sweep_exact) {
    j["diagnostics"] = {{"roots", r.roots},
                        {"marked_samples", r.marked_samples},
                        {"glue_edges", r.glue_edges},
                        {"continuum_samples", r.continuum_samples}};
  } else {
    double worst = 0.0;
    std::size_t knots = 0;
    for (const PathCertificate& c : r.certificates) {
      worst = std::max(worst, c.max_residual);
      knots += c.knots.size();
    }
    j["diagnostics"] = {{"feasible_samples", r.feasible_samples},
                        {"distinct_points", r.distinct_points},
                        {"certificates", r.certificates.size()},
                        {"certificate_knots", knots},
                        {"certificate_max_residual", number(worst)}};
  }
  j["notes"] = r.notes;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace linkage::report
