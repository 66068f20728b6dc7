#include "linkage/k33.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "linkage/realizability.hpp"

namespace linkage {

namespace {

constexpr double kPi = std::numbers::pi;

struct Label {
  const char* name;
  const char* u;
  const char* v;
};

constexpr std::array<Label, 9> kLabels{{{"a", "v1", "v6"},
                                         {"b", "v1", "v2"},
                                         {"c", "v2", "v3"},
                                         {"d", "v3", "v4"},
                                         {"e", "v4", "v5"},
                                         {"f", "v5", "v6"},
                                         {"alpha", "v1", "v4"},
                                         {"beta", "v3", "v6"},
                                         {"gamma", "v2", "v5"}}};

std::array<std::optional<double>, 9> as_array(const K33Lengths& l) {
  return {l.a, l.b, l.c, l.d, l.e, l.f, l.alpha, l.beta, l.gamma};
}

K33Lengths from_array(const std::array<std::optional<double>, 9>& v) {
  for (std::size_t i = 0; i < 5; ++i) {
    if (!v[i]) throw InvalidInput(std::string("K33 lengths: missing '") + kLabels[i].name + "'");
  }
  for (std::size_t i = 5; i < 9; ++i) {
    if (!v[i]) {
      for (std::size_t j = i + 1; j < 9; ++j) {
        if (v[j]) {
          throw InvalidInput(std::string("K33 lengths: '") + kLabels[j].name + "' given without '" +
                             kLabels[i].name + "'");
        }
      }
      break;
    }
  }
  for (std::size_t i = 0; i < 9; ++i) {
    if (v[i] && (!std::isfinite(*v[i]) || *v[i] < 0.0)) {
      throw InvalidInput(std::string("K33 lengths: '") + kLabels[i].name + "' must be finite and >= 0");
    }
  }
  K33Lengths l;
  l.a = *v[0];
  l.b = *v[1];
  l.c = *v[2];
  l.d = *v[3];
  l.e = *v[4];
  l.f = v[5];
  l.alpha = v[6];
  l.beta = v[7];
  l.gamma = v[8];
  return l;
}

}  // namespace

double K33Lengths::scale() const {
  double s = 0.0;
  for (double x : values()) s += x;
  return s;
}

void K33Lengths::require(int stage) const {
  const std::array<std::pair<const std::optional<double>*, const char*>, 4> need{
      {{&f, "f"}, {&alpha, "alpha"}, {&beta, "beta"}, {&gamma, "gamma"}}};
  for (int i = 0; i < stage && i < 4; ++i) {
    if (!*need[static_cast<std::size_t>(i)].first) {
      throw InvalidInput(std::string("K33 lengths: '") + need[static_cast<std::size_t>(i)].second +
                         "' is required here");
    }
  }
}

std::vector<double> K33Lengths::values() const {
  std::vector<double> out;
  for (const auto& x : as_array(*this)) {
    if (x) out.push_back(*x);
  }
  return out;
}

K33Lengths parse_k33_lengths(const std::string& csv) {
  std::array<std::optional<double>, 9> v{};
  std::stringstream ss(csv);
  std::string tok;
  std::size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= 9) throw InvalidInput("K33 lengths: at most 9 values (a,b,c,d,e,f,alpha,beta,gamma)");
    try {
      std::size_t used = 0;
      v[i] = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidInput("K33 lengths: cannot parse '" + tok + "'");
    }
    ++i;
  }
  return from_array(v);
}

K33Lengths load_k33_lengths(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open lengths file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("lengths JSON: ") + e.what());
  }
  std::array<std::optional<double>, 9> v{};
  if (doc.is_object() && doc.contains("vertices")) {
    const WeightedGraph g = parse_graph_json(buf.str());
    for (std::size_t i = 0; i < 9; ++i) {
      if (auto e = g.find_edge(kLabels[i].u, kLabels[i].v)) v[i] = g.edges()[*e].length;
    }
    if (g.vertex_count() != 6) throw InvalidInput("K33 graph file must have vertices v1..v6");
    std::size_t known = 0;
    for (const auto& x : v) known += x.has_value();
    if (known != g.edge_count()) throw InvalidInput("K33 graph file has edges outside K_{3,3}");
    return from_array(v);
  }
  if (!doc.is_object()) throw InvalidInput("lengths JSON: object expected");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    auto lab = std::find_if(kLabels.begin(), kLabels.end(),
                            [&](const Label& x) { return it.key() == x.name; });
    if (lab == kLabels.end()) throw InvalidInput("lengths JSON: unknown key '" + it.key() + "'");
    if (!it.value().is_number()) throw InvalidInput("lengths JSON: '" + it.key() + "' must be a number");
    v[static_cast<std::size_t>(lab - kLabels.begin())] = it.value().get<double>();
  }
  return from_array(v);
}

std::string k33_lengths_to_json(const K33Lengths& l) {
  nlohmann::ordered_json j;
  const auto v = as_array(l);
  for (std::size_t i = 0; i < 9; ++i) {
    if (v[i]) j[kLabels[i].name] = *v[i];
  }
  return j.dump(2) + "\n";
}

WeightedGraph k33_graph(const K33Lengths& l) {
  std::vector<Edge> edges;
  const auto v = as_array(l);
  for (std::size_t i = 0; i < 9; ++i) {
    if (v[i]) edges.push_back({kLabels[i].u, kLabels[i].v, *v[i]});
  }
  return WeightedGraph({"v1", "v2", "v3", "v4", "v5", "v6"}, std::move(edges));
}

std::string to_string(Stage s) {
  switch (s) {
    case Stage::f: return "f";
    case Stage::alpha: return "alpha";
    case Stage::beta: return "beta";
    case Stage::gamma: return "gamma";
  }
  return "?";
}

StageReport f_interval(double a, double b, double c, double d, double e) {
  const double path[] = {a, b, c, d, e};
  StageReport r;
  r.stage = Stage::f;
  r.feasible_set = cycle_closure_interval(path);
  return r;
}

namespace {

void require_member(Stage stage, double value, const IntervalSet& set, double scale) {
  if (!set.contains(value, 1e-9 * std::max(1.0, scale))) throw StageChoiceError(stage, value, set);
}

}  // namespace

StageReport alpha_interval(double a, double b, double c, double d, double e, double f) {
  const StageReport fr = f_interval(a, b, c, d, e);
  require_member(Stage::f, f, fr.feasible_set, a + b + c + d + e + f);
  const double left[] = {a, e, f};
  const double right[] = {b, c, d};
  StageReport r;
  r.stage = Stage::alpha;
  r.feasible_set = interval_intersect(cycle_closure_interval(left), cycle_closure_interval(right));
  r.bounds.mu1 = 2.0 * std::max({a, e, f});
  r.bounds.mu2 = 2.0 * std::max({b, c, d});
  if (r.feasible_set.is_empty()) {
    // both closure intervals contain the shared hexagon diagonal, so this is a tolerance artefact
    throw PreconditionViolation("alpha interval empty although f is admissible");
  }
  return r;
}

Workspaces workspaces_g2(const K33Lengths& l) {
  l.require(2);
  const StageReport ar = alpha_interval(l.a, l.b, l.c, l.d, l.e, *l.f);
  require_member(Stage::alpha, *l.alpha, ar.feasible_set, l.scale());
  const double al = *l.alpha;
  Workspaces w;
  w.w6 = circle_annulus_arcs(al, l.a, 0.0, std::abs(l.e - *l.f), l.e + *l.f);
  w.w3 = circle_annulus_arcs(0.0, l.d, al, std::abs(l.b - l.c), l.b + l.c);
  if (w.w6.is_empty()) throw EmptyWorkspace("workspace of v6 is empty");
  if (w.w3.is_empty()) throw EmptyWorkspace("workspace of v3 is empty");
  return w;
}

StageReport beta_set(const K33Lengths& l) {
  const Workspaces w = workspaces_g2(l);
  const DistanceSet ds = arc_distance_set(w.w3, w.w6);
  StageReport r;
  r.stage = Stage::beta;
  r.feasible_set = ds.set;
  r.bounds = ds.bounds;
  const StageReport ar = alpha_interval(l.a, l.b, l.c, l.d, l.e, *l.f);
  r.bounds.mu1 = ar.bounds.mu1;
  r.bounds.mu2 = ar.bounds.mu2;
  return r;
}

std::string tuple_name(SignTuple t) {
  std::string s = "(";
  for (int bit = 2; bit >= 0; --bit) {
    s += sign_of(t, bit) > 0 ? '+' : '-';
    if (bit) s += ',';
  }
  return s + ")";
}

G3Linkage::G3Linkage(const K33Lengths& l) : l_(l) {
  l.require(3);
  const double s = std::max(l.scale(), 1e-300);
  tol_ = 1e-12 * s * s;
  coincide_ = 1e-12 * s;
}

G3Pose G3Linkage::pose(double theta, SignTuple t) const {
  G3Pose out;
  const double al = *l_.alpha;
  auto& p = out.p;
  p[3] = Point(0.0, 0.0);
  p[0] = Point(al, 0.0);
  p[5] = Point(al + l_.a * std::cos(theta), l_.a * std::sin(theta));
  const auto i5 = intersect_circles<double>(p[3], l_.e, p[5], *l_.f, sign_of(t, 2), tol_, coincide_);
  const auto i3 = intersect_circles<double>(p[3], l_.d, p[5], *l_.beta, sign_of(t, 1), tol_, coincide_);
  out.disc[0] = i5.discriminant;
  out.disc[1] = i3.discriminant;
  if (i5.kind == IntersectionKind::none || i3.kind == IntersectionKind::none) return out;
  p[4] = i5.point;
  p[2] = i3.point;
  if (i3.kind == IntersectionKind::continuum) {
    out.status = PoseStatus::continuum;
    out.continuum_at = 1;
    return out;
  }
  const auto i2 = intersect_circles<double>(p[0], l_.b, p[2], l_.c, sign_of(t, 0), tol_, coincide_);
  out.disc[2] = i2.discriminant;
  if (i2.kind == IntersectionKind::none) return out;
  p[1] = i2.point;
  if (i5.kind == IntersectionKind::continuum) {
    out.status = PoseStatus::continuum;
    out.continuum_at = 0;
    return out;
  }
  if (i2.kind == IntersectionKind::continuum) {
    out.status = PoseStatus::continuum;
    out.continuum_at = 2;
    return out;
  }
  out.status = PoseStatus::ok;
  out.gamma = (p[1] - p[4]).norm();
  return out;
}

double grid_angle(std::size_t k, std::size_t n) {
  const double h = 2.0 * kPi / static_cast<double>(n);
  return (static_cast<double>(k) + 0.5 - static_cast<double>(n) / 2.0) * h;
}

namespace {

unsigned worker_count(unsigned requested) {
  return requested ? requested : std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

PoseTable tabulate_poses(const G3Linkage& link, std::size_t n, unsigned workers) {
  PoseTable tab;
  tab.n = n;
  for (auto& row : tab.rows) row.resize(n);
  const unsigned w = std::min<unsigned>(worker_count(workers), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  auto job = [&](unsigned id) {
    for (std::size_t k = id; k < n; k += w) {
      const double th = grid_angle(k, n);
      for (SignTuple t = 0; t < 8; ++t) tab.rows[t][k] = link.pose(th, t);
    }
  };
  if (w <= 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < w; ++i) pool.emplace_back(job, i);
    for (auto& th : pool) th.join();
  }
  return tab;
}

std::optional<Interval> G3Linkage::continuum_range(const G3Pose& pose, SignTuple t) const {
  const G3Linkage& link = *this;
  const K33Lengths& l = link.lengths();
  const auto& p = pose.p;
  double lo = INFINITY, hi = -INFINITY;
  auto take = [&](double g) {
    lo = std::min(lo, g);
    hi = std::max(hi, g);
  };
  constexpr int kSamples = 720;
  switch (pose.continuum_at) {
    case 0: {  // p5 free on circle(p4, e)
      const double dist = p[1].norm();
      take(std::abs(dist - l.e));
      take(dist + l.e);
      break;
    }
    case 2: {  // p2 free on circle(p1, b)
      const double dist = (p[4] - p[0]).norm();
      take(std::abs(dist - l.b));
      take(dist + l.b);
      break;
    }
    case 1: {  // p3 free on circle(p4, d)
      const auto i5 = intersect_circles<double>(p[3], l.e, p[5], *l.f, sign_of(t, 2), link.tangency_tol(),
                                                link.coincide_tol());
      for (int s = 0; s < kSamples; ++s) {
        const double phi = 2.0 * kPi * s / kSamples;
        const Point p3(l.d * std::cos(phi), l.d * std::sin(phi));
        for (int sg : {1, -1}) {
          const auto i2 = intersect_circles<double>(p[0], l.b, p3, l.c, sg, link.tangency_tol(),
                                                    link.coincide_tol());
          if (i2.kind != IntersectionKind::point) continue;
          if (i5.kind == IntersectionKind::point) {
            take((i2.point - i5.point).norm());
          } else if (i5.kind == IntersectionKind::continuum) {
            const double dist = i2.point.norm();
            take(std::abs(dist - l.e));
            take(dist + l.e);
          }
        }
      }
      break;
    }
    default: break;
  }
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

std::vector<SweepSample> sweep_g3(const K33Lengths& l, std::size_t resolution, unsigned workers) {
  const G3Linkage link(l);
  const PoseTable tab = tabulate_poses(link, resolution, workers);
  std::vector<SweepSample> out;
  for (std::size_t k = 0; k < resolution; ++k) {
    for (SignTuple t = 0; t < 8; ++t) {
      const G3Pose& p = tab.rows[t][k];
      if (p.status == PoseStatus::infeasible) continue;
      out.push_back({k, {grid_angle(k, resolution), t}, p.status == PoseStatus::continuum, p.gamma});
    }
  }
  return out;
}

double default_merge_gap(const K33Lengths& l) {
  l.require(3);
  return 1e-3 * l.scale();
}

namespace {

/// Golden-section search for the minimum of f on [lo, hi].
template <typename F>
double golden_min(F f, double lo, double hi, int iterations = 80) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iterations && hi - lo > 1e-13; ++i) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

StageReport gamma_set(const K33Lengths& l, const GammaOptions& opts) {
  if (opts.resolution < 1000) throw InvalidInput("gamma_set: resolution must be at least 1000");
  const G3Linkage link(l);
  const std::size_t n = opts.resolution;
  const double h = 2.0 * kPi / static_cast<double>(n);
  const PoseTable tab = tabulate_poses(link, n, opts.workers);
  const double gap = opts.merge_gap.value_or(default_merge_gap(l));

  StageReport report;
  report.stage = Stage::gamma;
  std::vector<Interval> parts;
  std::vector<Interval> continua;

  for (SignTuple t = 0; t < 8; ++t) {
    const auto& row = tab.rows[t];
    auto ok = [&](std::size_t k) { return row[k].status == PoseStatus::ok; };
    auto gamma_at = [&](double th) -> std::optional<double> {
      const G3Pose p = link.pose(th, t);
      if (p.status != PoseStatus::ok) return std::nullopt;
      return p.gamma;
    };
    for (std::size_t k = 0; k < n; ++k) {
      if (row[k].status == PoseStatus::continuum) {
        ++report.continuum_samples;
        if (const auto c = link.continuum_range(row[k], t)) continua.push_back(*c);
      }
    }
    std::size_t count_ok = 0;
    for (std::size_t k = 0; k < n; ++k) count_ok += ok(k);
    if (count_ok == 0) continue;

    // runs of consecutive feasible samples, cyclic in k
    std::vector<std::pair<std::size_t, std::size_t>> runs;  // (start, length)
    if (count_ok == n) {
      runs.emplace_back(0, n);
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        if (!ok(k) || ok((k + n - 1) % n)) continue;
        std::size_t len = 0;
        while (ok((k + len) % n)) ++len;
        runs.emplace_back(k, len);
      }
    }
    for (const auto& [start, len] : runs) {
      double lo = INFINITY, hi = -INFINITY;
      std::size_t arg_lo = start, arg_hi = start;
      for (std::size_t j = 0; j < len; ++j) {
        const std::size_t k = (start + j) % n;
        const double g = row[k].gamma;
        if (g < lo) {
          lo = g;
          arg_lo = j;
        }
        if (g > hi) {
          hi = g;
          arg_hi = j;
        }
      }
      // interior extrema: golden-section between the neighbouring samples
      auto refine = [&](std::size_t j, double sgn) {
        if (len < 3 || (len < n && (j == 0 || j + 1 == len))) return;
        const double th = grid_angle((start + j) % n, n);
        auto f = [&](double x) {
          const auto g = gamma_at(x);
          return g ? sgn * *g : INFINITY;
        };
        const double v = sgn * golden_min(f, th - h, th + h);
        if (std::isfinite(v)) {
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
      };
      refine(arg_lo, 1.0);
      refine(arg_hi, -1.0);
      // boundaries: bisect the feasibility edge, then sample the gap
      if (len < n) {
        for (int side : {-1, 1}) {
          const std::size_t edge = side < 0 ? start : (start + len - 1) % n;
          double in = grid_angle(edge, n);
          double out = in + side * h;
          while (std::abs(out - in) > 1e-10) {
            const double mid = 0.5 * (in + out);
            if (gamma_at(mid)) {
              in = mid;
            } else {
              out = mid;
            }
          }
          const double base = grid_angle(edge, n);
          constexpr int kExtra = 12;
          for (int i = 1; i <= kExtra; ++i) {
            const double x = base + (in - base) * i / kExtra;
            if (auto g = gamma_at(x)) {
              lo = std::min(lo, *g);
              hi = std::max(hi, *g);
            }
          }
        }
      }
      parts.push_back({lo, hi});
    }
  }
  report.feasible_set = IntervalSet::from(parts).merge_gaps(gap);
  report.continuum_gammas = IntervalSet::from(continua).merge_gaps(gap);
  if (report.feasible_set.size() > 4) {
    report.exceeds_interval_bound = true;
    report.notes.push_back("more than four intervals after merging");
  }
  if (report.continuum_samples > 0) {
    report.notes.push_back("degenerate continuum samples: the branch sweep does not cover them, see continuum_gammas");
  }
  return report;
}

StageChoiceError::StageChoiceError(Stage s, double v, IntervalSet a)
    : PreconditionViolation("chosen " + to_string(s) + " = " + std::to_string(v) + " lies outside " + to_json(a)),
      stage(s),
      value(v),
      allowed(std::move(a)) {}

std::vector<StageReport> staged_report(const K33Lengths& l, const GammaOptions& opts) {
  std::vector<StageReport> out;
  const double scale = l.scale();
  out.push_back(f_interval(l.a, l.b, l.c, l.d, l.e));
  if (!l.f) return out;
  require_member(Stage::f, *l.f, out.back().feasible_set, scale);
  out.push_back(alpha_interval(l.a, l.b, l.c, l.d, l.e, *l.f));
  if (!l.alpha) return out;
  require_member(Stage::alpha, *l.alpha, out.back().feasible_set, scale);
  out.push_back(beta_set(l));
  if (!l.beta) return out;
  require_member(Stage::beta, *l.beta, out.back().feasible_set, scale);
  out.push_back(gamma_set(l, opts));
  if (!l.gamma) return out;
  const StageReport& g = out.back();
  const IntervalSet reach = interval_union(g.feasible_set, g.continuum_gammas);
  require_member(Stage::gamma, *l.gamma, reach, scale);
  return out;
}

}  // namespace linkage
