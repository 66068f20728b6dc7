#include "linkage/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <numbers>
#include <set>
#include <tuple>
#include <thread>

#include "linkage/errors.hpp"
#include "linkage/realizability.hpp"

namespace linkage {

double config_distance(const ConfigPoint& p, const ConfigPoint& q) {
  const auto& a = p.realization.points;
  const auto& b = q.realization.points;
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, (a[i] - b[i]).norm());
  return m;
}

std::string to_string(CountMethod m) { return m == CountMethod::sweep_exact ? "sweep-exact" : "sampling"; }

std::string to_string(Dimension d) {
  return d == Dimension::isolated_point ? "isolated-point" : "positive-dimensional";
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t add() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // the smaller root wins so the result does not depend on union order
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

constexpr int kStageBit[3] = {2, 1, 0};  // p5, p3, p2 intersections

template <typename F>
double golden_min(F f, double lo, double hi) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 80 && hi - lo > 1e-14; ++i) {
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

/// Stage whose intersection failed in an infeasible pose.
int failing_stage(const G3Pose& p, double tol) {
  for (int j = 0; j < 3; ++j) {
    if (p.disc[static_cast<std::size_t>(j)] < -tol) return j;
  }
  return 2;
}

/// Completes a continuum pose with a point meeting gamma exactly.
Realization continuum_representative(const G3Linkage& link, const G3Pose& pose, double gamma) {
  const K33Lengths& l = link.lengths();
  Realization r;
  r.points.assign(pose.p.begin(), pose.p.end());
  if (pose.continuum_at == 2) {
    const auto i = intersect_circles<double>(pose.p[0], l.b, pose.p[4], gamma, 1, link.tangency_tol(),
                                             link.coincide_tol());
    if (i.kind == IntersectionKind::point) r.points[1] = i.point;
  } else if (pose.continuum_at == 0) {
    const auto i = intersect_circles<double>(pose.p[3], l.e, pose.p[1], gamma, 1, link.tangency_tol(),
                                             link.coincide_tol());
    if (i.kind == IntersectionKind::point) r.points[4] = i.point;
  }
  return r;
}

}  // namespace

ComponentReport k33_component_count(const K33Lengths& l, const SweepCountOptions& opts) {
  if (opts.resolution < 1000) throw InvalidInput("k33_component_count: resolution must be at least 1000");
  l.require(4);
  const G3Linkage link(l);
  const double gstar = *l.gamma;
  const std::size_t n = opts.resolution;
  const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
  const PoseTable tab = tabulate_poses(link, n, opts.workers);
  const double tol = link.tangency_tol();
  const double mark_tol = 1e-7 * (1.0 + gstar);
  const double scale2 = l.scale() * l.scale();
  const double glue_tol = 100.0 * tol;

  ComponentReport rep;
  rep.method = CountMethod::sweep_exact;
  auto node = [n](std::size_t k, SignTuple t) { return static_cast<std::size_t>(t) * n + k; };
  auto pose_of = [&](std::size_t id) -> const G3Pose& { return tab.rows[id / n][id % n]; };
  auto alive = [&](std::size_t id) { return pose_of(id).status != PoseStatus::infeasible; };

  const std::size_t total = 8 * n;
  std::vector<char> marked(total, 0);
  for (std::size_t id = 0; id < total; ++id) {
    const G3Pose& p = pose_of(id);
    if (p.status == PoseStatus::ok) {
      marked[id] = std::abs(p.gamma - gstar) <= mark_tol;
    } else if (p.status == PoseStatus::continuum) {
      ++rep.continuum_samples;
      const auto range = link.continuum_range(p, static_cast<SignTuple>(id / n));
      marked[id] = range && gstar >= range->lo - mark_tol && gstar <= range->hi + mark_tol;
    }
    rep.marked_samples += marked[id];
  }

  // curve edges: theta neighbours, then glue at vanishing discriminants
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (SignTuple t = 0; t < 8; ++t) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t a = node(k, t), b = node((k + 1) % n, t);
      if (alive(a) && alive(b)) edges.emplace_back(a, b);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> glue;
  for (SignTuple t = 0; t < 8; ++t) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t id = node(k, t);
      if (!alive(id)) continue;
      // sign change: the neighbouring sample lost this tuple
      for (std::size_t kk : {(k + n - 1) % n, (k + 1) % n}) {
        const G3Pose& q = tab.rows[t][kk];
        if (q.status != PoseStatus::infeasible) continue;
        const int j = failing_stage(q, tol);
        const std::size_t other = node(k, t ^ (1u << kStageBit[j]));
        if (alive(other)) glue.emplace_back(std::min(id, other), std::max(id, other));
      }
      // touching minimum of a discriminant between samples
      const G3Pose& p = pose_of(id);
      const G3Pose& pm = tab.rows[t][(k + n - 1) % n];
      const G3Pose& pp = tab.rows[t][(k + 1) % n];
      if (pm.status == PoseStatus::infeasible || pp.status == PoseStatus::infeasible) continue;
      for (int j = 0; j < 3; ++j) {
        const auto js = static_cast<std::size_t>(j);
        const double dj = p.disc[js];
        if (dj > 1e-3 * scale2 || dj > pm.disc[js] || dj > pp.disc[js]) continue;
        const double th = grid_angle(k, n);
        const double lowest = golden_min(
            [&](double x) {
              const G3Pose q = link.pose(x, t);
              return q.disc[js];
            },
            th - h, th + h);
        if (lowest > glue_tol) continue;
        const std::size_t other = node(k, t ^ (1u << kStageBit[j]));
        if (alive(other)) glue.emplace_back(std::min(id, other), std::max(id, other));
      }
    }
  }
  // a continuum at one intersection makes every downstream sign choice the same set
  for (std::size_t id = 0; id < total; ++id) {
    const G3Pose& p = pose_of(id);
    if (p.status != PoseStatus::continuum) continue;
    const auto t = static_cast<SignTuple>(id / n);
    const SignTuple mask = p.continuum_at == 1 ? 3u : (1u << kStageBit[p.continuum_at]);
    for (SignTuple m = 1; m < 8; ++m) {
      if ((m & ~mask) != 0) continue;
      const std::size_t other = node(id % n, t ^ m);
      if (alive(other)) glue.emplace_back(std::min(id, other), std::max(id, other));
    }
  }
  std::sort(glue.begin(), glue.end());
  glue.erase(std::unique(glue.begin(), glue.end()), glue.end());
  rep.glue_edges = glue.size();
  edges.insert(edges.end(), glue.begin(), glue.end());

  DisjointSets sets(total);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> root_of_edge;
  std::vector<std::pair<std::size_t, double>> root_theta;  // element -> refined theta (theta edges)
  std::size_t unconfirmed = 0;
  for (const auto& [a, b] : edges) {
    if (marked[a] && marked[b]) {
      sets.unite(a, b);
      continue;
    }
    if (marked[a] || marked[b]) continue;
    const G3Pose& pa = pose_of(a);
    const G3Pose& pb = pose_of(b);
    if (pa.status != PoseStatus::ok || pb.status != PoseStatus::ok) continue;
    const double fa = pa.gamma - gstar, fb = pb.gamma - gstar;
    if ((fa < 0) == (fb < 0)) continue;
    const bool theta_edge = a / n == b / n;
    double theta_root = grid_angle(a % n, n);
    if (theta_edge) {
      // confirm by bisection along the shared tuple
      const auto t = static_cast<SignTuple>(a / n);
      double lo = grid_angle(a % n, n);
      double hi = (b % n == 0 && a % n == n - 1) ? lo + h : grid_angle(b % n, n);
      double flo = fa;
      bool ok = true;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const G3Pose q = link.pose(mid, t);
        if (q.status != PoseStatus::ok) {
          ok = false;
          break;
        }
        const double fm = q.gamma - gstar;
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      theta_root = 0.5 * (lo + hi);
      const G3Pose q = link.pose(theta_root, t);
      if (!ok || q.status != PoseStatus::ok || std::abs(q.gamma - gstar) > mark_tol) {
        ++unconfirmed;
        continue;
      }
    }
    const std::size_t r = sets.add();
    root_of_edge[{std::min(a, b), std::max(a, b)}] = r;
    root_theta.emplace_back(r, theta_root);
  }
  rep.roots = root_of_edge.size();
  if (unconfirmed) rep.notes.push_back(std::to_string(unconfirmed) + " sign changes not confirmed by bisection");

  // elements taking part: marked nodes and roots
  std::vector<std::size_t> elements;
  for (std::size_t id = 0; id < total; ++id) {
    if (marked[id]) elements.push_back(id);
  }
  for (const auto& [edge, r] : root_of_edge) elements.push_back(r);
  std::map<std::size_t, int> cluster_index;
  for (std::size_t e : elements) {
    const std::size_t root = sets.find(e);
    if (!cluster_index.count(root)) cluster_index.emplace(root, 0);
  }
  int next = 0;
  for (auto& [root, idx] : cluster_index) idx = next++;
  rep.count = next;

  // representatives, dimension flags
  std::vector<double> best_err(static_cast<std::size_t>(rep.count), INFINITY);
  std::vector<std::size_t> best_elem(static_cast<std::size_t>(rep.count), 0);
  std::vector<char> positive(static_cast<std::size_t>(rep.count), 0);
  for (std::size_t id = 0; id < total; ++id) {
    if (!marked[id]) continue;
    const auto c = static_cast<std::size_t>(cluster_index.at(sets.find(id)));
    const G3Pose& p = pose_of(id);
    const double err = p.status == PoseStatus::ok ? std::abs(p.gamma - gstar) : mark_tol;
    if (err < best_err[c]) {
      best_err[c] = err;
      best_elem[c] = id;
    }
    if (p.status == PoseStatus::continuum) positive[c] = 1;
  }
  for (SignTuple t = 0; t < 8; ++t) {
    std::size_t streak = 0;
    bool flat = true;
    for (std::size_t k = 0; k < n + 10; ++k) {
      const std::size_t id = node(k % n, t);
      const std::size_t prev = node((k + n - 1) % n, t);
      if (marked[id] && pose_of(id).status == PoseStatus::ok) {
        if (streak > 0 && pose_of(prev).status == PoseStatus::ok) {
          flat = flat && std::abs(pose_of(id).gamma - pose_of(prev).gamma) / h <= 1e-6;
        }
        ++streak;
        if (streak >= 10 && flat) positive[static_cast<std::size_t>(cluster_index.at(sets.find(id)))] = 1;
      } else {
        streak = 0;
        flat = true;
      }
    }
  }
  std::map<std::size_t, double> theta_of_root(root_theta.begin(), root_theta.end());
  for (const auto& [edge, r] : root_of_edge) {
    const auto c = static_cast<std::size_t>(cluster_index.at(sets.find(r)));
    if (best_err[c] == INFINITY) {
      best_err[c] = 0.0;
      best_elem[c] = total + r;  // sentinel: root element
    }
  }
  rep.representatives.resize(static_cast<std::size_t>(rep.count));
  for (std::size_t c = 0; c < static_cast<std::size_t>(rep.count); ++c) {
    ConfigPoint cp;
    if (best_elem[c] >= total) {
      const std::size_t r = best_elem[c] - total;
      SignTuple t = 0;
      for (const auto& [edge, rr] : root_of_edge) {
        if (rr == r) t = static_cast<SignTuple>(edge.first / n);
      }
      const double th = theta_of_root.at(r);
      const G3Pose q = link.pose(th, t);
      cp.realization.points.assign(q.p.begin(), q.p.end());
      cp.theta = th;
      cp.tuple = t;
    } else {
      const std::size_t id = best_elem[c];
      const G3Pose& p = pose_of(id);
      cp.realization = p.status == PoseStatus::continuum ? continuum_representative(link, p, gstar)
                                                         : Realization{{p.p.begin(), p.p.end()}};
      cp.theta = grid_angle(id % n, n);
      cp.tuple = static_cast<SignTuple>(id / n);
    }
    rep.representatives[c] = std::move(cp);
    rep.dimensions.push_back(positive[c] ? Dimension::positive_dimensional : Dimension::isolated_point);
  }

  // mirror map: (k, t) <-> (n-1-k, t^7)
  auto mirror_node = [&](std::size_t id) { return node(n - 1 - id % n, static_cast<SignTuple>(id / n) ^ 7u); };
  rep.mirror_of.assign(static_cast<std::size_t>(rep.count), -1);
  for (std::size_t id = 0; id < total; ++id) {
    if (!marked[id]) continue;
    const auto c = static_cast<std::size_t>(cluster_index.at(sets.find(id)));
    if (rep.mirror_of[c] >= 0) continue;
    const std::size_t m = mirror_node(id);
    if (marked[m]) rep.mirror_of[c] = cluster_index.at(sets.find(m));
  }
  for (const auto& [edge, r] : root_of_edge) {
    const auto c = static_cast<std::size_t>(cluster_index.at(sets.find(r)));
    if (rep.mirror_of[c] >= 0) continue;
    const std::size_t ma = mirror_node(edge.first), mb = mirror_node(edge.second);
    auto it = root_of_edge.find({std::min(ma, mb), std::max(ma, mb)});
    if (it != root_of_edge.end()) rep.mirror_of[c] = cluster_index.at(sets.find(it->second));
  }
  if (rep.continuum_samples) {
    rep.notes.push_back("continuum samples present: circle intersections degenerate to whole circles");
  }
  return rep;
}

namespace {

constexpr int kMaxSubdivision = 7;

struct Connection {
  bool ok = false;
  std::vector<Realization> knots;
  double max_residual = 0.0;
  double step_limit = 0.0;
};

Realization project(const WeightedGraph& g, const std::vector<bool>& fixed, const Realization& p,
                    const Realization& q, double s, int iterations) {
  const std::size_t nv = g.vertex_count();
  Eigen::VectorXd x(static_cast<Eigen::Index>(2 * nv));
  for (std::size_t v = 0; v < nv; ++v) {
    const Point z = (1.0 - s) * p.points[v] + s * q.points[v];
    x[static_cast<Eigen::Index>(2 * v)] = z.x();
    x[static_cast<Eigen::Index>(2 * v + 1)] = z.y();
  }
  DescentOptions d;
  d.max_iterations = iterations;
  const Eigen::VectorXd y = local_descent(g, x, fixed, d);
  Realization r;
  for (std::size_t v = 0; v < nv; ++v) {
    r.points.emplace_back(y[static_cast<Eigen::Index>(2 * v)], y[static_cast<Eigen::Index>(2 * v + 1)]);
  }
  return r;
}

// Straight-line knots from p to q, appended to c.knots (q itself excluded).
bool straight_segment(const WeightedGraph& g, const std::vector<bool>& fixed, const Realization& p,
                      const Realization& q, const SamplingOptions& opts, double tol, Connection& c) {
  const int knots = std::max(opts.knots, 2);
  const std::size_t mark = c.knots.size();
  const Realization* before = &p;
  for (int i = 1; i < knots - 1; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(knots - 1);
    Realization r = project(g, fixed, p, q, s, opts.knot_iterations);
    const double res = max_edge_residual(g, r);
    c.max_residual = std::max(c.max_residual, res);
    if (!(res <= tol) || config_distance({*before, {}, {}}, {r, {}, {}}) > c.step_limit) {
      c.knots.resize(mark);
      return false;
    }
    c.knots.push_back(std::move(r));
    before = &c.knots.back();
  }
  if (config_distance({*before, {}, {}}, {q, {}, {}}) > c.step_limit) {
    c.knots.resize(mark);
    return false;
  }
  return true;
}

// Straight segment, or on failure two halves through the projected midpoint.
bool connect_segment(const WeightedGraph& g, const std::vector<bool>& fixed, const Realization& p,
                     const Realization& q, const SamplingOptions& opts, double tol, int depth,
                     Connection& c) {
  if (straight_segment(g, fixed, p, q, opts, tol, c)) return true;
  if (depth >= kMaxSubdivision) return false;
  Realization mid = project(g, fixed, p, q, 0.5, opts.knot_iterations * 4);
  const double res = max_edge_residual(g, mid);
  if (!(res <= tol)) return false;
  c.max_residual = std::max(c.max_residual, res);
  const std::size_t mark = c.knots.size();
  if (!connect_segment(g, fixed, p, mid, opts, tol, depth + 1, c)) return false;
  c.knots.push_back(mid);
  if (!connect_segment(g, fixed, mid, q, opts, tol, depth + 1, c)) {
    c.knots.resize(mark);
    return false;
  }
  return true;
}

Connection try_connect(const WeightedGraph& g, const std::vector<bool>& fixed, const Realization& p,
                       const Realization& q, const SamplingOptions& opts, double tol) {
  Connection c;
  const double chord = config_distance({p, {}, {}}, {q, {}, {}});
  c.step_limit = 4.0 * chord / static_cast<double>(std::max(opts.knots, 2) - 1) + 1e-9;
  c.max_residual = std::max(max_edge_residual(g, p), max_edge_residual(g, q));
  c.knots.push_back(p);
  if (!connect_segment(g, fixed, p, q, opts, tol, 0, c)) {
    c.knots.clear();
    return c;
  }
  c.knots.push_back(q);
  c.ok = true;
  return c;
}

}  // namespace

bool verify_certificate(const WeightedGraph& g, const PathCertificate& c) {
  if (c.knots.size() < 2 || !(c.step_limit > 0.0)) return false;
  const double tol = feasibility_tolerance(g);
  for (std::size_t i = 0; i < c.knots.size(); ++i) {
    if (max_edge_residual(g, c.knots[i]) > tol) return false;
    if (i > 0 && config_distance({c.knots[i - 1], {}, {}}, {c.knots[i], {}, {}}) > c.step_limit) return false;
  }
  return true;
}

ComponentReport generic_component_count(const WeightedGraph& g, const PinnedFrame& pin,
                                        const SamplingOptions& opts) {
  const auto violations = validate(g);
  if (!violations.empty()) throw InvalidInput("generic_component_count: " + violations.front().message);
  check_pin(g, pin);
  ComponentReport rep;
  rep.method = CountMethod::sampling;

  RealizeOptions ro;
  ro.restarts = opts.samples;
  ro.seed = opts.seed;
  ro.workers = opts.workers;
  ro.pin = pin;
  ro.stop_at_first_success = false;
  ro.keep_feasible = true;
  const RealizeReport rr = attempt_realize(g, ro);
  rep.feasible_samples = rr.feasible.size();
  if (rr.feasible.empty()) {
    rep.count = 0;
    rep.notes.push_back("no feasible sample; best max edge residual " + std::to_string(rr.best_residual));
    return rep;
  }
  const double tol = rr.tolerance;
  std::vector<ConfigPoint> pts;
  for (const auto& [idx, r] : rr.feasible) {
    ConfigPoint cp{r, {}, {}};
    const bool dup = std::any_of(pts.begin(), pts.end(),
                                 [&](const ConfigPoint& q) { return config_distance(cp, q) <= 1e-6; });
    if (!dup) pts.push_back(std::move(cp));
  }
  rep.distinct_points = pts.size();
  const std::size_t m = pts.size();

  std::vector<bool> fixed(g.vertex_count(), false);
  fixed[g.require_index(pin.origin)] = fixed[g.require_index(pin.axis)] = true;

  // candidate pairs: k nearest neighbours, deterministic order
  std::vector<std::tuple<double, std::size_t, std::size_t>> cand;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::pair<double, std::size_t>> ds;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) ds.emplace_back(config_distance(pts[i], pts[j]), j);
    }
    std::sort(ds.begin(), ds.end());
    for (std::size_t r = 0; r < std::min<std::size_t>(ds.size(), static_cast<std::size_t>(opts.neighbours)); ++r) {
      cand.emplace_back(ds[r].first, std::min(i, ds[r].second), std::max(i, ds[r].second));
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<Connection> results(cand.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::max(1u, opts.workers ? opts.workers : hw);
  auto job = [&](unsigned w) {
    for (std::size_t i = w; i < cand.size(); i += workers) {
      const auto& [d, a, b] = cand[i];
      results[i] = try_connect(g, fixed, pts[a].realization, pts[b].realization, opts, tol);
    }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& t : pool) t.join();
  }
  DisjointSets sets(m);
  auto record = [&](std::size_t a, std::size_t b, Connection&& c) {
    if (sets.unite(a, b)) rep.certificates.push_back({a, b, std::move(c.knots), c.max_residual, c.step_limit});
  };
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (results[i].ok) record(std::get<1>(cand[i]), std::get<2>(cand[i]), std::move(results[i]));
  }
  // closest pairs between remaining clusters
  constexpr std::size_t kTriesPerClusterPair = 8;
  bool merged = true;
  std::set<std::pair<std::size_t, std::size_t>> tried;
  for (const auto& c : cand) tried.emplace(std::get<1>(c), std::get<2>(c));
  while (merged) {
    merged = false;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::tuple<double, std::size_t, std::size_t>>> between;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const std::size_t ri = sets.find(i), rj = sets.find(j);
        if (ri == rj || tried.count({i, j})) continue;
        between[{std::min(ri, rj), std::max(ri, rj)}].emplace_back(config_distance(pts[i], pts[j]), i, j);
      }
    }
    for (auto& [key, list] : between) {
      std::sort(list.begin(), list.end());
      for (std::size_t r = 0; r < std::min(list.size(), kTriesPerClusterPair); ++r) {
        const auto [d, i, j] = list[r];
        tried.emplace(i, j);
        if (sets.find(i) == sets.find(j)) break;
        Connection c = try_connect(g, fixed, pts[i].realization, pts[j].realization, opts, tol);
        if (c.ok) {
          record(i, j, std::move(c));
          merged = true;
          break;
        }
      }
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < m; ++i) clusters[sets.find(i)].push_back(i);
  rep.count = static_cast<int>(clusters.size());
  for (const auto& [root, members] : clusters) {
    rep.representatives.push_back(pts[members.front()]);
    rep.dimensions.push_back(members.size() > 1 ? Dimension::positive_dimensional : Dimension::isolated_point);
  }
  return rep;
}

ParityResult component_parity_check(const K33Lengths& l, const SweepCountOptions& opts) {
  const ComponentReport rep = k33_component_count(l, opts);
  ParityResult out;
  out.count = rep.count;
  out.empty_as_one_count = rep.empty_as_one_count();
  const int c = out.empty_as_one_count;
  out.consistent = c == 1 || c == 2 || c == 4 || c == 6 || c == 8;
  if (!out.consistent) {
    out.details = "count " + std::to_string(rep.count) + " outside {0,1,2,4,6,8}; roots " +
                  std::to_string(rep.roots) + ", marked samples " + std::to_string(rep.marked_samples);
  }
  return out;
}

}  // namespace linkage
