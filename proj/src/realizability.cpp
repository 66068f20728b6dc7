#include "linkage/realizability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>

#include "linkage/errors.hpp"

namespace linkage {

bool cycle_realizable(std::span<const double> lengths) {
  if (lengths.size() < 2) throw InvalidInput("cycle_realizable: need at least 2 lengths");
  const double sum = std::accumulate(lengths.begin(), lengths.end(), 0.0);
  const double mx = *std::max_element(lengths.begin(), lengths.end());
  return mx <= (sum - mx) + 1e-12 * sum;
}

IntervalSet cycle_closure_interval(std::span<const double> path_lengths) {
  if (path_lengths.empty()) throw InvalidInput("cycle_closure_interval: empty path");
  const double sum = std::accumulate(path_lengths.begin(), path_lengths.end(), 0.0);
  const double mx = *std::max_element(path_lengths.begin(), path_lengths.end());
  return IntervalSet::single(std::max(0.0, 2.0 * mx - sum), sum);
}

double K4Lengths::max() const { return std::max({a, b, c, d, alpha, beta}); }

K4Lengths K4Lengths::from_points(const Point& v1, const Point& v2, const Point& v3, const Point& v4) {
  return {(v1 - v2).norm(), (v2 - v4).norm(), (v3 - v4).norm(),
          (v1 - v3).norm(), (v2 - v3).norm(), (v1 - v4).norm()};
}

double cayley_menger_det(const K4Lengths& k) {
  return cayley_menger_matrix(k.a, k.b, k.c, k.d, k.alpha, k.beta).determinant();
}

double cayley_menger_tolerance(const K4Lengths& k) { return 1e-9 * std::pow(1.0 + k.max(), 6); }

bool k4_realizable(const K4Lengths& k) {
  const double tri[4][3] = {
      {k.a, k.b, k.beta}, {k.b, k.c, k.alpha}, {k.c, k.d, k.beta}, {k.d, k.a, k.alpha}};
  for (const auto& t : tri) {
    if (!cycle_realizable(std::span<const double>(t, 3))) return false;
  }
  return std::abs(cayley_menger_det(k)) <= cayley_menger_tolerance(k);
}

WeightedGraph k4_graph(const K4Lengths& k) {
  return WeightedGraph({"v1", "v2", "v3", "v4"}, {{"v1", "v2", k.a},
                                                  {"v2", "v4", k.b},
                                                  {"v3", "v4", k.c},
                                                  {"v1", "v3", k.d},
                                                  {"v2", "v3", k.alpha},
                                                  {"v1", "v4", k.beta}});
}

namespace {

struct EdgeIdx {
  std::size_t u, v;
  double l2;
};

std::vector<EdgeIdx> edge_indices(const WeightedGraph& g) {
  std::vector<EdgeIdx> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    out.push_back({g.require_index(e.u), g.require_index(e.v), e.length * e.length});
  }
  return out;
}

void residuals(const std::vector<EdgeIdx>& es, const Eigen::VectorXd& x, Eigen::VectorXd& r) {
  r.resize(static_cast<Eigen::Index>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i) {
    const double dx = x[2 * es[i].u] - x[2 * es[i].v];
    const double dy = x[2 * es[i].u + 1] - x[2 * es[i].v + 1];
    r[i] = dx * dx + dy * dy - es[i].l2;
  }
}

void jacobian(const std::vector<EdgeIdx>& es, const Eigen::VectorXd& x, Eigen::MatrixXd& J) {
  J.setZero(static_cast<Eigen::Index>(es.size()), x.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto u = static_cast<Eigen::Index>(es[i].u), v = static_cast<Eigen::Index>(es[i].v);
    if (u == v) continue;
    const double dx = x[2 * u] - x[2 * v];
    const double dy = x[2 * u + 1] - x[2 * v + 1];
    const auto row = static_cast<Eigen::Index>(i);
    J(row, 2 * u) = 2 * dx;
    J(row, 2 * u + 1) = 2 * dy;
    J(row, 2 * v) = -2 * dx;
    J(row, 2 * v + 1) = -2 * dy;
  }
}

}  // namespace

double least_squares_objective(const WeightedGraph& g, const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
  const auto es = edge_indices(g);
  Eigen::VectorXd r;
  residuals(es, x, r);
  if (grad) {
    Eigen::MatrixXd J;
    jacobian(es, x, J);
    *grad = J.transpose() * r;
  }
  return 0.5 * r.squaredNorm();
}

Eigen::VectorXd local_descent(const WeightedGraph& g, Eigen::VectorXd x, const std::vector<bool>& fixed,
                              const DescentOptions& opts) {
  const auto es = edge_indices(g);
  const Eigen::Index n = x.size();
  std::vector<Eigen::Index> free_vars;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!fixed[static_cast<std::size_t>(i / 2)]) free_vars.push_back(i);
  }
  const auto nf = static_cast<Eigen::Index>(free_vars.size());
  if (nf == 0 || es.empty()) return x;

  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  Eigen::MatrixXd Jf(static_cast<Eigen::Index>(es.size()), nf);
  auto evaluate = [&](const Eigen::VectorXd& at) {
    residuals(es, at, r);
    jacobian(es, at, J);
    for (Eigen::Index k = 0; k < nf; ++k) Jf.col(k) = J.col(free_vars[static_cast<std::size_t>(k)]);
  };
  evaluate(x);
  Eigen::MatrixXd A = Jf.transpose() * Jf;
  Eigen::VectorXd grad = Jf.transpose() * r;
  double cost = 0.5 * r.squaredNorm();
  double lambda = 1e-3 * std::max(A.diagonal().maxCoeff(), 1e-12);
  double nu = 2.0;
  Eigen::VectorXd trial(n);
  for (int it = 0; it < opts.max_iterations; ++it) {
    if (grad.lpNorm<Eigen::Infinity>() <= opts.gradient_tol) break;
    Eigen::MatrixXd damped = A;
    damped.diagonal().array() += lambda;
    const Eigen::VectorXd h = damped.ldlt().solve(-grad);
    if (!h.allFinite()) break;
    if (h.norm() <= 1e-16 * (x.norm() + 1e-16)) break;
    trial = x;
    for (Eigen::Index k = 0; k < nf; ++k) trial[free_vars[static_cast<std::size_t>(k)]] += h[k];
    Eigen::VectorXd r_trial;
    residuals(es, trial, r_trial);
    const double cost_trial = 0.5 * r_trial.squaredNorm();
    const double predicted = 0.5 * h.dot(lambda * h - grad);
    const double rho = predicted > 0 ? (cost - cost_trial) / predicted : -1.0;
    if (rho > 0) {
      x = trial;
      evaluate(x);
      A = Jf.transpose() * Jf;
      grad = Jf.transpose() * r;
      cost = cost_trial;
      lambda *= std::max(1.0 / 3.0, 1.0 - std::pow(2.0 * rho - 1.0, 3));
      nu = 2.0;
    } else {
      lambda *= nu;
      nu *= 2.0;
      if (!std::isfinite(lambda) || lambda > 1e300) break;
    }
  }
  return x;
}

double feasibility_tolerance(const WeightedGraph& g) { return 1e-7 * (1.0 + g.max_length()); }

std::map<int, int> RealizeReport::residual_histogram() const {
  std::map<int, int> h;
  for (double r : restart_residuals) {
    const int key = r > 0 ? static_cast<int>(std::floor(std::log10(r))) : -300;
    ++h[key];
  }
  return h;
}

namespace {

Realization to_realization(const Eigen::VectorXd& x) {
  Realization p;
  for (Eigen::Index i = 0; i + 1 < x.size(); i += 2) p.points.emplace_back(x[i], x[i + 1]);
  return p;
}

struct RestartResult {
  Eigen::VectorXd x;
  double residual = INFINITY;
};

RestartResult run_restart(const WeightedGraph& g, const RealizeOptions& opts, int restart,
                          const std::vector<bool>& fixed, const Eigen::VectorXd& pinned) {
  std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double radius = std::max(g.total_length(), 1.0);
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::VectorXd x(2 * n);
  for (Eigen::Index v = 0; v < n; ++v) {
    const double rr = radius * std::sqrt(unit(rng));
    const double th = 2.0 * std::numbers::pi * unit(rng);
    x[2 * v] = rr * std::cos(th);
    x[2 * v + 1] = rr * std::sin(th);
    if (fixed[static_cast<std::size_t>(v)]) {
      x[2 * v] = pinned[2 * v];
      x[2 * v + 1] = pinned[2 * v + 1];
    }
  }
  RestartResult out;
  out.x = local_descent(g, x, fixed, opts.descent);
  out.residual = max_edge_residual(g, to_realization(out.x));
  if (!std::isfinite(out.residual)) out.residual = INFINITY;
  return out;
}

}  // namespace

RealizeReport attempt_realize(const WeightedGraph& g, const RealizeOptions& opts) {
  const auto violations = validate(g);
  if (!violations.empty()) throw InvalidInput("attempt_realize: " + violations.front().message);
  const std::size_t nv = g.vertex_count();
  std::vector<bool> fixed(nv, false);
  Eigen::VectorXd pinned = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * nv));
  if (opts.pin) {
    const double l = check_pin(g, *opts.pin);
    const std::size_t o = g.require_index(opts.pin->origin);
    const std::size_t a = g.require_index(opts.pin->axis);
    fixed[o] = fixed[a] = true;
    pinned[static_cast<Eigen::Index>(2 * a)] = l;
  }

  RealizeReport report;
  report.tolerance = feasibility_tolerance(g);
  constexpr int kBlock = 16;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::max(1u, opts.workers == 0 ? hw : opts.workers);
  std::vector<RestartResult> results;
  RestartResult best;
  for (int start = 0; start < opts.restarts; start += kBlock) {
    const int count = std::min(kBlock, opts.restarts - start);
    results.assign(static_cast<std::size_t>(count), {});
    auto job = [&](unsigned w) {
      for (int i = static_cast<int>(w); i < count; i += static_cast<int>(workers)) {
        results[static_cast<std::size_t>(i)] = run_restart(g, opts, start + i, fixed, pinned);
      }
    };
    if (workers == 1) {
      job(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
      for (auto& t : pool) t.join();
    }
    bool success = false;
    for (int i = 0; i < count; ++i) {
      const RestartResult& r = results[static_cast<std::size_t>(i)];
      report.restart_residuals.push_back(r.residual);
      if (report.best_restart < 0 || r.residual < best.residual) {
        best = r;
        report.best_restart = start + i;
      }
      if (r.residual <= report.tolerance) {
        success = true;
        if (opts.keep_feasible) report.feasible.emplace_back(start + i, to_realization(r.x));
      }
    }
    report.restarts_used = start + count;
    if (success && opts.stop_at_first_success) break;
  }
  if (report.best_restart >= 0) {
    report.best_realization = to_realization(best.x);
    report.best_residual = best.residual;
  } else {
    report.best_realization.points.assign(nv, Point::Zero());
    report.best_residual = g.edge_count() == 0 ? 0.0 : INFINITY;
  }
  if (g.edge_count() == 0) report.best_residual = 0.0;
  report.realized = report.best_residual <= report.tolerance;
  return report;
}

RealizeReport attempt_realize(const WeightedGraph& g, int restarts, std::uint64_t seed) {
  RealizeOptions opts;
  opts.restarts = restarts;
  opts.seed = seed;
  return attempt_realize(g, opts);
}

Extension extend_to_realizable(const WeightedGraph& g, std::span<const std::size_t> sub_edges,
                               const std::map<std::string, Point>& sub_positions) {
  const WeightedGraph sub = induced_sublengths(g, sub_edges);
  std::vector<std::optional<Point>> pos(g.vertex_count());
  for (const auto& [name, p] : sub_positions) pos[g.require_index(name)] = p;
  double max_len = 0.0;
  for (const Edge& e : sub.edges()) {
    const auto& pu = pos[g.require_index(e.u)];
    const auto& pv = pos[g.require_index(e.v)];
    if (!pu || !pv) throw InvalidInput("extend_to_realizable: sub-edge endpoint without a position");
    max_len = std::max(max_len, e.length);
  }
  const double tol = 1e-9 * (1.0 + max_len);
  for (const Edge& e : sub.edges()) {
    const double d = (*pos[g.require_index(e.u)] - *pos[g.require_index(e.v)]).norm();
    if (std::abs(d - e.length) > tol) {
      throw InvalidInput("extend_to_realizable: supplied positions do not realize edge " + e.u + e.v);
    }
  }
  double top = 0.0;
  for (const auto& p : pos) {
    if (p) top = std::max(top, p->y());
  }
  int k = 0;
  for (auto& p : pos) {
    if (!p) p = Point(0.0, top + ++k);
  }
  Extension out;
  for (const auto& p : pos) out.witness.points.push_back(*p);
  std::vector<bool> in_sub(g.edge_count(), false);
  for (std::size_t i : sub_edges) in_sub[i] = true;
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (in_sub[i]) continue;
    edges[i].length = (out.witness.at(g.require_index(edges[i].u)) - out.witness.at(g.require_index(edges[i].v))).norm();
  }
  out.graph = WeightedGraph(g.vertices(), std::move(edges));
  return out;
}

Extension extend_to_realizable(const WeightedGraph& g, std::span<const std::size_t> sub_edges,
                               std::uint64_t seed) {
  const WeightedGraph sub = induced_sublengths(g, sub_edges);
  const RealizeReport rep = attempt_realize(sub, 200, seed);
  if (!rep.realized) throw InvalidInput("extend_to_realizable: subgraph realization not found");
  std::map<std::string, Point> positions;
  std::vector<bool> touched(g.vertex_count(), false);
  for (const Edge& e : sub.edges()) {
    touched[g.require_index(e.u)] = touched[g.require_index(e.v)] = true;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (touched[v]) positions[g.vertices()[v]] = rep.best_realization.at(v);
  }
  return extend_to_realizable(g, sub_edges, positions);
}

}  // namespace linkage
