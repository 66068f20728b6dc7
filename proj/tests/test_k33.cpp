#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "linkage/errors.hpp"
#include "linkage/k33.hpp"
#include "linkage/realizability.hpp"
#include "random_k33.hpp"
#include "support.hpp"

using namespace linkage;
using std::numbers::pi;
using testing_support::fixture;

namespace {

K33Lengths ones() { return {1, 1, 1, 1, 1, 1.0, 1.0, 1.0, 1.0}; }

GammaOptions at_resolution(std::size_t n, unsigned workers = 0) {
  GammaOptions o;
  o.resolution = n;
  o.workers = workers;
  return o;
}

// Brute force over the two workspaces: distances |p3 - p6| on a dense grid of
// angles, keeping only positions that satisfy their closure constraints.
std::vector<double> beta_samples(const K33Lengths& l, int grid) {
  const double alpha = *l.alpha;
  auto closes = [](double r, double x, double y) { return r >= std::abs(x - y) - 1e-12 && r <= x + y + 1e-12; };
  std::vector<Point> p3, p6;
  for (int i = 0; i < grid; ++i) {
    const double t = -pi + 2 * pi * (i + 0.5) / grid;
    const Point q3(l.d * std::cos(t), l.d * std::sin(t));
    const Point q6(alpha + l.a * std::cos(t), l.a * std::sin(t));
    if (closes((q3 - Point(alpha, 0)).norm(), l.b, l.c)) p3.push_back(q3);
    if (closes(q6.norm(), l.e, *l.f)) p6.push_back(q6);
  }
  std::vector<double> out;
  for (const auto& x : p3) {
    for (const auto& y : p6) out.push_back((x - y).norm());
  }
  return out;
}

}  // namespace

TEST_CASE("f interval") {
  CHECK(f_interval(1, 1, 1, 1, 1).feasible_set == IntervalSet::single(0, 5));
  CHECK(f_interval(10, 1, 1, 1, 1).feasible_set == IntervalSet::single(6, 14));
}

TEST_CASE("f and alpha intervals agree with the chain oracle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.2, 3.0);
  for (int trial = 0; trial < 6; ++trial) {
    const double a = u(rng), b = u(rng), c = u(rng), d = u(rng), e = u(rng);
    const auto fs = f_interval(a, b, c, d, e).feasible_set;
    const auto [flo, fhi] = testing_support::chain_reach_oracle({a, b, c, d, e}, 20);
    CHECK(std::abs(fs[0].lo - flo) <= 1e-6);
    CHECK(std::abs(fs[0].hi - fhi) <= 1e-6);

    const double f = testing_support::pick(fs, rng);
    const auto as = alpha_interval(a, b, c, d, e, f).feasible_set;
    const auto [lo1, hi1] = testing_support::chain_reach_oracle({a, f, e}, 64);
    const auto [lo2, hi2] = testing_support::chain_reach_oracle({b, c, d}, 64);
    REQUIRE(as.size() == 1);
    CHECK(std::abs(as[0].lo - std::max(lo1, lo2)) <= 1e-6);
    CHECK(std::abs(as[0].hi - std::min(hi1, hi2)) <= 1e-6);
  }
}

TEST_CASE("alpha interval needs f inside its interval") {
  CHECK(alpha_interval(1, 1, 1, 1, 1, 1).feasible_set == IntervalSet::single(0, 3));
  CHECK_THROWS_AS(alpha_interval(1, 1, 1, 1, 1, 6), PreconditionViolation);
}

TEST_CASE("workspace reduced to one point") {
  const K33Lengths l{1, 1, 1, 1, 0.5, 0.5, 2.0};
  const auto w = workspaces_g2(l);
  CHECK(w.w6.kind == ArcKind::around_pi);
  CHECK(w.w6.lo == doctest::Approx(pi));
  CHECK(w.w6.point_at(pi).x() == doctest::Approx(1.0));
  CHECK(w.w3.kind == ArcKind::around_zero);
  CHECK(w.w3.contains_angle(0.0));
  CHECK_FALSE(w.w3.contains_angle(pi));
}

TEST_CASE("workspaces reject an alpha outside its interval") {
  const K33Lengths l{1, 1, 1, 1, 1, 1.0, 4.0};
  CHECK_THROWS_AS(workspaces_g2(l), PreconditionViolation);
  const K33Lengths partial{1, 1, 1, 1, 1};
  CHECK_THROWS_AS(partial.require(2), InvalidInput);
}

TEST_CASE("beta set of the all-ones chain") {
  const auto s = beta_set(ones()).feasible_set;
  REQUIRE(s.size() == 1);
  CHECK(s.contains(1.0));
  for (double b : beta_samples(ones(), 400)) CHECK(s.contains(b, 1e-9));
}

TEST_CASE("split beta set matches sampling") {
  K33Lengths l{2.02637, 1.72427, 0.284584, 1.97201, 0.898991, 3.1358, 2.6225};
  const auto x = beta_set(l);
  REQUIRE(x.feasible_set.size() == 2);
  const auto w = workspaces_g2(l);
  CHECK(w.w3.kind == ArcKind::pair);
  CHECK(w.w6.kind == ArcKind::pair);
  const auto samples = beta_samples(l, 6000);
  REQUIRE(!samples.empty());
  double lo = INFINITY, hi = -INFINITY;
  for (double b : samples) {
    lo = std::min(lo, b), hi = std::max(hi, b);
    CHECK(x.feasible_set.contains(b, 1e-9));
  }
  // every interval is hit; endpoints within the grid spacing
  const double h = 2 * pi / 6000 * (l.a + l.d);
  CHECK(std::abs(lo - x.feasible_set[0].lo) <= h);
  CHECK(std::abs(hi - x.feasible_set[1].hi) <= h);
  for (const auto& iv : x.feasible_set.intervals()) {
    CHECK(std::any_of(samples.begin(), samples.end(), [&](double b) { return std::abs(b - iv.center()) <= iv.width() / 2; }));
  }
  CHECK(*x.bounds.M == doctest::Approx(x.feasible_set[0].hi));
  CHECK(*x.bounds.n == doctest::Approx(x.feasible_set[1].lo));
}

TEST_CASE("sweep grid is mirror symmetric") {
  for (std::size_t n : {1000u, 1001u}) {
    for (std::size_t k = 0; k < n; ++k) CHECK(grid_angle(k, n) == -grid_angle(n - 1 - k, n));
    CHECK(grid_angle(0, n) > -pi);
  }
}

TEST_CASE("mirrored poses have identical gamma") {
  for (const char* name : {"k33_ex2.json", "k33_ex3_doubled.json", "k33_ex5.json"}) {
    const G3Linkage link(load_k33_lengths(fixture(name)));
    const auto table = tabulate_poses(link, 2000, 2);
    for (SignTuple t = 0; t < 8; ++t) {
      for (std::size_t k = 0; k < table.n; ++k) {
        const auto& p = table.rows[t][k];
        const auto& q = table.rows[t ^ 7u][table.n - 1 - k];
        REQUIRE(p.status == q.status);
        if (p.status == PoseStatus::ok) CHECK(p.gamma == q.gamma);
      }
    }
  }
}

TEST_CASE("poses satisfy every G3 edge") {
  const auto l = load_k33_lengths(fixture("k33_ex2.json"));
  const G3Linkage link(l);
  const auto g = k33_graph(l);
  for (SignTuple t = 0; t < 8; ++t) {
    for (int k = 0; k < 200; ++k) {
      const auto p = link.pose(grid_angle(k, 200), t);
      if (p.status != PoseStatus::ok) continue;
      const Realization r{std::vector<Point>(p.p.begin(), p.p.end())};
      CHECK(max_edge_residual(g, r) <= 1e-9);
      CHECK(p.gamma == doctest::Approx((p.p[1] - p.p[4]).norm()));
    }
  }
}

TEST_CASE("with a = 0 the pose does not depend on theta") {
  auto l = load_k33_lengths(fixture("k33_ex2.json"));
  l.a = 0.0;
  const G3Linkage link(l);
  for (SignTuple t = 0; t < 8; ++t) {
    const auto p0 = link.pose(0.3, t);
    for (double th : {-2.0, -1.0, 1.0, 2.5}) {
      const auto p = link.pose(th, t);
      REQUIRE(p.status == p0.status);
      if (p.status == PoseStatus::ok) CHECK(p.gamma == doctest::Approx(p0.gamma).epsilon(1e-12));
    }
  }
}

TEST_CASE("all-ones gamma set is the single value 1") {
  const auto r = gamma_set(ones(), at_resolution(20000));
  REQUIRE(r.feasible_set.size() == 1);
  CHECK(r.feasible_set[0].width() <= 1e-6);
  CHECK(r.feasible_set[0].center() == doctest::Approx(1.0).epsilon(1e-9));
  for (const auto& s : sweep_g3(ones(), 4000, 2)) {
    if (!s.continuum) CHECK(s.gamma == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("the near-square fixture has a gamma interval around sqrt 2") {
  const auto s = gamma_set(load_k33_lengths(fixture("k33_ex5.json"))).feasible_set;
  REQUIRE(s.size() == 1);
  CHECK(s.contains(std::sqrt(2.0)));
}

TEST_CASE("gamma set agrees with the second parametrization on the fixtures") {
  for (const char* name : {"k33_ex1.json", "k33_ex2.json", "k33_ex3.json", "k33_ex3_doubled.json", "k33_ex4_short_beta.json",
                           "k33_ex5.json"}) {
    CAPTURE(name);
    auto l = load_k33_lengths(fixture(name));
    l.gamma.reset();
    const auto s = gamma_set(l).feasible_set;
    const auto o = gamma_set_oracle(l, 200000, 0);
    REQUIRE(s.size() == o.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(std::abs(s[i].lo - o[i].lo) <= 1e-3);
      CHECK(std::abs(s[i].hi - o[i].hi) <= 1e-3);
    }
  }
}

TEST_CASE("gamma set on random instances") {
  std::mt19937_64 rng(77);
  int multi = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto l = testing_support::random_k33_through_beta(rng);
    CHECK(beta_set(l).feasible_set.size() <= 2);
    const auto r = gamma_set(l, at_resolution(4000, 1));
    CAPTURE(trial);
    CHECK(r.feasible_set.size() <= 4);
    CHECK(r.exceeds_interval_bound == (r.feasible_set.size() > 4));
    multi += r.feasible_set.size() > 1;
  }
  CHECK(multi > 0);
}

TEST_CASE("gamma set agrees with the oracle on random instances") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 30; ++trial) {
    const auto l = testing_support::random_k33_through_beta(rng);
    CAPTURE(trial);
    const auto s = gamma_set(l).feasible_set;
    const auto o = gamma_set_oracle(l, 200000, 3);
    CHECK(s.size() == o.size());
  }
}

TEST_CASE("gamma set options") {
  CHECK_THROWS_AS(gamma_set(ones(), at_resolution(999)), InvalidInput);
  const auto l = load_k33_lengths(fixture("k33_ex3_doubled.json"));
  const auto one = gamma_set(l, at_resolution(20000, 1)).feasible_set;
  const auto four = gamma_set(l, at_resolution(20000, 4)).feasible_set;
  CHECK(one == four);
  const auto a = sweep_g3(l, 5000, 1), b = sweep_g3(l, 5000, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].k == b[i].k);
    CHECK(a[i].config.signs == b[i].config.signs);
    CHECK(a[i].gamma == b[i].gamma);
  }
}

TEST_CASE("doubling the resolution keeps every interval") {
  for (const char* name : {"k33_ex2.json", "k33_ex3_doubled.json", "k33_ex4_short_beta.json"}) {
    CAPTURE(name);
    const auto l = load_k33_lengths(fixture(name));
    const std::size_t n = 5000;
    // largest gamma change between neighbouring samples of one branch
    const auto table = tabulate_poses(G3Linkage(l), n, 0);
    double step = 0.0;
    for (const auto& row : table.rows) {
      for (std::size_t k = 1; k < n; ++k) {
        if (row[k].status == PoseStatus::ok && row[k - 1].status == PoseStatus::ok) {
          step = std::max(step, std::abs(row[k].gamma - row[k - 1].gamma));
        }
      }
    }
    const auto coarse = gamma_set(l, at_resolution(n)).feasible_set;
    const auto fine = gamma_set(l, at_resolution(2 * n)).feasible_set;
    REQUIRE(coarse.size() == fine.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      CHECK(std::abs(coarse[i].lo - fine[i].lo) <= step);
      CHECK(std::abs(coarse[i].hi - fine[i].hi) <= step);
    }
  }
}

TEST_CASE("stage soundness") {
  const auto l0 = load_k33_lengths(fixture("k33_ex2.json"));
  const auto r = gamma_set(l0);
  const double gap = default_merge_gap(l0);
  for (const auto& iv : r.feasible_set.intervals()) {
    auto l = l0;
    l.gamma = iv.center();
    CHECK(attempt_realize(k33_graph(l), 200, 0).realized);
  }
  auto outside = l0;
  outside.gamma = r.feasible_set.hull()->hi + 10 * gap + 0.05;
  CHECK_FALSE(attempt_realize(k33_graph(outside), 200, 0).realized);
  bool any_near = false;
  for (const auto& s : sweep_g3(l0, 20000)) {
    any_near |= !s.continuum && std::abs(s.gamma - *outside.gamma) <= 10 * gap;
  }
  CHECK_FALSE(any_near);
}

TEST_CASE("staged report") {
  const auto reports = staged_report(ones());
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].feasible_set == IntervalSet::single(0, 5));
  CHECK(reports[1].feasible_set == IntervalSet::single(0, 3));
  CHECK(reports[2].feasible_set.contains(1.0));
  CHECK(reports[3].feasible_set.size() == 1);
  CHECK(reports[3].feasible_set[0].center() == doctest::Approx(1.0));

  K33Lengths bad{1, 1, 1, 1, 1, 6.0};
  try {
    staged_report(bad);
    FAIL("expected a stage choice error");
  } catch (const StageChoiceError& e) {
    CHECK(e.stage == Stage::f);
    CHECK(e.allowed == IntervalSet::single(0, 5));
    CHECK(std::string(e.what()).find("[0.0,5.0]") != std::string::npos);
  }

  const auto chain = staged_report(load_k33_lengths(fixture("k33_ex4_short_beta.json")));
  REQUIRE(chain.size() == 4);
  CHECK(chain[3].stage == Stage::gamma);
  CHECK(chain[3].feasible_set.size() == 4);
  CHECK_THROWS_AS(staged_report(load_k33_lengths(fixture("k33_ex4.json"))), StageChoiceError);
}

TEST_CASE("length parsing") {
  const auto l = parse_k33_lengths("1,2,3,4,5,6");
  CHECK(l.e == 5);
  CHECK(*l.f == 6);
  CHECK_FALSE(l.alpha);
  CHECK_THROWS_AS(parse_k33_lengths("1,2,3"), InvalidInput);
  CHECK_THROWS_AS(parse_k33_lengths("1,2,3,4,x"), InvalidInput);
  CHECK_THROWS_AS(parse_k33_lengths("1,2,3,4,5,6,7,8,9,10"), InvalidInput);
  const auto ex1 = load_k33_lengths(fixture("k33_ex1.json"));
  CHECK(ex1.values() == std::vector<double>(9, 1.0));
  CHECK(parse_k33_lengths("1,1,1,1,1,1,1,1,1").values() == ex1.values());
}
