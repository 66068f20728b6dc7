#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "linkage/graph.hpp"

namespace testing_support {

inline std::string fixture(const std::string& name) { return std::string(LINKAGE_FIXTURE_DIR) + "/" + name; }

/// Minimizes f over [lo, hi] by golden-section search.
inline double golden(const std::function<double(double)>& f, double lo, double hi, int iters = 100) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      hi = x2, x2 = x1, f2 = f1, x1 = hi - r * (hi - lo), f1 = f(x1);
    } else {
      lo = x1, x1 = x2, f1 = f2, x2 = lo + r * (hi - lo), f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

/// Range of |end - start| over open chains with the given link lengths:
/// relative angles on a grid containing 0 and pi, then coordinate-wise
/// golden refinement of the best grid point for each extreme.
inline std::pair<double, double> chain_reach_oracle(const std::vector<double>& links, int grid) {
  const std::size_t free = links.size() - 1;
  auto reach = [&](const std::vector<double>& ang) {
    double x = links[0], y = 0.0, dir = 0.0;
    for (std::size_t i = 0; i < free; ++i) {
      dir += ang[i];
      x += links[i + 1] * std::cos(dir);
      y += links[i + 1] * std::sin(dir);
    }
    return std::hypot(x, y);
  };
  if (free == 0) return {links[0], links[0]};
  const double two_pi = 2.0 * M_PI;
  std::vector<double> ang(free, 0.0), best_lo, best_hi;
  double lo = INFINITY, hi = -INFINITY;
  std::vector<int> idx(free, 0);
  while (true) {
    for (std::size_t i = 0; i < free; ++i) ang[i] = two_pi * idx[i] / grid;
    const double r = reach(ang);
    if (r < lo) lo = r, best_lo = ang;
    if (r > hi) hi = r, best_hi = ang;
    std::size_t k = 0;
    while (k < free && ++idx[k] == grid) idx[k++] = 0;
    if (k == free) break;
  }
  const double h = two_pi / grid;
  auto polish = [&](std::vector<double>& a, double sign) {
    for (int round = 0; round < 20; ++round) {
      for (std::size_t i = 0; i < free; ++i) {
        auto f = [&](double t) {
          std::vector<double> b = a;
          b[i] = t;
          const double r = reach(b);
          return sign > 0 ? r * r : -r;
        };
        a[i] = golden(f, a[i] - h, a[i] + h, 60);
      }
    }
    return reach(a);
  };
  // a zero minimum sits in a curved valley where coordinate search stalls;
  // finish with damped minimum-norm Newton steps on the end point
  auto end_point = [&](const std::vector<double>& a, std::vector<double>* jx, std::vector<double>* jy) {
    double x = links[0], y = 0.0, dir = 0.0;
    std::vector<double> px(free), py(free);
    for (std::size_t i = 0; i < free; ++i) {
      dir += a[i];
      px[i] = links[i + 1] * std::cos(dir);
      py[i] = links[i + 1] * std::sin(dir);
      x += px[i];
      y += py[i];
    }
    if (jx) {
      // angle i turns every later link
      double sx = 0.0, sy = 0.0;
      for (std::size_t i = free; i-- > 0;) {
        sx += px[i], sy += py[i];
        (*jx)[i] = -sy;
        (*jy)[i] = sx;
      }
    }
    return std::pair{x, y};
  };
  auto newton = [&](std::vector<double> a) {
    std::vector<double> jx(free), jy(free);
    double r = reach(a);
    for (int it = 0; it < 500 && r > 0.0; ++it) {
      const auto [x, y] = end_point(a, &jx, &jy);
      const double mu = 1e-3 * (x * x + y * y);
      double m00 = mu, m01 = 0.0, m11 = mu;
      for (std::size_t i = 0; i < free; ++i) m00 += jx[i] * jx[i], m01 += jx[i] * jy[i], m11 += jy[i] * jy[i];
      const double det = m00 * m11 - m01 * m01;
      const double wx = (m11 * x - m01 * y) / det, wy = (m00 * y - m01 * x) / det;
      bool improved = false;
      for (double step = 1.0; step > 1e-9; step *= 0.5) {
        std::vector<double> b = a;
        for (std::size_t i = 0; i < free; ++i) b[i] -= step * (jx[i] * wx + jy[i] * wy);
        const double rb = reach(b);
        if (rb < r) {
          a = b, r = rb, improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    return r;
  };
  // collinear configurations are saddles with a rank-one Jacobian, so also
  // start from small perturbations of the best grid point
  double best = std::min(lo, newton(best_lo));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> jitter(-0.5 * h, 0.5 * h);
  for (int k = 0; k < 8; ++k) {
    std::vector<double> a = best_lo;
    for (double& x : a) x += jitter(rng);
    best = std::min(best, newton(a));
  }
  best = std::min(best, polish(best_lo, 1.0));
  return {best, std::max(hi, polish(best_hi, -1.0))};
}

}  // namespace testing_support
