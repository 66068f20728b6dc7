// Second, independent computation of the gamma set. It parametrizes G_3 by
// the angle of p3 around p4 and uses its own complex-number intersection, so
// it shares no geometry code with gamma_set.

#include <complex>
#include <numbers>
#include <optional>
#include <random>

#include "linkage/k33.hpp"

namespace linkage {

namespace {

using C = std::complex<double>;

std::optional<C> meet(C z1, double r1, C z2, double r2, int s, double tol, double coincide) {
  const C dz = z2 - z1;
  const double dist = std::abs(dz);
  if (dist <= coincide) return std::nullopt;
  const double x = (dist * dist + r1 * r1 - r2 * r2) / (2.0 * dist);
  const double h2 = r1 * r1 - x * x;
  if (h2 < -tol) return std::nullopt;
  const double h = h2 > 0 ? std::sqrt(h2) : 0.0;
  return z1 + dz / dist * C(x, s * h);
}

struct Chain {
  double a, b, c, d, e, f, alpha, beta, tol, coincide;

  // tuple bits: 2 -> p6 branch, 1 -> p2 branch, 0 -> p5 branch
  std::optional<double> gamma(double phi, unsigned t) const {
    const C p4(0.0, 0.0), p1(alpha, 0.0);
    const C p3 = std::polar(d, phi);
    auto sg = [&](int bit) { return (t >> bit) & 1u ? -1 : 1; };
    const auto p6 = meet(p1, a, p3, beta, sg(2), tol, coincide);
    if (!p6) return std::nullopt;
    const auto p2 = meet(p1, b, p3, c, sg(1), tol, coincide);
    if (!p2) return std::nullopt;
    const auto p5 = meet(p4, e, *p6, f, sg(0), tol, coincide);
    if (!p5) return std::nullopt;
    return std::abs(*p2 - *p5);
  }
};

}  // namespace

IntervalSet gamma_set_oracle(const K33Lengths& l, std::size_t samples, std::uint64_t seed,
                             std::optional<double> merge_gap) {
  l.require(3);
  if (!(l.d > 0.0)) throw PreconditionViolation("gamma_set_oracle: needs d > 0");
  if (samples < 16) throw InvalidInput("gamma_set_oracle: too few samples");
  const double scale = l.scale();
  const Chain ch{l.a, l.b, l.c, l.d, l.e, *l.f, *l.alpha, *l.beta, 1e-12 * scale * scale, 1e-12 * scale};
  std::mt19937_64 rng(seed);
  const double offset = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  auto phi_at = [&](std::size_t k) { return -std::numbers::pi + (static_cast<double>(k) + offset) * step; };

  std::vector<Interval> found;
  for (unsigned t = 0; t < 8; ++t) {
    std::vector<std::optional<double>> g(samples);
    std::size_t feasible = 0;
    for (std::size_t k = 0; k < samples; ++k) {
      g[k] = ch.gamma(phi_at(k), t);
      feasible += g[k].has_value();
    }
    if (feasible == 0) continue;
    auto next = [&](std::size_t k) { return (k + 1) % samples; };
    auto prev = [&](std::size_t k) { return (k + samples - 1) % samples; };
    std::vector<std::size_t> starts;
    if (feasible == samples) {
      starts.push_back(0);
    } else {
      for (std::size_t k = 0; k < samples; ++k) {
        if (g[k] && !g[prev(k)]) starts.push_back(k);
      }
    }
    for (std::size_t s : starts) {
      double lo = INFINITY, hi = -INFINITY;
      std::size_t k = s, last = s;
      std::size_t visited = 0;
      while (g[k] && visited < samples) {
        const double v = *g[k];
        // ternary refinement around sampled local extrema
        if (visited > 0 && g[next(k)] && g[prev(k)]) {
          const double vp = *g[prev(k)], vn = *g[next(k)];
          const bool is_min = v <= vp && v <= vn;
          const bool is_max = v >= vp && v >= vn;
          if ((is_min && v <= lo + 1e-6) || (is_max && v >= hi - 1e-6)) {
            const double sign = is_min ? 1.0 : -1.0;
            double x0 = phi_at(k) - step, x1 = phi_at(k) + step;
            for (int it = 0; it < 100; ++it) {
              const double m1 = x0 + (x1 - x0) / 3.0, m2 = x1 - (x1 - x0) / 3.0;
              const auto f1 = ch.gamma(m1, t), f2 = ch.gamma(m2, t);
              if (!f1 || !f2) break;
              if (sign * *f1 < sign * *f2) {
                x1 = m2;
              } else {
                x0 = m1;
              }
            }
            if (const auto fx = ch.gamma(0.5 * (x0 + x1), t)) {
              lo = std::min(lo, *fx);
              hi = std::max(hi, *fx);
            }
          }
        }
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        last = k;
        k = next(k);
        ++visited;
      }
      if (feasible < samples) {
        // walk to the true feasibility edge on both ends
        for (int dir : {-1, 1}) {
          const double inside = phi_at(dir < 0 ? s : last);
          double in = inside, out = inside + dir * step;
          for (int it = 0; it < 200 && std::abs(out - in) > 1e-12; ++it) {
            const double mid = 0.5 * (in + out);
            (ch.gamma(mid, t) ? in : out) = mid;
          }
          for (int i = 1; i <= 16; ++i) {
            if (const auto v = ch.gamma(inside + (in - inside) * i / 16.0, t)) {
              lo = std::min(lo, *v);
              hi = std::max(hi, *v);
            }
          }
        }
      }
      found.push_back({lo, hi});
    }
  }
  return IntervalSet::from(found).merge_gaps(merge_gap.value_or(1e-3 * scale));
}

}  // namespace linkage
