#include "linkage/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace linkage {

IntervalSet IntervalSet::from(std::vector<Interval> parts) {
  std::vector<Interval> kept;
  for (Interval p : parts) {
    if (std::isnan(p.lo) || std::isnan(p.hi) || p.lo > p.hi || p.hi < 0.0) continue;
    p.lo = std::max(p.lo, 0.0);
    kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  IntervalSet out;
  for (const Interval& p : kept) {
    if (!out.parts_.empty() && p.lo <= out.parts_.back().hi) {
      out.parts_.back().hi = std::max(out.parts_.back().hi, p.hi);
    } else {
      out.parts_.push_back(p);
    }
  }
  return out;
}

std::optional<std::size_t> IntervalSet::locate(double x, double tol) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (x >= parts_[i].lo - tol && x <= parts_[i].hi + tol) return i;
  }
  return std::nullopt;
}

bool IntervalSet::contains(double x, double tol) const { return locate(x, tol).has_value(); }

std::optional<Interval> IntervalSet::hull() const {
  if (parts_.empty()) return std::nullopt;
  return Interval{parts_.front().lo, parts_.back().hi};
}

IntervalSet IntervalSet::merge_gaps(double gap) const {
  IntervalSet out;
  for (const Interval& p : parts_) {
    if (!out.parts_.empty() && p.lo - out.parts_.back().hi <= gap) {
      out.parts_.back().hi = std::max(out.parts_.back().hi, p.hi);
    } else {
      out.parts_.push_back(p);
    }
  }
  return out;
}

IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> parts;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double lo = std::max(a[i].lo, b[j].lo);
    const double hi = std::min(a[i].hi, b[j].hi);
    if (lo <= hi) parts.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalSet::from(std::move(parts));
}

IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> parts = a.intervals();
  parts.insert(parts.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet::from(std::move(parts));
}

std::string to_json(const IntervalSet& s) {
  nlohmann::json j;
  j["intervals"] = nlohmann::json::array();
  for (const Interval& p : s.intervals()) j["intervals"].push_back({p.lo, p.hi});
  return j.dump();
}

std::string to_csv(const IntervalSet& s) {
  std::string out;
  char buf[64];
  for (const Interval& p : s.intervals()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.lo, p.hi);
    out += buf;
  }
  return out;
}

}  // namespace linkage
