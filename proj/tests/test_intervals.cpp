#include <random>

#include "doctest.h"
#include "linkage/intervals.hpp"

using namespace linkage;

TEST_CASE("intersection") {
  CHECK(interval_intersect(IntervalSet::single(0, 3), IntervalSet::single(1, 5)) == IntervalSet::single(1, 3));
  CHECK(interval_intersect(IntervalSet::single(0, 1), IntervalSet::single(2, 3)).is_empty());
  const auto a = IntervalSet::from({{0, 1}, {2, 4}});
  CHECK(interval_intersect(a, IntervalSet::single(0.5, 2.5)) == IntervalSet::from({{0.5, 1}, {2, 2.5}}));
  CHECK(interval_intersect(IntervalSet::single(0, 1), IntervalSet::single(1, 2)) == IntervalSet::point(1));
}

TEST_CASE("normalization") {
  const auto s = IntervalSet::from({{3, 4}, {0, 1}, {0.5, 2}, {2, 2.5}, {5, 4}, {-2, -1}});
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Interval{0, 2.5});
  CHECK(s[1] == Interval{3, 4});
  CHECK(IntervalSet::from({{-1, 0.5}}) == IntervalSet::single(0, 0.5));
  CHECK(IntervalSet::empty().is_empty());
  CHECK_FALSE(IntervalSet::empty().hull());
}

TEST_CASE("membership, hull and gap merging") {
  const auto s = IntervalSet::from({{0, 1}, {1.5, 2}, {4, 5}});
  CHECK(s.contains(1.5));
  CHECK_FALSE(s.contains(1.2));
  CHECK(s.contains(1.00001, 1e-4));
  CHECK(s.locate(4.5) == 2u);
  CHECK_FALSE(s.locate(3.0));
  CHECK(*s.hull() == Interval{0, 5});
  CHECK(s.merge_gaps(0.5) == IntervalSet::from({{0, 2}, {4, 5}}));
  CHECK(s.merge_gaps(0.4) == s);
  CHECK(s[0].center() == 0.5);
  CHECK(s[2].width() == 1.0);
}

TEST_CASE("union and intersection satisfy set algebra on random inputs") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  auto random_set = [&] {
    std::vector<Interval> parts;
    for (int i = 0; i < 4; ++i) {
      const double x = u(rng), w = 0.5 * u(rng) / 10.0;
      parts.push_back({x, x + w});
    }
    return IntervalSet::from(parts);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_set(), b = random_set();
    const auto i = interval_intersect(a, b), un = interval_union(a, b);
    CHECK(interval_intersect(b, a) == i);
    CHECK(interval_union(b, a) == un);
    for (std::size_t k = 1; k < un.size(); ++k) CHECK(un[k - 1].hi < un[k].lo);
    for (int s = 0; s < 50; ++s) {
      const double x = u(rng);
      CHECK(i.contains(x) == (a.contains(x) && b.contains(x)));
      CHECK(un.contains(x) == (a.contains(x) || b.contains(x)));
    }
  }
}

TEST_CASE("JSON and CSV forms") {
  const auto s = IntervalSet::from({{0, 1}, {2, 2.5}});
  CHECK(to_json(s) == R"({"intervals":[[0.0,1.0],[2.0,2.5]]})");
  CHECK(to_csv(s) == "0,1\n2,2.5\n");
  CHECK(to_json(IntervalSet::empty()) == R"({"intervals":[]})");
  CHECK(to_csv(IntervalSet::point(0.1)) == "0.10000000000000001,0.10000000000000001\n");
}
