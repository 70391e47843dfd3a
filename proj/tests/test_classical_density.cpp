#include "idens/classical_density.hpp"

#include <utility>
#include <vector>

#include "doctest.h"

using idens::Bounds;
using idens::GapSet;
using idens::Interval;
using idens::IntervalSet;
using idens::Rational;

namespace {

IntervalSet unit() { return IntervalSet::normalize({{Rational(0), Rational(1)}}); }

struct Rng {
  std::uint64_t s;
  std::uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  Rational rat() {
    return Rational(static_cast<long>(next() % 41) - 20, static_cast<long>(next() % 6) + 1);
  }
  IntervalSet set() {
    std::vector<Interval> ivs;
    std::size_t k = next() % 6;
    for (std::size_t i = 0; i < k; ++i) {
      Rational a = rat();
      Rational b = rat();
      if (b < a) std::swap(a, b);
      ivs.push_back({a, b});
    }
    return IntervalSet::normalize(std::move(ivs));
  }
};

// Exact ratio enclosure at a breakpoint of the full (untruncated) gap set,
// derived only from truncations plus the containment tail bound. Serves as
// the independent oracle for gap_density_bounds.
Bounds full_ratio_enclosure_at(const GapSet& g, const Rational& y, long depth) {
  Rational known = measure(intersect_window(g.truncate(depth), {Rational(0), y}));
  return {known / y, (known + g.tail_measure_bound(depth)) / y};
}

}  // namespace

TEST_CASE("window ratio examples") {
  CHECK(window_ratio(unit(), {Rational(0), Rational(2)}) == Rational(1, 2));
  CHECK(window_ratio(IntervalSet{}, {Rational(0), Rational(3)}) == Rational(0));

  // Exact summation oracle: (1/4 + 1/32 + 1/1024) / (1/2) = 289/512,
  // consistent with d+(E,0) > 1 - 1/c since 289/512 > 1/2.
  GapSet g(Rational(2));
  CHECK(window_ratio(g.truncate(3), {Rational(0), Rational(1, 2)}) == Rational(289, 512));

  CHECK_THROWS_AS(window_ratio(unit(), {Rational(1), Rational(1)}), idens::input_error);
}

TEST_CASE("one sided densities examples") {
  auto d = one_sided_densities(unit(), Rational(1, 2));
  CHECK(d.right_upper == Rational(1));
  CHECK(d.right_lower == Rational(1));
  CHECK(d.left_upper == Rational(1));
  CHECK(d.left_lower == Rational(1));

  d = one_sided_densities(unit(), Rational(0));
  CHECK(d.right_upper == Rational(1));
  CHECK(d.right_lower == Rational(1));
  CHECK(d.left_upper == Rational(0));
  CHECK(d.left_lower == Rational(0));

  d = one_sided_densities(unit(), Rational(2));
  CHECK(d.right_upper == Rational(0));
  CHECK(d.left_upper == Rational(0));
}

TEST_CASE("density point set examples") {
  CHECK(density_point_set(unit()) == unit());
  CHECK(density_point_set(IntervalSet{}).empty());
  IntervalSet merged =
      IntervalSet::normalize({{Rational(0), Rational(1)}, {Rational(1), Rational(2)}});
  CHECK(density_point_set(merged) ==
        IntervalSet::normalize({{Rational(0), Rational(2)}}));
}

TEST_CASE("phi null difference on random sets") {
  Rng rng{424242};
  for (int i = 0; i < 500; ++i) {
    IntervalSet e = rng.set();
    CHECK(measure(symmetric_difference(e, density_point_set(e))).is_zero());
  }
}

TEST_CASE("window ratio stays in [0,1] and complements to 1") {
  Rng rng{555};
  for (int i = 0; i < 200; ++i) {
    IntervalSet e = rng.set();
    Rational a = rng.rat();
    Rational b = rng.rat();
    if (b < a) std::swap(a, b);
    if (a == b) continue;
    Interval j{a, b};
    Rational r = window_ratio(e, j);
    CHECK(r >= Rational(0));
    CHECK(r <= Rational(1));
    CHECK(r + window_ratio(complement_within(e, j), j) == Rational(1));
  }
}

TEST_CASE("gap density bounds, c = 2") {
  GapSet g(Rational(2));
  auto [upper, lower] = gap_density_bounds(g, 4);

  // The floor 1 - 1/c is the exact lower endpoint.
  CHECK(upper.lo == Rational(1, 2));
  CHECK(upper.hi == Rational(1, 2) + idens::pow(Rational(2), -11));
  CHECK(upper.hi <= Rational(289, 512));
  CHECK(lower.lo == Rational(0));
  CHECK(lower.hi <= idens::pow(Rational(2), -4));

  // Breakpoint-enumeration oracle: every peak enclosure sits above the
  // floor, every valley enclosure below 1/2.
  for (long n = 1; n <= 4; ++n) {
    Bounds peak = full_ratio_enclosure_at(g, g.upper_break(n), 8);
    CHECK(peak.lo > Rational(1, 2));
    Bounds valley = full_ratio_enclosure_at(g, g.lower_break(n), 8);
    CHECK(valley.hi < Rational(1, 2));
  }
  // A peak below the analyzed depth lies inside the reported enclosure.
  Bounds deep_peak = full_ratio_enclosure_at(g, g.upper_break(5), 9);
  CHECK(upper.lo <= deep_peak.lo);
  CHECK(deep_peak.hi <= upper.hi);

  CHECK_THROWS_AS(gap_density_bounds(g, 1), idens::input_error);
}

TEST_CASE("gap density bounds refine monotonically") {
  for (Rational c : {Rational(3, 2), Rational(2), Rational(10)}) {
    GapSet g(c);
    auto prev = gap_density_bounds(g, 2);
    for (long depth = 3; depth <= 8; ++depth) {
      auto cur = gap_density_bounds(g, depth);
      CHECK(prev.upper_density.contains(cur.upper_density));
      CHECK(prev.lower_density.contains(cur.lower_density));
      CHECK(cur.upper_density.lo == Rational(1) - Rational(1) / c);
      CHECK(cur.lower_density.contains(Rational(0)));
      CHECK(cur.upper_density.hi < Rational(1));
      prev = cur;
    }
  }
}

TEST_CASE("gap density bounds, c = 10 reaches 9/10") {
  auto [upper, lower] = gap_density_bounds(GapSet(Rational(10)), 3);
  CHECK(upper.lo == Rational(9, 10));
  CHECK(lower.contains(Rational(0)));
}
