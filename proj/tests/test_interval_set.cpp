#include "idens/interval_set.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"

using idens::Interval;
using idens::IntervalSet;
using idens::PointLocation;
using idens::Rational;

namespace {

// Independent oracle for normalization, modulo null sets: membership in the
// raw union and in the canonical form must agree on the midpoint of every
// cell cut out by the collected endpoints.
bool raw_member(const std::vector<Interval>& raw, const Rational& p) {
  return std::any_of(raw.begin(), raw.end(),
                     [&](const Interval& iv) { return iv.lo <= p && p <= iv.hi; });
}

void check_normalize_against_membership_oracle(const std::vector<Interval>& raw) {
  IntervalSet canon = IntervalSet::normalize(raw);
  std::vector<Rational> cuts;
  for (const auto& iv : raw) {
    cuts.push_back(iv.lo);
    cuts.push_back(iv.hi);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
    bool in_canon = idens::classify_point(canon, mid) != PointLocation::outside;
    CHECK(in_canon == raw_member(raw, mid));
  }
}

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
    long num = static_cast<long>(next() % 33) - 16;
    long den = static_cast<long>(next() % 8) + 1;
    return Rational(num, den);
  }
};

IntervalSet random_set(Rng& rng) {
  std::vector<Interval> ivs;
  std::size_t k = rng.next() % 5;
  for (std::size_t i = 0; i < k; ++i) {
    Rational a = rng.rat();
    Rational b = rng.rat();
    if (b < a) std::swap(a, b);
    ivs.push_back({a, b});
  }
  return IntervalSet::normalize(std::move(ivs));
}

}  // namespace

TEST_CASE("normalize canonical examples") {
  CHECK(IntervalSet::normalize({}).empty());

  IntervalSet touching = IntervalSet::normalize({{Rational(0), Rational(1)}, {Rational(1), Rational(2)}});
  REQUIRE(touching.size() == 1);
  CHECK(touching.intervals()[0] == Interval{Rational(0), Rational(2)});

  // Sweep-line oracle over endpoints: [0,1/2] u [1/4,3/4] -> [0,3/4].
  std::vector<Interval> raw{{Rational(0), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}};
  IntervalSet merged = IntervalSet::normalize(raw);
  REQUIRE(merged.size() == 1);
  CHECK(merged.intervals()[0] == Interval{Rational(0), Rational(3, 4)});
  check_normalize_against_membership_oracle(raw);

  // Degenerate intervals are dropped.
  CHECK(IntervalSet::normalize({{Rational(1), Rational(1)}}).empty());

  CHECK_THROWS_AS(IntervalSet::normalize({{Rational(1), Rational(0)}}), idens::input_error);
}

TEST_CASE("measure examples") {
  CHECK(measure(IntervalSet{}) == Rational(0));
  IntervalSet two = IntervalSet::normalize({{Rational(0), Rational(1)}, {Rational(2), Rational(3)}});
  CHECK(measure(two) == Rational(2));
  IntervalSet merged = IntervalSet::normalize({{Rational(0), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}});
  CHECK(measure(merged) == Rational(3, 4));
}

TEST_CASE("set algebra examples") {
  IntervalSet a = IntervalSet::normalize({{Rational(0), Rational(1)}});
  IntervalSet b = IntervalSet::normalize({{Rational(2), Rational(3)}});
  CHECK(set_intersection(a, b).empty());

  IntervalSet inner = IntervalSet::normalize({{Rational(1, 4), Rational(1, 2)}});
  IntervalSet comp = complement_within(inner, {Rational(0), Rational(1)});
  IntervalSet expected = IntervalSet::normalize(
      {{Rational(0), Rational(1, 4)}, {Rational(1, 2), Rational(1)}});
  CHECK(comp == expected);

  // Pointwise membership oracle on a rational grid for the complement.
  for (int i = 0; i <= 32; ++i) {
    Rational p(i, 32);
    bool in_comp = idens::classify_point(comp, p) == PointLocation::interior;
    bool in_inner = idens::classify_point(inner, p) == PointLocation::interior;
    if (in_comp) CHECK_FALSE(in_inner);
    if (in_inner) CHECK_FALSE(in_comp);
  }

  CHECK(symmetric_difference(a, a).empty());
}

TEST_CASE("point classification") {
  IntervalSet e = IntervalSet::normalize({{Rational(0), Rational(1)}});
  CHECK(classify_point(e, Rational(1, 2)) == PointLocation::interior);
  CHECK(classify_point(e, Rational(0)) == PointLocation::boundary);
  CHECK(classify_point(e, Rational(1)) == PointLocation::boundary);
  CHECK(classify_point(e, Rational(2)) == PointLocation::outside);
}

TEST_CASE("randomized structural properties") {
  Rng rng{987654321};
  for (int trial = 0; trial < 300; ++trial) {
    IntervalSet a = random_set(rng);
    IntervalSet b = random_set(rng);
    IntervalSet c = random_set(rng);

    // Inclusion-exclusion, exactly.
    CHECK(measure(set_union(a, b)) + measure(set_intersection(a, b)) ==
          measure(a) + measure(b));

    // Complement measure within a window covering everything.
    Interval w{Rational(-20), Rational(20)};
    CHECK(measure(complement_within(a, w)) ==
          w.length() - measure(intersect_window(a, w)));

    // Idempotence, commutativity, associativity (structural equality).
    CHECK(IntervalSet::normalize(a.intervals()) == a);
    CHECK(set_union(a, b) == set_union(b, a));
    CHECK(set_intersection(a, b) == set_intersection(b, a));
    CHECK(set_union(set_union(a, b), c) == set_union(a, set_union(b, c)));
    CHECK(set_intersection(set_intersection(a, b), c) ==
          set_intersection(a, set_intersection(b, c)));

    // Monotonicity of measure over the subset order.
    IntervalSet sub = set_intersection(a, b);
    CHECK(is_subset(sub, a));
    CHECK(measure(sub) <= measure(a));

    CHECK(symmetric_difference(a, a).empty());

    // Difference partitions the union.
    CHECK(measure(set_difference(a, b)) + measure(set_intersection(a, b)) == measure(a));
  }
}
