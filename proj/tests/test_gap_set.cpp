#include "idens/gap_set.hpp"

#include "doctest.h"

using idens::GapSet;
using idens::Interval;
using idens::IntervalSet;
using idens::Rational;

TEST_CASE("breakpoints for c = 2") {
  GapSet g(Rational(2));
  CHECK(g.upper_break(1) == Rational(1, 2));
  CHECK(g.lower_break(1) == Rational(1, 4));
  CHECK(g.upper_break(2) == Rational(1, 16));
  CHECK(g.lower_break(2) == Rational(1, 32));
  CHECK(g.upper_break(3) == Rational(1, 512));
  CHECK(g.lower_break(3) == Rational(1, 1024));
  CHECK_THROWS_AS(GapSet(Rational(1)), idens::input_error);
  CHECK_THROWS_AS(GapSet(Rational(1, 2)), idens::input_error);
}

TEST_CASE("levels are strictly separated: b_{n+1} < a_n") {
  for (Rational c : {Rational(3, 2), Rational(2), Rational(10), Rational(11, 10)}) {
    GapSet g(c);
    for (long n = 1; n <= 20; ++n) {
      CHECK(g.lower_break(n) < g.upper_break(n));
      CHECK(g.upper_break(n + 1) < g.lower_break(n));
    }
  }
}

TEST_CASE("truncation is canonical and ordered") {
  GapSet g(Rational(2));
  IntervalSet t = g.truncate(3);
  REQUIRE(t.size() == 3);
  CHECK(t.intervals()[0] == Interval{Rational(1, 1024), Rational(1, 512)});
  CHECK(t.intervals()[1] == Interval{Rational(1, 32), Rational(1, 16)});
  CHECK(t.intervals()[2] == Interval{Rational(1, 4), Rational(1, 2)});
  CHECK(measure(t) == Rational(289, 1024));
  CHECK(g.truncate(0).empty());
}

TEST_CASE("tail bound dominates deep partial sums") {
  for (Rational c : {Rational(3, 2), Rational(2), Rational(10)}) {
    GapSet g(c);
    for (long n = 2; n <= 6; ++n) {
      // All omitted intervals lie inside (0, b_{n+1}).
      CHECK(g.truncated_measure(n + 1, n + 10) < g.tail_measure_bound(n));
      CHECK(g.tail_measure_bound(n) == g.upper_break(n + 1));
    }
  }
}
