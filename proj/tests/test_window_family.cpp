#include "idens/window_family.hpp"

#include "doctest.h"

using idens::Ideal;
using idens::IndexSet;
using idens::Interval;
using idens::Rational;
using idens::WindowFamily;

TEST_CASE("window shapes") {
  WindowFamily harm = WindowFamily::symmetric_harmonic(Rational(1, 2));
  CHECK(harm.window(1) == Interval{Rational(1, 4), Rational(3, 4)});
  CHECK(harm.window(3) == Interval{Rational(3, 8), Rational(5, 8)});

  WindowFamily geo = WindowFamily::right_geometric(Rational(0), Rational(2));
  CHECK(geo.window(1) == Interval{Rational(0), Rational(1, 2)});
  CHECK(geo.window(2) == Interval{Rational(0), Rational(1, 16)});
  CHECK(geo.window(3) == Interval{Rational(0), Rational(1, 512)});
  CHECK_THROWS_AS(WindowFamily::right_geometric(Rational(0), Rational(1)), idens::input_error);

  WindowFamily pre = WindowFamily::custom_prefix(
      {{Rational(-1), Rational(1)}, {Rational(-2), Rational(3)}}, harm);
  CHECK(pre.window(1) == Interval{Rational(-1), Rational(1)});
  CHECK(pre.window(2) == Interval{Rational(-2), Rational(3)});
  CHECK(pre.window(3) == harm.window(3));
  CHECK_THROWS_AS(
      WindowFamily::custom_prefix({{Rational(2), Rational(3)}}, harm),
      idens::input_error);  // window misses the center
}

TEST_CASE("exception windows replace base windows on the exception set") {
  WindowFamily geo = WindowFamily::right_geometric(Rational(0), Rational(2));
  WindowFamily w = geo.with_exceptions(IndexSet::squares(), {Rational(-1), Rational(1)});
  CHECK(w.window(4) == Interval{Rational(-1), Rational(1)});
  CHECK(w.window(5) == geo.window(5));
  CHECK_THROWS_AS(geo.with_exceptions(IndexSet::squares(), {Rational(1), Rational(2)}),
                  idens::input_error);
  CHECK_THROWS_AS(geo.with_exceptions(IndexSet::squares(), {Rational(0), Rational(0)}),
                  idens::input_error);
}

TEST_CASE("validity examples") {
  // Right-geometric with no exceptions: 2^{-n^2} < 1/n for every n >= 1.
  WindowFamily geo = WindowFamily::right_geometric(Rational(0), Rational(2));
  CHECK(validate_window_family(geo, Ideal::fin));
  CHECK(validate_window_family(geo, Ideal::density_zero));

  // Fixed-length windows on the evens: density 1/2 is not in I_d.
  WindowFamily evens =
      geo.with_exceptions(IndexSet::ap(2, 2), {Rational(-1, 2), Rational(1, 2)});
  CHECK_FALSE(validate_window_family(evens, Ideal::density_zero));
  CHECK_FALSE(validate_window_family(evens, Ideal::fin));

  // Squares have density zero.
  WindowFamily squares =
      geo.with_exceptions(IndexSet::squares(), {Rational(-1, 2), Rational(1, 2)});
  CHECK(validate_window_family(squares, Ideal::density_zero));
  CHECK_FALSE(validate_window_family(squares, Ideal::fin));

  WindowFamily finite_ex =
      geo.with_exceptions(IndexSet::finite({1, 2, 3}), {Rational(-1, 2), Rational(1, 2)});
  CHECK(validate_window_family(finite_ex, Ideal::fin));

  // A slowly growing ratio only delays the shrinking threshold; the family
  // stays valid because the violating index block is finite.
  WindowFamily slow = WindowFamily::right_geometric(Rational(0), Rational(11, 10));
  CHECK(validate_window_family(slow, Ideal::fin));
  CHECK(slow.window(1).length() == Rational(10, 11));
}
