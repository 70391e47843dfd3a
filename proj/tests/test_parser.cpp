#include "idens/parser.hpp"

#include "doctest.h"

using idens::GapSet;
using idens::Ideal;
using idens::IndexSet;
using idens::IntervalSet;
using idens::Rational;
using idens::SetSource;
using idens::StepSequence;
using idens::WindowFamily;

TEST_CASE("set literals") {
  SetSource s = idens::parse_set("[0,1] u [2,3]");
  const auto& ivs = std::get<IntervalSet>(s);
  REQUIRE(ivs.size() == 2);
  CHECK(measure(ivs) == Rational(2));

  CHECK(std::get<IntervalSet>(idens::parse_set("empty")).empty());
  CHECK(std::get<IntervalSet>(idens::parse_set("[1/4, 3/4]")).size() == 1);
  CHECK(std::get<IntervalSet>(idens::parse_set("[-1/2, 1/2]")).intervals()[0].lo ==
        Rational(-1, 2));

  GapSet g = std::get<GapSet>(idens::parse_set("gapset(c=2)"));
  CHECK(g.ratio() == Rational(2));
  CHECK(std::get<GapSet>(idens::parse_set("gapset(c = 3/2)")).ratio() == Rational(3, 2));
}

TEST_CASE("parse errors carry position and expectation") {
  try {
    idens::parse_set("[0,1] u [2");
    FAIL("expected parse error");
  } catch (const idens::parse_error& err) {
    CHECK(err.position == 10);
    CHECK(err.expected == "','");
  }
  CHECK_THROWS_AS(idens::parse_set("[3,1]"), idens::parse_error);
  CHECK_THROWS_AS(idens::parse_set("gapset(c=1)"), idens::input_error);
  CHECK_THROWS_AS(idens::parse_set("[0,1] extra"), idens::parse_error);
  CHECK_THROWS_AS(idens::parse_rational("1/"), idens::parse_error);
  CHECK_THROWS_AS(idens::parse_set("@"), idens::parse_error);
}

TEST_CASE("index set expressions") {
  IndexSet s = idens::parse_index_set("ap(1,2) | squares | {1,2,3}");
  CHECK(s.contains(1));
  CHECK(s.contains(4));   // square
  CHECK(s.contains(7));   // odd
  CHECK_FALSE(s.contains(6));
  CHECK(s.density() == Rational(1, 2));

  IndexSet t = idens::parse_index_set("!(ap(2,2)) & !squares");
  CHECK(t.contains(3));
  CHECK_FALSE(t.contains(9));
  CHECK_FALSE(t.contains(2));

  CHECK(idens::parse_index_set("none").is_empty());
  CHECK(idens::parse_index_set("all").density() == Rational(1));
  CHECK(idens::parse_index_set("{}").is_empty());
}

TEST_CASE("ideals") {
  CHECK(idens::parse_ideal("fin") == Ideal::fin);
  CHECK(idens::parse_ideal("d0") == Ideal::density_zero);
  CHECK_THROWS_AS(idens::parse_ideal("max"), idens::parse_error);
}

TEST_CASE("step sequences") {
  StepSequence x = idens::parse_steps("steps(mod=2; 0:3, 1:7; except 4 -> 0; on squares -> 1)");
  CHECK(x.value_at(4) == Rational(0));
  CHECK(x.value_at(9) == Rational(1));
  CHECK(x.value_at(6) == Rational(3));
  CHECK(x.value_at(7) == Rational(7));

  StepSequence y = idens::parse_steps("steps(mod=1; 0:0; on squares -> 1)");
  CHECK(i_limsup(y, Ideal::density_zero) == Rational(0));
  CHECK(i_limsup(y, Ideal::fin) == Rational(1));

  CHECK_THROWS_AS(idens::parse_steps("steps(mod=2; 0:3)"), idens::parse_error);
  CHECK_THROWS_AS(idens::parse_steps("steps(mod=0; 0:1)"), idens::parse_error);
  // Overrides must have density zero.
  CHECK_THROWS_AS(idens::parse_steps("steps(mod=1; 0:0; on ap(2,2) -> 1)"),
                  idens::input_error);
}

TEST_CASE("window families") {
  WindowFamily w = idens::parse_family("rgeom(p=0, c=2)");
  CHECK(w.kind() == WindowFamily::Kind::right_geometric);
  CHECK(w.window(2) == idens::Interval{Rational(0), Rational(1, 16)});

  WindowFamily h = idens::parse_family("symharm(p=1/2)");
  CHECK(h.center() == Rational(1, 2));

  WindowFamily ex = idens::parse_family("rgeom(p=0, c=2; except squares -> [-1,1])");
  CHECK(ex.window(4) == idens::Interval{Rational(-1), Rational(1)});
  CHECK(ex.window(5) == idens::Interval{Rational(0), idens::pow(Rational(2), -25)});

  WindowFamily pre =
      idens::parse_family("prefix(p=0; [-1,1], [-1/2,1/2]; then symharm(p=0))");
  CHECK(pre.window(1) == idens::Interval{Rational(-1), Rational(1)});
  CHECK(pre.window(2) == idens::Interval{Rational(-1, 2), Rational(1, 2)});
  CHECK(pre.window(3) == idens::Interval{Rational(-1, 8), Rational(1, 8)});

  CHECK_THROWS_AS(idens::parse_family("rgeom(p=0)"), idens::parse_error);
  CHECK_THROWS_AS(idens::parse_family("prefix(p=0; [1,2]; then symharm(p=0))"),
                  idens::input_error);  // window misses the center
}
