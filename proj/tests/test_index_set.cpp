#include "idens/index_set.hpp"

#include <cstdint>

#include "doctest.h"
#include "idens/ideal.hpp"

using idens::Ideal;
using idens::IndexSet;
using idens::Rational;

namespace {

// Prefix-counting oracle |K(n)| / n using only expression-tree membership
// (the implementation computes densities from the residue normal form, a
// disjoint code path).
Rational prefix_density(const IndexSet& s, std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (s.contains(k)) ++count;
  return Rational(static_cast<long>(count), static_cast<long>(n));
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
};

// Atoms are chosen so the n = 10^4 prefix count deviates from the limit by
// at most the squares' own contribution (100 terms, i.e. exactly 1/100):
// every progression step divides 10^4, making residue-class prefix counts
// exact, and progressions start inside their first period.
IndexSet random_expression(Rng& rng, int depth) {
  static const std::uint64_t steps[] = {2, 4, 5, 8, 10, 16, 20, 25};
  if (depth == 0) {
    if (rng.next() % 3 == 0) return IndexSet::squares();
    std::uint64_t step = steps[rng.next() % 8];
    return IndexSet::ap(rng.next() % step + 1, step);
  }
  switch (rng.next() % 3) {
    case 0: return random_expression(rng, depth - 1) | random_expression(rng, depth - 1);
    case 1: return random_expression(rng, depth - 1) & random_expression(rng, depth - 1);
    default: return ~random_expression(rng, depth - 1);
  }
}

}  // namespace

TEST_CASE("membership of the primitives") {
  IndexSet evens = IndexSet::ap(2, 2);
  CHECK(evens.contains(2));
  CHECK(evens.contains(100));
  CHECK_FALSE(evens.contains(7));
  CHECK_FALSE(evens.contains(0));

  IndexSet sq = IndexSet::squares();
  CHECK(sq.contains(1));
  CHECK(sq.contains(9));
  CHECK(sq.contains(10000));
  CHECK_FALSE(sq.contains(10001));

  IndexSet f = IndexSet::finite({1, 2, 3});
  CHECK(f.contains(2));
  CHECK_FALSE(f.contains(4));
  CHECK_THROWS_AS(IndexSet::finite({0}), idens::input_error);
  CHECK_THROWS_AS(IndexSet::ap(0, 2), idens::input_error);
}

TEST_CASE("asymptotic density examples") {
  CHECK(asymptotic_density(IndexSet::naturals()) == Rational(1));
  CHECK(IndexSet::ap(2, 2).density() == Rational(1, 2));
  // Disjoint classes 1 mod 2 and 2 mod 4; inclusion-exclusion gives 3/4.
  CHECK((IndexSet::ap(1, 2) | IndexSet::ap(2, 4)).density() == Rational(3, 4));
  CHECK(IndexSet::squares().density() == Rational(0));
  CHECK(IndexSet::finite({5, 10, 15}).density() == Rational(0));
  CHECK((~IndexSet::squares()).density() == Rational(1));

  // Prefix-count oracle: evens at n = 10^4 give exactly 1/2.
  CHECK(prefix_density(IndexSet::ap(2, 2), 10000) == Rational(1, 2));
  CHECK(prefix_density(IndexSet::ap(1, 2) | IndexSet::ap(2, 4), 10000) == Rational(3, 4));
  // Squares: floor(sqrt(10^4)) / 10^4 = 1/100, within 1/100 of the limit 0.
  CHECK(prefix_density(IndexSet::squares(), 10000) == Rational(1, 100));
}

TEST_CASE("finiteness decisions") {
  CHECK(IndexSet::finite({1, 2, 3}).is_finite());
  CHECK_FALSE(IndexSet::ap(2, 2).is_finite());
  CHECK_FALSE(IndexSet::squares().is_finite());
  CHECK(IndexSet::empty().is_empty());

  // Squares congruent to 3 mod 4 do not exist.
  CHECK((IndexSet::squares() & IndexSet::ap(3, 4)).is_empty());
  // Odd squares and even squares are both infinite.
  CHECK_FALSE((IndexSet::squares() & IndexSet::ap(1, 4)).is_finite());
  CHECK_FALSE((IndexSet::squares() & IndexSet::ap(4, 4)).is_finite());

  IndexSet trimmed = IndexSet::squares() - IndexSet::finite({1, 4, 9});
  CHECK_FALSE(trimmed.is_finite());
  CHECK_FALSE(trimmed.contains(9));
  CHECK(trimmed.contains(16));

  auto elems = (IndexSet::finite({3, 5}) | IndexSet::finite({5, 8})).finite_elements();
  CHECK(elems == std::vector<std::uint64_t>{3, 5, 8});
  CHECK_THROWS_AS(IndexSet::squares().finite_elements(), idens::input_error);
}

TEST_CASE("ideal membership examples") {
  CHECK_FALSE(ideal_member(Ideal::fin, IndexSet::squares()));
  CHECK(ideal_member(Ideal::density_zero, IndexSet::squares()));
  CHECK(ideal_member(Ideal::fin, IndexSet::finite({1, 2, 3})));
  CHECK(ideal_member(Ideal::density_zero, IndexSet::finite({1, 2, 3})));
  CHECK_FALSE(ideal_member(Ideal::density_zero, IndexSet::ap(2, 2)));
  // N itself is never a member (proper ideals).
  CHECK_FALSE(ideal_member(Ideal::fin, IndexSet::naturals()));
  CHECK_FALSE(ideal_member(Ideal::density_zero, IndexSet::naturals()));
  // Filter duality.
  CHECK(filter_member(Ideal::density_zero, ~IndexSet::squares()));
  CHECK_FALSE(filter_member(Ideal::fin, IndexSet::ap(2, 2)));
}

TEST_CASE("normal form agrees with tree membership") {
  Rng rng{20240601};
  for (int trial = 0; trial < 60; ++trial) {
    IndexSet s = random_expression(rng, 2);
    auto nf = s.normal_form();
    for (std::uint64_t n = 1; n <= 300; ++n) CHECK(nf.eval(n) == s.contains(n));
  }
}

TEST_CASE("ideal axioms hold on random expressions") {
  Rng rng{777};
  for (int trial = 0; trial < 120; ++trial) {
    IndexSet s = random_expression(rng, 2);
    IndexSet t = random_expression(rng, 2);
    for (Ideal ideal : {Ideal::fin, Ideal::density_zero}) {
      // Closure under subsets (via intersection) and finite unions.
      if (ideal_member(ideal, s)) {
        CHECK(ideal_member(ideal, s & t));
        if (ideal_member(ideal, t)) CHECK(ideal_member(ideal, s | t));
      }
      // Admissibility: singletons always belong.
      CHECK(ideal_member(ideal, IndexSet::finite({rng.next() % 100 + 1})));
    }
    // Fin is contained in the density-zero ideal.
    if (ideal_member(Ideal::fin, s)) CHECK(ideal_member(Ideal::density_zero, s));
    // Density matches the prefix oracle within 1/100 at n = 10^4.
    Rational d = s.density();
    Rational pd = prefix_density(s, 10000);
    CHECK(idens::abs(d - pd) <= Rational(1, 100));
  }
}
