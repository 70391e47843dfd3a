#include "idens/sparse.hpp"

#include "idens/rng.hpp"

namespace idens {

bool sparse_check_interval_set(const IntervalSet& e, const Rational& p, Side side) {
  bool adjacent = side == Side::right ? right_interval_adjacent(e, p)
                                      : left_interval_adjacent(e, p);
  return !adjacent;
}

GapAdjacency gap_set_adjacency(const GapSet& g, const Rational& p) {
  GapAdjacency out;
  if (p.sign() < 0) {
    out.right_gap = out.left_gap = true;  // everything lives in (0, b_1]
    return out;
  }
  if (p.is_zero()) {
    // Gaps reach down to 0, so no interval is adjacent; but neither is the
    // right side interval-free: density there is positive.
    out.left_gap = true;
    return out;
  }
  Rational b1 = g.upper_break(1);
  if (p > b1) {
    out.right_gap = out.left_gap = true;
    return out;
  }
  if (p == b1) {
    out.left_interval = true;
    out.right_gap = true;
    return out;
  }
  for (long n = 1;; ++n) {
    Rational a = g.lower_break(n);
    Rational b = g.upper_break(n);
    if (p > b) {  // strictly inside the gap (b_n, a_{n-1})
      out.right_gap = out.left_gap = true;
      return out;
    }
    if (p == b) {
      out.left_interval = true;
      out.right_gap = true;
      return out;
    }
    if (p > a) {  // interior of (a_n, b_n)
      out.right_interval = out.left_interval = true;
      return out;
    }
    if (p == a) {
      out.right_interval = true;
      out.left_gap = true;
      return out;
    }
    // p < a_n: descend a level.
  }
}

namespace {

bool set_has_interval_adjacency(const SetSource& a, const Rational& x) {
  if (const auto* ivs = std::get_if<IntervalSet>(&a))
    return right_interval_adjacent(*ivs, x) || left_interval_adjacent(*ivs, x);
  GapAdjacency adj = gap_set_adjacency(std::get<GapSet>(a), x);
  return adj.right_interval || adj.left_interval;
}

bool certified_density_zero(const SetSource& a, const Rational& x) {
  if (const auto* ivs = std::get_if<IntervalSet>(&a))
    return classify_point_i_density(*ivs, x, Ideal::fin) == IDensityClass::dispersion;
  GapAdjacency adj = gap_set_adjacency(std::get<GapSet>(a), x);
  return adj.right_gap && adj.left_gap;
}

IntervalSet random_dispersion_candidate(Rng& rng, const Rational& x) {
  // Small interval sets kept clear of a neighborhood of x, so that x is a
  // certified dispersion point of the candidate.
  std::vector<Interval> ivs;
  std::size_t k = rng.below(4);
  Rational guard(1, static_cast<long>(rng.below(6) + 2));
  for (std::size_t i = 0; i < k; ++i) {
    Rational lo = x + Rational(static_cast<long>(rng.below(41)) - 20,
                               static_cast<long>(rng.below(5)) + 1);
    Rational hi = lo + Rational(static_cast<long>(rng.below(12)) + 1,
                                static_cast<long>(rng.below(5)) + 1);
    ivs.push_back({lo, hi});
  }
  IntervalSet raw = IntervalSet::normalize(std::move(ivs));
  return set_difference(raw, IntervalSet::normalize({{x - guard, x + guard}}));
}

}  // namespace

FalsifyResult i_sparse_falsify(const SetSource& a, const Rational& x, Ideal ideal,
                               int trials, std::uint64_t seed, bool gate_density_zero) {
  (void)ideal;  // the certified classifications used here are ideal-independent
  if (gate_density_zero && certified_density_zero(a, x))
    return {std::nullopt, 0, "certified-sparse-density-zero"};

  Rng rng(seed);
  int used = 0;
  auto witnesses = [&](const IntervalSet& b) -> bool {
    ++used;
    // Premise: I-d(x, B) = 0 < 1, certified by dispersion classification.
    if (classify_point_i_density(b, x, Ideal::fin) != IDensityClass::dispersion)
      return false;
    // Conclusion: certified upper I-density 1 of A u B at x. B contributes
    // nothing adjacent to x, so this is interval adjacency of A alone.
    return set_has_interval_adjacency(a, x);
  };

  std::vector<IntervalSet> structured{
      IntervalSet{},
      IntervalSet::normalize({{x - Rational(2), x - Rational(1)}}),
      IntervalSet::normalize({{x + Rational(1), x + Rational(2)}}),
  };
  for (const auto& b : structured) {
    if (used >= trials) break;
    if (witnesses(b)) return {b, used, "falsified"};
  }
  while (used < trials) {
    IntervalSet b = random_dispersion_candidate(rng, x);
    if (witnesses(b)) return {b, used, "falsified"};
  }
  return {std::nullopt, used, "unfalsified"};
}

IntervalSet sparse_interior(const IntervalSet& a) {
  // Interior points of the canonical form are exactly the points of a
  // whose complement has one-sided density 0 on both sides; in the
  // null-quotient representation that set is a itself.
  return a;
}

}  // namespace idens
