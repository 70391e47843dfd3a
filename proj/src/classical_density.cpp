#include "idens/classical_density.hpp"

namespace idens {

Rational window_ratio(const IntervalSet& e, const Interval& j) {
  if (j.lo > j.hi) throw input_error("malformed window interval");
  Rational len = j.length();
  if (len.is_zero()) throw input_error("zero-length window");
  return measure(intersect_window(e, j)) / len;
}

bool right_interval_adjacent(const IntervalSet& e, const Rational& p) {
  for (const auto& iv : e.intervals())
    if (iv.lo <= p && p < iv.hi) return true;
  return false;
}

bool left_interval_adjacent(const IntervalSet& e, const Rational& p) {
  for (const auto& iv : e.intervals())
    if (iv.lo < p && p <= iv.hi) return true;
  return false;
}

OneSidedDensities one_sided_densities(const IntervalSet& e, const Rational& p) {
  Rational r = right_interval_adjacent(e, p) ? Rational(1) : Rational(0);
  Rational l = left_interval_adjacent(e, p) ? Rational(1) : Rational(0);
  return {r, r, l, l};
}

IntervalSet density_point_set(const IntervalSet& e) { return e; }

GapDensityBounds gap_density_bounds(const GapSet& g, long depth) {
  if (depth < 2) throw input_error("gap density bounds require depth >= 2");
  const Rational& c = g.ratio();
  Rational floor = Rational(1) - Rational(1) / c;
  // All peaks below level `depth` lie within c^{-(2 depth + 3)} of the floor.
  Bounds upper(floor, floor + pow(c, -(2 * depth + 3)));
  // Valley bound r(a_n) < b_{n+1}/a_n = c^{-2n} for every n >= depth.
  Bounds lower(Rational(0), pow(c, -2 * depth));
  return {upper, lower};
}

}  // namespace idens
