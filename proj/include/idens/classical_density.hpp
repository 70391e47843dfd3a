#ifndef IDENS_CLASSICAL_DENSITY_HPP
#define IDENS_CLASSICAL_DENSITY_HPP

#include "idens/bounds.hpp"
#include "idens/gap_set.hpp"
#include "idens/interval_set.hpp"

namespace idens {

// lambda(E ∩ J) / lambda(J), exact. Throws input_error on a zero-length
// window.
Rational window_ratio(const IntervalSet& e, const Interval& j);

// One-sided upper/lower densities of a finite interval union at a point.
// On each side of p the set eventually presents either an adjacent
// interval (density 1) or an adjacent gap (density 0), so all four limits
// exist and are exact.
struct OneSidedDensities {
  Rational right_upper;  // d+ (d-bar-plus)
  Rational right_lower;  // d_+
  Rational left_upper;   // d-
  Rational left_lower;   // d_-
};
OneSidedDensities one_sided_densities(const IntervalSet& e, const Rational& p);

bool right_interval_adjacent(const IntervalSet& e, const Rational& p);
bool left_interval_adjacent(const IntervalSet& e, const Rational& p);

// Phi: the set of points of two-sided density 1. For the canonical class
// this is E itself modulo the (null) endpoint set, and the representation
// is identical, so measure(symdiff(E, Phi(E))) = 0 holds exactly.
IntervalSet density_point_set(const IntervalSet& e);

// Certified enclosures of the right upper and lower densities of a gap
// set at 0. The accumulation ratio r(y) = lambda(G ∩ (0,y)) / y is
// increasing inside each level interval and decreasing inside each gap, so
// its one-sided extrema occur at the breakpoints a_n, b_n; peaks satisfy
//   1 - 1/c < r(b_n) < 1 - 1/c + c^{-(2n+1)}
// via the tail containment bound, and valleys satisfy r(a_n) < c^{-2n}.
// Enclosures shrink monotonically with depth. Requires depth >= 2.
struct GapDensityBounds {
  Bounds upper_density;  // encloses d+(G, 0); lo is exactly 1 - 1/c
  Bounds lower_density;  // encloses d_+(G, 0); contains 0
};
GapDensityBounds gap_density_bounds(const GapSet& g, long depth);

}  // namespace idens

#endif
