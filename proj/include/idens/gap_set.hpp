#ifndef IDENS_GAP_SET_HPP
#define IDENS_GAP_SET_HPP

#include <variant>

#include "idens/interval_set.hpp"
#include "idens/rational.hpp"

namespace idens {

// The parametric family U_n (c^{-n^2-1}, c^{-n^2}) with c > 1: an infinite
// union of intervals accumulating at 0 from the right, with exact
// truncations and an exact tail bound. Levels are 1-based; the intervals
// are pairwise separated because n^2 + 1 < (n+1)^2 for n >= 1.
class GapSet {
 public:
  explicit GapSet(Rational ratio);

  const Rational& ratio() const { return c_; }

  // b_n = c^{-n^2}, the top of level n.
  Rational upper_break(long level) const;
  // a_n = c^{-n^2-1} = b_n / c, the bottom of level n.
  Rational lower_break(long level) const;

  // The intervals (a_n, b_n) for n = 1..levels as a canonical IntervalSet.
  IntervalSet truncate(long levels) const;

  // Sum of (b_n - a_n) for n in [from, to]; zero when from > to.
  Rational truncated_measure(long from, long to) const;

  // b_{levels+1}, an upper bound on the total measure of all omitted
  // levels: every interval below level `levels` lies inside (0, b_{levels+1}).
  Rational tail_measure_bound(long levels) const;

 private:
  Rational c_;
};

// A representable set: a finite interval union or a gap family.
using SetSource = std::variant<IntervalSet, GapSet>;

}  // namespace idens

#endif
