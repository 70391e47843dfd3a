#ifndef IDENS_INTERVAL_SET_HPP
#define IDENS_INTERVAL_SET_HPP

#include <string>
#include <vector>

#include "idens/rational.hpp"

namespace idens {

struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

enum class PointLocation { interior, boundary, outside };

// Canonical finite union of closed rational intervals, semantics modulo
// Lebesgue-null sets: endpoint open/closed distinctions are not stored,
// touching intervals merge and degenerate intervals are dropped, so every
// point set in the representable class has exactly one canonical form.
class IntervalSet {
 public:
  IntervalSet() = default;

  // Sorts, merges touching/overlapping intervals, drops degenerate ones.
  // Throws input_error if some raw interval has lo > hi.
  static IntervalSet normalize(std::vector<Interval> raw);

  const std::vector<Interval>& intervals() const { return ivs_; }
  bool empty() const { return ivs_.empty(); }
  std::size_t size() const { return ivs_.size(); }

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> ivs_;
};

Rational measure(const IntervalSet& e);

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);
IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b);

// W \ A. Throws input_error when the window is malformed (lo > hi).
IntervalSet complement_within(const IntervalSet& a, const Interval& window);

// A ∩ [w.lo, w.hi] as a set.
IntervalSet intersect_window(const IntervalSet& a, const Interval& w);

// Pointwise classification on the closed representation.
PointLocation classify_point(const IntervalSet& e, const Rational& p);

// Decidable as set_intersection(a, b) == a on canonical forms.
bool is_subset(const IntervalSet& a, const IntervalSet& b);

// "empty" or "[p/q,p/q] u ..." (parseable by the mini-language).
std::string to_string(const IntervalSet& e);

}  // namespace idens

#endif
