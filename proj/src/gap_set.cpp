#include "idens/gap_set.hpp"

namespace idens {

GapSet::GapSet(Rational ratio) : c_(std::move(ratio)) {
  if (c_ <= Rational(1))
    throw input_error("gap set requires c > 1, got " + c_.str());
}

Rational GapSet::upper_break(long level) const {
  if (level < 1) throw input_error("gap set level must be >= 1");
  return pow(c_, -(level * level));
}

Rational GapSet::lower_break(long level) const {
  if (level < 1) throw input_error("gap set level must be >= 1");
  return pow(c_, -(level * level + 1));
}

IntervalSet GapSet::truncate(long levels) const {
  if (levels < 0) throw input_error("gap set truncation depth must be >= 0");
  std::vector<Interval> ivs;
  ivs.reserve(static_cast<std::size_t>(levels));
  for (long n = levels; n >= 1; --n) ivs.push_back({lower_break(n), upper_break(n)});
  return IntervalSet::normalize(std::move(ivs));
}

Rational GapSet::truncated_measure(long from, long to) const {
  Rational total;
  for (long n = from; n <= to; ++n) total += upper_break(n) - lower_break(n);
  return total;
}

Rational GapSet::tail_measure_bound(long levels) const {
  return upper_break(levels + 1);
}

}  // namespace idens
