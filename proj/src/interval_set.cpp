#include "idens/interval_set.hpp"

#include <algorithm>
#include <cassert>

namespace idens {

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  for (const auto& iv : raw) {
    if (iv.lo > iv.hi)
      throw input_error("malformed interval: lo " + iv.lo.str() + " > hi " + iv.hi.str());
  }
  std::erase_if(raw, [](const Interval& iv) { return iv.lo == iv.hi; });
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    return a.lo == b.lo ? a.hi < b.hi : a.lo < b.lo;
  });

  IntervalSet out;
  for (auto& iv : raw) {
    if (!out.ivs_.empty() && iv.lo <= out.ivs_.back().hi) {
      if (iv.hi > out.ivs_.back().hi) out.ivs_.back().hi = std::move(iv.hi);
    } else {
      out.ivs_.push_back(std::move(iv));
    }
  }
  return out;
}

Rational measure(const IntervalSet& e) {
  Rational total;
  for (const auto& iv : e.intervals()) total += iv.length();
  return total;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return IntervalSet::normalize(std::move(all));
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  const auto& av = a.intervals();
  const auto& bv = b.intervals();
  while (i < av.size() && j < bv.size()) {
    const Rational& lo = max(av[i].lo, bv[j].lo);
    const Rational& hi = min(av[i].hi, bv[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (av[i].hi <= bv[j].hi) ++i;
    else ++j;
  }
  return IntervalSet::normalize(std::move(out));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  const auto& bv = b.intervals();
  for (const auto& x : a.intervals()) {
    Rational cur = x.lo;
    for (const auto& o : bv) {
      if (o.hi <= cur) continue;
      if (o.lo >= x.hi) break;
      if (o.lo > cur) out.push_back({cur, o.lo});
      cur = max(cur, o.hi);
      if (cur >= x.hi) break;
    }
    if (cur < x.hi) out.push_back({cur, x.hi});
  }
  return IntervalSet::normalize(std::move(out));
}

IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b) {
  return set_union(set_difference(a, b), set_difference(b, a));
}

IntervalSet complement_within(const IntervalSet& a, const Interval& window) {
  if (window.lo > window.hi) throw input_error("malformed window interval");
  return set_difference(IntervalSet::normalize({window}), a);
}

IntervalSet intersect_window(const IntervalSet& a, const Interval& w) {
  return set_intersection(a, IntervalSet::normalize({w}));
}

PointLocation classify_point(const IntervalSet& e, const Rational& p) {
  for (const auto& iv : e.intervals()) {
    if (p < iv.lo) break;
    if (p == iv.lo || p == iv.hi) return PointLocation::boundary;
    if (p < iv.hi) return PointLocation::interior;
  }
  return PointLocation::outside;
}

bool is_subset(const IntervalSet& a, const IntervalSet& b) {
  return set_intersection(a, b) == a;
}

std::string to_string(const IntervalSet& e) {
  if (e.empty()) return "empty";
  std::string out;
  for (const auto& iv : e.intervals()) {
    if (!out.empty()) out += " u ";
    out += "[" + iv.lo.str() + "," + iv.hi.str() + "]";
  }
  return out;
}

}  // namespace idens
