#ifndef IDENS_BOUNDS_HPP
#define IDENS_BOUNDS_HPP

#include <string>

#include "idens/rational.hpp"

namespace idens {

// Certified enclosure: the true (possibly irrational-limit) quantity is
// guaranteed to lie in [lo, hi].
struct Bounds {
  Rational lo;
  Rational hi;

  Bounds() = default;
  Bounds(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw input_error("bounds with lo > hi");
  }

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains(const Bounds& o) const { return lo <= o.lo && o.hi <= hi; }

  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

  friend bool operator==(const Bounds& a, const Bounds& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

}  // namespace idens

#endif
