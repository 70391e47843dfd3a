#include "idens/window_family.hpp"

namespace idens {

WindowFamily WindowFamily::symmetric_harmonic(Rational center) {
  WindowFamily w;
  w.kind_ = Kind::symmetric_harmonic;
  w.center_ = std::move(center);
  return w;
}

WindowFamily WindowFamily::right_geometric(Rational center, Rational ratio) {
  if (ratio <= Rational(1))
    throw input_error("right-geometric window family requires c > 1");
  WindowFamily w;
  w.kind_ = Kind::right_geometric;
  w.center_ = std::move(center);
  w.ratio_ = std::move(ratio);
  return w;
}

WindowFamily WindowFamily::custom_prefix(std::vector<Interval> prefix, WindowFamily tail) {
  if (tail.kind_ == Kind::custom_prefix)
    throw input_error("custom prefix tails must be base rules");
  for (const auto& iv : prefix) {
    if (iv.lo >= iv.hi)
      throw input_error("custom prefix windows must be nondegenerate");
    if (iv.lo > tail.center_ || tail.center_ > iv.hi)
      throw input_error("every window must contain the center point");
  }
  WindowFamily w = tail;
  w.kind_ = Kind::custom_prefix;
  w.tail_kind_ = tail.kind_;
  w.prefix_ = std::move(prefix);
  return w;
}

WindowFamily WindowFamily::with_exceptions(IndexSet set, Interval window) const {
  if (window.lo >= window.hi)
    throw input_error("exception window must be nondegenerate");
  if (window.lo > center_ || center_ > window.hi)
    throw input_error("every window must contain the center point");
  WindowFamily w = *this;
  w.exceptions_ = std::move(set);
  w.exception_window_ = std::move(window);
  return w;
}

Interval WindowFamily::base_window(std::uint64_t n) const {
  if (kind_ == Kind::custom_prefix && n >= 1 && n <= prefix_.size())
    return prefix_[n - 1];
  Kind k = kind_ == Kind::custom_prefix ? tail_kind_ : kind_;
  switch (k) {
    case Kind::symmetric_harmonic: {
      Rational half(1, static_cast<long>(2 * n + 2));
      return {center_ - half, center_ + half};
    }
    case Kind::right_geometric: {
      long nn = static_cast<long>(n);
      return {center_, center_ + pow(ratio_, -(nn * nn))};
    }
    default:
      break;
  }
  throw std::logic_error("unreachable window kind");
}

Interval WindowFamily::window(std::uint64_t n) const {
  if (exceptions_ && exceptions_->contains(n)) return *exception_window_;
  return base_window(n);
}

std::string WindowFamily::describe() const {
  std::string base;
  switch (kind_) {
    case Kind::symmetric_harmonic: base = "symharm(p=" + center_.str() + ")"; break;
    case Kind::right_geometric:
      base = "rgeom(p=" + center_.str() + ",c=" + ratio_.str() + ")";
      break;
    case Kind::custom_prefix:
      base = "prefix(" + std::to_string(prefix_.size()) + " windows, then " +
             (tail_kind_ == Kind::symmetric_harmonic ? "symharm" : "rgeom") + ")";
      break;
  }
  if (exceptions_) base += " except " + exceptions_->str();
  return base;
}

bool validate_window_family(const WindowFamily& w, Ideal ideal) {
  // Base windows have positive length and shrink below 1/n past a finite
  // threshold (harmonic: immediately; geometric: once c^{n^2} > n; custom
  // prefixes are finite). The exception window has fixed positive length,
  // so it violates 0 < |J_n| < 1/n for all large n in the exception set.
  // Ideals absorb finite differences, so the shrinking condition holds on
  // a filter set iff the exception set belongs to the ideal.
  if (!w.exception_set()) return true;
  return ideal_member(ideal, *w.exception_set());
}

}  // namespace idens
