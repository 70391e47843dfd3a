#ifndef IDENS_WINDOW_FAMILY_HPP
#define IDENS_WINDOW_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idens/ideal.hpp"
#include "idens/index_set.hpp"
#include "idens/interval_set.hpp"

namespace idens {

// A sequence of closed intervals J_n about a point p, shrinking in the
// ideal-relaxed sense: the set S(J_n) = {n : 0 < |J_n| < 1/n} must belong
// to the filter of the target ideal. Base rules shrink outright past an
// exactly computable threshold, so validity reduces to the exception set
// belonging to the ideal (ideals absorb finite perturbations).
class WindowFamily {
 public:
  enum class Kind { symmetric_harmonic, right_geometric, custom_prefix };

  // J_n = [p - 1/(2n+2), p + 1/(2n+2)].
  static WindowFamily symmetric_harmonic(Rational center);
  // J_n = [p, p + c^{-n^2}], c > 1.
  static WindowFamily right_geometric(Rational center, Rational ratio);
  // Explicit windows for n = 1..prefix.size(), then the tail family's rule.
  static WindowFamily custom_prefix(std::vector<Interval> prefix, WindowFamily tail);

  // Fixed window used on every n in the exception set; must contain the
  // center and be nondegenerate.
  WindowFamily with_exceptions(IndexSet set, Interval window) const;

  Kind kind() const { return kind_; }
  // The rule governing all windows past any explicit prefix.
  Kind tail_rule_kind() const { return kind_ == Kind::custom_prefix ? tail_kind_ : kind_; }
  std::size_t prefix_length() const { return prefix_.size(); }
  const Rational& center() const { return center_; }
  const Rational& geometric_ratio() const { return ratio_; }
  const std::optional<IndexSet>& exception_set() const { return exceptions_; }
  const std::optional<Interval>& exception_window() const { return exception_window_; }

  Interval window(std::uint64_t n) const;
  Interval base_window(std::uint64_t n) const;

  std::string describe() const;

 private:
  WindowFamily() = default;

  Kind kind_ = Kind::symmetric_harmonic;
  Rational center_;
  Rational ratio_;                  // right_geometric
  std::vector<Interval> prefix_;    // custom_prefix
  Kind tail_kind_ = Kind::symmetric_harmonic;
  std::optional<IndexSet> exceptions_;
  std::optional<Interval> exception_window_;
};

// True iff the shrinking condition holds on a filter set of the ideal.
bool validate_window_family(const WindowFamily& w, Ideal ideal);

}  // namespace idens

#endif
