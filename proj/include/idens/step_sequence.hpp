#ifndef IDENS_STEP_SEQUENCE_HPP
#define IDENS_STEP_SEQUENCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "idens/ideal.hpp"
#include "idens/index_set.hpp"
#include "idens/rational.hpp"

namespace idens {

// Finitely-valued real sequence with residue-class structure: x_n is
// determined by n mod modulus, optionally overridden on one density-zero
// index set, with finitely many pointwise exceptions on top. Exceptions
// take precedence over the override, which takes precedence over the
// class value. This is the smallest class closed under level sets, sums
// and negation on which the ideal limit superior/inferior are exact
// finite computations: every level set {k : x_k > b} is an expressible
// IndexSet.
class StepSequence {
 public:
  struct Override {
    IndexSet set;    // must have asymptotic density zero
    Rational value;
  };

  StepSequence(std::uint64_t modulus, std::vector<Rational> class_values,
               std::map<std::uint64_t, Rational> exceptions = {},
               std::optional<Override> override = std::nullopt);

  static StepSequence constant(Rational v);

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<Rational>& class_values() const { return class_values_; }
  const std::map<std::uint64_t, Rational>& exceptions() const { return exceptions_; }
  const std::optional<Override>& override_set() const { return override_; }

  Rational value_at(std::uint64_t n) const;

  // All values the description mentions (some may occur at no index).
  std::vector<Rational> candidate_values() const;

  IndexSet level_set_gt(const Rational& b) const;  // {k : x_k >  b}
  IndexSet level_set_ge(const Rational& b) const;  // {k : x_k >= b}
  IndexSet level_set_lt(const Rational& b) const;  // {k : x_k <  b}
  IndexSet level_set_le(const Rational& b) const;  // {k : x_k <= b}

  bool value_occurs(const Rational& v) const;

 private:
  IndexSet level_set(const Rational& b, bool strict, bool above) const;

  std::uint64_t modulus_;
  std::vector<Rational> class_values_;
  std::map<std::uint64_t, Rational> exceptions_;
  std::optional<Override> override_;
};

// Ideal limits via B_x = {b : {k : x_k > b} not in I} and its dual. On
// this class B_x is never empty (the classes cover N and a proper ideal
// cannot contain all of them), so the infinite sentinels below are
// expected unreachable; they are represented explicitly and asserted
// against rather than silently assumed.
struct ILimitValue {
  enum class Kind { minus_infinity, finite, plus_infinity };
  Kind kind;
  Rational value;  // meaningful when kind == finite
};

ILimitValue i_limsup_extended(const StepSequence& x, Ideal ideal);
ILimitValue i_liminf_extended(const StepSequence& x, Ideal ideal);

// Throw std::logic_error if the (unreachable) infinite sentinel arises.
Rational i_limsup(const StepSequence& x, Ideal ideal);
Rational i_liminf(const StepSequence& x, Ideal ideal);

// True iff {k : |x_k - limit| >= eps} belongs to the ideal. eps must be
// positive (input_error otherwise).
bool i_converges(const StepSequence& x, Ideal ideal, const Rational& limit,
                 const Rational& eps);

// Pointwise-exact arithmetic. Sequences must have compatible override
// representations: none, semantically equal override sets, or one
// override whose partner is constant on the override set's infinite part;
// otherwise an input_error explains the rewrite that would be needed.
StepSequence seq_add(const StepSequence& x, const StepSequence& y);
StepSequence seq_negate(const StepSequence& x);

// x_k <= y_k for all k, decided exactly on the common refinement.
bool seq_dominates(const StepSequence& x, const StepSequence& y);

}  // namespace idens

#endif
