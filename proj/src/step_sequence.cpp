#include "idens/step_sequence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace idens {

namespace {

IndexSet class_index_set(std::uint64_t residue, std::uint64_t modulus) {
  return IndexSet::ap(residue == 0 ? modulus : residue, modulus);
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t l = (a / g) * b;
  if (l > 1'000'000) throw input_error("step-sequence modulus exceeds supported bound");
  return l;
}

std::vector<char> squares_mod(std::uint64_t m) {
  std::vector<char> qr(m, 0);
  for (std::uint64_t x = 0; x < m; ++x) qr[(x * x) % m] = 1;
  return qr;
}

}  // namespace

StepSequence::StepSequence(std::uint64_t modulus, std::vector<Rational> class_values,
                           std::map<std::uint64_t, Rational> exceptions,
                           std::optional<Override> override)
    : modulus_(modulus),
      class_values_(std::move(class_values)),
      exceptions_(std::move(exceptions)),
      override_(std::move(override)) {
  if (modulus_ < 1) throw input_error("step sequence requires modulus >= 1");
  if (class_values_.size() != modulus_)
    throw input_error("step sequence needs one value per residue class");
  if (exceptions_.count(0)) throw input_error("sequence indices start at 1");
  if (override_ && !override_->set.density().is_zero())
    throw input_error("override set must have asymptotic density zero");
}

StepSequence StepSequence::constant(Rational v) {
  return StepSequence(1, {std::move(v)});
}

Rational StepSequence::value_at(std::uint64_t n) const {
  if (auto it = exceptions_.find(n); it != exceptions_.end()) return it->second;
  if (override_ && override_->set.contains(n)) return override_->value;
  return class_values_[n % modulus_];
}

std::vector<Rational> StepSequence::candidate_values() const {
  std::set<Rational> vals(class_values_.begin(), class_values_.end());
  if (override_) vals.insert(override_->value);
  for (const auto& [idx, v] : exceptions_) vals.insert(v);
  return {vals.begin(), vals.end()};
}

IndexSet StepSequence::level_set(const Rational& b, bool strict, bool above) const {
  auto pred = [&](const Rational& v) {
    if (above) return strict ? v > b : v >= b;
    return strict ? v < b : v <= b;
  };
  IndexSet base = IndexSet::empty();
  for (std::uint64_t r = 0; r < modulus_; ++r)
    if (pred(class_values_[r])) base = base | class_index_set(r, modulus_);
  if (override_)
    base = pred(override_->value) ? (base | override_->set) : (base - override_->set);
  if (!exceptions_.empty()) {
    std::vector<std::uint64_t> all;
    std::vector<std::uint64_t> matching;
    for (const auto& [idx, v] : exceptions_) {
      all.push_back(idx);
      if (pred(v)) matching.push_back(idx);
    }
    base = (base - IndexSet::finite(all)) | IndexSet::finite(matching);
  }
  return base;
}

IndexSet StepSequence::level_set_gt(const Rational& b) const { return level_set(b, true, true); }
IndexSet StepSequence::level_set_ge(const Rational& b) const { return level_set(b, false, true); }
IndexSet StepSequence::level_set_lt(const Rational& b) const { return level_set(b, true, false); }
IndexSet StepSequence::level_set_le(const Rational& b) const { return level_set(b, false, false); }

bool StepSequence::value_occurs(const Rational& v) const {
  IndexSet exactly = level_set_ge(v) - level_set_gt(v);
  return !exactly.is_empty();
}

ILimitValue i_limsup_extended(const StepSequence& x, Ideal ideal) {
  // sup B_x with B_x = {b : {k : x_k > b} not in I}. Since x takes finitely
  // many values, B_x is a half-line whose sup is the largest value v with
  // {k : x_k >= v} outside the ideal.
  std::vector<Rational> vals = x.candidate_values();
  for (auto it = vals.rbegin(); it != vals.rend(); ++it)
    if (!ideal_member(ideal, x.level_set_ge(*it)))
      return {ILimitValue::Kind::finite, *it};
  return {ILimitValue::Kind::minus_infinity, Rational(0)};
}

ILimitValue i_liminf_extended(const StepSequence& x, Ideal ideal) {
  std::vector<Rational> vals = x.candidate_values();
  for (const auto& v : vals)
    if (!ideal_member(ideal, x.level_set_le(v)))
      return {ILimitValue::Kind::finite, v};
  return {ILimitValue::Kind::plus_infinity, Rational(0)};
}

Rational i_limsup(const StepSequence& x, Ideal ideal) {
  ILimitValue r = i_limsup_extended(x, ideal);
  if (r.kind != ILimitValue::Kind::finite)
    throw std::logic_error("i_limsup hit the -infinity sentinel on a proper ideal");
  return r.value;
}

Rational i_liminf(const StepSequence& x, Ideal ideal) {
  ILimitValue r = i_liminf_extended(x, ideal);
  if (r.kind != ILimitValue::Kind::finite)
    throw std::logic_error("i_liminf hit the +infinity sentinel on a proper ideal");
  return r.value;
}

bool i_converges(const StepSequence& x, Ideal ideal, const Rational& limit,
                 const Rational& eps) {
  if (eps <= Rational(0)) throw input_error("i_converges requires eps > 0");
  IndexSet off = x.level_set_ge(limit + eps) | x.level_set_le(limit - eps);
  return ideal_member(ideal, off);
}

namespace {

// Shared by every seq_add branch: class values on the lcm refinement and
// pointwise-merged exceptions.
StepSequence add_base(const StepSequence& x, const StepSequence& y,
                      std::optional<StepSequence::Override> override,
                      std::vector<std::uint64_t> extra_exception_indices = {}) {
  std::uint64_t m = checked_lcm(x.modulus(), y.modulus());
  std::vector<Rational> cv;
  cv.reserve(m);
  for (std::uint64_t r = 0; r < m; ++r)
    cv.push_back(x.class_values()[r % x.modulus()] + y.class_values()[r % y.modulus()]);
  std::map<std::uint64_t, Rational> ex;
  for (const auto& [idx, v] : x.exceptions()) ex.emplace(idx, x.value_at(idx) + y.value_at(idx));
  for (const auto& [idx, v] : y.exceptions()) ex.emplace(idx, x.value_at(idx) + y.value_at(idx));
  for (std::uint64_t idx : extra_exception_indices)
    ex.emplace(idx, x.value_at(idx) + y.value_at(idx));
  return StepSequence(m, std::move(cv), std::move(ex), std::move(override));
}

// a carries the override, b does not. Representable when b is constant on
// the infinite part of the override set; the finitely many corrections
// become exceptions.
StepSequence add_one_override(const StepSequence& a, const StepSequence& b) {
  const auto& ov = *a.override_set();
  IndexSet::NormalForm nf = ov.set.normal_form();
  std::uint64_t L = checked_lcm(nf.modulus, b.modulus());
  std::vector<char> qr = squares_mod(L);

  std::set<Rational> partner_values;
  for (std::uint64_t r = 0; r < L; ++r)
    if (nf.square_part[r % nf.modulus] && qr[r])
      partner_values.insert(b.class_values()[r % b.modulus()]);

  std::vector<std::uint64_t> flips(nf.flips.begin(), nf.flips.end());
  if (partner_values.empty()) {
    // Override set is finite; fold it into exceptions entirely.
    std::vector<std::uint64_t> elems = ov.set.finite_elements();
    return add_base(a, b, std::nullopt, elems);
  }
  if (partner_values.size() > 1)
    throw input_error(
        "seq_add: partner sequence is not constant on the override set; "
        "rewrite both sequences onto a common override set first");
  StepSequence::Override merged{ov.set, ov.value + *partner_values.begin()};
  return add_base(a, b, std::move(merged), std::move(flips));
}

}  // namespace

StepSequence seq_add(const StepSequence& x, const StepSequence& y) {
  const auto& ox = x.override_set();
  const auto& oy = y.override_set();
  if (ox && oy) {
    IndexSet mismatch = (ox->set - oy->set) | (oy->set - ox->set);
    if (!mismatch.is_empty())
      throw input_error(
          "seq_add: incompatible (distinct) override sets; rewrite both "
          "sequences onto a common override set first");
    return add_base(x, y, StepSequence::Override{ox->set, ox->value + oy->value});
  }
  if (ox) return add_one_override(x, y);
  if (oy) return add_one_override(y, x);
  return add_base(x, y, std::nullopt);
}

StepSequence seq_negate(const StepSequence& x) {
  std::vector<Rational> cv;
  cv.reserve(x.modulus());
  for (const auto& v : x.class_values()) cv.push_back(-v);
  std::map<std::uint64_t, Rational> ex;
  for (const auto& [idx, v] : x.exceptions()) ex.emplace(idx, -v);
  std::optional<StepSequence::Override> ov;
  if (x.override_set()) ov = StepSequence::Override{x.override_set()->set, -x.override_set()->value};
  return StepSequence(x.modulus(), std::move(cv), std::move(ex), std::move(ov));
}

bool seq_dominates(const StepSequence& x, const StepSequence& y) {
  StepSequence diff = seq_add(y, seq_negate(x));
  for (const auto& v : diff.candidate_values()) {
    if (v >= Rational(0)) continue;
    if (diff.value_occurs(v)) return false;
  }
  return true;
}

}  // namespace idens
