#ifndef IDENS_RATIONAL_HPP
#define IDENS_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "idens/errors.hpp"

namespace idens {

// Exact rational scalar; the only numeric currency of the library.
// Invariant: canonical form (positive denominator, gcd(|num|, den) = 1),
// maintained by construction. No operation rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit on purpose
  Rational(int n) : v_(n) {}                      // NOLINT
  explicit Rational(const mpz_class& n) : v_(n) {}

  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw input_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "p", "-p", "p/q" with optional sign on p; q > 0 after reduction.
  static Rational from_string(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Authoritative rendering, always "p/q" (e.g. "2/1", "-1/3").
  std::string str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  // Advisory only; never used in any computation.
  double approx() const { return v_.get_d(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw input_error("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline const Rational& max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

// Exact integer power; exp may be negative (base must be nonzero then).
inline Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  bool invert = exp < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  if (invert) {
    if (n == 0) throw input_error("zero raised to a negative power");
    return Rational(d, n);
  }
  return Rational(n, d);
}

inline mpz_class floor_int(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

inline mpz_class ceil_int(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

inline Rational Rational::from_string(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(mpz_class(std::string(text)), mpz_class(1));
    }
    mpz_class num(std::string(text.substr(0, slash)));
    mpz_class den(std::string(text.substr(slash + 1)));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw input_error("malformed rational literal: " + std::string(text));
  }
}

}  // namespace idens

#endif
