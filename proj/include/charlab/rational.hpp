#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>

#include "charlab/errors.hpp"

namespace charlab {

/// Exact arbitrary-precision rational with value semantics, backed by GMP.
/// Always stored canonically (reduced, positive denominator).
class Rational {
public:
  Rational() { mpq_init(q_); }

  Rational(long n) { // NOLINT(google-explicit-constructor)
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }

  Rational(long num, long den);

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }

  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }

  ~Rational() { mpq_clear(q_); }

  Rational& operator=(const Rational& o) {
    mpq_set(q_, o.q_);
    return *this;
  }

  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  /// Parses "p" or "p/q" in base 10.  Throws ParseError on malformed input.
  static Rational parse(const std::string& s);

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  /// Exact integer value; throws if not an integer or out of range.
  long to_long() const;

  /// Canonical decimal rendering: "p" or "p/q".
  std::string str() const;

  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    mpq_div(q_, q_, o.q_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  /// Three-way comparison as an int, for use as a sort key component.
  static int compare(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_);
  }

private:
  mpq_t q_;
};

} // namespace charlab
