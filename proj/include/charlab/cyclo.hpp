#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charlab/rational.hpp"

namespace charlab {

/// Largest conductor the library will work in.  Promotions past this bound
/// raise an Error.
inline constexpr int kConductorBound = 2520;

/// An exact element of the cyclotomic field Q(zeta_e).
///
/// The value is stored at a fixed conductor e in the power basis
/// {zeta^0, ..., zeta^(phi(e)-1)}, reduced modulo the e-th cyclotomic
/// polynomial.  Representation at a fixed conductor is canonical: two equal
/// elements have identical coefficient vectors, and the element is zero iff
/// every coefficient is zero.  Mixed-conductor operations promote both sides
/// to the least common multiple.
class Cyclotomic {
public:
  /// Zero at conductor 1.
  Cyclotomic();

  /// A rational constant at conductor 1.
  explicit Cyclotomic(Rational r);

  /// zeta_e^k for 0 <= k < e.
  static Cyclotomic root_of_unity(int e, int k);

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(Rational(1)); }
  static Cyclotomic rational(long num, long den = 1) {
    return Cyclotomic(Rational(num, den));
  }

  /// Builds from a dense exponent->coefficient vector of length e and
  /// reduces to canonical form.
  static Cyclotomic from_exponents(int e, std::vector<Rational> by_exponent);

  int conductor() const { return e_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  /// Same value expressed at conductor f (requires conductor() | f).
  Cyclotomic promoted(int f) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic scaled(const Rational& r) const;

  /// Complex conjugation zeta -> zeta^(-1).
  Cyclotomic conj() const;

  /// Multiplicative inverse via the product of Galois conjugates.
  /// Throws on zero.
  Cyclotomic inverse() const;

  Cyclotomic pow(long k) const;

  /// Mathematical equality (promotes to a common conductor first).
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  /// Deterministic total order on stored forms: compares the conductor,
  /// then the reduced coefficient vectors lexicographically.  Elements
  /// promoted to a common conductor compare equal iff they are equal.
  static int key_compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Rendering "a0 + a1*z(e)^1 + ...": nonzero terms in increasing exponent
  /// order, rational coefficients in canonical form, "0" for zero.
  std::string str() const;

  /// Exact inverse of str().  Throws ParseError on malformed input.
  static Cyclotomic parse(const std::string& text);

private:
  Cyclotomic(int e, std::vector<Rational> reduced);

  int e_;                    // conductor
  std::vector<Rational> c_;  // size phi(e_), reduced mod Phi_e
};

/// Euler totient.
int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial (degree phi(n), monic),
/// index = exponent.  Cached; thread-safe.
const std::vector<Rational>& cyclotomic_polynomial(int n);

} // namespace charlab
