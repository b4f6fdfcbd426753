#include "charlab/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace charlab {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational Rational::parse(const std::string& s) {
  // Accept exactly '-'? digits ('/' digits)? with nonzero denominator.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw ParseError("malformed rational: '" + s + "'");
  i = num_end;
  if (i < s.size()) {
    if (s[i] != '/') throw ParseError("malformed rational: '" + s + "'");
    std::size_t den_end = digits(i + 1);
    if (den_end == i + 1 || den_end != s.size())
      throw ParseError("malformed rational: '" + s + "'");
  }
  Rational r;
  if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
    throw ParseError("malformed rational: '" + s + "'");
  if (mpz_sgn(mpq_denref(r.q_)) == 0)
    throw ParseError("rational with zero denominator: '" + s + "'");
  mpq_canonicalize(r.q_);
  return r;
}

long Rational::to_long() const {
  if (!is_integer()) throw Error("rational " + str() + " is not an integer");
  if (!mpz_fits_slong_p(mpq_numref(q_)))
    throw Error("integer " + str() + " out of machine range");
  return mpz_get_si(mpq_numref(q_));
}

std::string Rational::str() const {
  char* buf = mpq_get_str(nullptr, 10, q_);
  std::string out(buf);
  std::free(buf);
  return out;
}

} // namespace charlab
