#include "charlab/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace charlab {

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Exact division of integer polynomials, quotient returned; remainder must
// vanish.  Coefficients kept as Rationals, divisor monic in our usage.
std::vector<Rational> poly_divide_exact(std::vector<Rational> num,
                                        const std::vector<Rational>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<Rational> quot(dn - dd + 1, Rational(0));
  for (int i = dn; i >= dd; --i) {
    if (num[i].is_zero()) continue;
    Rational c = num[i] / den[dd];
    quot[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (!r.is_zero()) throw Error("cyclotomic polynomial division not exact");
  return quot;
}

} // namespace

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Rational>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, computed bottom-up.
  for (int d : divisors(n)) {
    if (cache.count(d)) continue;
    std::vector<Rational> p(d + 1, Rational(0));
    p[0] = Rational(-1);
    p[d] = Rational(1);
    for (int e : divisors(d)) {
      if (e == d) continue;
      p = poly_divide_exact(std::move(p), cache.at(e));
    }
    cache.emplace(d, std::move(p));
  }
  return cache.at(n);
}

Cyclotomic::Cyclotomic() : e_(1), c_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(Rational r) : e_(1), c_(1, std::move(r)) {}

Cyclotomic::Cyclotomic(int e, std::vector<Rational> reduced)
    : e_(e), c_(std::move(reduced)) {}

Cyclotomic Cyclotomic::from_exponents(int e, std::vector<Rational> by_exponent) {
  if (e < 1 || e > kConductorBound)
    throw Error("conductor " + std::to_string(e) + " outside [1, " +
                std::to_string(kConductorBound) + "]");
  if (static_cast<int>(by_exponent.size()) != e)
    throw Error("exponent vector length must equal the conductor");
  const auto& phi_poly = cyclotomic_polynomial(e);
  int m = static_cast<int>(phi_poly.size()) - 1; // phi(e)
  // Reduce x^i for i >= m using x^m = -sum_{j<m} Phi[j] x^j, top down.
  for (int i = e - 1; i >= m; --i) {
    if (by_exponent[i].is_zero()) continue;
    Rational c = by_exponent[i];
    by_exponent[i] = Rational(0);
    for (int j = 0; j < m; ++j) by_exponent[i - m + j] -= c * phi_poly[j];
  }
  by_exponent.resize(m);
  return Cyclotomic(e, std::move(by_exponent));
}

Cyclotomic Cyclotomic::root_of_unity(int e, int k) {
  if (e < 1 || e > kConductorBound)
    throw Error("conductor " + std::to_string(e) + " outside [1, " +
                std::to_string(kConductorBound) + "]");
  k %= e;
  if (k < 0) k += e;
  std::vector<Rational> v(e, Rational(0));
  v[k] = Rational(1);
  return from_exponents(e, std::move(v));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

Cyclotomic Cyclotomic::promoted(int f) const {
  if (f == e_) return *this;
  if (f < 1 || f > kConductorBound)
    throw Error("conductor " + std::to_string(f) + " exceeds bound " +
                std::to_string(kConductorBound));
  if (f % e_ != 0)
    throw Error("cannot promote conductor " + std::to_string(e_) + " to " +
                std::to_string(f));
  int scale = f / e_;
  std::vector<Rational> v(f, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) v[(i * scale) % f] += c_[i];
  return from_exponents(f, std::move(v));
}

namespace {
long lcm_conductor(int a, int b) {
  long l = std::lcm(static_cast<long>(a), static_cast<long>(b));
  if (l > kConductorBound)
    throw Error("conductor lcm(" + std::to_string(a) + ", " + std::to_string(b) +
                ") = " + std::to_string(l) + " exceeds bound " +
                std::to_string(kConductorBound));
  return l;
}
} // namespace

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> v = c_;
  for (auto& r : v) r = -r;
  return Cyclotomic(e_, std::move(v));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  int f = static_cast<int>(lcm_conductor(a.e_, b.e_));
  Cyclotomic x = a.promoted(f), y = b.promoted(f);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  return a + (-b);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  int f = static_cast<int>(lcm_conductor(a.e_, b.e_));
  Cyclotomic x = a.promoted(f), y = b.promoted(f);
  std::vector<Rational> prod(f, Rational(0));
  // Sparse convolution; degrees stay below 2*phi(f) <= 2f after reduction,
  // fold exponents modulo f as we go.
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j].is_zero()) continue;
      prod[(i + j) % f] += x.c_[i] * y.c_[j];
    }
  }
  return Cyclotomic::from_exponents(f, std::move(prod));
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  std::vector<Rational> v = c_;
  for (auto& x : v) x *= r;
  return Cyclotomic(e_, std::move(v));
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> v(e_, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    v[i == 0 ? 0 : e_ - static_cast<int>(i)] += c_[i];
  }
  return from_exponents(e_, std::move(v));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("inverse of zero cyclotomic");
  // prod of the nontrivial Galois conjugates; x * prod = field norm in Q.
  Cyclotomic prod = Cyclotomic::one();
  for (int j = 2; j <= e_; ++j) {
    if (std::gcd(j, e_) != 1) continue;
    std::vector<Rational> v(e_, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) v[(i * j) % e_] += c_[i];
    prod *= from_exponents(e_, std::move(v));
  }
  Cyclotomic norm = *this * prod;
  auto n = norm.as_rational();
  if (!n || n->is_zero())
    throw Error("cyclotomic norm computation failed"); // cannot happen
  Rational inv_n = Rational(1) / *n;
  return prod.scaled(inv_n);
}

Cyclotomic Cyclotomic::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Cyclotomic result = Cyclotomic::one();
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.e_ == b.e_) return a.c_ == b.c_;
  int f = static_cast<int>(lcm_conductor(a.e_, b.e_));
  return a.promoted(f).c_ == b.promoted(f).c_;
}

int Cyclotomic::key_compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.e_ != b.e_) return a.e_ < b.e_ ? -1 : 1;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int c = Rational::compare(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    out << c_[i].str();
    if (i > 0) out << "*z(" << e_ << ")^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
  // Grammar: term (' + ' term)*, term := rational ('*z(' int ')^' int)?
  std::vector<std::string> terms;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(" + ", pos);
    if (next == std::string::npos) {
      terms.push_back(text.substr(pos));
      break;
    }
    terms.push_back(text.substr(pos, next - pos));
    pos = next + 3;
  }
  int conductor = 1;
  std::vector<std::pair<int, Rational>> parts;
  for (const auto& raw : terms) {
    std::string t = raw;
    // trim
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
    if (t.empty()) throw ParseError("empty term in cyclotomic '" + text + "'");
    std::size_t star = t.find("*z(");
    if (star == std::string::npos) {
      parts.emplace_back(0, Rational::parse(t));
      continue;
    }
    Rational coef = Rational::parse(t.substr(0, star));
    std::size_t close = t.find(')', star + 3);
    if (close == std::string::npos || close + 1 >= t.size() || t[close + 1] != '^')
      throw ParseError("malformed cyclotomic term '" + t + "'");
    int e = 0, k = 0;
    try {
      e = std::stoi(t.substr(star + 3, close - (star + 3)));
      k = std::stoi(t.substr(close + 2));
    } catch (const std::exception&) {
      throw ParseError("malformed cyclotomic term '" + t + "'");
    }
    if (e < 1 || e > kConductorBound || k < 0 || k >= e)
      throw ParseError("cyclotomic term out of range: '" + t + "'");
    if (conductor != 1 && e != conductor)
      throw ParseError("mixed conductors in cyclotomic '" + text + "'");
    conductor = e;
    parts.emplace_back(k, std::move(coef));
  }
  std::vector<Rational> v(conductor, Rational(0));
  for (auto& [k, coef] : parts) v[k] += coef;
  return from_exponents(conductor, std::move(v));
}

} // namespace charlab
