#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "charlab/cyclo.hpp"

using charlab::Cyclotomic;
using charlab::Rational;

namespace {

Cyclotomic zeta(int e, int k = 1) { return Cyclotomic::root_of_unity(e, k); }

Cyclotomic random_element(std::mt19937& rng, int conductor) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> v(conductor, Rational(0));
  for (int i = 0; i < conductor; ++i) v[i] = Rational(coef(rng), den(rng));
  return Cyclotomic::from_exponents(conductor, std::move(v));
}

} // namespace

TEST_CASE("basic root-of-unity identities") {
  CHECK(zeta(4) * zeta(4) == Cyclotomic::rational(-1));
  CHECK(Cyclotomic::one() + zeta(3) + zeta(3, 2) == Cyclotomic::zero());
  CHECK(zeta(8).conj() * zeta(8) == Cyclotomic::one());
  CHECK(zeta(1, 0) == Cyclotomic::one());
  CHECK(zeta(2) == Cyclotomic::rational(-1));
}

TEST_CASE("as_rational") {
  CHECK(*(zeta(3) + zeta(3, 2)).as_rational() == Rational(-1));
  CHECK(!zeta(5).as_rational().has_value());
  CHECK(*Cyclotomic::rational(3, 2).as_rational() == Rational(3, 2));
}

TEST_CASE("root power sums: sum_j zeta_e^{jk} = e * [e | k]") {
  for (int e = 1; e <= 60; ++e) {
    for (int k : {0, 1, e / 2, e - 1, e}) {
      Cyclotomic sum;
      for (int j = 0; j < e; ++j)
        sum += Cyclotomic::root_of_unity(e, (static_cast<long>(j) * k) % e);
      Cyclotomic expect =
          (k % e == 0) ? Cyclotomic::rational(e) : Cyclotomic::zero();
      CHECK(sum == expect);
    }
  }
}

TEST_CASE("canonicalization is idempotent and conductor-stable") {
  // re-reducing a reduced representation changes nothing
  std::mt19937 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    Cyclotomic x = random_element(rng, 12);
    std::vector<Rational> padded(12, Rational(0));
    const auto& c = x.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) padded[i] = c[i];
    Cyclotomic again = Cyclotomic::from_exponents(12, std::move(padded));
    CHECK(x == again);
    CHECK(Cyclotomic::key_compare(x, again) == 0);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(2024);
  const int conductors[] = {1, 2, 3, 4, 5, 6, 8, 9, 12, 15};
  std::uniform_int_distribution<int> pick(0, 9);
  for (int trial = 0; trial < 10000; ++trial) {
    int e = conductors[pick(rng)];
    Cyclotomic a = random_element(rng, e);
    Cyclotomic b = random_element(rng, conductors[pick(rng)]);
    Cyclotomic c = random_element(rng, conductors[pick(rng)]);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("multiplicative inverses via Galois conjugates") {
  std::mt19937 rng(555);
  int tested = 0;
  while (tested < 300) {
    int e = 1 + static_cast<int>(rng() % 12);
    Cyclotomic x = random_element(rng, e);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == Cyclotomic::one());
    ++tested;
  }
}

TEST_CASE("conjugation is an involutive automorphism") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    Cyclotomic a = random_element(rng, 20);
    Cyclotomic b = random_element(rng, 20);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("total order key") {
  CHECK(Cyclotomic::key_compare(Cyclotomic::zero(), Cyclotomic::one()) < 0);
  // equal values promoted to a common conductor share a key
  Cyclotomic one_a = Cyclotomic::one().promoted(12);
  Cyclotomic one_b = Cyclotomic::root_of_unity(12, 0);
  CHECK(Cyclotomic::key_compare(one_a, one_b) == 0);
  // deterministic, reproducible sort
  std::vector<Cyclotomic> values{Cyclotomic::rational(-1).promoted(3),
                                 Cyclotomic::zero().promoted(3),
                                 Cyclotomic::one().promoted(3), zeta(3)};
  auto key_less = [](const Cyclotomic& x, const Cyclotomic& y) {
    return Cyclotomic::key_compare(x, y) < 0;
  };
  std::vector<Cyclotomic> sorted1 = values, sorted2 = values;
  std::sort(sorted1.begin(), sorted1.end(), key_less);
  std::reverse(sorted2.begin(), sorted2.end());
  std::sort(sorted2.begin(), sorted2.end(), key_less);
  for (std::size_t i = 0; i < sorted1.size(); ++i)
    CHECK(Cyclotomic::key_compare(sorted1[i], sorted2[i]) == 0);
}

TEST_CASE("rendering round-trip") {
  CHECK(Cyclotomic::zero().str() == "0");
  CHECK(Cyclotomic::rational(-3, 2).str() == "-3/2");
  CHECK((Cyclotomic::one() + zeta(4)).str() == "1 + 1*z(4)^1");
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 500; ++trial) {
    int e = 1 + static_cast<int>(rng() % 16);
    Cyclotomic x = random_element(rng, e);
    CHECK(Cyclotomic::parse(x.str()) == x);
  }
  CHECK_THROWS_AS(Cyclotomic::parse("1 + z"), charlab::ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("1*z(4)^9"), charlab::ParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("1*z(4)^1 + 1*z(8)^1"), charlab::ParseError);
}

TEST_CASE("conductor bound enforced") {
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(5000, 1), charlab::Error);
  // lcm overflow past the bound
  Cyclotomic a = zeta(512);
  Cyclotomic b = zeta(81);
  CHECK_THROWS_AS(a * b, charlab::Error); // lcm(512,81) = 41472 > 2520
}

TEST_CASE("promotion preserves value") {
  Cyclotomic x = zeta(3);
  CHECK(x.promoted(6) == x);
  CHECK(x.promoted(12) == x);
  CHECK((x.promoted(6) + zeta(6)).is_rational() == false);
  // zeta_6 = -zeta_3^2
  CHECK(zeta(6) == -zeta(3, 2));
}
