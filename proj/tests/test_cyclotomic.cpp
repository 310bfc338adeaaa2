#include <doctest.h>

#include <random>

#include "genord/cyclotomic.hpp"

using namespace genord;

TEST_CASE("cyclotomic polynomials divide x^n - 1") {
  // product over divisors d of n of Phi_d equals x^n - 1
  for (unsigned n : {1u, 2u, 3u, 4u, 6u, 8u, 12u, 13u, 18u, 30u}) {
    std::vector<BigInt> prod{1};
    for (unsigned d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const auto& phi = cyclotomic_polynomial(d);
      std::vector<BigInt> next(prod.size() + phi.size() - 1, BigInt(0));
      for (std::size_t i = 0; i < prod.size(); ++i)
        for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
      prod = std::move(next);
    }
    REQUIRE(prod.size() == n + 1);
    CHECK(prod[0] == -1);
    CHECK(prod[n] == 1);
    for (unsigned i = 1; i < n; ++i) CHECK(prod[i] == 0);
  }
  CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(13) == 12);
}

TEST_CASE("parse examples") {
  CHECK(Cyclotomic::parse("E(4)^2") == Cyclotomic(-1));
  CHECK(Cyclotomic::parse("1+E(3)+E(3)^2").is_zero());
  CHECK(Cyclotomic::parse("-3*E(7)^2+E(7)^4").conjugated() ==
        Cyclotomic::parse("-3*E(7)^5+E(7)^3"));
  CHECK(Cyclotomic::parse("5") == Cyclotomic(5));
  CHECK(Cyclotomic::parse("-2") == Cyclotomic(-2));
  CHECK(Cyclotomic::parse(" 1 + 2*E(5) ") == Cyclotomic::parse("1+2*E(5)"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Cyclotomic::parse("E(0)"), CycloParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("E(4"), CycloParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("1+"), CycloParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("1 2"), CycloParseError);
  CHECK_THROWS_AS(Cyclotomic::parse("x"), CycloParseError);
  try {
    Cyclotomic::parse("1+x");
  } catch (const CycloParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("roots of unity identities") {
  CHECK(Cyclotomic::root(5) * Cyclotomic::root(5, 4) == Cyclotomic(1));
  CHECK(Cyclotomic::root(7).pow(7) == Cyclotomic(1));
  CHECK(Cyclotomic::root(7).pow(0) == Cyclotomic(1));
  for (unsigned n : {3u, 4u, 5u, 7u, 8u, 9u, 12u, 13u}) {
    Cyclotomic sum(0);
    for (unsigned j = 0; j < n; ++j) sum = sum + Cyclotomic::root(n, j);
    CHECK(sum.is_zero());
    CHECK(Cyclotomic::root(n).pow(n) == Cyclotomic(1));
  }
  for (unsigned m : {1u, 2u, 3u, 5u, 6u})
    CHECK(Cyclotomic::root(2 * m).pow(m) == Cyclotomic(-1));
  // (E(8) + E(8)^7)^2 = 2
  Cyclotomic z = Cyclotomic::root(8) + Cyclotomic::root(8, 7);
  CHECK(z.pow(2) == Cyclotomic(2));
}

TEST_CASE("conjugation") {
  CHECK(Cyclotomic::root(3).conjugated() == Cyclotomic::root(3, 2));
  CHECK(Cyclotomic(5).conjugated() == Cyclotomic(5));
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (unsigned n : {3u, 5u, 8u, 12u}) {
    std::uniform_int_distribution<unsigned> expo(0, n - 1);
    for (int trial = 0; trial < 50; ++trial) {
      Cyclotomic a(0), b(0);
      for (int t = 0; t < 3; ++t) {
        a = a + Rational(coeff(rng)) * Cyclotomic::root(n, expo(rng));
        b = b + Rational(coeff(rng)) * Cyclotomic::root(n, expo(rng));
      }
      CHECK(a.conjugated().conjugated() == a);
      CHECK((a * b).conjugated() == a.conjugated() * b.conjugated());
      CHECK((a + b).conjugated() == a.conjugated() + b.conjugated());
    }
  }
}

TEST_CASE("ring axioms on seeded random triples") {
  std::mt19937_64 rng(20240815);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (unsigned n : {3u, 4u, 5u, 7u, 8u, 9u, 12u, 13u}) {
    std::uniform_int_distribution<unsigned> expo(0, n - 1);
    auto random_value = [&] {
      Cyclotomic z(coeff(rng));
      for (int t = 0; t < 2; ++t)
        z = z + Rational(coeff(rng)) * Cyclotomic::root(n, expo(rng));
      return z;
    };
    for (int trial = 0; trial < 1000; ++trial) {
      Cyclotomic a = random_value(), b = random_value(), c = random_value();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK(a * Cyclotomic(1) == a);
      CHECK(a + Cyclotomic(0) == a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("rationality and integer extraction") {
  CHECK(Cyclotomic(0).as_integer() == BigInt(0));
  CHECK(Cyclotomic(-7).as_integer() == BigInt(-7));
  CHECK_FALSE(Cyclotomic::root(3).as_integer().has_value());
  CHECK((Cyclotomic::root(3) + Cyclotomic::root(3, 2) + Cyclotomic(1)).as_integer() ==
        BigInt(0));
  // a non-integer rational is rational but has no integer value
  Cyclotomic half(Rational(1, 2));
  CHECK(half.is_rational());
  CHECK_FALSE(half.as_integer().has_value());
  CHECK(half.rational_value() == Rational(1, 2));
  // rational values reduce to conductor 1
  CHECK(Cyclotomic::parse("E(4)^2").conductor() == 1);
  CHECK(Cyclotomic::root(5).conductor() == 5);
}

TEST_CASE("equality across conductors") {
  CHECK(Cyclotomic::root(8).pow(2) == Cyclotomic::root(4));
  CHECK(Cyclotomic::root(6) == -Cyclotomic::root(3, 2));
  CHECK_FALSE(Cyclotomic::root(5) == Cyclotomic::root(7));
}

TEST_CASE("print and reparse round trip") {
  std::vector<std::string> cases = {"E(4)^2", "1+E(3)+E(3)^2", "-3*E(7)^2+E(7)^4",
                                    "2*E(5)^3-E(5)", "0", "17", "-4"};
  for (const auto& text : cases) {
    Cyclotomic z = Cyclotomic::parse(text);
    CHECK(Cyclotomic::parse(z.str()) == z);
  }
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (unsigned n : {5u, 8u, 13u}) {
    std::uniform_int_distribution<unsigned> expo(0, n - 1);
    for (int trial = 0; trial < 40; ++trial) {
      Cyclotomic z(coeff(rng));
      for (int t = 0; t < 3; ++t)
        z = z + Rational(coeff(rng)) * Cyclotomic::root(n, expo(rng));
      CHECK(Cyclotomic::parse(z.str()) == z);
    }
  }
}

TEST_CASE("complex approximation is for diagnostics") {
  auto z = Cyclotomic::root(8) + Cyclotomic::root(8, 7);  // 2 cos(pi/4)
  CHECK(std::abs(z.to_complex_approx().real() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(z.to_complex_approx().imag()) < 1e-12);
}
