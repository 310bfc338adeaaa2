#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genord/bigint.hpp"

namespace genord {

class CycloParseError : public std::runtime_error {
 public:
  CycloParseError(std::size_t position, const std::string& what)
      : std::runtime_error("cyclotomic parse error at position " +
                           std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

/// Exact element of a cyclotomic field: the residue of a polynomial in the
/// primitive n-th root of unity modulo the n-th cyclotomic polynomial, with
/// rational coefficients. Rational values normalize to conductor 1, so
/// equality is coefficient equality after lifting to a common conductor.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  Cyclotomic(long long v) : n_(1), c_{Rational(v)} {}
  Cyclotomic(const BigInt& v) : n_(1), c_{Rational(v)} {}
  Cyclotomic(const Rational& v) : n_(1), c_{v} {}

  /// E(n)^k, the k-th power of the primitive n-th root of unity.
  static Cyclotomic root(unsigned n, long long k = 1);

  /// GAP-style surface syntax: expr := ['-'] term (('+'|'-') term)*;
  /// term := [int '*'] atom | int; atom := 'E(' int ')' ['^' int].
  static Cyclotomic parse(std::string_view text, unsigned ambient = 1);

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  const Rational& rational_value() const;
  /// The value as a rational integer, or nullopt when it is not one.
  std::optional<BigInt> as_integer() const;

  Cyclotomic conjugated() const;  // induced by E(n) -> E(n)^(n-1)
  Cyclotomic pow(unsigned long long k) const;

  std::string str() const;
  std::complex<double> to_complex_approx() const;  // diagnostics only

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Rational& a, const Cyclotomic& b);
  Cyclotomic operator-() const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(unsigned n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {}
  static Cyclotomic from_poly(unsigned n, std::vector<Rational> poly);  // reduces + normalizes
  Cyclotomic lifted(unsigned target) const;  // n_ must divide target
  void normalize();

  unsigned n_;
  std::vector<Rational> c_;  // size phi(n_)
};

unsigned euler_phi(unsigned n);
/// Monic integer coefficients of the n-th cyclotomic polynomial, ascending.
const std::vector<BigInt>& cyclotomic_polynomial(unsigned n);

}  // namespace genord
