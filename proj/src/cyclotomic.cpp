#include "genord/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace genord {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// quotient of monic-divisor integer polynomial division (exact)
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  std::vector<BigInt> quot(num.size() - den.size() + 1, BigInt(0));
  for (std::size_t i = num.size(); i-- >= den.size();) {
    BigInt cf = num[i];
    if (cf == 0) {
      if (i + 1 == den.size()) break;
      continue;
    }
    std::size_t shift = i - (den.size() - 1);
    quot[shift] = cf;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= cf * den[j];
    if (i + 1 == den.size()) break;
  }
  return quot;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, std::vector<BigInt>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<BigInt>&(unsigned)> compute =
      [&](unsigned k) -> const std::vector<BigInt>& {
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    std::vector<BigInt> poly(k + 1, BigInt(0));  // x^k - 1
    poly[0] = -1;
    poly[k] = 1;
    for (unsigned d = 1; d < k; ++d)
      if (k % d == 0) poly = divide_exact(std::move(poly), compute(d));
    return cache.emplace(k, std::move(poly)).first->second;
  };
  return compute(n);
}

Cyclotomic Cyclotomic::from_poly(unsigned n, std::vector<Rational> poly) {
  const std::vector<BigInt>& phi_poly = cyclotomic_polynomial(n);
  const std::size_t deg = phi_poly.size() - 1;  // phi(n)
  for (std::size_t i = poly.size(); i-- > deg;) {
    Rational cf = poly[i];
    if (cf == 0) continue;
    poly[i] = 0;
    std::size_t shift = i - deg;
    for (std::size_t j = 0; j < deg; ++j) poly[shift + j] -= cf * Rational(phi_poly[j]);
  }
  poly.resize(deg);
  Cyclotomic z(n, std::move(poly));
  z.normalize();
  return z;
}

void Cyclotomic::normalize() {
  if (n_ == 1) return;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  Rational v = c_[0];
  n_ = 1;
  c_.assign(1, v);
}

Cyclotomic Cyclotomic::root(unsigned n, long long k) {
  if (n == 0) throw std::invalid_argument("E(0) is not a root of unity");
  k %= static_cast<long long>(n);
  if (k < 0) k += n;
  std::vector<Rational> poly(static_cast<std::size_t>(k) + 1, Rational(0));
  poly[static_cast<std::size_t>(k)] = 1;
  return from_poly(n, std::move(poly));
}

Cyclotomic Cyclotomic::lifted(unsigned target) const {
  if (target == n_) return *this;
  unsigned stride = target / n_;
  std::vector<Rational> poly(static_cast<std::size_t>(c_.size() - 1) * stride + 1,
                             Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) poly[i * stride] = c_[i];
  return from_poly(target, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

const Rational& Cyclotomic::rational_value() const {
  if (n_ != 1) throw std::logic_error("value is not rational");
  return c_[0];
}

std::optional<BigInt> Cyclotomic::as_integer() const {
  if (n_ != 1) return std::nullopt;
  if (denominator(c_[0]) != 1) return std::nullopt;
  return numerator(c_[0]);
}

Cyclotomic Cyclotomic::conjugated() const {
  if (n_ == 1) return *this;
  std::vector<Rational> poly(n_, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::size_t e = (i * (n_ - 1)) % n_;
    poly[e] += c_[i];
  }
  return from_poly(n_, std::move(poly));
}

Cyclotomic Cyclotomic::pow(unsigned long long k) const {
  Cyclotomic acc(1);
  Cyclotomic base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned n = std::lcm(a.n_, b.n_);
  Cyclotomic x = a.lifted(n), y = b.lifted(n);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  x.normalize();
  return x;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned n = std::lcm(a.n_, b.n_);
  Cyclotomic x = a.lifted(n), y = b.lifted(n);
  std::vector<Rational> poly(x.c_.size() + y.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      if (y.c_[j] == 0) continue;
      poly[i + j] += x.c_[i] * y.c_[j];
    }
  }
  return Cyclotomic::from_poly(n, std::move(poly));
}

Cyclotomic operator*(const Rational& a, const Cyclotomic& b) {
  Cyclotomic out = b;
  for (auto& v : out.c_) v *= a;
  out.normalize();
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  unsigned n = std::lcm(a.n_, b.n_);
  return a.lifted(n).c_ == b.lifted(n).c_;
}

namespace {

std::string rational_str(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace

std::string Cyclotomic::str() const {
  if (n_ == 1) return rational_str(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational mag = c_[i] < 0 ? Rational(-c_[i]) : c_[i];
    if (first) {
      if (c_[i] < 0) os << '-';
      first = false;
    } else {
      os << (c_[i] < 0 ? '-' : '+');
    }
    if (i == 0) {
      os << rational_str(mag);
      continue;
    }
    if (mag != 1) os << rational_str(mag) << '*';
    os << "E(" << n_ << ')';
    if (i >= 2) os << '^' << i;
  }
  if (first) return "0";
  return os.str();
}

std::complex<double> Cyclotomic::to_complex_approx() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double cf = static_cast<double>(numerator(c_[i])) /
                static_cast<double>(denominator(c_[i]));
    double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n_);
    acc += cf * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool accept(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw CycloParseError(pos, std::string("expected '") + c + "'");
  }
  bool peek_digit() {
    skip_ws();
    return pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]));
  }
  BigInt parse_int() {
    skip_ws();
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
      throw CycloParseError(pos, "expected integer");
    BigInt v = 0;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    return negative ? BigInt(-v) : v;
  }

  Cyclotomic parse_atom() {
    skip_ws();
    if (pos >= text.size() || text[pos] != 'E')
      throw CycloParseError(pos, "expected E(n)");
    ++pos;
    expect('(');
    BigInt n = parse_int();
    if (n <= 0) throw CycloParseError(pos, "E(" + n.str() + ") rejected, order must be positive");
    expect(')');
    long long order = static_cast<long long>(n);
    long long exponent = 1;
    if (accept('^')) {
      BigInt e = parse_int();
      exponent = static_cast<long long>(e % n);
    }
    return Cyclotomic::root(static_cast<unsigned>(order), exponent);
  }

  Cyclotomic parse_term() {
    skip_ws();
    if (peek_digit()) {
      BigInt num = parse_int();
      Rational coeff(num);
      if (accept('/')) coeff = Rational(num, parse_int());
      if (accept('*')) return coeff * parse_atom();
      return Cyclotomic(coeff);
    }
    return parse_atom();
  }

  Cyclotomic parse_expr() {
    skip_ws();
    bool negative = accept('-');
    Cyclotomic acc = parse_term();
    if (negative) acc = -acc;
    while (true) {
      skip_ws();
      if (accept('+')) {
        acc = acc + parse_term();
      } else if (accept('-')) {
        acc = acc - parse_term();
      } else {
        break;
      }
    }
    skip_ws();
    if (pos != text.size())
      throw CycloParseError(pos, "unexpected trailing input");
    return acc;
  }
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text, unsigned ambient) {
  Parser parser{text};
  Cyclotomic value = parser.parse_expr();
  (void)ambient;  // values already live in the lcm field; ambient only names it
  return value;
}

}  // namespace genord
