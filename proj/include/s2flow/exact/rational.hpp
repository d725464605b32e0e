#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals.
 *
 * Thin value type over GMP's mpq_class. Values are always canonical
 * (lowest terms, positive denominator), so structural equality is
 * numerical equality and the textual form "n/d" is unique.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "s2flow/errors.hpp"

namespace s2flow {

class Rational {
 public:
  Rational() = default;
  Rational(int n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : v_(std::to_string(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) throw DivisionByZero("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "n", "-n" or "n/d" (d may be unreduced; the result is canonical).
  static Rational parse(std::string_view text) {
    if (text.empty()) throw ParseError("Rational: empty string");
    auto slash = text.find('/');
    auto as_int = [&](std::string_view s) {
      mpz_class z;
      std::string buf(s);
      if (buf.empty() || z.set_str(buf, 10) != 0)
        throw ParseError("Rational: malformed integer '" + buf + "'");
      return z;
    };
    if (slash == std::string_view::npos) return Rational(as_int(text), mpz_class(1));
    return Rational(as_int(text.substr(0, slash)), as_int(text.substr(slash + 1)));
  }

  /// Always "n/d", including integers ("3/1").
  std::string str() const { return num().get_str() + "/" + den().get_str(); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned e) {
  Rational result(1);
  for (unsigned i = 0; i < e; ++i) result *= base;
  return result;
}

/// Exact square root if r is the square of a rational.
inline std::optional<Rational> sqrt_exact(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

/// 2^-bits as a rational.
inline Rational pow2_neg(unsigned bits) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, bits);
  return Rational(mpz_class(1), d);
}

}  // namespace s2flow
