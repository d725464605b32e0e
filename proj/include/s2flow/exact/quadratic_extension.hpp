#pragma once

// Base(sqrt D) for a real base field and a positive integer D whose square
// root is not in Base. Elements are a + b sqrt(D); since {1, sqrt D} is a
// basis over Base, equality is componentwise.

#include <cmath>
#include <optional>
#include <ostream>
#include <tuple>

#include "s2flow/errors.hpp"
#include "s2flow/exact/rational.hpp"

namespace s2flow {

template <class Base, int D>
class QuadraticExtension {
  static_assert(D > 1, "D must be a positive non-square");

 public:
  QuadraticExtension() = default;
  QuadraticExtension(Base a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadraticExtension(Base a, Base b) : a_(std::move(a)), b_(std::move(b)) {}

  const Base& rational_part() const { return a_; }
  const Base& radical_part() const { return b_; }
  bool in_base() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadraticExtension operator-() const { return {-a_, -b_}; }
  QuadraticExtension& operator+=(const QuadraticExtension& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadraticExtension& operator-=(const QuadraticExtension& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadraticExtension& operator*=(const QuadraticExtension& o) {
    Base a = a_ * o.a_ + b_ * o.b_ * Rational(D);
    Base b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadraticExtension& operator*=(const Rational& r) {
    a_ *= r;
    b_ *= r;
    return *this;
  }
  QuadraticExtension& operator/=(const QuadraticExtension& o) { return *this *= o.inverse(); }
  QuadraticExtension& operator/=(const Rational& r) {
    a_ /= r;
    b_ /= r;
    return *this;
  }

  friend QuadraticExtension operator+(QuadraticExtension x, const QuadraticExtension& y) { return x += y; }
  friend QuadraticExtension operator-(QuadraticExtension x, const QuadraticExtension& y) { return x -= y; }
  friend QuadraticExtension operator*(QuadraticExtension x, const QuadraticExtension& y) { return x *= y; }
  friend QuadraticExtension operator/(QuadraticExtension x, const QuadraticExtension& y) { return x /= y; }
  friend QuadraticExtension operator*(QuadraticExtension x, const Rational& r) { return x *= r; }
  friend QuadraticExtension operator*(const Rational& r, QuadraticExtension x) { return x *= r; }
  friend QuadraticExtension operator/(QuadraticExtension x, const Rational& r) { return x /= r; }
  friend bool operator==(const QuadraticExtension& x, const QuadraticExtension& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  Base norm() const { return a_ * a_ - b_ * b_ * Rational(D); }
  QuadraticExtension conjugate() const { return {a_, -b_}; }

  QuadraticExtension inverse() const {
    if (is_zero()) throw DivisionByZero("QuadraticExtension: inverse of zero");
    Base n = norm();
    return {a_ / n, -b_ / n};
  }

  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with D b^2
    return norm().sign() * sa;
  }

  double to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(D)); }

  friend std::ostream& operator<<(std::ostream& os, const QuadraticExtension& x) {
    return os << '(' << x.a_ << " + " << x.b_ << " sqrt" << D << ')';
  }

 private:
  Base a_{};
  Base b_{};
};

template <class Base, int D>
int sign(const QuadraticExtension<Base, D>& x) {
  return x.sign();
}

template <class Base, int D>
double to_double(const QuadraticExtension<Base, D>& x) {
  return x.to_double();
}

template <class Base, int D>
bool repr_less(const QuadraticExtension<Base, D>& x, const QuadraticExtension<Base, D>& y) {
  if (repr_less(x.rational_part(), y.rational_part())) return true;
  if (repr_less(y.rational_part(), x.rational_part())) return false;
  return repr_less(x.radical_part(), y.radical_part());
}

/// Nonnegative square root inside Base(sqrt D), using the same norm/trace
/// identity as the base field; Base must provide sqrt_exact.
template <class Base, int D>
std::optional<QuadraticExtension<Base, D>> sqrt_exact(const QuadraticExtension<Base, D>& z) {
  using Ext = QuadraticExtension<Base, D>;
  if (z.is_zero()) return z;
  if (z.sign() < 0) return std::nullopt;
  auto normalize = [](Ext w) { return w.sign() < 0 ? -w : w; };
  if (z.in_base()) {
    if (auto r = sqrt_exact(z.rational_part())) return Ext(*r, *r * Rational(0));
    if (auto r = sqrt_exact(z.rational_part() / Rational(D))) return Ext(*r * Rational(0), *r);
    return std::nullopt;
  }
  auto n = sqrt_exact(z.norm());
  if (!n) return std::nullopt;
  for (int s : {1, -1}) {
    Base nw = *n * Rational(s);
    auto tw = sqrt_exact(z.rational_part() * Rational(2) + nw * Rational(2));
    if (!tw || tw->is_zero()) continue;
    Ext cand = (z + Ext(nw, nw * Rational(0))) * Ext(tw->inverse(), *tw * Rational(0));
    if (cand * cand == z) return normalize(cand);
  }
  return std::nullopt;
}

}  // namespace s2flow
