#pragma once

// Dense univariate polynomials over Q. Internal helper for the number-field
// code: reduction, extended gcd and Sturm sequences.

#include <utility>
#include <vector>

#include "s2flow/exact/rational.hpp"

namespace s2flow::detail {

/// coeffs[i] is the coefficient of t^i; trailing zeros are trimmed.
struct Poly {
  std::vector<Rational> coeffs;

  Poly() = default;
  explicit Poly(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Rational& lead() const { return coeffs.back(); }

  Rational at(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

inline Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
  return Poly(std::move(c));
}

inline Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
  return Poly(std::move(c));
}

inline Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
  return Poly(std::move(c));
}

inline Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> c(p.coeffs.size() - 1);
  for (std::size_t i = 1; i < p.coeffs.size(); ++i) c[i - 1] = p.coeffs[i] * Rational(static_cast<long>(i));
  return Poly(std::move(c));
}

/// Quotient and remainder of a by b (b nonzero).
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly rem = a;
  if (rem.degree() < b.degree()) return {Poly{}, rem};
  std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - b.degree() + 1));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    Rational f = rem.lead() / b.lead();
    q[shift] = f;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) rem.coeffs[i + shift] -= f * b.coeffs[i];
    rem.trim();
  }
  return {Poly(std::move(q)), rem};
}

/// s with s*a == 1 (mod m); requires gcd(a, m) == 1.
inline Poly inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a;
  Poly s0, s1(std::vector<Rational>{Rational(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DivisionByZero("element is not invertible modulo the minimal polynomial");
  Rational inv = Rational(1) / r0.coeffs[0];
  for (auto& c : s0.coeffs) c *= inv;
  return divmod(s0, m).second;
}

/// Number of distinct real roots of p in the half-open interval (lo, hi].
inline int sturm_root_count(const Poly& p, const Rational& lo, const Rational& hi) {
  std::vector<Poly> seq{p, derivative(p)};
  while (!seq.back().is_zero()) {
    Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
    for (auto& c : r.coeffs) c = -c;
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  auto variations = [&](const Rational& x) {
    int count = 0, prev = 0;
    for (const auto& q : seq) {
      int s = q.at(x).sign();
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++count;
      prev = s;
    }
    return count;
  };
  return variations(lo) - variations(hi);
}

}  // namespace s2flow::detail
