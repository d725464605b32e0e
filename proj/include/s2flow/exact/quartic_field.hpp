#pragma once

/**
 * @file quartic_field.hpp
 * @brief Real quartic number fields Q[t]/(m(t)) with a designated real root.
 *
 * An element is stored as its canonical representative c0 + c1 t + c2 t^2 +
 * c3 t^3, so equality is coefficient equality. Real-valued questions (sign,
 * conversion to double) are answered by evaluating the element with interval
 * arithmetic over an isolating interval of the designated root and bisecting
 * that interval until the answer is certain. Zero is decided symbolically
 * before any refinement starts, which guarantees termination.
 *
 * Two fields are provided as presets:
 *   F1 = Q[t]/(t^4 - 5),        t = 5^(1/4)       (golden-ratio coordinates)
 *   F2 = Q[t]/(t^4 + 2t^2 - 2), t = sqrt(sqrt3 - 1)
 */

#include <array>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "s2flow/errors.hpp"
#include "s2flow/exact/polynomial.hpp"
#include "s2flow/exact/rational.hpp"

namespace s2flow {

/// Closed interval of rationals.
struct RationalInterval {
  Rational lo, hi;

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / Rational(2); }
  bool excludes_zero() const { return lo.sign() > 0 || hi.sign() < 0; }
};

namespace detail {

inline RationalInterval scale(const RationalInterval& iv, const Rational& c) {
  if (c.sign() >= 0) return {iv.lo * c, iv.hi * c};
  return {iv.hi * c, iv.lo * c};
}

inline RationalInterval interval_pow(const RationalInterval& iv, unsigned e) {
  if (e == 0) return {Rational(1), Rational(1)};
  Rational a = pow(iv.lo, e), b = pow(iv.hi, e);
  if (e % 2 == 1) return {a, b};
  if (iv.lo.sign() >= 0) return {a, b};
  if (iv.hi.sign() <= 0) return {b, a};
  return {Rational(0), a > b ? a : b};
}

}  // namespace detail

class QuarticField {
 public:
  /// An isolating interval for the designated root together with the sign of
  /// m at its left end, which is all bisection needs.
  struct RootBox {
    RationalInterval interval;
    int sign_at_lo = 0;
  };

  /// minimal_polynomial holds m's coefficients from t^0 to t^4; m must be
  /// monic with integer coefficients and have exactly one real root in
  /// (lo, hi]. Irreducibility over Q is the caller's responsibility (the
  /// presets satisfy it); a reducible m surfaces as a DivisionByZero on
  /// inversion.
  QuarticField(std::string tag, std::array<Rational, 5> minimal_polynomial, Rational lo, Rational hi)
      : tag_(std::move(tag)), m_(minimal_polynomial) {
    if (m_[4] != Rational(1)) throw DomainError("QuarticField: minimal polynomial must be monic of degree 4");
    for (const auto& c : m_)
      if (!c.is_integer()) throw DomainError("QuarticField: minimal polynomial must have integer coefficients");
    if (!(lo < hi)) throw DomainError("QuarticField: empty root interval");
    detail::Poly m(std::vector<Rational>(m_.begin(), m_.end()));
    int s_lo = m.at(lo).sign(), s_hi = m.at(hi).sign();
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
      throw DomainError("QuarticField: minimal polynomial has no sign change on the root interval");
    if (detail::sturm_root_count(m, lo, hi) != 1)
      throw DomainError("QuarticField: root interval does not isolate exactly one real root");
    given_ = {{lo, hi}, s_lo};
    refined_ = given_;
    while (refined_.interval.width() > pow2_neg(kPresetRefinementBits)) refined_ = bisect(refined_);
    for (unsigned i = 0; i < 4; ++i) powers_[i] = detail::interval_pow(refined_.interval, i);
  }

  const std::string& tag() const { return tag_; }
  const std::array<Rational, 5>& minimal_polynomial() const { return m_; }
  const RationalInterval& root_interval() const { return given_.interval; }

  /// m has no odd-degree terms, so Q(t^2) is a quadratic subfield and exact
  /// square roots can be taken through the tower Q < Q(t^2) < F.
  bool is_even() const { return m_[1].is_zero() && m_[3].is_zero(); }

  Rational eval_minimal_polynomial(const Rational& x) const {
    Rational acc(0);
    for (int i = 4; i >= 0; --i) acc = acc * x + m_[static_cast<std::size_t>(i)];
    return acc;
  }

  RootBox bisect(const RootBox& box) const {
    Rational mid = box.interval.mid();
    int s = eval_minimal_polynomial(mid).sign();
    if (s == 0) return {{mid, mid}, 0};
    if (s == box.sign_at_lo) return {{mid, box.interval.hi}, s};
    return {{box.interval.lo, mid}, box.sign_at_lo};
  }

  /// Root box refined at construction; callers refine further locally.
  const RootBox& refined_box() const { return refined_; }

  /// Interval image of sum c_i t^i for t in the refined box.
  RationalInterval image(const std::array<Rational, 4>& c) const { return image(c, refined_.interval, powers_); }

  RationalInterval image(const std::array<Rational, 4>& c, const RationalInterval& box) const {
    std::array<RationalInterval, 4> pw;
    for (unsigned i = 0; i < 4; ++i) pw[i] = detail::interval_pow(box, i);
    return image(c, box, pw);
  }

 private:
  static constexpr unsigned kPresetRefinementBits = 96;

  static RationalInterval image(const std::array<Rational, 4>& c, const RationalInterval&,
                                const std::array<RationalInterval, 4>& pw) {
    RationalInterval acc{Rational(0), Rational(0)};
    for (unsigned i = 0; i < 4; ++i) {
      if (c[i].is_zero()) continue;
      auto term = detail::scale(pw[i], c[i]);
      acc.lo += term.lo;
      acc.hi += term.hi;
    }
    return acc;
  }

  std::string tag_;
  std::array<Rational, 5> m_;
  RootBox given_;
  RootBox refined_;
  std::array<RationalInterval, 4> powers_;
};

/// Element c0 + c1 t + c2 t^2 + c3 t^3 of a QuarticField. An element without
/// a field (default-constructed, or made by rational()) is a rational constant
/// that adopts the field of whatever it meets.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(const QuarticField& f) : field_(&f) {}
  FieldElement(const QuarticField& f, Rational c0, Rational c1 = 0, Rational c2 = 0, Rational c3 = 0)
      : field_(&f), c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}
  FieldElement(const QuarticField& f, std::array<Rational, 4> c) : field_(&f), c_(std::move(c)) {}

  static FieldElement generator(const QuarticField& f) { return FieldElement(f, 0, 1); }

  /// Unbound rational constant.
  static FieldElement rational(Rational r) {
    FieldElement e;
    e.c_[0] = std::move(r);
    return e;
  }

  const QuarticField* field() const { return field_; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  FieldElement operator-() const {
    FieldElement r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  FieldElement& operator+=(const FieldElement& o) {
    field_ = common_field(*this, o);
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  FieldElement& operator-=(const FieldElement& o) {
    field_ = common_field(*this, o);
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  FieldElement& operator*=(const FieldElement& o) {
    field_ = common_field(*this, o);
    if (is_zero() || o.is_zero()) {
      c_ = {};
      return *this;
    }
    std::array<Rational, 7> p;
    for (std::size_t i = 0; i < 4; ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < 4; ++j)
        if (!o.c_[j].is_zero()) p[i + j] += c_[i] * o.c_[j];
    }
    // t^4 = -(m0 + m1 t + m2 t^2 + m3 t^3)
    const auto& m = field_->minimal_polynomial();
    for (std::size_t d = 6; d >= 4; --d) {
      if (p[d].is_zero()) continue;
      Rational lead = p[d];
      p[d] = Rational(0);
      for (std::size_t i = 0; i < 4; ++i) p[d - 4 + i] -= lead * m[i];
    }
    for (std::size_t i = 0; i < 4; ++i) c_[i] = std::move(p[i]);
    return *this;
  }
  FieldElement& operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
  }
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }
  FieldElement& operator/=(const Rational& r) {
    if (r.is_zero()) throw DivisionByZero("FieldElement: division by zero");
    for (auto& c : c_) c /= r;
    return *this;
  }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& r) { return a *= r; }
  friend FieldElement operator*(const Rational& r, FieldElement a) { return a *= r; }
  friend FieldElement operator/(FieldElement a, const Rational& r) { return a /= r; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    common_field(a, b);
    return a.c_ == b.c_;
  }

  /// Multiplicative inverse via extended gcd with the minimal polynomial.
  FieldElement inverse() const {
    if (is_zero()) throw DivisionByZero("FieldElement: inverse of zero");
    if (is_rational()) {
      FieldElement r = *this;
      r.c_[0] = Rational(1) / c_[0];
      return r;
    }
    const auto& m = field_->minimal_polynomial();
    detail::Poly mp(std::vector<Rational>(m.begin(), m.end()));
    detail::Poly ap(std::vector<Rational>(c_.begin(), c_.end()));
    detail::Poly inv = detail::inverse_mod(ap, mp);
    FieldElement r(*field_);
    for (std::size_t i = 0; i < inv.coeffs.size(); ++i) r.c_[i] = inv.coeffs[i];
    return r;
  }

  /// Sign of the real value under the designated root; exact.
  int sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return c_[0].sign();
    auto img = field_->image(c_);
    if (img.excludes_zero()) return img.lo.sign() > 0 ? 1 : -1;
    auto box = field_->refined_box();
    for (;;) {
      box = field_->bisect(box);
      img = field_->image(c_, box.interval);
      if (img.excludes_zero()) return img.lo.sign() > 0 ? 1 : -1;
      if (box.interval.width().is_zero())
        throw DomainError("FieldElement: nonzero element vanishes at the root; minimal polynomial is reducible");
    }
  }

  /// Real value within 2^-precision_bits (before the final rounding to double).
  double to_double(unsigned precision_bits = 64) const {
    if (is_rational()) return c_[0].to_double();
    Rational tol = pow2_neg(precision_bits);
    auto box = field_->refined_box();
    auto img = field_->image(c_);
    while (img.width() > tol) {
      box = field_->bisect(box);
      img = field_->image(c_, box.interval);
    }
    return img.mid().to_double();
  }

  /// "n0/d0,n1/d1,n2/d2,n3/d3"; the field tag travels separately.
  std::string serialize() const {
    std::string out;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i) out += ',';
      out += c_[i].str();
    }
    return out;
  }

  static FieldElement parse(const QuarticField& f, std::string_view text) {
    std::array<Rational, 4> c;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      auto comma = text.find(',', pos);
      bool last = i == 3;
      if (last != (comma == std::string_view::npos))
        throw ParseError("FieldElement: expected four comma-separated rationals in '" + std::string(text) + "'");
      c[i] = Rational::parse(text.substr(pos, last ? std::string_view::npos : comma - pos));
      pos = comma + 1;
    }
    return FieldElement(f, std::move(c));
  }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << '[' << e.serialize() << ']'; }

 private:
  static const QuarticField* common_field(const FieldElement& a, const FieldElement& b) {
    if (a.field_ && b.field_ && a.field_ != b.field_)
      throw DomainError("FieldElement: operands belong to different fields (" + a.field_->tag() + " vs " +
                        b.field_->tag() + ")");
    return a.field_ ? a.field_ : b.field_;
  }

  const QuarticField* field_ = nullptr;
  std::array<Rational, 4> c_{};
};

inline int sign(const FieldElement& e) { return e.sign(); }
inline double to_double(const FieldElement& e) { return e.to_double(); }

/// Lexicographic order on coefficient vectors. A total order on
/// representations for use as a map key; unrelated to the real order.
inline bool repr_less(const FieldElement& a, const FieldElement& b) { return a.coeffs() < b.coeffs(); }

namespace detail {

// Square roots in the tower Q < K = Q(u) < F, u = t^2, for m = t^4 + p t^2 + q.
// Every step uses the norm trick: if w^2 = z in a quadratic extension L/B with
// conjugation s, then N(w) = +-sqrt(N(z)) and Tr(w)^2 = Tr(z) + 2 N(w), so
// w = (z + N(w)) / Tr(w) whenever Tr(w) != 0. The trace-zero case means z lies
// in B, where w is either in B or a B-multiple of the generator.

inline bool in_subfield(const FieldElement& z) { return z.coeffs()[1].is_zero() && z.coeffs()[3].is_zero(); }

// Conjugate of x + y u over Q, where u' = -p - u.
inline FieldElement conj_q(const FieldElement& z) {
  const auto& f = *z.field();
  const Rational& p = f.minimal_polynomial()[2];
  const auto& c = z.coeffs();
  return FieldElement(f, c[0] - p * c[2], 0, -c[2], 0);
}

// Conjugate over K: t -> -t.
inline FieldElement conj_k(const FieldElement& z) {
  const auto& c = z.coeffs();
  return FieldElement(*z.field(), c[0], -c[1], c[2], -c[3]);
}

inline std::optional<FieldElement> sqrt_in_subfield(const FieldElement& z) {
  const auto& f = *z.field();
  const auto& m = f.minimal_polynomial();
  if (z.is_rational()) {
    if (auto r = sqrt_exact(z.coeffs()[0])) return FieldElement(f, *r);
    // delta = 2u + p squares to the discriminant p^2 - 4q.
    Rational disc = m[2] * m[2] - Rational(4) * m[0];
    if (auto r = sqrt_exact(z.coeffs()[0] / disc)) return FieldElement(f, *r * m[2], 0, *r * Rational(2), 0);
    return std::nullopt;
  }
  FieldElement norm = z * conj_q(z);
  FieldElement trace = z + conj_q(z);
  auto n = sqrt_exact(norm.coeffs()[0]);
  if (!n) return std::nullopt;
  for (int s : {1, -1}) {
    Rational nw = *n * Rational(s);
    auto tw = sqrt_exact(trace.coeffs()[0] + Rational(2) * nw);
    if (!tw || tw->is_zero()) continue;
    FieldElement w = (z + FieldElement(f, nw)) / *tw;
    if (w * w == z) return w;
  }
  return std::nullopt;
}

}  // namespace detail

/// Nonnegative square root of z if it lies in z's field. Requires an even
/// minimal polynomial (both presets qualify).
inline std::optional<FieldElement> sqrt_exact(const FieldElement& z) {
  if (z.is_zero()) return z;
  if (z.sign() < 0) return std::nullopt;
  if (!z.field()) {
    if (auto r = sqrt_exact(z.coeffs()[0])) return FieldElement::rational(*r);
    return std::nullopt;
  }
  const auto& f = *z.field();
  if (!f.is_even())
    throw DomainError("sqrt_exact: exact square roots need a minimal polynomial without odd terms");
  auto normalize = [](FieldElement w) { return w.sign() < 0 ? -w : w; };
  FieldElement u(f, 0, 0, 1, 0);
  std::optional<FieldElement> w;
  if (detail::in_subfield(z)) {
    if ((w = detail::sqrt_in_subfield(z))) return normalize(*w);
    if (auto v = detail::sqrt_in_subfield(z / u)) return normalize(*v * FieldElement::generator(f));
    return std::nullopt;
  }
  FieldElement norm = z * detail::conj_k(z);
  FieldElement trace = z + detail::conj_k(z);
  auto n = detail::sqrt_in_subfield(norm);
  if (!n) return std::nullopt;
  for (int s : {1, -1}) {
    FieldElement nw = *n * Rational(s);
    auto tw = detail::sqrt_in_subfield(trace + nw * Rational(2));
    if (!tw || tw->is_zero()) continue;
    FieldElement cand = (z + nw) / *tw;
    if (cand * cand == z) return normalize(cand);
  }
  return std::nullopt;
}

namespace fields {

/// Q[t]/(t^4 - 5), t = 5^(1/4). Holds phi = (1 + t^2)/2 and 2/5^(1/4) = 2t^3/5.
inline const QuarticField& f1() {
  static const QuarticField field("F1", {Rational(-5), 0, 0, 0, 1}, Rational(149, 100), Rational(3, 2));
  return field;
}

/// Q[t]/(t^4 + 2t^2 - 2), t = sqrt(sqrt3 - 1). sqrt3 = t^2 + 1.
inline const QuarticField& f2() {
  static const QuarticField field("F2", {Rational(-2), 0, 2, 0, 1}, Rational(85, 100), Rational(86, 100));
  return field;
}

/// Preset lookup by tag; nullptr when unknown.
inline const QuarticField* by_tag(std::string_view tag) {
  if (tag == "F1") return &f1();
  if (tag == "F2") return &f2();
  return nullptr;
}

}  // namespace fields

}  // namespace s2flow
