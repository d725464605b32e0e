#pragma once

/**
 * @file scalar.hpp
 * @brief Scalar policies shared by the exact and approximate pipelines.
 *
 * Geometry and constructions are templates over an *arithmetic context*:
 *
 *   FloatArithmetic      double, comparisons within GeometryConfig::epsilon
 *   FieldArithmetic      FieldElement over one QuarticField, exact
 *   ExtensionArithmetic  FieldElement(sqrt 2) over one QuarticField, exact
 *
 * A context knows how to embed rationals and take square roots; comparisons
 * go through near_equal / near_zero, which are exact for exact scalars and
 * epsilon-tolerant for doubles.
 */

#include <cmath>
#include <optional>
#include <string>

#include "s2flow/errors.hpp"
#include "s2flow/exact/quadratic_extension.hpp"
#include "s2flow/exact/quartic_field.hpp"
#include "s2flow/exact/rational.hpp"

namespace s2flow {

struct GeometryConfig {
  double epsilon = 1e-7;

  void validate() const {
    if (!(epsilon > 0)) throw DomainError("GeometryConfig: epsilon must be positive");
  }
};

template <class S>
inline constexpr bool is_exact_scalar_v = true;
template <>
inline constexpr bool is_exact_scalar_v<double> = false;

inline int sign(double x) { return (x > 0) - (x < 0); }
inline double to_double(double x) { return x; }

template <class S>
bool near_zero(const S& x, const GeometryConfig& cfg) {
  if constexpr (is_exact_scalar_v<S>) {
    (void)cfg;
    return x.is_zero();
  } else {
    return std::abs(x) <= cfg.epsilon;
  }
}

template <class S>
bool near_equal(const S& a, const S& b, const GeometryConfig& cfg) {
  if constexpr (is_exact_scalar_v<S>) {
    (void)cfg;
    return a == b;
  } else {
    return std::abs(a - b) <= cfg.epsilon;
  }
}

/// Sign with a dead zone of epsilon for doubles.
template <class S>
int tolerant_sign(const S& x, const GeometryConfig& cfg) {
  if (near_zero(x, cfg)) return 0;
  return sign(x);
}

using F2Sqrt2 = QuadraticExtension<FieldElement, 2>;

/// Field-independent rational constant of scalar type S.
template <class S>
S constant(const Rational& r);
template <>
inline double constant<double>(const Rational& r) {
  return r.to_double();
}
template <>
inline FieldElement constant<FieldElement>(const Rational& r) {
  return FieldElement::rational(r);
}
template <>
inline F2Sqrt2 constant<F2Sqrt2>(const Rational& r) {
  return F2Sqrt2(FieldElement::rational(r));
}

/// Total order on representations (exact) or values (double); only used to
/// build lookup structures.
inline bool repr_less(double a, double b) { return a < b; }

class FloatArithmetic {
 public:
  using scalar = double;

  scalar from_rational(const Rational& r) const { return r.to_double(); }
  std::optional<scalar> sqrt(const scalar& x) const {
    if (x < 0) return std::nullopt;
    return std::sqrt(x);
  }
  std::string field_tag() const { return "float"; }
};

class FieldArithmetic {
 public:
  using scalar = FieldElement;

  explicit FieldArithmetic(const QuarticField& f) : field_(&f) {}

  scalar from_rational(const Rational& r) const { return FieldElement(*field_, r); }
  std::optional<scalar> sqrt(const scalar& x) const { return sqrt_exact(x); }
  const QuarticField& field() const { return *field_; }
  std::string field_tag() const { return field_->tag(); }

 private:
  const QuarticField* field_;
};

class ExtensionArithmetic {
 public:
  using scalar = F2Sqrt2;

  explicit ExtensionArithmetic(const QuarticField& f) : field_(&f) {}

  scalar from_rational(const Rational& r) const { return scalar(FieldElement(*field_, r), FieldElement(*field_)); }
  std::optional<scalar> sqrt(const scalar& x) const { return sqrt_exact(x); }
  const QuarticField& field() const { return *field_; }
  std::string field_tag() const { return field_->tag() + "(sqrt2)"; }

 private:
  const QuarticField* field_;
};

}  // namespace s2flow
