#pragma once

#include <optional>
#include <string>

#include "hesslab/realroots.hpp"

namespace hesslab {

/// A real algebraic number: the unique root of a square-free defining
/// polynomial inside an isolating interval.
class AlgebraicReal {
 public:
  AlgebraicReal(const UnivariatePolynomial& defining, const IsolatingInterval& interval);
  static AlgebraicReal from_rational(const Rational& value);

  const UnivariatePolynomial& defining() const { return defining_; }
  const IsolatingInterval& interval() const { return interval_; }
  std::optional<Rational> as_rational() const;

  // Exact sign of q at this number.
  int sign_of(const UnivariatePolynomial& q) const;
  // Interval of width <= width around the number.
  IsolatingInterval refined(const Rational& width) const;
  double approximate() const;
  std::string describe() const;

 private:
  UnivariatePolynomial defining_;
  IsolatingInterval interval_;
};

// Root of p inside an isolating interval; a rational root gets a linear
// defining polynomial so that as_rational() recognizes it.
AlgebraicReal root_of(const UnivariatePolynomial& p, const IsolatingInterval& interval);

// Rational with the smallest denominator in [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// Scalar types used by the field-generic geometry code. Each exposes
/// Elem, constant() and an exact sign().
struct RationalField {
  using Elem = Rational;
  Elem constant(const Rational& v) const { return v; }
  Elem constant(long v) const { return Rational(v); }
  int sign(const Elem& e) const { return sgn(e); }
};

/// Elements of Q(theta) written as polynomials in theta reduced modulo the
/// defining polynomial of theta.
class AlgebraicElement {
 public:
  AlgebraicElement(UnivariatePolynomial value, const AlgebraicReal* base);

  const UnivariatePolynomial& value() const { return value_; }
  const AlgebraicReal* base() const { return base_; }

  friend AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b);

 private:
  UnivariatePolynomial value_;
  const AlgebraicReal* base_;
};

class AlgebraicField {
 public:
  using Elem = AlgebraicElement;
  explicit AlgebraicField(const AlgebraicReal& base) : base_(&base) {}

  Elem constant(const Rational& v) const { return Elem(UnivariatePolynomial(v), base_); }
  Elem constant(long v) const { return constant(Rational(v)); }
  Elem element(const UnivariatePolynomial& q) const { return Elem(q, base_); }
  Elem generator() const { return element(UnivariatePolynomial::identity()); }
  int sign(const Elem& e) const { return base_->sign_of(e.value()); }
  const AlgebraicReal& base() const { return *base_; }

 private:
  const AlgebraicReal* base_;
};

/// a + b * sqrt(d) with d > 0 not a rational square.
struct QuadraticElement {
  Rational a;
  Rational b;
  Rational d;

  friend QuadraticElement operator+(const QuadraticElement& x, const QuadraticElement& y) {
    return {x.a + y.a, x.b + y.b, x.d};
  }
  friend QuadraticElement operator-(const QuadraticElement& x, const QuadraticElement& y) {
    return {x.a - y.a, x.b - y.b, x.d};
  }
  friend QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y) {
    return {x.a * y.a + x.d * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
  }
};

class QuadraticField {
 public:
  using Elem = QuadraticElement;
  explicit QuadraticField(const Rational& radicand);

  const Rational& radicand() const { return d_; }
  Elem constant(const Rational& v) const { return {v, 0, d_}; }
  Elem constant(long v) const { return {Rational(v), 0, d_}; }
  Elem root() const { return {0, 1, d_}; }
  int sign(const Elem& e) const;
  double approximate(const Elem& e) const;

 private:
  Rational d_;
};

}  // namespace hesslab
