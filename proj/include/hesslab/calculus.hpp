#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hesslab/algebraic.hpp"
#include "hesslab/polynomial.hpp"

namespace hesslab {

// The graph z = f(x, y) of either a polynomial or a quotient of polynomials.
using SurfaceFunction = std::variant<Polynomial, PlaneRationalFunction>;

enum class PointClass { kElliptic, kParabolic, kHyperbolic };

std::string to_string(PointClass cls);

/// A dx^2 + 2 B dx dy + C dy^2 with A = f_xx, B = f_xy, C = f_yy at a point.
struct SecondForm {
  Rational a;
  Rational b;
  Rational c;

  // B^2 - AC, which equals -Hess f at the point.
  Rational discriminant() const { return b * b - a * c; }
};

/// Direction (base_x + selector * sqrt(radicand), y) with an irrational
/// square root.
struct QuadraticDirection {
  Rational base_x;
  int selector = 1;
  Rational radicand;
  Rational y;

  bool operator==(const QuadraticDirection&) const = default;
};

using Direction = std::variant<RationalPoint, QuadraticDirection>;

std::string to_string(const Direction& direction);

struct AsymptoticDirections {
  enum class Kind { kNone, kOne, kTwo, kAll };
  Kind kind = Kind::kNone;
  std::vector<Direction> directions;
};

/// Vanishing order of the tangent-plane-corrected restriction; nullopt means
/// infinite (identically zero, or beyond the cap for rational functions).
using ContactOrder = std::optional<int>;

struct SpecialPointCertificate {
  std::string point;                       // exact rational pair or algebraic description
  std::optional<RationalPoint> rational_point;
  bool hessian_vanishes = false;
  bool hessian_gradient_nonzero = false;
  std::optional<std::string> unique_asymptotic_direction;
  std::optional<RationalPoint> rational_direction;
  ContactOrder contact_order;
  bool contact_order_ge_4 = false;
  bool jet4_not_square = false;
  bool verdict = false;
};

/// A point whose coordinates are polynomials in one real algebraic number.
struct AlgebraicPoint {
  AlgebraicReal theta;
  UnivariatePolynomial x;
  UnivariatePolynomial y;

  std::string describe() const;
};

Polynomial hessian_poly(const Polynomial& f);
PlaneRationalFunction hessian_rational(const PlaneRationalFunction& f);
Rational hessian_value(const SurfaceFunction& f, const RationalPoint& at);

// Taylor coefficients of f recentered at `at`, all degrees 0..order. For a
// rational function the expansion is the truncated power series of num/den.
Polynomial taylor_jet(const SurfaceFunction& f, const RationalPoint& at, int order);

SecondForm second_form(const SurfaceFunction& f, const RationalPoint& at);
PointClass classify_point(const SurfaceFunction& f, const RationalPoint& at);
AsymptoticDirections asymptotic_directions(const SurfaceFunction& f, const RationalPoint& at);

// cap defaults to total degree + 1; for polynomials an identically vanishing
// restriction is detected exactly and the cap is irrelevant.
ContactOrder contact_order(const SurfaceFunction& f, const RationalPoint& at,
                           const Direction& direction, std::optional<int> cap = std::nullopt);

SpecialPointCertificate certify_special_parabolic(const SurfaceFunction& f, const RationalPoint& at);
SpecialPointCertificate certify_special_parabolic(const Polynomial& f, const AlgebraicPoint& at);

}  // namespace hesslab
