#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hesslab/calculus.hpp"

namespace hesslab {

/// Product of the lines y = a x, y = b x, x = a_i and x = b_j.
struct OuterOvalParams {
  Rational a;
  Rational b;
  std::vector<Rational> a_list;  // a_1 > a_2 > ... > a_m, all negative
  std::vector<Rational> b_list;  // 0 < b_1 < ... < b_n

  int m() const { return static_cast<int>(a_list.size()); }
  int n() const { return static_cast<int>(b_list.size()); }
};

/// Product of (x^2 + y^2 - m_i^2) over increasing positive radii.
struct EvenCircleParams {
  std::vector<Rational> radii;

  int n() const { return static_cast<int>(radii.size()); }
};

/// prod_{k=1..n} (x^2 + y^2 - k^2) / (x^2 + y^2 + 1).
struct OddCircleParams {
  int n = 1;
};

using FamilySpec = std::variant<OuterOvalParams, EvenCircleParams, OddCircleParams>;

// Each throws Error(kInvalidArgument) naming the violated inequality.
void validate(const OuterOvalParams& params);
void validate(const EvenCircleParams& params);
void validate(const OddCircleParams& params);
void validate(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);
FamilySpec family_from_json(const std::string& text);
std::string family_to_json(const FamilySpec& spec);

struct ArrangementLine {
  std::string label;        // "y = a*x", "x = a_1", ...
  Polynomial equation;      // degree one
  RationalPoint base;       // a point on the line
  RationalPoint direction;  // direction vector of the line
};

// Order: y = a x, y = b x, x = a_1..a_m, x = b_1..b_n.
std::vector<ArrangementLine> arrangement_lines(const OuterOvalParams& params);

Polynomial build_outer_oval(const OuterOvalParams& params);
Polynomial build_even_circles(const EvenCircleParams& params);
PlaneRationalFunction build_odd_circles(const OddCircleParams& params);
SurfaceFunction build_surface(const FamilySpec& spec);

struct GoodPositionFailure {
  std::string line;
  AlgebraicPoint witness;  // a critical point of the other lines' product on this line
};

struct GoodPositionResult {
  bool ok = true;
  std::vector<GoodPositionFailure> failures;
};

GoodPositionResult check_good_position(const OuterOvalParams& params);

/// Hess f(x, u + (a+b) x / 2) = beta(x) u^2 + alpha(x).
struct AlphaBeta {
  UnivariatePolynomial alpha;
  UnivariatePolynomial beta;
  Rational shift_slope;  // (a + b) / 2
};

AlphaBeta shifted_alpha_beta(const OuterOvalParams& params);

// x * prod (x - a_i) * prod (x - b_j); the Hessian restricted to y = a x is
// -(a - b)^2 g'(x)^2.
UnivariatePolynomial arrangement_profile(const OuterOvalParams& params);

/// Radial factorization Hess f = 4 s t / (x^2 + y^2 + 1)^denominator_exponent,
/// with s(x, y) = s_tilde(r), t(x, y) = t_tilde(r), r = sqrt(x^2 + y^2).
struct RadialPair {
  UnivariatePolynomial s_tilde;
  UnivariatePolynomial t_tilde;
  Polynomial s;
  Polynomial t;
  int denominator_exponent = 0;
};

// Both verify the factorization identity exactly and throw Error(kInternal)
// if it fails.
RadialPair radial_even(const EvenCircleParams& params);
RadialPair radial_odd(const OddCircleParams& params);

// Polynomial whose zero set is the Hessian curve: Hess f for the polynomial
// families and the reduced numerator of Hess f for the rational one.
Polynomial hessian_curve_polynomial(const FamilySpec& spec);

}  // namespace hesslab
