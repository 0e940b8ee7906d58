#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hesslab/rational.hpp"

namespace hesslab {

enum class Variable { kX, kY };

struct Exponent {
  int x = 0;
  int y = 0;

  int total() const { return x + y; }
  bool operator==(const Exponent&) const = default;
};

// Graded order: total degree first, then the power of x. The largest key in a
// term map is therefore the graded-lex leading term.
struct GradedOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.x < b.x;
  }
};

class UnivariatePolynomial;

/// Sparse polynomial in x and y with rational coefficients. Zero coefficients
/// are never stored, so the zero polynomial is the empty map.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GradedOrder>;

  Polynomial() = default;
  explicit Polynomial(const Rational& constant);

  static Polynomial monomial(const Rational& coefficient, int x_power, int y_power);
  static Polynomial x() { return monomial(1, 1, 0); }
  static Polynomial y() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial.
  int degree() const;
  int degree_in(Variable var) const;
  Rational coefficient(int x_power, int y_power) const;

  // Adds coefficient * x^i y^j, dropping the entry if it cancels.
  void add_term(const Exponent& exponent, const Rational& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

 private:
  TermMap terms_;
};

/// Dense univariate polynomial, lowest degree first, leading coefficient
/// nonzero unless the polynomial is zero.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Rational> coefficients);
  explicit UnivariatePolynomial(const Rational& constant);

  static UnivariatePolynomial identity();  // the variable itself
  // (t - root)
  static UnivariatePolynomial linear_root(const Rational& root);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int power) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& at) const;
  int sign_at(const Rational& at) const { return sign(evaluate(at)); }
  UnivariatePolynomial derivative() const;
  UnivariatePolynomial monic() const;
  // p(q(t)).
  UnivariatePolynomial compose(const UnivariatePolynomial& inner) const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
  UnivariatePolynomial& operator-=(const UnivariatePolynomial& other);
  UnivariatePolynomial& operator*=(const Rational& scalar);

  friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a += b;
  }
  friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) {
    return a -= b;
  }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& s) {
    return a *= s;
  }
  friend UnivariatePolynomial operator*(const Rational& s, UnivariatePolynomial a) {
    return a *= s;
  }
  UnivariatePolynomial operator-() const;

  bool operator==(const UnivariatePolynomial& other) const = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  UnivariatePolynomial quotient;
  UnivariatePolynomial remainder;
};

DivisionResult divide(const UnivariatePolynomial& num, const UnivariatePolynomial& den);
UnivariatePolynomial remainder(const UnivariatePolynomial& num, const UnivariatePolynomial& den);
// Monic gcd; gcd(0, 0) = 0.
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
// p / gcd(p, p'), made monic.
UnivariatePolynomial square_free_part(const UnivariatePolynomial& p);
UnivariatePolynomial pow(const UnivariatePolynomial& base, unsigned exponent);

/// Invertible affine map (x, y) -> linear * (x, y) + translation.
class AffineMap2 {
 public:
  AffineMap2(std::array<Rational, 4> linear, std::array<Rational, 2> translation);

  static AffineMap2 identity();

  // Row-major 2x2 matrix {a11, a12, a21, a22}.
  const std::array<Rational, 4>& linear() const { return linear_; }
  const std::array<Rational, 2>& translation() const { return translation_; }
  const Rational& jacobian() const { return jacobian_; }

  RationalPoint apply(const RationalPoint& p) const;
  AffineMap2 inverse() const;

 private:
  std::array<Rational, 4> linear_;
  std::array<Rational, 2> translation_;
  Rational jacobian_;
};

/// num / den. known_factors lists polynomials that are known to divide the
/// denominator; reduction only ever cancels these, the denominator itself and
/// integer content.
struct PlaneRationalFunction {
  Polynomial num;
  Polynomial den;
  std::vector<Polynomial> known_factors;
};

Polynomial pow(const Polynomial& base, unsigned exponent);
Polynomial partial_derivative(const Polynomial& p, Variable var);
Rational evaluate(const Polynomial& p, const Rational& x, const Rational& y);
inline Rational evaluate(const Polynomial& p, const RationalPoint& at) {
  return evaluate(p, at.x, at.y);
}

// p(X(x, y), Y(x, y)).
Polynomial substitute(const Polynomial& p, const Polynomial& x_image, const Polynomial& y_image);
// p(X(t), Y(t)).
UnivariatePolynomial substitute(const Polynomial& p, const UnivariatePolynomial& x_image,
                                const UnivariatePolynomial& y_image);

Polynomial compose_affine(const Polynomial& p, const AffineMap2& map);
UnivariatePolynomial restrict_to_line(const Polynomial& p, const RationalPoint& base,
                                      const RationalPoint& direction);
// Full Taylor recentering: q(x, y) = p(x + at.x, y + at.y).
Polynomial translate(const Polynomial& p, const RationalPoint& at);
// Terms of degree 2..max_degree of the recentered polynomial.
Polynomial translate_jet(const Polynomial& p, const RationalPoint& at, int max_degree);
Polynomial homogeneous_part(const Polynomial& p, int degree);

// Real perfect-square test for polynomials whose terms all have degree 2..4.
bool is_perfect_square(const Polynomial& p);

// Exact quotient when den divides num, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den);

// Lifts a polynomial in even powers of t to two variables via t^2 -> x^2 + y^2.
Polynomial lift_radial(const UnivariatePolynomial& even);
// Embeds q(t) as q(x).
Polynomial embed_in_x(const UnivariatePolynomial& q);

PlaneRationalFunction make_rational_function(Polynomial num, Polynomial den,
                                             std::vector<Polynomial> known_factors = {});
PlaneRationalFunction rational_reduce(const PlaneRationalFunction& f);
Rational evaluate(const PlaneRationalFunction& f, const RationalPoint& at);

// Text format: sum of monomials c*x^i*y^j, c an integer or p/q.
std::string to_string(const Polynomial& p);
std::string to_string(const UnivariatePolynomial& p, std::string_view variable = "x");
std::string to_string(const PlaneRationalFunction& f);
Polynomial parse_polynomial(std::string_view text);

}  // namespace hesslab
