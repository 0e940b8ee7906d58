#include "hesslab/algebraic.hpp"

#include <cmath>
#include <sstream>

#include "hesslab/error.hpp"

namespace hesslab {

AlgebraicReal::AlgebraicReal(const UnivariatePolynomial& defining, const IsolatingInterval& interval)
    : defining_(square_free_part(defining)), interval_(interval) {
  if (defining_.degree() < 1) fail(ErrorCode::kInvalidArgument, "algebraic number needs a nonconstant polynomial");
  if (sturm_count(defining_, interval_.lo, interval_.hi) != 1) {
    fail(ErrorCode::kPrecondition, "interval does not isolate exactly one root");
  }
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& value) {
  return AlgebraicReal(UnivariatePolynomial::linear_root(value), {value - 1, value + 1, true});
}

std::optional<Rational> AlgebraicReal::as_rational() const {
  if (defining_.degree() != 1) return std::nullopt;
  return Rational(-defining_.coefficient(0) / defining_.coefficient(1));
}

int AlgebraicReal::sign_of(const UnivariatePolynomial& q) const {
  const UnivariatePolynomial reduced = remainder(q, defining_);
  if (reduced.is_zero()) return 0;
  if (auto exact = as_rational()) return reduced.sign_at(*exact);
  const UnivariatePolynomial common = gcd(reduced, defining_);
  if (common.degree() >= 1 && sturm_count(common, interval_.lo, interval_.hi) == 1) return 0;
  // q(theta) != 0: shrink until q has no root left in the interval.
  IsolatingInterval iv = interval_;
  const SturmSequence q_sturm(reduced);
  while (q_sturm.count(iv.lo, iv.hi) != 0) iv = refine_root(defining_, iv, iv.width() / 2);
  return reduced.sign_at(iv.hi);
}

IsolatingInterval AlgebraicReal::refined(const Rational& width) const {
  if (auto exact = as_rational()) return {*exact - width / 2, *exact + width / 2, true};
  return refine_root(defining_, interval_, width);
}

double AlgebraicReal::approximate() const {
  if (auto exact = as_rational()) return exact->get_d();
  const IsolatingInterval iv = refined(Rational(1, Integer(1) << 60));
  return Rational((iv.lo + iv.hi) / 2).get_d();
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) fail(ErrorCode::kInvalidArgument, "simplest rational of an empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_rational_between(-hi, -lo);
  Integer whole;
  mpz_cdiv_q(whole.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(whole) <= hi) return Rational(whole);
  mpz_fdiv_q(whole.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  // lo and hi share the integer part; recurse on the reciprocal fractional parts.
  return whole + 1 / simplest_rational_between(1 / (hi - whole), 1 / (lo - whole));
}

AlgebraicReal root_of(const UnivariatePolynomial& p, const IsolatingInterval& interval) {
  const UnivariatePolynomial sqf = square_free_part(p);
  // A rational root a/b of the primitive integer multiple has b | lead, and an
  // interval narrower than 1 / (2 lead^2) holds no other fraction of
  // denominator <= lead.
  Integer common = 1;
  for (const auto& c : sqf.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  const Rational lead = abs(sqf.leading() * common);
  const IsolatingInterval narrow = refine_root(sqf, interval, 1 / (2 * lead * lead));
  const Rational candidate = simplest_rational_between(narrow.lo, narrow.hi);
  if (sqf.sign_at(candidate) == 0 && interval.contains(candidate)) return AlgebraicReal::from_rational(candidate);
  return AlgebraicReal(sqf, interval);
}

std::string AlgebraicReal::describe() const {
  if (auto exact = as_rational()) return to_string(*exact);
  std::ostringstream os;
  os << "root of " << to_string(defining_, "t") << " in (" << to_string(interval_.lo) << ", "
     << to_string(interval_.hi) << "]";
  return os.str();
}

AlgebraicElement::AlgebraicElement(UnivariatePolynomial value, const AlgebraicReal* base)
    : value_(remainder(value, base->defining())), base_(base) {}

AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b) {
  return AlgebraicElement(a.value_ + b.value_, a.base_);
}

AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b) {
  return AlgebraicElement(a.value_ - b.value_, a.base_);
}

AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b) {
  return AlgebraicElement(a.value_ * b.value_, a.base_);
}

QuadraticField::QuadraticField(const Rational& radicand) : d_(radicand) {
  if (sgn(d_) <= 0 || is_rational_square(d_)) {
    fail(ErrorCode::kInvalidArgument, "quadratic extension needs a positive non-square radicand");
  }
}

int QuadraticField::sign(const Elem& e) const {
  const int sa = sgn(e.a);
  const int sb = sgn(e.b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d (never equal since d is no square).
  return e.a * e.a > e.b * e.b * d_ ? sa : sb;
}

double QuadraticField::approximate(const Elem& e) const {
  return e.a.get_d() + e.b.get_d() * std::sqrt(d_.get_d());
}

}  // namespace hesslab
