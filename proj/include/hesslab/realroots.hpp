#pragma once

#include <optional>
#include <vector>

#include "hesslab/polynomial.hpp"

namespace hesslab {

/// Half-open interval (lo, hi] holding exactly one distinct real root of the
/// polynomial it was computed for. Endpoints are never roots.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  bool multiplicity_one = true;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& value) const { return lo < value && value <= hi; }
};

// Unset bounds stand for -infinity / +infinity.
using Bound = std::optional<Rational>;

// All real roots lie in (-B, B) with B = 1 + max |c_i| / |lead|.
Rational cauchy_bound(const UnivariatePolynomial& p);

class SturmSequence {
 public:
  // Built on the square-free part of p.
  explicit SturmSequence(const UnivariatePolynomial& p);

  int variations_at(const Rational& at) const;
  // Distinct real roots in (lo, hi].
  int count(const Bound& lo, const Bound& hi) const;
  const UnivariatePolynomial& square_free() const { return chain_.front(); }
  const Rational& bound() const { return bound_; }

 private:
  std::vector<UnivariatePolynomial> chain_;
  Rational bound_;
};

int sturm_count(const UnivariatePolynomial& p, const Bound& lo = std::nullopt,
                const Bound& hi = std::nullopt);

std::vector<IsolatingInterval> isolate_roots(const UnivariatePolynomial& p);

IsolatingInterval refine_root(const UnivariatePolynomial& p, const IsolatingInterval& interval,
                              const Rational& width);

// Positive roots of p, each with its interval.
std::vector<IsolatingInterval> positive_roots(const UnivariatePolynomial& p);

}  // namespace hesslab
