#include "hesslab/realroots.hpp"

#include <algorithm>

#include "hesslab/error.hpp"

namespace hesslab {

Rational cauchy_bound(const UnivariatePolynomial& p) {
  if (p.is_zero()) fail(ErrorCode::kInvalidArgument, "root bound of the zero polynomial");
  const Rational lead = abs(p.leading());
  Rational largest = 0;
  for (int k = 0; k < p.degree(); ++k) largest = std::max(largest, Rational(abs(p.coefficients()[k])));
  return 1 + largest / lead;
}

SturmSequence::SturmSequence(const UnivariatePolynomial& p) {
  if (p.is_zero()) fail(ErrorCode::kInvalidArgument, "Sturm sequence of the zero polynomial");
  chain_.push_back(square_free_part(p));
  if (chain_.front().degree() > 0) {
    chain_.push_back(chain_.front().derivative());
    for (;;) {
      UnivariatePolynomial next = -remainder(chain_[chain_.size() - 2], chain_.back());
      if (next.is_zero()) break;
      chain_.push_back(std::move(next));
    }
  }
  bound_ = cauchy_bound(chain_.front());
}

int SturmSequence::variations_at(const Rational& at) const {
  int changes = 0;
  int previous = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(at);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

int SturmSequence::count(const Bound& lo, const Bound& hi) const {
  if (lo && hi && !(*lo < *hi)) fail(ErrorCode::kInvalidArgument, "empty root-count interval");
  const int at_lo = variations_at(lo ? *lo : Rational(-bound_));
  const int at_hi = variations_at(hi ? *hi : bound_);
  return at_lo - at_hi;
}

int sturm_count(const UnivariatePolynomial& p, const Bound& lo, const Bound& hi) {
  return SturmSequence(p).count(lo, hi);
}

namespace {

// A point of (lo, hi) near the midpoint where the square-free part is nonzero.
Rational split_point(const UnivariatePolynomial& square_free, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  Rational step = (hi - lo) / 8;
  while (square_free.sign_at(mid) == 0) {
    mid += step;
    step /= 2;
  }
  return mid;
}

bool is_simple_on(const UnivariatePolynomial& p, const IsolatingInterval& iv) {
  const UnivariatePolynomial repeated = gcd(p, p.derivative());
  if (repeated.degree() <= 0) return true;
  return sturm_count(repeated, iv.lo, iv.hi) == 0;
}

}  // namespace

std::vector<IsolatingInterval> isolate_roots(const UnivariatePolynomial& p) {
  const SturmSequence sturm(p);
  const auto& sqf = sturm.square_free();
  std::vector<IsolatingInterval> out;
  if (sqf.degree() <= 0) return out;

  struct Pending {
    Rational lo;
    Rational hi;
    int count;
  };
  const Rational bound = sturm.bound();
  std::vector<Pending> stack{{-bound, bound, sturm.count(Rational(-bound), bound)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      out.push_back({cur.lo, cur.hi, true});
      continue;
    }
    const Rational mid = split_point(sqf, cur.lo, cur.hi);
    const int left = sturm.count(cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  for (auto& iv : out) iv.multiplicity_one = is_simple_on(p, iv);
  return out;
}

IsolatingInterval refine_root(const UnivariatePolynomial& p, const IsolatingInterval& interval,
                              const Rational& width) {
  if (sgn(width) <= 0) fail(ErrorCode::kInvalidArgument, "refinement width must be positive");
  if (!(interval.lo < interval.hi)) fail(ErrorCode::kInvalidArgument, "interval has lo >= hi");
  const UnivariatePolynomial sqf = square_free_part(p);
  const int sign_lo = sqf.sign_at(interval.lo);
  const int sign_hi = sqf.sign_at(interval.hi);
  if (sign_lo == 0 || sign_hi == 0 || sign_lo == sign_hi) {
    fail(ErrorCode::kPrecondition, "interval (" + to_string(interval.lo) + ", " +
                                       to_string(interval.hi) + "] does not isolate a root");
  }
  IsolatingInterval cur = interval;
  while (cur.width() > width) {
    const Rational mid = (cur.lo + cur.hi) / 2;
    const int s = sqf.sign_at(mid);
    if (s == 0) {
      // The root is mid itself and every other point of (lo, hi] is a non-root.
      const Rational half = width / 2;
      return {std::max(cur.lo, Rational(mid - half)), std::min(cur.hi, Rational(mid + half)),
              cur.multiplicity_one};
    }
    if (s == sign_lo) {
      cur.lo = mid;
    } else {
      cur.hi = mid;
    }
  }
  return cur;
}

std::vector<IsolatingInterval> positive_roots(const UnivariatePolynomial& p) {
  std::vector<IsolatingInterval> out;
  const UnivariatePolynomial sqf = square_free_part(p);
  for (auto iv : isolate_roots(p)) {
    if (iv.hi <= 0) continue;
    if (iv.lo < 0) {
      const int at_zero = sqf.sign_at(0);
      if (at_zero == 0) continue;  // the root is 0 itself
      if (at_zero == sqf.sign_at(iv.hi)) continue;  // root lies in (lo, 0)
      iv.lo = 0;
    }
    out.push_back(iv);
  }
  return out;
}

}  // namespace hesslab
