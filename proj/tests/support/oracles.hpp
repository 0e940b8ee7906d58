// Independent reference implementations used to check the library. Nothing
// here calls library algorithms; Polynomial is only read as a term list or
// built term by term.
#pragma once

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "hesslab/polynomial.hpp"

namespace oracle {

using hesslab::Polynomial;
using hesslab::Rational;

inline Rational power(const Rational& base, int exponent) {
  Rational out = 1;
  for (int k = 0; k < exponent; ++k) out *= base;
  return out;
}

// Dense bivariate polynomial keyed by (i, j), naive schoolbook arithmetic.
struct Dense {
  std::map<std::pair<int, int>, Rational> c;

  static Dense from(const Polynomial& p) {
    Dense d;
    for (const auto& [e, v] : p.terms()) d.c[{e.x, e.y}] = v;
    return d;
  }
  Polynomial to_poly() const {
    Polynomial p;
    for (const auto& [e, v] : c)
      if (v != 0) p += Polynomial::monomial(v, e.first, e.second);
    return p;
  }
  Dense operator+(const Dense& o) const {
    Dense r = *this;
    for (const auto& [e, v] : o.c) r.c[e] += v;
    return r;
  }
  Dense operator-(const Dense& o) const {
    Dense r = *this;
    for (const auto& [e, v] : o.c) r.c[e] -= v;
    return r;
  }
  Dense operator*(const Dense& o) const {
    Dense r;
    for (const auto& [e1, v1] : c)
      for (const auto& [e2, v2] : o.c) r.c[{e1.first + e2.first, e1.second + e2.second}] += v1 * v2;
    return r;
  }
  Dense dx() const {
    Dense r;
    for (const auto& [e, v] : c)
      if (e.first > 0) r.c[{e.first - 1, e.second}] += v * e.first;
    return r;
  }
  Dense dy() const {
    Dense r;
    for (const auto& [e, v] : c)
      if (e.second > 0) r.c[{e.first, e.second - 1}] += v * e.second;
    return r;
  }
  Rational at(const Rational& x, const Rational& y) const {
    Rational s = 0;
    for (const auto& [e, v] : c) s += v * power(x, e.first) * power(y, e.second);
    return s;
  }
};

inline Polynomial hessian(const Polynomial& f) {
  Dense d = Dense::from(f);
  Dense fxx = d.dx().dx(), fyy = d.dy().dy(), fxy = d.dx().dy();
  return (fxx * fyy - fxy * fxy).to_poly();
}

// Hyper-dual numbers v + a e1 + b e2 + ab e1 e2 with e1^2 = e2^2 = 0; the
// e1 e2 part of f(x + e1 u + e2 w) is the second derivative along (u, w).
struct HyperDual {
  Rational v, a, b, ab;
  HyperDual operator+(const HyperDual& o) const { return {v + o.v, a + o.a, b + o.b, ab + o.ab}; }
  HyperDual operator*(const HyperDual& o) const {
    return {v * o.v, v * o.a + a * o.v, v * o.b + b * o.v, v * o.ab + a * o.b + b * o.a + ab * o.v};
  }
  HyperDual inverse() const {
    Rational iv = 1 / v;
    return {iv, -a * iv * iv, -b * iv * iv, -ab * iv * iv + 2 * a * b * iv * iv * iv};
  }
};

inline HyperDual eval(const Dense& p, const HyperDual& x, const HyperDual& y) {
  HyperDual s{0, 0, 0, 0};
  for (const auto& [e, v] : p.c) {
    HyperDual term{v, 0, 0, 0};
    for (int k = 0; k < e.first; ++k) term = term * x;
    for (int k = 0; k < e.second; ++k) term = term * y;
    s = s + term;
  }
  return s;
}

struct Second {
  Rational fxx, fxy, fyy;
  Rational hess() const { return fxx * fyy - fxy * fxy; }
};

// Second derivatives of num / den at (x, y); den defaults to 1.
inline Second second_derivatives(const Polynomial& num, const Polynomial& den, const Rational& x,
                                 const Rational& y) {
  Dense n = Dense::from(num), d = Dense::from(den);
  auto along = [&](const HyperDual& hx, const HyperDual& hy) {
    return (eval(n, hx, hy) * eval(d, hx, hy).inverse()).ab;
  };
  Second s;
  s.fxx = along({x, 1, 1, 0}, {y, 0, 0, 0});
  s.fyy = along({x, 0, 0, 0}, {y, 1, 1, 0});
  s.fxy = along({x, 1, 0, 0}, {y, 0, 1, 0});
  return s;
}

inline Second second_derivatives(const Polynomial& f, const Rational& x, const Rational& y) {
  return second_derivatives(f, Polynomial(Rational(1)), x, y);
}

// Coefficients of t -> p(base + t dir), expanded binomially.
inline std::vector<Rational> restrict_dense(const Polynomial& p, const Rational& bx, const Rational& by,
                                            const Rational& vx, const Rational& vy) {
  auto expand = [](const Rational& b, const Rational& v, int k) {
    std::vector<Rational> out(k + 1);
    Rational binom = 1;
    for (int i = 0; i <= k; ++i) {
      out[i] = binom * power(b, k - i) * power(v, i);
      binom = binom * (k - i) / (i + 1);
    }
    return out;
  };
  std::vector<Rational> h(p.degree() + 1 > 0 ? p.degree() + 1 : 1);
  for (const auto& [e, c] : p.terms()) {
    auto ux = expand(bx, vx, e.x), uy = expand(by, vy, e.y);
    for (size_t i = 0; i < ux.size(); ++i)
      for (size_t j = 0; j < uy.size(); ++j) h[i + j] += c * ux[i] * uy[j];
  }
  return h;
}

// Vanishing order at 0 of f(p + t v) minus its constant and linear terms; -1
// when that difference is identically zero.
inline int contact_order(const Polynomial& f, const Rational& px, const Rational& py, const Rational& vx,
                         const Rational& vy) {
  auto h = restrict_dense(f, px, py, vx, vy);
  for (size_t k = 2; k < h.size(); ++k)
    if (h[k] != 0) return static_cast<int>(k);
  return -1;
}

// Real squareness of a polynomial with terms of degree 2..4 by coefficient
// matching against (l1 x + l2 y + m20 x^2 + m11 xy + m02 y^2)^2, trying every
// sign branch of the square roots in floating point.
inline bool is_square_by_matching(const Polynomial& p) {
  auto co = [&](int i, int j) { return p.coefficient(i, j).get_d(); };
  auto roots = [](double v) {
    std::vector<double> r;
    if (v < -1e-12) return r;
    double s = std::sqrt(std::max(v, 0.0));
    r.push_back(s);
    if (s > 0) r.push_back(-s);
    return r;
  };
  const std::array<std::pair<int, int>, 12> keys{{{2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3},
                                                  {4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}}};
  double scale = 1;
  for (auto [i, j] : keys) scale = std::max(scale, std::abs(co(i, j)));
  for (double l1 : roots(co(2, 0)))
    for (double l2 : roots(co(0, 2)))
      for (double m20 : roots(co(4, 0)))
        for (double m02 : roots(co(0, 4))) {
          std::vector<double> m11s;
          if (m20 != 0) m11s.push_back(co(3, 1) / (2 * m20));
          if (m02 != 0) m11s.push_back(co(1, 3) / (2 * m02));
          for (double r : roots(co(2, 2))) m11s.push_back(r);
          for (double m11 : m11s) {
            std::map<std::pair<int, int>, double> sq;
            const std::array<std::pair<std::pair<int, int>, double>, 5> q{
                {{{1, 0}, l1}, {{0, 1}, l2}, {{2, 0}, m20}, {{1, 1}, m11}, {{0, 2}, m02}}};
            for (auto& [e1, c1] : q)
              for (auto& [e2, c2] : q) sq[{e1.first + e2.first, e1.second + e2.second}] += c1 * c2;
            bool match = true;
            for (auto [i, j] : keys)
              if (std::abs(sq[{i, j}] - co(i, j)) > 1e-9 * scale) match = false;
            if (match) return true;
          }
        }
  return false;
}

// Small random rationals for property tests.
struct Random {
  std::mt19937_64 engine;
  explicit Random(std::uint64_t seed) : engine(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
  Rational rational(int range = 9, int max_den = 5) {
    Rational r(integer(-range, range), integer(1, max_den));
    r.canonicalize();
    return r;
  }
  Rational nonzero(int range = 9, int max_den = 5) {
    Rational r = 0;
    while (r == 0) r = rational(range, max_den);
    return r;
  }
  Polynomial polynomial(int degree, int terms) {
    Polynomial p;
    for (int k = 0; k < terms; ++k) {
      int d = integer(0, degree);
      int i = integer(0, d);
      p += Polynomial::monomial(rational(), i, d - i);
    }
    return p;
  }
};

}  // namespace oracle
