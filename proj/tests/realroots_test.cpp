#include <doctest.h>

#include <algorithm>
#include <set>

#include "hesslab/algebraic.hpp"
#include "hesslab/error.hpp"
#include "hesslab/families.hpp"
#include "hesslab/realroots.hpp"
#include "support/oracles.hpp"

using namespace hesslab;

namespace {

UnivariatePolynomial U(std::vector<Rational> c) { return UnivariatePolynomial(std::move(c)); }

// prod (x - r_i)^{k_i} times (x^2 + c): distinct real roots are exactly r_i.
UnivariatePolynomial from_roots(const std::vector<Rational>& roots, const std::vector<int>& mult, const Rational& c) {
  UnivariatePolynomial p(Rational(1));
  for (size_t i = 0; i < roots.size(); ++i)
    for (int k = 0; k < mult[i]; ++k) p = p * UnivariatePolynomial::linear_root(roots[i]);
  if (c > 0) p = p * U({c, 0, 1});
  return p;
}

}  // namespace

TEST_CASE("Sturm counts") {
  CHECK(sturm_count(U({-1, 0, 1}), Rational(-2), Rational(2)) == 2);
  CHECK(sturm_count(U({-5, 0, 2}), Rational(0), std::nullopt) == 1);
  CHECK(sturm_count(pow(U({-1, 0, 1}), 2), Rational(-2), Rational(2)) == 2);
  // Half-open: the root at 1 counts on (0, 1] but not on (1, 2].
  CHECK(sturm_count(U({-1, 1}), Rational(0), Rational(1)) == 1);
  CHECK(sturm_count(U({-1, 1}), Rational(1), Rational(2)) == 0);
  CHECK_THROWS_AS(sturm_count(UnivariatePolynomial()), Error);
}

TEST_CASE("isolation") {
  auto two = isolate_roots(U({-2, 0, 1}));
  REQUIRE(two.size() == 2);
  auto neg = refine_root(U({-2, 0, 1}), two[0], Rational(1, 2));
  auto pos = refine_root(U({-2, 0, 1}), two[1], Rational(1, 2));
  CHECK(neg.lo >= -2);
  CHECK(neg.hi <= -1);
  CHECK(pos.lo >= 1);
  CHECK(pos.hi <= 2);
  auto six = isolate_roots(U({-5, 0, 6}));
  REQUIRE(six.size() == 2);
  auto fine = refine_root(U({-5, 0, 6}), six[1], Rational(1, 10000));
  CHECK(fine.lo < 0.9129);
  CHECK(fine.hi > 0.9128);
  CHECK(fine.lo * fine.lo < Rational(5, 6));
  CHECK(fine.hi * fine.hi >= Rational(5, 6));
  CHECK(isolate_roots(U({3})).empty());
  CHECK_THROWS_AS(isolate_roots(UnivariatePolynomial()), Error);
}

TEST_CASE("refinement") {
  auto sqrt2 = refine_root(U({-2, 0, 1}), {1, 2, true}, Rational(1, 1024));
  CHECK(sqrt2.width() <= Rational(1, 1024));
  CHECK(sqrt2.lo < 1.41421357);
  CHECK(sqrt2.hi > 1.41421356);
  auto third = refine_root(U({Rational(-1, 3), 1}), {0, 1, true}, Rational(1, 8));
  CHECK(third.contains(Rational(1, 3)));
  CHECK(third.width() <= Rational(1, 8));
  CHECK_THROWS_AS(refine_root(U({-2, 0, 1}), {2, 3, true}, Rational(1, 8)), Error);

  AlphaBeta ab = shifted_alpha_beta({1, -1, {-1}, {1}});
  auto roots = isolate_roots(ab.alpha);
  REQUIRE(roots.size() == 4);
  for (const auto& iv : roots) {
    auto r = refine_root(ab.alpha, iv, Rational(1, 1024));
    CHECK(r.width() <= Rational(1, 1024));
    CHECK(ab.alpha.sign_at(r.lo) * ab.alpha.sign_at(r.hi) < 0);
    CHECK(r.lo >= iv.lo);
    CHECK(r.hi <= iv.hi);
  }
}

TEST_CASE("rational recognition") {
  UnivariatePolynomial p = U({-5, 3}) * U({-3, 1}) * U({-2, 0, 1});
  std::set<std::string> found;
  for (const auto& iv : isolate_roots(p)) {
    AlgebraicReal r = root_of(p, iv);
    if (auto q = r.as_rational()) found.insert(to_string(*q));
    else CHECK(r.sign_of(U({-2, 0, 1})) == 0);
  }
  CHECK(found == std::set<std::string>{"5/3", "3"});
  CHECK(simplest_rational_between(Rational(1, 3), Rational(2, 3)) == Rational(1, 2));
  CHECK(simplest_rational_between(Rational(7, 5), Rational(3, 2)) == Rational(3, 2));
}

TEST_CASE("property: constructed roots are recovered") {
  oracle::Random rng(404);
  for (int k = 0; k < 50; ++k) {
    int count = rng.integer(0, 5);
    std::vector<Rational> roots;
    while (static_cast<int>(roots.size()) < count) {
      Rational r = rng.rational(9, 6);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    std::vector<int> mult;
    for (int i = 0; i < count; ++i) mult.push_back(rng.integer(1, 2));
    Rational c = rng.integer(0, 1) ? Rational(rng.integer(1, 9), rng.integer(1, 4)) : Rational(0);
    UnivariatePolynomial p = from_roots(roots, mult, c) * rng.nonzero();
    if (p.degree() < 0 || p.is_zero()) continue;
    auto ivs = isolate_roots(p);
    REQUIRE(static_cast<int>(ivs.size()) == count);
    CHECK(sturm_count(p) == count);
    for (const auto& r : roots) {
      int hits = 0;
      for (const auto& iv : ivs) hits += iv.contains(r);
      CHECK(hits == 1);
    }
    for (size_t i = 1; i < ivs.size(); ++i) CHECK(ivs[i - 1].hi <= ivs[i].lo);
  }
}

TEST_CASE("property: count matches isolation on random polynomials") {
  oracle::Random rng(77);
  for (int k = 0; k < 50; ++k) {
    int degree = rng.integer(1, 10);
    std::vector<Rational> c;
    for (int i = 0; i < degree; ++i) c.push_back(rng.rational());
    c.push_back(rng.nonzero());
    UnivariatePolynomial p(c);
    auto ivs = isolate_roots(p);
    CHECK(sturm_count(p) == static_cast<int>(ivs.size()));
    UnivariatePolynomial sf = square_free_part(p);
    for (const auto& iv : ivs) {
      CHECK(iv.lo < iv.hi);
      CHECK(sturm_count(p, iv.lo, iv.hi) == 1);
      auto r = refine_root(sf, iv, Rational(1, 1 << 20));
      CHECK(sf.sign_at(r.lo) * sf.sign_at(r.hi) < 0);
    }
    // Cauchy bound encloses every root.
    Rational b = cauchy_bound(p);
    CHECK(sturm_count(p, -b, b) == sturm_count(p));
  }
}
