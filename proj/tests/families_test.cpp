#include <doctest.h>

#include "hesslab/calculus.hpp"
#include "hesslab/error.hpp"
#include "hesslab/families.hpp"
#include "hesslab/realroots.hpp"
#include "support/oracles.hpp"

using namespace hesslab;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }
UnivariatePolynomial U(std::vector<Rational> c) { return UnivariatePolynomial(std::move(c)); }

std::string message_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

// Expanded straight from the product of linear factors with the dense oracle.
Polynomial outer_oracle(const OuterOvalParams& p) {
  oracle::Dense f = oracle::Dense::from(P("1"));
  auto line = [](Rational cx, Rational cy, Rational c0) {
    oracle::Dense d;
    d.c[{1, 0}] = cx;
    d.c[{0, 1}] = cy;
    d.c[{0, 0}] = c0;
    return d;
  };
  f = f * line(-p.a, 1, 0) * line(-p.b, 1, 0);
  for (const auto& a : p.a_list) f = f * line(1, 0, -a);
  for (const auto& b : p.b_list) f = f * line(1, 0, -b);
  return f.to_poly();
}

OuterOvalParams random_outer(oracle::Random& rng) {
  OuterOvalParams p;
  p.a = rng.nonzero(3, 3);
  do p.b = rng.nonzero(3, 3);
  while (p.b == p.a);
  int m = rng.integer(0, 3), n = rng.integer(0, 3);
  Rational at = 0;
  for (int i = 0; i < m; ++i) p.a_list.push_back(at -= Rational(rng.integer(1, 6), rng.integer(1, 3)));
  at = 0;
  for (int j = 0; j < n; ++j) p.b_list.push_back(at += Rational(rng.integer(1, 6), rng.integer(1, 3)));
  return p;
}

}  // namespace

TEST_CASE("outer-oval construction") {
  CHECK(build_outer_oval({1, -1, {}, {}}) == P("y^2-x^2"));
  CHECK(build_outer_oval({1, -1, {-1}, {1}}) == P("y^2-x^2") * P("x^2-1"));
  CHECK(build_outer_oval({1, -1, {-1, -2}, {1}}).degree() == 5);
  CHECK(message_of([] { validate(OuterOvalParams{1, -1, {-2, -1}, {}}); }).find("a_m < ... < a_1 < 0") !=
        std::string::npos);
  CHECK(message_of([] { validate(OuterOvalParams{1, -1, {}, {0}}); }).find("0 < b_1") != std::string::npos);
  CHECK_THROWS_AS(validate(OuterOvalParams{1, 1, {}, {}}), Error);
  oracle::Random rng(12);
  for (int k = 0; k < 20; ++k) {
    OuterOvalParams p = random_outer(rng);
    Polynomial f = build_outer_oval(p);
    CHECK(f == outer_oracle(p));
    CHECK(f.degree() == p.m() + p.n() + 2);
  }
}

TEST_CASE("good position") {
  CHECK(check_good_position({1, -1, {-1}, {1}}).ok);
  CHECK(check_good_position({1, -1, {}, {}}).ok);
  CHECK(check_good_position({3, Rational(-1, 2), {}, {}}).ok);
  auto bad = check_good_position({1, -1, {-2, -3}, {}});
  REQUIRE_FALSE(bad.ok);
  REQUIRE(bad.failures.size() >= 1);
  const auto& w = bad.failures.front();
  CHECK(w.line == "x = a_1");
  auto x = w.witness.theta.as_rational();
  REQUIRE(x.has_value());
  CHECK(w.witness.x.evaluate(*x) == -2);
  CHECK(w.witness.y.evaluate(*x) == 0);
  // Both partials of the other lines' product vanish there.
  oracle::Dense rest = oracle::Dense::from(P("y^2-x^2") * P("x+3"));
  CHECK(rest.dx().at(-2, 0) == 0);
  CHECK(rest.dy().at(-2, 0) == 0);
}

TEST_CASE("shifted alpha and beta") {
  AlphaBeta ab = shifted_alpha_beta({1, -1, {-1}, {1}});
  CHECK(ab.alpha.degree() == 4);
  CHECK(ab.alpha == U({-4, 0, 28, 0, -24}));
  CHECK(ab.beta == U({-4, 0, -12}));
  CHECK(sturm_count(ab.alpha) == 4);
  AlphaBeta quad = shifted_alpha_beta({3, Rational(1, 2), {}, {}});
  CHECK(quad.alpha == U({-(Rational(3) - Rational(1, 2)) * (Rational(3) - Rational(1, 2))}));
  CHECK(quad.beta.is_zero());

  oracle::Random rng(13);
  for (int k = 0; k < 20; ++k) {
    OuterOvalParams p = random_outer(rng);
    AlphaBeta r = shifted_alpha_beta(p);
    CHECK(r.alpha.degree() == 2 * (p.m() + p.n()));
    // beta u^2 + alpha agrees with the oracle Hessian along the shifted lines.
    Polynomial h = oracle::hessian(outer_oracle(p));
    for (int s = 0; s < 3; ++s) {
      Rational x = rng.rational(), u = rng.rational();
      CHECK(evaluate(h, x, u + r.shift_slope * x) == r.beta.evaluate(x) * u * u + r.alpha.evaluate(x));
    }
  }
}

TEST_CASE("even circles") {
  CHECK(build_even_circles({{1}}) == P("x^2+y^2-1"));
  CHECK(build_even_circles({{1, 2}}) == P("x^2+y^2-1") * P("x^2+y^2-4"));
  CHECK(build_even_circles({{1, 2, 3}}).degree() == 6);
  CHECK_THROWS_AS(build_even_circles({{2, 1}}), Error);
  CHECK_THROWS_AS(build_even_circles({{0, 1}}), Error);

  RadialPair one = radial_even({{1}});
  CHECK(one.s_tilde == U({1}));
  CHECK(one.t_tilde == U({1}));
  CHECK(hessian_poly(build_even_circles({{1}})) == P("4"));

  RadialPair two = radial_even({{1, 2}});
  CHECK(two.s_tilde == U({-5, 0, 2}));
  CHECK(two.t_tilde == U({-5, 0, 6}));
  CHECK(sturm_count(two.s_tilde, Rational(0), std::nullopt) == 1);
  CHECK(sturm_count(two.t_tilde, Rational(0), std::nullopt) == 1);

  for (int n = 1; n <= 5; ++n) {
    EvenCircleParams params;
    for (int i = 1; i <= n; ++i) params.radii.push_back(i);
    RadialPair r = radial_even(params);
    Polynomial f = build_even_circles(params);
    CHECK(oracle::hessian(f) == Rational(4) * r.s * r.t);
    CHECK(r.s == lift_radial(r.s_tilde));
    CHECK(gcd(r.s_tilde, r.t_tilde).degree() == 0);
    CHECK(sturm_count(r.s_tilde, Rational(0), std::nullopt) == n - 1);
    CHECK(sturm_count(r.t_tilde, Rational(0), std::nullopt) == n - 1);
  }
}

TEST_CASE("odd circles") {
  Polynomial r2 = P("x^2+y^2");
  auto f1 = build_odd_circles({1});
  CHECK(f1.num == r2 - P("1"));
  CHECK(f1.den == r2 + P("1"));
  auto f2 = build_odd_circles({2});
  CHECK(f2.num == (r2 - P("1")) * (r2 - P("4")));
  CHECK(f2.den == pow(r2 + P("1"), 2));
  CHECK(build_odd_circles({3}).den == pow(r2 + P("1"), 3));
  CHECK_THROWS_AS(build_odd_circles({0}), Error);

  RadialPair one = radial_odd({1});
  CHECK(one.s_tilde == U({2}));
  CHECK(one.t_tilde == U({2, 0, -6}));
  RadialPair two = radial_odd({2});
  CHECK(sturm_count(two.s_tilde, Rational(0), std::nullopt) == 1);
  CHECK(sturm_count(two.t_tilde, Rational(0), std::nullopt) == 2);
  CHECK(gcd(two.s_tilde, two.t_tilde).degree() == 0);

  oracle::Random rng(14);
  for (int n = 1; n <= 4; ++n) {
    auto f = build_odd_circles({n});
    RadialPair r = radial_odd({n});
    CHECK(r.denominator_exponent == 2 * n + 3);
    CHECK(r.t_tilde.evaluate(Rational(n * n)) < 0);
    CHECK(gcd(r.s_tilde, r.t_tilde).degree() == 0);
    CHECK(sturm_count(r.s_tilde, Rational(0), std::nullopt) == n - 1);
    CHECK(sturm_count(r.t_tilde, Rational(0), std::nullopt) == n);
    // Hess f from hyper-dual second derivatives against 4 s t / (r^2 + 1)^(2n+3).
    for (int s = 0; s < 5; ++s) {
      Rational x = rng.rational(), y = rng.rational();
      Rational hess = oracle::second_derivatives(f.num, f.den, x, y).hess();
      Rational d = oracle::power(x * x + y * y + 1, 2 * n + 3);
      CHECK(hess * d == 4 * evaluate(r.s, x, y) * evaluate(r.t, x, y));
    }
  }
}

TEST_CASE("instance JSON") {
  FamilySpec spec = family_from_json(R"({"family":"outer","a":"1","b":"-1","a_list":["-1"],"b_list":["1/2"]})");
  auto& p = std::get<OuterOvalParams>(spec);
  CHECK(p.b_list.front() == Rational(1, 2));
  CHECK(family_to_json(family_from_json(family_to_json(spec))) == family_to_json(spec));
  CHECK(std::get<EvenCircleParams>(family_from_json(R"({"family":"even","radii":["1","2"]})")).n() == 2);
  CHECK(std::get<OddCircleParams>(family_from_json(R"({"family":"odd","n":3})")).n == 3);
  CHECK_THROWS_AS(family_from_json(R"({"family":"even","radii":["0.5"]})"), Error);
  CHECK_THROWS_AS(family_from_json(R"({"family":"cubic"})"), Error);
  CHECK_THROWS_AS(family_from_json("{"), Error);
}
