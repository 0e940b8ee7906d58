#include <doctest.h>

#include <nlohmann/json.hpp>

#include "hesslab/calculus.hpp"
#include "hesslab/certify.hpp"
#include "hesslab/error.hpp"
#include "hesslab/families.hpp"
#include "hesslab/topology.hpp"
#include "support/oracles.hpp"

using namespace hesslab;

namespace {

Polynomial P(const char* text) { return parse_polynomial(text); }

const Claim& claim(const TheoremReport& r, const std::string& id) {
  for (const auto& c : r.claims)
    if (c.id == id) return c;
  FAIL("missing claim " << id);
  return r.claims.front();
}

// Hess((f o T) / J) and (Hess f) o T through the dense oracle.
bool affine_oracle(const Polynomial& f, const AffineMap2& map) {
  const auto& l = map.linear();
  const auto& t = map.translation();
  Polynomial X = Polynomial::monomial(l[0], 1, 0) + Polynomial::monomial(l[1], 0, 1) + Polynomial(t[0]);
  Polynomial Y = Polynomial::monomial(l[2], 1, 0) + Polynomial::monomial(l[3], 0, 1) + Polynomial(t[1]);
  auto compose = [&](const Polynomial& p) {
    oracle::Dense out, dx = oracle::Dense::from(X), dy = oracle::Dense::from(Y);
    for (const auto& [e, c] : p.terms()) {
      oracle::Dense term = oracle::Dense::from(Polynomial(c));
      for (int k = 0; k < e.x; ++k) term = term * dx;
      for (int k = 0; k < e.y; ++k) term = term * dy;
      out = out + term;
    }
    return out.to_poly();
  };
  return oracle::hessian(compose(f) * (1 / map.jacobian())) == compose(oracle::hessian(f));
}

}  // namespace

TEST_CASE("theorem 1 reports") {
  TheoremReport r = verify_theorem1({1, -1, {-1}, {1}});
  CHECK(r.overall);
  CHECK(r.claims.size() == 7);
  CHECK(claim(r, "outer_ovals").observed == 2);
  CHECK(claim(r, "special_point_total").observed == 6);
  CHECK(claim(r, "vertical_tangencies").observed == 4);
  CHECK(claim(r, "outer_ovals").resolution == 128);
  for (const auto& c : r.claims) CHECK(c.pass);

  TheoremReport quad = verify_theorem1({3, Rational(-1, 2), {}, {}});
  CHECK(quad.overall);
  CHECK(claim(quad, "outer_ovals").observed == 0);
  CHECK(claim(quad, "special_point_total").observed == 0);
  CHECK(hessian_poly(build_outer_oval({3, Rational(-1, 2), {}, {}})).is_constant());

  TheoremReport three = verify_theorem1({1, -1, {-1, -2}, {1}});
  CHECK(three.overall);
  CHECK(claim(three, "outer_ovals").observed == 3);
  CHECK(claim(three, "special_point_total").observed == 9);
  CHECK(claim(three, "vertical_tangencies").observed == 2 * claim(three, "outer_ovals").observed.get<int>());
}

TEST_CASE("theorem 1 refuses arrangements out of good position") {
  try {
    verify_theorem1({1, -1, {-2, -3}, {}});
    FAIL("expected a good-position error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kGoodPosition);
    CHECK(std::string(e.what()).find("(-2, 0)") != std::string::npos);
  }
}

TEST_CASE("theorem 2 reports") {
  TheoremReport one = verify_theorem2({{1}});
  CHECK(one.overall);
  CHECK(claim(one, "circles").expected == 0);
  CHECK(claim(one, "circles").observed == 0);
  TheoremReport two = verify_theorem2({{1, 2}});
  CHECK(two.overall);
  CHECK(claim(two, "circles").observed == 2);
  TheoremReport three = verify_theorem2({{1, 2, 3}});
  CHECK(three.overall);
  CHECK(claim(three, "circles").observed == 4);
  CHECK(claim(three, "far_field").observed == "Elliptic");
}

TEST_CASE("theorem 3 reports") {
  for (int n = 1; n <= 3; ++n) {
    TheoremReport r = verify_theorem3({n});
    CHECK(r.overall);
    CHECK(claim(r, "circles").observed == 2 * n - 1);
    CHECK(claim(r, "far_field").observed == "Hyperbolic");
  }
}

TEST_CASE("report JSON") {
  TheoremReport r = verify_theorem2({{1, 2}});
  auto j = nlohmann::json::parse(r.to_json(true));
  CHECK(j.contains("timings"));
  auto plain = nlohmann::ordered_json::parse(r.to_json(false));
  CHECK_FALSE(plain.contains("timings"));
  std::vector<std::string> keys;
  for (auto it = plain.begin(); it != plain.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"theorem", "family", "claims", "overall", "notes"});
  for (const auto& c : plain["claims"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("observed"));
    CHECK(c.contains("method"));
    CHECK(c.contains("pass"));
    if (c["method"] == "traced") CHECK(c.contains("resolution"));
  }
  bool overall = true;
  for (const auto& c : plain["claims"]) overall = overall && c["pass"].get<bool>();
  CHECK(plain["overall"].get<bool>() == overall);
}

TEST_CASE("reports are deterministic") {
  VerifyOptions options;
  options.seed = 42;
  CHECK(verify_theorem1({1, -1, {-1}, {1}}, options).to_json(false) ==
        verify_theorem1({1, -1, {-1}, {1}}, options).to_json(false));
  options.threads = 1;
  std::string serial = verify_theorem3({2}, options).to_json(false);
  options.threads = 4;
  CHECK(verify_theorem3({2}, options).to_json(false) == serial);
  options.seed = 43;
  CHECK(verify_theorem1({1, -1, {-1}, {1}}, options).overall);
}

TEST_CASE("affine invariance examples") {
  CHECK(verify_affine_invariance(P("x^2+y^2"), AffineMap2::identity()));
  AffineMap2 stretch({2, 0, 0, 1}, {0, 0});
  CHECK(verify_affine_invariance(P("x^2+y^2"), stretch));
  CHECK(hessian_poly(compose_affine(P("x^2+y^2"), stretch) * Rational(1, 2)) == P("4"));
  AffineMap2 shear({1, 1, 0, 1}, {0, 1});
  CHECK(verify_affine_invariance(P("x*y"), shear));
  CHECK(hessian_poly(compose_affine(P("x*y"), shear)) == P("-1"));
}

TEST_CASE("property: affine invariance") {
  oracle::Random rng(4);
  int done = 0;
  while (done < 100) {
    std::array<Rational, 4> m{rng.rational(3, 4), rng.rational(3, 4), rng.rational(3, 4), rng.rational(3, 4)};
    Rational j = abs(m[0] * m[3] - m[1] * m[2]);
    if (j < Rational(1, 4) || j > 4) continue;
    AffineMap2 map(m, {rng.rational(), rng.rational()});
    Polynomial f = rng.polynomial(6, 6);
    CHECK(verify_affine_invariance(f, map));
    if (done % 10 == 0) CHECK(affine_oracle(f, map));
    ++done;
  }
}

TEST_CASE("property: affine images of Hessian curves trace alike") {
  OuterOvalParams params{1, -1, {-1, -2}, {1}};
  Polynomial h = hessian_curve_polynomial(params);
  Rectangle box = auto_bbox(params);
  TraceResult base = trace_curve(h, box);
  AffineMap2 map({2, 1, 0, 1}, {1, -1});
  // T(C) is the zero set of h o T^-1; its box covers the image of the corners.
  Polynomial image = compose_affine(h, map.inverse());
  Rational xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& cx : {box.xmin, box.xmax})
    for (const auto& cy : {box.ymin, box.ymax}) {
      RationalPoint p = map.apply({cx, cy});
      if (first || p.x < xmin) xmin = p.x;
      if (first || p.x > xmax) xmax = p.x;
      if (first || p.y < ymin) ymin = p.y;
      if (first || p.y > ymax) ymax = p.y;
      first = false;
    }
  TraceResult moved = trace_curve(image, {xmin, xmax, ymin, ymax}, {256, 6, 0});
  CHECK(count_components(moved) == count_components(base));
  CHECK(nesting_forest(moved.components).edge_count() == nesting_forest(base.components).edge_count());
}
