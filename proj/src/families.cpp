#include "hesslab/families.hpp"

#include <json.hpp>

#include "hesslab/error.hpp"
#include "hesslab/realroots.hpp"

namespace hesslab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Polynomial radius_squared() {
  return Polynomial::x() * Polynomial::x() + Polynomial::y() * Polynomial::y();
}

// sum_j w_j prod_{i != j} factors_i
template <class P>
P sum_of_cofactors(const std::vector<P>& factors, const std::vector<Rational>& weights) {
  P total;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    P product(Rational(weights[j]));
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i != j) product = product * factors[i];
    }
    total = total + product;
  }
  return total;
}

// sum_j w_j sum_{l != j} w_l prod_{i != j, l} factors_i
template <class P>
P sum_of_double_cofactors(const std::vector<P>& factors, const std::vector<Rational>& weights) {
  P total;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    for (std::size_t l = 0; l < factors.size(); ++l) {
      if (l == j) continue;
      P product(Rational(weights[j] * weights[l]));
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i != j && i != l) product = product * factors[i];
      }
      total = total + product;
    }
  }
  return total;
}

Rational json_rational(const nlohmann::json& value, const std::string& field) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  fail(ErrorCode::kParse, "field '" + field + "' must be an integer or a \"p/q\" string");
}

std::vector<Rational> json_rational_list(const nlohmann::json& obj, const std::string& field) {
  std::vector<Rational> out;
  if (!obj.contains(field)) return out;
  if (!obj.at(field).is_array()) fail(ErrorCode::kParse, "field '" + field + "' must be an array");
  for (const auto& item : obj.at(field)) out.push_back(json_rational(item, field));
  return out;
}

nlohmann::ordered_json rational_list_json(const std::vector<Rational>& values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

void validate(const OuterOvalParams& params) {
  if (params.a == params.b) fail(ErrorCode::kInvalidArgument, "requires a != b");
  for (std::size_t i = 0; i < params.a_list.size(); ++i) {
    const bool ordered = i == 0 ? params.a_list[i] < 0 : params.a_list[i] < params.a_list[i - 1];
    if (!ordered) fail(ErrorCode::kInvalidArgument, "requires a_m < ... < a_1 < 0");
  }
  for (std::size_t j = 0; j < params.b_list.size(); ++j) {
    const bool ordered = j == 0 ? params.b_list[j] > 0 : params.b_list[j] > params.b_list[j - 1];
    if (!ordered) fail(ErrorCode::kInvalidArgument, "requires 0 < b_1 < ... < b_n");
  }
}

void validate(const EvenCircleParams& params) {
  if (params.radii.empty()) fail(ErrorCode::kInvalidArgument, "requires at least one radius (n >= 1)");
  for (std::size_t i = 0; i < params.radii.size(); ++i) {
    const bool ordered = i == 0 ? params.radii[i] > 0 : params.radii[i] > params.radii[i - 1];
    if (!ordered) fail(ErrorCode::kInvalidArgument, "requires 0 < m_1 < m_2 < ... < m_n");
  }
}

void validate(const OddCircleParams& params) {
  if (params.n < 1) fail(ErrorCode::kInvalidArgument, "requires n >= 1");
}

void validate(const FamilySpec& spec) {
  std::visit([](const auto& p) { validate(p); }, spec);
}

std::string family_name(const FamilySpec& spec) {
  return std::visit(Overloaded{[](const OuterOvalParams&) { return std::string("outer"); },
                               [](const EvenCircleParams&) { return std::string("even"); },
                               [](const OddCircleParams&) { return std::string("odd"); }},
                    spec);
}

FamilySpec family_from_json(const std::string& text) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("family instance is not valid JSON: ") + e.what());
  }
  if (!obj.is_object() || !obj.contains("family") || !obj.at("family").is_string()) {
    fail(ErrorCode::kParse, "family instance needs a string field 'family'");
  }
  const std::string family = obj.at("family").get<std::string>();
  FamilySpec spec;
  if (family == "outer") {
    if (!obj.contains("a") || !obj.contains("b")) fail(ErrorCode::kParse, "outer family needs 'a' and 'b'");
    spec = OuterOvalParams{json_rational(obj.at("a"), "a"), json_rational(obj.at("b"), "b"),
                           json_rational_list(obj, "a_list"), json_rational_list(obj, "b_list")};
  } else if (family == "even") {
    spec = EvenCircleParams{json_rational_list(obj, "radii")};
  } else if (family == "odd") {
    if (!obj.contains("n") || !obj.at("n").is_number_integer()) {
      fail(ErrorCode::kParse, "odd family needs an integer 'n'");
    }
    spec = OddCircleParams{obj.at("n").get<int>()};
  } else {
    fail(ErrorCode::kParse, "unknown family '" + family + "' (expected outer, even or odd)");
  }
  validate(spec);
  return spec;
}

std::string family_to_json(const FamilySpec& spec) {
  nlohmann::ordered_json obj;
  obj["family"] = family_name(spec);
  std::visit(Overloaded{[&](const OuterOvalParams& p) {
                          obj["a"] = to_string(p.a);
                          obj["b"] = to_string(p.b);
                          obj["a_list"] = rational_list_json(p.a_list);
                          obj["b_list"] = rational_list_json(p.b_list);
                        },
                        [&](const EvenCircleParams& p) { obj["radii"] = rational_list_json(p.radii); },
                        [&](const OddCircleParams& p) { obj["n"] = p.n; }},
             spec);
  return obj.dump();
}

std::vector<ArrangementLine> arrangement_lines(const OuterOvalParams& params) {
  std::vector<ArrangementLine> lines;
  const Polynomial x = Polynomial::x();
  const Polynomial y = Polynomial::y();
  lines.push_back({"y = a*x", y - x * params.a, {0, 0}, {1, params.a}});
  lines.push_back({"y = b*x", y - x * params.b, {0, 0}, {1, params.b}});
  for (int i = 0; i < params.m(); ++i) {
    const Rational& ai = params.a_list[i];
    lines.push_back({"x = a_" + std::to_string(i + 1), x - Polynomial(ai), {ai, 0}, {0, 1}});
  }
  for (int j = 0; j < params.n(); ++j) {
    const Rational& bj = params.b_list[j];
    lines.push_back({"x = b_" + std::to_string(j + 1), x - Polynomial(bj), {bj, 0}, {0, 1}});
  }
  return lines;
}

Polynomial build_outer_oval(const OuterOvalParams& params) {
  validate(params);
  Polynomial f(1);
  for (const auto& line : arrangement_lines(params)) f *= line.equation;
  return f;
}

Polynomial build_even_circles(const EvenCircleParams& params) {
  validate(params);
  const Polynomial r = radius_squared();
  Polynomial f(1);
  for (const auto& m : params.radii) f *= r - Polynomial(m * m);
  return f;
}

PlaneRationalFunction build_odd_circles(const OddCircleParams& params) {
  validate(params);
  const Polynomial r = radius_squared();
  const Polynomial shifted = r + Polynomial(1);
  Polynomial num(1);
  for (int k = 1; k <= params.n; ++k) num *= r - Polynomial(Rational(k * k));
  return make_rational_function(std::move(num), pow(shifted, params.n), {shifted});
}

SurfaceFunction build_surface(const FamilySpec& spec) {
  return std::visit(
      Overloaded{[](const OuterOvalParams& p) { return SurfaceFunction{build_outer_oval(p)}; },
                 [](const EvenCircleParams& p) { return SurfaceFunction{build_even_circles(p)}; },
                 [](const OddCircleParams& p) { return SurfaceFunction{build_odd_circles(p)}; }},
      spec);
}

GoodPositionResult check_good_position(const OuterOvalParams& params) {
  validate(params);
  const auto lines = arrangement_lines(params);
  GoodPositionResult result;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    Polynomial others(1);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i != k) others *= lines[i].equation;
    }
    const auto& line = lines[k];
    const UnivariatePolynomial fx =
        restrict_to_line(partial_derivative(others, Variable::kX), line.base, line.direction);
    const UnivariatePolynomial fy =
        restrict_to_line(partial_derivative(others, Variable::kY), line.base, line.direction);
    const UnivariatePolynomial x_of(std::vector<Rational>{line.base.x, line.direction.x});
    const UnivariatePolynomial y_of(std::vector<Rational>{line.base.y, line.direction.y});
    const UnivariatePolynomial common = gcd(fx, fy);
    if (common.is_zero()) {
      // Gradient vanishes along the whole line.
      result.failures.push_back({line.label, {AlgebraicReal::from_rational(0), x_of, y_of}});
      continue;
    }
    if (common.degree() < 1) continue;
    const auto roots = isolate_roots(common);
    if (roots.empty()) continue;
    result.failures.push_back({line.label, {AlgebraicReal(common, roots.front()), x_of, y_of}});
  }
  result.ok = result.failures.empty();
  return result;
}

AlphaBeta shifted_alpha_beta(const OuterOvalParams& params) {
  const Polynomial hess = hessian_poly(build_outer_oval(params));
  const Rational slope = (params.a + params.b) / 2;
  // y -> u + slope * x, with u written as y.
  const Polynomial shifted =
      substitute(hess, Polynomial::x(), Polynomial::y() + Polynomial::x() * slope);
  std::vector<std::vector<Rational>> by_power;
  for (const auto& [e, c] : shifted.terms()) {
    if (static_cast<int>(by_power.size()) <= e.y) by_power.resize(e.y + 1);
    auto& column = by_power[e.y];
    if (static_cast<int>(column.size()) <= e.x) column.resize(e.x + 1, Rational(0));
    column[e.x] = c;
  }
  for (std::size_t power = 0; power < by_power.size(); ++power) {
    if (power == 0 || power == 2) continue;
    if (!UnivariatePolynomial(by_power[power]).is_zero()) {
      fail(ErrorCode::kInternal, "shifted Hessian has a nonzero u^" + std::to_string(power) +
                                     " coefficient; alpha/beta decomposition failed");
    }
  }
  by_power.resize(std::max<std::size_t>(by_power.size(), 3));
  return {UnivariatePolynomial(by_power[0]), UnivariatePolynomial(by_power[2]), slope};
}

UnivariatePolynomial arrangement_profile(const OuterOvalParams& params) {
  UnivariatePolynomial g = UnivariatePolynomial::identity();
  for (const auto& ai : params.a_list) g = g * UnivariatePolynomial::linear_root(ai);
  for (const auto& bj : params.b_list) g = g * UnivariatePolynomial::linear_root(bj);
  return g;
}

RadialPair radial_even(const EvenCircleParams& params) {
  validate(params);
  const int n = params.n();
  const std::vector<Rational> ones(n, Rational(1));
  const UnivariatePolynomial x2(std::vector<Rational>{0, 0, 1});
  const Polynomial r = radius_squared();
  std::vector<UnivariatePolynomial> uni;
  std::vector<Polynomial> bi;
  for (const auto& m : params.radii) {
    uni.push_back(x2 - UnivariatePolynomial(m * m));
    bi.push_back(r - Polynomial(m * m));
  }
  RadialPair out;
  out.s_tilde = sum_of_cofactors(uni, ones);
  out.t_tilde = out.s_tilde + x2 * sum_of_double_cofactors(uni, ones) * Rational(2);
  out.s = sum_of_cofactors(bi, ones);
  out.t = out.s + r * sum_of_double_cofactors(bi, ones) * Rational(2);
  if (lift_radial(out.s_tilde) != out.s || lift_radial(out.t_tilde) != out.t) {
    fail(ErrorCode::kInternal, "radial lift of s~, t~ disagrees with s, t");
  }
  if (out.s * out.t * Rational(4) != hessian_poly(build_even_circles(params))) {
    fail(ErrorCode::kInternal, "identity Hess f = 4 s t fails");
  }
  return out;
}

RadialPair radial_odd(const OddCircleParams& params) {
  validate(params);
  const int n = params.n;
  std::vector<Rational> weights;
  const UnivariatePolynomial x2(std::vector<Rational>{0, 0, 1});
  const Polynomial r = radius_squared();
  std::vector<UnivariatePolynomial> uni;
  std::vector<Polynomial> bi;
  for (int k = 1; k <= n; ++k) {
    weights.emplace_back(k * k + 1);
    uni.push_back(x2 - UnivariatePolynomial(Rational(k * k)));
    bi.push_back(r - Polynomial(Rational(k * k)));
  }
  RadialPair out;
  out.denominator_exponent = 2 * n + 3;
  out.s_tilde = sum_of_cofactors(uni, weights);
  out.t_tilde = (UnivariatePolynomial(Rational(1)) - x2 * Rational(3)) * out.s_tilde +
                x2 * sum_of_double_cofactors(uni, weights) * Rational(2);
  out.s = sum_of_cofactors(bi, weights);
  out.t = (Polynomial(1) - r * Rational(3)) * out.s + r * sum_of_double_cofactors(bi, weights) * Rational(2);
  if (lift_radial(out.s_tilde) != out.s || lift_radial(out.t_tilde) != out.t) {
    fail(ErrorCode::kInternal, "radial lift of s~, t~ disagrees with s, t");
  }
  const PlaneRationalFunction hess = hessian_rational(build_odd_circles(params));
  const Polynomial lhs = hess.num * pow(r + Polynomial(1), out.denominator_exponent);
  const Polynomial rhs = out.s * out.t * hess.den * Rational(4);
  if (lhs != rhs) {
    fail(ErrorCode::kInternal, "identity Hess f = 4 s t / (x^2 + y^2 + 1)^(2n+3) fails");
  }
  return out;
}

Polynomial hessian_curve_polynomial(const FamilySpec& spec) {
  return std::visit(
      Overloaded{[](const OuterOvalParams& p) { return hessian_poly(build_outer_oval(p)); },
                 [](const EvenCircleParams& p) { return hessian_poly(build_even_circles(p)); },
                 [](const OddCircleParams& p) { return hessian_rational(build_odd_circles(p)).num; }},
      spec);
}

}  // namespace hesslab
