#include "hesslab/calculus.hpp"

#include <sstream>

#include "hesslab/detail/jet_square.hpp"
#include "hesslab/error.hpp"

namespace hesslab {

std::string to_string(PointClass cls) {
  switch (cls) {
    case PointClass::kElliptic: return "Elliptic";
    case PointClass::kParabolic: return "Parabolic";
    case PointClass::kHyperbolic: return "Hyperbolic";
  }
  return "?";
}

std::string to_string(const Direction& direction) {
  if (const auto* r = std::get_if<RationalPoint>(&direction)) {
    return "(" + to_string(r->x) + ", " + to_string(r->y) + ")";
  }
  const auto& q = std::get<QuadraticDirection>(direction);
  return "(" + to_string(q.base_x) + (q.selector > 0 ? " + " : " - ") + "sqrt(" +
         to_string(q.radicand) + "), " + to_string(q.y) + ")";
}

std::string AlgebraicPoint::describe() const {
  if (auto exact = theta.as_rational()) {
    return "(" + to_string(x.evaluate(*exact)) + ", " + to_string(y.evaluate(*exact)) + ")";
  }
  std::ostringstream os;
  os << "(" << to_string(x, "t") << ", " << to_string(y, "t") << ") at t = " << theta.describe();
  return os.str();
}

Polynomial hessian_poly(const Polynomial& f) {
  const Polynomial fx = partial_derivative(f, Variable::kX);
  const Polynomial fy = partial_derivative(f, Variable::kY);
  const Polynomial fxx = partial_derivative(fx, Variable::kX);
  const Polynomial fxy = partial_derivative(fx, Variable::kY);
  const Polynomial fyy = partial_derivative(fy, Variable::kY);
  return fxx * fyy - fxy * fxy;
}

PlaneRationalFunction hessian_rational(const PlaneRationalFunction& f) {
  if (f.den.is_zero()) fail(ErrorCode::kInvalidArgument, "rational function with zero denominator");
  const Polynomial& n = f.num;
  const Polynomial& d = f.den;
  auto dx = [](const Polynomial& p) { return partial_derivative(p, Variable::kX); };
  auto dy = [](const Polynomial& p) { return partial_derivative(p, Variable::kY); };
  const Polynomial nx = dx(n), ny = dy(n), nxx = dx(nx), nxy = dy(nx), nyy = dy(ny);
  const Polynomial d_x = dx(d), d_y = dy(d), dxx = dx(d_x), dxy = dy(d_x), dyy = dy(d_y);
  const Polynomial d2 = d * d;
  // Second derivatives of n/d, each over d^3.
  const Polynomial pxx = nxx * d2 - (nx * d_x * d) * Rational(2) - n * dxx * d +
                         (n * d_x * d_x) * Rational(2);
  const Polynomial pyy = nyy * d2 - (ny * d_y * d) * Rational(2) - n * dyy * d +
                         (n * d_y * d_y) * Rational(2);
  const Polynomial pxy = nxy * d2 - nx * d_y * d - ny * d_x * d - n * dxy * d +
                         (n * d_x * d_y) * Rational(2);
  std::vector<Polynomial> factors = f.known_factors;
  factors.push_back(d);
  return rational_reduce(
      make_rational_function(pxx * pyy - pxy * pxy, pow(d2 * d, 2), std::move(factors)));
}

Polynomial taylor_jet(const SurfaceFunction& f, const RationalPoint& at, int order) {
  if (order < 0) fail(ErrorCode::kInvalidArgument, "negative jet order");
  auto truncate = [order](const Polynomial& p) {
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
      if (e.total() <= order) out.add_term(e, c);
    }
    return out;
  };
  if (const auto* poly = std::get_if<Polynomial>(&f)) return truncate(translate(*poly, at));

  const auto& rational = std::get<PlaneRationalFunction>(f);
  const Polynomial num = translate(rational.num, at);
  const Polynomial den = translate(rational.den, at);
  const Rational d0 = den.coefficient(0, 0);
  if (sgn(d0) == 0) {
    fail(ErrorCode::kPrecondition,
         "point (" + to_string(at.x) + ", " + to_string(at.y) + ") is a pole");
  }
  std::vector<Polynomial> den_parts;
  std::vector<Polynomial> quotient;
  for (int k = 0; k <= order; ++k) den_parts.push_back(homogeneous_part(den, k));
  Polynomial out;
  for (int k = 0; k <= order; ++k) {
    Polynomial part = homogeneous_part(num, k);
    for (int j = 1; j <= k; ++j) part -= den_parts[j] * quotient[k - j];
    part *= Rational(1 / d0);
    out += part;
    quotient.push_back(std::move(part));
  }
  return out;
}

namespace {

// Taylor coefficients T(i, j) = f^{(i,j)} / (i! j!) for i + j <= order.
template <class Elem>
class Jet {
 public:
  Jet(int order, const Elem& zero, bool complete)
      : order_(order), complete_(complete),
        data_(static_cast<std::size_t>((order + 1) * (order + 2) / 2), zero) {}

  int order() const { return order_; }
  bool complete() const { return complete_; }
  const Elem& at(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, Elem value) { data_[index(i, j)] = std::move(value); }

 private:
  static std::size_t index(int i, int j) {
    const int k = i + j;
    return static_cast<std::size_t>(k * (k + 1) / 2 + i);
  }
  int order_;
  bool complete_;
  std::vector<Elem> data_;
};

Jet<Rational> rational_jet(const SurfaceFunction& f, const RationalPoint& at, int order,
                           bool complete) {
  Jet<Rational> jet(order, Rational(0), complete);
  const Polynomial taylor = taylor_jet(f, at, order);
  for (const auto& [e, c] : taylor.terms()) jet.set(e.x, e.y, c);
  return jet;
}

int default_order(const SurfaceFunction& f, std::optional<int> cap) {
  if (const auto* poly = std::get_if<Polynomial>(&f)) return std::max(poly->degree(), 4);
  const auto& rational = std::get<PlaneRationalFunction>(f);
  return std::max(cap.value_or(std::max(rational.num.degree(), rational.den.degree()) + 1), 4);
}

bool is_polynomial(const SurfaceFunction& f) { return std::holds_alternative<Polynomial>(f); }

template <class Field>
ContactOrder contact_along(const Field& field, const Jet<typename Field::Elem>& jet,
                           const typename Field::Elem& d1, const typename Field::Elem& d2) {
  using Elem = typename Field::Elem;
  std::vector<Elem> p1{field.constant(1L)};
  std::vector<Elem> p2{field.constant(1L)};
  for (int k = 1; k <= jet.order(); ++k) {
    p1.push_back(p1.back() * d1);
    p2.push_back(p2.back() * d2);
  }
  for (int k = 2; k <= jet.order(); ++k) {
    Elem h = field.constant(0L);
    for (int i = 0; i <= k; ++i) h = h + jet.at(i, k - i) * p1[i] * p2[k - i];
    if (field.sign(h) != 0) return k;
  }
  return std::nullopt;
}

template <class Elem>
struct GenericCertificate {
  bool hessian_vanishes = false;
  bool gradient_nonzero = false;
  bool unique_direction = false;
  std::optional<std::pair<Elem, Elem>> direction;
  ContactOrder order;
  bool order_ge_4 = false;
  bool not_square = false;
  bool verdict = false;
};

template <class Field>
GenericCertificate<typename Field::Elem> certify_jet(const Field& field,
                                                     const Jet<typename Field::Elem>& t) {
  using Elem = typename Field::Elem;
  auto c = [&](long v) { return field.constant(v); };
  auto zero = [&](const Elem& e) { return field.sign(e) == 0; };
  GenericCertificate<Elem> out;

  const Elem a = c(2) * t.at(2, 0);
  const Elem b = t.at(1, 1);
  const Elem cc = c(2) * t.at(0, 2);
  out.hessian_vanishes = zero(a * cc - b * b);

  // Partial derivatives of Hess f = f_xx f_yy - f_xy^2 from the 3-jet.
  const Elem fxxx = c(6) * t.at(3, 0);
  const Elem fxxy = c(2) * t.at(2, 1);
  const Elem fxyy = c(2) * t.at(1, 2);
  const Elem fyyy = c(6) * t.at(0, 3);
  const Elem hx = fxxx * cc + a * fxyy - c(2) * b * fxxy;
  const Elem hy = fxxy * cc + a * fyyy - c(2) * b * fxyy;
  out.gradient_nonzero = !zero(hx) || !zero(hy);

  const bool form_zero = zero(a) && zero(b) && zero(cc);
  out.unique_direction = out.hessian_vanishes && !form_zero;
  if (out.unique_direction) {
    Elem d1 = c(0) - b;
    Elem d2 = a;
    if (zero(d1) && zero(d2)) {
      d1 = c(1);
      d2 = c(0);
    }
    out.order = contact_along(field, t, d1, d2);
    out.order_ge_4 = !out.order.has_value() || *out.order >= 4;
    out.direction.emplace(std::move(d1), std::move(d2));
  }

  detail::JetCoefficients<Elem> jet{
      {t.at(0, 2), t.at(1, 1), t.at(2, 0)},
      {t.at(0, 3), t.at(1, 2), t.at(2, 1), t.at(3, 0)},
      {t.at(0, 4), t.at(1, 3), t.at(2, 2), t.at(3, 1), t.at(4, 0)}};
  out.not_square = !detail::jet_is_square(field, jet, /*up_to_sign=*/true);
  out.verdict = out.hessian_vanishes && out.gradient_nonzero && out.unique_direction &&
                out.order_ge_4 && out.not_square;
  return out;
}

RationalPoint normalize_direction(const Rational& dx, const Rational& dy) {
  if (sgn(dx) != 0) return {1, dy / dx};
  return {0, 1};
}

template <class Elem>
void copy_common(const GenericCertificate<Elem>& g, SpecialPointCertificate& out) {
  out.hessian_vanishes = g.hessian_vanishes;
  out.hessian_gradient_nonzero = g.gradient_nonzero;
  out.contact_order = g.order;
  out.contact_order_ge_4 = g.order_ge_4;
  out.jet4_not_square = g.not_square;
  out.verdict = g.verdict;
}

}  // namespace

Rational hessian_value(const SurfaceFunction& f, const RationalPoint& at) {
  const Polynomial jet = taylor_jet(f, at, 2);
  return 4 * jet.coefficient(2, 0) * jet.coefficient(0, 2) - jet.coefficient(1, 1) * jet.coefficient(1, 1);
}

SecondForm second_form(const SurfaceFunction& f, const RationalPoint& at) {
  const Polynomial jet = taylor_jet(f, at, 2);
  return {2 * jet.coefficient(2, 0), jet.coefficient(1, 1), 2 * jet.coefficient(0, 2)};
}

PointClass classify_point(const SurfaceFunction& f, const RationalPoint& at) {
  const int s = sgn(second_form(f, at).discriminant());
  if (s < 0) return PointClass::kElliptic;
  if (s == 0) return PointClass::kParabolic;
  return PointClass::kHyperbolic;
}

AsymptoticDirections asymptotic_directions(const SurfaceFunction& f, const RationalPoint& at) {
  const SecondForm form = second_form(f, at);
  AsymptoticDirections out;
  if (sgn(form.a) == 0 && sgn(form.b) == 0 && sgn(form.c) == 0) {
    out.kind = AsymptoticDirections::Kind::kAll;
    return out;
  }
  const Rational disc = form.discriminant();
  if (sgn(disc) < 0) return out;
  if (sgn(disc) == 0) {
    out.kind = AsymptoticDirections::Kind::kOne;
    if (sgn(form.a) != 0 || sgn(form.b) != 0) {
      out.directions.emplace_back(normalize_direction(-form.b, form.a));
    } else {
      out.directions.emplace_back(RationalPoint{1, 0});
    }
    return out;
  }
  out.kind = AsymptoticDirections::Kind::kTwo;
  if (sgn(form.a) == 0) {
    // dy (2B dx + C dy) = 0.
    out.directions.emplace_back(RationalPoint{1, 0});
    out.directions.emplace_back(normalize_direction(form.c, -2 * form.b));
    return out;
  }
  // Directions (-B +- sqrt(disc), A).
  if (is_rational_square(disc)) {
    const Rational root = sqrt(disc.get_num()) / Rational(sqrt(disc.get_den()));
    out.directions.emplace_back(normalize_direction(-form.b + root, form.a));
    out.directions.emplace_back(normalize_direction(-form.b - root, form.a));
  } else {
    out.directions.emplace_back(QuadraticDirection{-form.b, 1, disc, form.a});
    out.directions.emplace_back(QuadraticDirection{-form.b, -1, disc, form.a});
  }
  return out;
}

ContactOrder contact_order(const SurfaceFunction& f, const RationalPoint& at,
                           const Direction& direction, std::optional<int> cap) {
  if (const auto* r = std::get_if<RationalPoint>(&direction); r && sgn(r->x) == 0 && sgn(r->y) == 0) {
    fail(ErrorCode::kInvalidArgument, "zero direction");
  }
  const int order = is_polynomial(f) ? std::get<Polynomial>(f).degree() : default_order(f, cap);
  if (order < 2) return std::nullopt;
  const Jet<Rational> jet = rational_jet(f, at, order, is_polynomial(f));
  if (const auto* r = std::get_if<RationalPoint>(&direction)) {
    return contact_along(RationalField{}, jet, r->x, r->y);
  }
  const auto& q = std::get<QuadraticDirection>(direction);
  const QuadraticField field(q.radicand);
  Jet<QuadraticElement> lifted(order, field.constant(0L), jet.complete());
  for (int k = 0; k <= order; ++k) {
    for (int i = 0; i <= k; ++i) lifted.set(i, k - i, field.constant(jet.at(i, k - i)));
  }
  const QuadraticElement d1 = field.constant(q.base_x) +
                              field.constant(Rational(q.selector)) * field.root();
  return contact_along(field, lifted, d1, field.constant(q.y));
}

SpecialPointCertificate certify_special_parabolic(const SurfaceFunction& f, const RationalPoint& at) {
  if (sgn(hessian_value(f, at)) != 0) {
    fail(ErrorCode::kPrecondition, "point (" + to_string(at.x) + ", " + to_string(at.y) +
                                       ") is not parabolic");
  }
  const int order = default_order(f, std::nullopt);
  const Jet<Rational> jet = rational_jet(f, at, order, is_polynomial(f));
  const auto generic = certify_jet(RationalField{}, jet);
  SpecialPointCertificate out;
  out.point = "(" + to_string(at.x) + ", " + to_string(at.y) + ")";
  out.rational_point = at;
  copy_common(generic, out);
  if (generic.direction) {
    const RationalPoint d = normalize_direction(generic.direction->first, generic.direction->second);
    out.rational_direction = d;
    out.unique_asymptotic_direction = to_string(Direction{d});
  }
  return out;
}

SpecialPointCertificate certify_special_parabolic(const Polynomial& f, const AlgebraicPoint& at) {
  if (auto exact = at.theta.as_rational()) {
    return certify_special_parabolic(SurfaceFunction{f},
                                     RationalPoint{at.x.evaluate(*exact), at.y.evaluate(*exact)});
  }
  const AlgebraicField field(at.theta);
  const int order = std::max(f.degree(), 4);
  Jet<AlgebraicElement> jet(order, field.constant(0L), true);
  std::vector<Polynomial> by_x{f};
  for (int i = 1; i <= order; ++i) by_x.push_back(partial_derivative(by_x.back(), Variable::kX));
  for (int i = 0; i <= order; ++i) {
    Polynomial d = by_x[i];
    for (int j = 0; i + j <= order; ++j) {
      if (j > 0) d = partial_derivative(d, Variable::kY);
      if (d.is_zero()) break;
      const Rational scale = 1 / (factorial(i) * factorial(j));
      jet.set(i, j, field.element(substitute(d, at.x, at.y) * scale));
    }
  }
  const auto generic = certify_jet(field, jet);
  if (!generic.hessian_vanishes) fail(ErrorCode::kPrecondition, "point " + at.describe() + " is not parabolic");
  SpecialPointCertificate out;
  out.point = at.describe();
  copy_common(generic, out);
  if (generic.direction) {
    out.unique_asymptotic_direction = "(" + to_string(generic.direction->first.value(), "t") + ", " +
                                      to_string(generic.direction->second.value(), "t") + ")";
  }
  return out;
}

}  // namespace hesslab
