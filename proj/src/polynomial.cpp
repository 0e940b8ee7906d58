#include "hesslab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hesslab/detail/jet_square.hpp"
#include "hesslab/error.hpp"

namespace hesslab {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Exponent{0, 0}, constant);
}

Polynomial Polynomial::monomial(const Rational& coefficient, int x_power, int y_power) {
  if (x_power < 0 || y_power < 0) fail(ErrorCode::kInvalidArgument, "negative exponent");
  Polynomial p;
  p.add_term({x_power, y_power}, coefficient);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }

int Polynomial::degree_in(Variable var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, var == Variable::kX ? e.x : e.y);
  return d;
}

Rational Polynomial::coefficient(int x_power, int y_power) const {
  auto it = terms_.find({x_power, y_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& exponent, const Rational& coefficient) {
  if (sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea.x + eb.x, ea.y + eb.y}, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1);
  Polynomial factor = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= factor;
    exponent >>= 1U;
    if (exponent > 0) factor *= factor;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, Variable var) {
  Polynomial out;
  for (const auto& [e, c] : p.terms()) {
    const int power = var == Variable::kX ? e.x : e.y;
    if (power == 0) continue;
    Exponent lowered = e;
    (var == Variable::kX ? lowered.x : lowered.y) -= 1;
    out.add_term(lowered, c * power);
  }
  return out;
}

Rational evaluate(const Polynomial& p, const Rational& x, const Rational& y) {
  // Horner in x over coefficients that are themselves Horner in y.
  const int dx = p.degree_in(Variable::kX);
  if (dx < 0) return 0;
  std::vector<std::vector<std::pair<int, Rational>>> by_x(dx + 1);
  for (const auto& [e, c] : p.terms()) by_x[e.x].emplace_back(e.y, c);
  Rational acc = 0;
  for (int i = dx; i >= 0; --i) {
    auto& column = by_x[i];
    std::sort(column.begin(), column.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    Rational inner = 0;
    int current = column.empty() ? 0 : column.front().first;
    for (const auto& [power, c] : column) {
      while (current > power) {
        inner *= y;
        --current;
      }
      inner += c;
    }
    while (current > 0) {
      inner *= y;
      --current;
    }
    acc = acc * x + inner;
  }
  return acc;
}

namespace {

template <class Image>
std::vector<Image> powers_of(const Image& base, int count) {
  std::vector<Image> out;
  out.reserve(std::max(count, 0) + 1);
  out.emplace_back(Rational(1));
  for (int k = 1; k <= count; ++k) out.push_back(out.back() * base);
  return out;
}

}  // namespace

Polynomial substitute(const Polynomial& p, const Polynomial& x_image, const Polynomial& y_image) {
  const auto xs = powers_of(x_image, p.degree_in(Variable::kX));
  const auto ys = powers_of(y_image, p.degree_in(Variable::kY));
  Polynomial out;
  for (const auto& [e, c] : p.terms()) out += (xs[e.x] * ys[e.y]) * c;
  return out;
}

UnivariatePolynomial substitute(const Polynomial& p, const UnivariatePolynomial& x_image,
                                const UnivariatePolynomial& y_image) {
  const auto xs = powers_of(x_image, p.degree_in(Variable::kX));
  const auto ys = powers_of(y_image, p.degree_in(Variable::kY));
  UnivariatePolynomial out;
  for (const auto& [e, c] : p.terms()) out += (xs[e.x] * ys[e.y]) * c;
  return out;
}

Polynomial compose_affine(const Polynomial& p, const AffineMap2& map) {
  const auto& m = map.linear();
  const auto& t = map.translation();
  const Polynomial x_image = Polynomial::x() * m[0] + Polynomial::y() * m[1] + Polynomial(t[0]);
  const Polynomial y_image = Polynomial::x() * m[2] + Polynomial::y() * m[3] + Polynomial(t[1]);
  return substitute(p, x_image, y_image);
}

UnivariatePolynomial restrict_to_line(const Polynomial& p, const RationalPoint& base,
                                      const RationalPoint& direction) {
  if (sgn(direction.x) == 0 && sgn(direction.y) == 0) {
    fail(ErrorCode::kInvalidArgument, "line direction must be nonzero");
  }
  return substitute(p, UnivariatePolynomial({base.x, direction.x}),
                    UnivariatePolynomial({base.y, direction.y}));
}

Polynomial translate(const Polynomial& p, const RationalPoint& at) {
  return substitute(p, Polynomial::x() + Polynomial(at.x), Polynomial::y() + Polynomial(at.y));
}

Polynomial homogeneous_part(const Polynomial& p, int degree) {
  Polynomial out;
  for (const auto& [e, c] : p.terms()) {
    if (e.total() == degree) out.add_term(e, c);
  }
  return out;
}

Polynomial translate_jet(const Polynomial& p, const RationalPoint& at, int max_degree) {
  if (max_degree < 2) fail(ErrorCode::kInvalidArgument, "jet degree must be at least 2");
  const Polynomial moved = translate(p, at);
  Polynomial out;
  for (const auto& [e, c] : moved.terms()) {
    if (e.total() >= 2 && e.total() <= max_degree) out.add_term(e, c);
  }
  return out;
}

namespace {

struct RationalField {
  using Elem = Rational;
  Elem constant(long v) const { return Rational(v); }
  int sign(const Elem& e) const { return sgn(e); }
};

}  // namespace

bool is_perfect_square(const Polynomial& p) {
  detail::JetCoefficients<Rational> jet;
  for (auto& c : jet.quad) c = 0;
  for (auto& c : jet.cubic) c = 0;
  for (auto& c : jet.quartic) c = 0;
  for (const auto& [e, c] : p.terms()) {
    switch (e.total()) {
      case 2: jet.quad[e.x] = c; break;
      case 3: jet.cubic[e.x] = c; break;
      case 4: jet.quartic[e.x] = c; break;
      default:
        fail(ErrorCode::kInvalidArgument,
             "perfect-square test expects terms of degree 2..4 only");
    }
  }
  return detail::jet_is_square(RationalField{}, jet, /*up_to_sign=*/false);
}

std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) fail(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  const auto& [lead_e, lead_c] = *den.terms().rbegin();
  Polynomial rest = num;
  Polynomial quotient;
  while (!rest.is_zero()) {
    const auto& [e, c] = *rest.terms().rbegin();
    if (e.x < lead_e.x || e.y < lead_e.y) return std::nullopt;
    const Polynomial step = Polynomial::monomial(c / lead_c, e.x - lead_e.x, e.y - lead_e.y);
    quotient += step;
    rest -= step * den;
  }
  return quotient;
}

Polynomial lift_radial(const UnivariatePolynomial& even) {
  const Polynomial r = Polynomial::x() * Polynomial::x() + Polynomial::y() * Polynomial::y();
  Polynomial out;
  Polynomial r_power(1);
  const auto& c = even.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2 == 1) {
      if (sgn(c[k]) != 0) fail(ErrorCode::kInvalidArgument, "radial lift needs an even polynomial");
      continue;
    }
    if (k > 0) r_power *= r;
    out += r_power * c[k];
  }
  return out;
}

Polynomial embed_in_x(const UnivariatePolynomial& q) {
  Polynomial out;
  const auto& c = q.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) out.add_term({static_cast<int>(k), 0}, c[k]);
  return out;
}

// ---------------------------------------------------------------------------
// UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

UnivariatePolynomial::UnivariatePolynomial(const Rational& constant) {
  if (sgn(constant) != 0) coeffs_.push_back(constant);
}

UnivariatePolynomial UnivariatePolynomial::identity() {
  return UnivariatePolynomial(std::vector<Rational>{0, 1});
}

UnivariatePolynomial UnivariatePolynomial::linear_root(const Rational& root) {
  return UnivariatePolynomial(std::vector<Rational>{-root, 1});
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UnivariatePolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[power];
}

const Rational& UnivariatePolynomial::leading() const {
  if (coeffs_.empty()) fail(ErrorCode::kInvalidArgument, "zero polynomial has no leading term");
  return coeffs_.back();
}

Rational UnivariatePolynomial::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<long>(k));
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::monic() const {
  if (coeffs_.empty()) return *this;
  return *this * Rational(1 / coeffs_.back());
}

UnivariatePolynomial UnivariatePolynomial::compose(const UnivariatePolynomial& inner) const {
  UnivariatePolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner + UnivariatePolynomial(*it);
  }
  return acc;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
  UnivariatePolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

DivisionResult divide(const UnivariatePolynomial& num, const UnivariatePolynomial& den) {
  if (den.is_zero()) fail(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  std::vector<Rational> rest = num.coefficients();
  const int dd = den.degree();
  const Rational& lead = den.leading();
  std::vector<Rational> quotient(std::max<int>(static_cast<int>(rest.size()) - dd, 0), Rational(0));
  for (int k = static_cast<int>(rest.size()) - 1; k >= dd; --k) {
    if (sgn(rest[k]) == 0) continue;
    const Rational factor = rest[k] / lead;
    quotient[k - dd] = factor;
    for (int j = 0; j <= dd; ++j) rest[k - dd + j] -= factor * den.coefficients()[j];
  }
  rest.resize(std::min<std::size_t>(rest.size(), dd));
  return {UnivariatePolynomial(std::move(quotient)), UnivariatePolynomial(std::move(rest))};
}

UnivariatePolynomial remainder(const UnivariatePolynomial& num, const UnivariatePolynomial& den) {
  return divide(num, den).remainder;
}

UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  UnivariatePolynomial u = a;
  UnivariatePolynomial v = b;
  while (!v.is_zero()) {
    UnivariatePolynomial r = remainder(u, v).monic();
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

UnivariatePolynomial square_free_part(const UnivariatePolynomial& p) {
  if (p.degree() <= 0) return p.monic();
  const UnivariatePolynomial g = gcd(p, p.derivative());
  return divide(p, g).quotient.monic();
}

UnivariatePolynomial pow(const UnivariatePolynomial& base, unsigned exponent) {
  UnivariatePolynomial result(Rational(1));
  UnivariatePolynomial factor = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * factor;
    exponent >>= 1U;
    if (exponent > 0) factor = factor * factor;
  }
  return result;
}

// ---------------------------------------------------------------------------
// AffineMap2

AffineMap2::AffineMap2(std::array<Rational, 4> linear, std::array<Rational, 2> translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
  jacobian_ = linear_[0] * linear_[3] - linear_[1] * linear_[2];
  if (sgn(jacobian_) == 0) fail(ErrorCode::kInvalidArgument, "affine map is singular (J = 0)");
}

AffineMap2 AffineMap2::identity() { return AffineMap2({1, 0, 0, 1}, {0, 0}); }

RationalPoint AffineMap2::apply(const RationalPoint& p) const {
  return {linear_[0] * p.x + linear_[1] * p.y + translation_[0],
          linear_[2] * p.x + linear_[3] * p.y + translation_[1]};
}

AffineMap2 AffineMap2::inverse() const {
  const Rational& j = jacobian_;
  std::array<Rational, 4> inv{linear_[3] / j, -linear_[1] / j, -linear_[2] / j, linear_[0] / j};
  std::array<Rational, 2> shift{-(inv[0] * translation_[0] + inv[1] * translation_[1]),
                                -(inv[2] * translation_[0] + inv[3] * translation_[1])};
  return AffineMap2(inv, shift);
}

// ---------------------------------------------------------------------------
// PlaneRationalFunction

namespace {

// Scales num and den by one positive rational so that together they have
// coprime integer coefficients, then fixes the sign of the denominator.
void normalize_content(PlaneRationalFunction& f) {
  if (f.den.is_constant()) {
    f.num *= 1 / f.den.coefficient(0, 0);
    f.den = Polynomial(Rational(1));
    return;
  }
  Integer denominators = 1;
  Integer numerators = 0;
  for (const Polynomial* p : {&f.num, &f.den}) {
    for (const auto& [e, c] : p->terms()) {
      mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  for (const Polynomial* p : {&f.num, &f.den}) {
    for (const auto& [e, c] : p->terms()) {
      const Integer scaled = c.get_num() * (denominators / c.get_den());
      mpz_gcd(numerators.get_mpz_t(), numerators.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  Rational scale(denominators, numerators);
  scale.canonicalize();
  const Rational constant = f.den.coefficient(0, 0);
  const int den_sign = sgn(constant) != 0 ? sgn(constant) : sgn(f.den.terms().rbegin()->second);
  if (den_sign < 0) scale = -scale;
  f.num *= scale;
  f.den *= scale;
}

}  // namespace

PlaneRationalFunction make_rational_function(Polynomial num, Polynomial den,
                                             std::vector<Polynomial> known_factors) {
  if (den.is_zero()) fail(ErrorCode::kInvalidArgument, "rational function with zero denominator");
  PlaneRationalFunction f{std::move(num), std::move(den), std::move(known_factors)};
  normalize_content(f);
  return f;
}

PlaneRationalFunction rational_reduce(const PlaneRationalFunction& f) {
  if (f.den.is_zero()) fail(ErrorCode::kInvalidArgument, "rational function with zero denominator");
  PlaneRationalFunction out = f;
  bool changed = true;
  while (changed && !out.den.is_constant()) {
    changed = false;
    std::vector<Polynomial> candidates = out.known_factors;
    candidates.push_back(out.den);
    for (const auto& factor : candidates) {
      if (factor.is_constant()) continue;
      auto den_q = divide_exact(out.den, factor);
      if (!den_q) continue;
      auto num_q = divide_exact(out.num, factor);
      if (!num_q) continue;
      out.num = std::move(*num_q);
      out.den = std::move(*den_q);
      changed = true;
      break;
    }
  }
  normalize_content(out);
  return out;
}

Rational evaluate(const PlaneRationalFunction& f, const RationalPoint& at) {
  const Rational den = evaluate(f.den, at);
  if (sgn(den) == 0) {
    fail(ErrorCode::kPrecondition,
         "point (" + to_string(at.x) + ", " + to_string(at.y) + ") is a pole");
  }
  return evaluate(f.num, at) / den;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

void append_power(std::ostringstream& os, std::string_view var, int power, bool& first_factor) {
  if (power == 0) return;
  if (!first_factor) os << '*';
  os << var;
  if (power > 1) os << '^' << power;
  first_factor = false;
}

template <class Emit>
std::string format_terms(int count, Emit&& emit) {
  if (count == 0) return "0";
  std::ostringstream os;
  for (int k = 0; k < count; ++k) emit(os, k == 0);
  return os.str();
}

void append_signed_coefficient(std::ostringstream& os, const Rational& c, bool first,
                               bool has_monomial) {
  const bool negative = sgn(c) < 0;
  if (first) {
    if (negative) os << '-';
  } else {
    os << (negative ? " - " : " + ");
  }
  const Rational magnitude = abs(c);
  if (!has_monomial || magnitude != 1) {
    os << to_string(magnitude);
    if (has_monomial) os << '*';
  }
}

}  // namespace

std::string to_string(const Polynomial& p) {
  std::vector<std::pair<Exponent, Rational>> ordered(p.terms().rbegin(), p.terms().rend());
  return format_terms(static_cast<int>(ordered.size()), [&, index = 0](std::ostringstream& os,
                                                                       bool first) mutable {
    const auto& [e, c] = ordered[index++];
    append_signed_coefficient(os, c, first, e.total() > 0);
    bool first_factor = true;
    append_power(os, "x", e.x, first_factor);
    append_power(os, "y", e.y, first_factor);
  });
}

std::string to_string(const UnivariatePolynomial& p, std::string_view variable) {
  std::vector<std::pair<int, Rational>> ordered;
  for (int k = p.degree(); k >= 0; --k) {
    if (sgn(p.coefficients()[k]) != 0) ordered.emplace_back(k, p.coefficients()[k]);
  }
  return format_terms(static_cast<int>(ordered.size()), [&, index = 0](std::ostringstream& os,
                                                                       bool first) mutable {
    const auto& [power, c] = ordered[index++];
    append_signed_coefficient(os, c, first, power > 0);
    bool first_factor = true;
    append_power(os, variable, power, first_factor);
  });
}

std::string to_string(const PlaneRationalFunction& f) {
  return "(" + to_string(f.num) + ") / (" + to_string(f.den) + ")";
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial result;
    skip_space();
    if (at_end()) error("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      Polynomial term = parse_term();
      result += negative ? -term : term;
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') error("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  Polynomial parse_term() {
    Polynomial term(1);
    for (;;) {
      term *= parse_factor();
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return term;
  }

  Polynomial parse_factor() {
    skip_space();
    if (at_end()) error("unexpected end of input");
    const char ch = peek();
    if (ch == 'x' || ch == 'y') {
      ++pos_;
      int power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        power = static_cast<int>(parse_unsigned().get_si());
      }
      return ch == 'x' ? Polynomial::monomial(1, power, 0) : Polynomial::monomial(1, 0, power);
    }
    if (ch == '(') {
      ++pos_;
      const std::size_t start = pos_;
      int depth = 1;
      while (!at_end() && depth > 0) {
        if (peek() == '(') ++depth;
        if (peek() == ')') --depth;
        ++pos_;
      }
      if (depth != 0) error("unbalanced parenthesis");
      return PolynomialParser(text_.substr(start, pos_ - start - 1)).parse();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num = parse_unsigned();
      Integer den = 1;
      skip_space();
      if (!at_end() && peek() == '.') error("decimal coefficients are rejected; use p/q");
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        den = parse_unsigned();
        if (den == 0) error("zero denominator");
      }
      Rational c(num, den);
      c.canonicalize();
      return Polynomial(c);
    }
    error(std::string("unexpected character '") + ch + "'");
  }

  Integer parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected digits");
    if (!at_end() && peek() == '.') error("decimal coefficients are rejected; use p/q");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::kParse, "polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

}  // namespace hesslab
