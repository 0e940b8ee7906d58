#include "hesslab/rational.hpp"

#include <cctype>

#include "hesslab/error.hpp"

namespace hesslab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const std::string original(text);
  if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
      text.find('E') != std::string_view::npos) {
    fail(ErrorCode::kParse, "decimal input '" + original + "' rejected; use an exact p/q rational");
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    fail(ErrorCode::kParse, "malformed rational '" + original + "'");
  }
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (den == 0) fail(ErrorCode::kParse, "zero denominator in '" + original + "'");
  Rational value(num, den);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str(10);
}

bool is_rational_square(const Rational& value) {
  if (sgn(value) < 0) return false;
  return mpz_perfect_square_p(value.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(value.get_den_mpz_t()) != 0;
}

Rational factorial(unsigned n) {
  Integer result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return Rational(result);
}

}  // namespace hesslab
