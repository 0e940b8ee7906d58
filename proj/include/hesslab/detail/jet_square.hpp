#pragma once

// Square test for a 2-4 jet j2 + j3 + j4, written once for every scalar type
// that supports +, -, * and an exact sign oracle (rationals, algebraic
// numbers given by an isolating interval).
//
// j = q^2 with q = q1 + q2 (q1 linear, q2 quadratic) is equivalent to
//   j2 = q1^2, j3 = 2 q1 q2, j4 = q2^2.
// With j2 != 0 of rank one this reduces to the identity j3^2 = 4 j2 j4 plus the
// sign of j2; with j2 = 0 it reduces to j3 = 0 and j4 being the square of a
// binary quadratic form. No square roots are taken.

#include <array>

namespace hesslab::detail {

// Coefficients are indexed by the power of x inside each homogeneous part:
// quad[i] multiplies x^i y^(2-i), cubic[i] x^i y^(3-i), quartic[i] x^i y^(4-i).
template <class Elem>
struct JetCoefficients {
  std::array<Elem, 3> quad;
  std::array<Elem, 4> cubic;
  std::array<Elem, 5> quartic;
};

template <class Field>
bool jet_is_square(const Field& field, const JetCoefficients<typename Field::Elem>& jet,
                   bool up_to_sign) {
  using Elem = typename Field::Elem;
  auto is_zero = [&](const Elem& e) { return field.sign(e) == 0; };
  auto c = [&](long v) { return field.constant(v); };

  const auto& q = jet.quad;
  const auto& k = jet.cubic;
  const auto& e = jet.quartic;

  const bool quad_zero = is_zero(q[0]) && is_zero(q[1]) && is_zero(q[2]);
  if (!quad_zero) {
    // q[2] x^2 + q[1] xy + q[0] y^2 must be +-(linear)^2.
    if (!is_zero(q[1] * q[1] - c(4) * q[2] * q[0])) return false;
    if (!up_to_sign && (field.sign(q[2]) < 0 || field.sign(q[0]) < 0)) return false;
    // j3^2 - 4 j2 j4 must vanish identically (degree 6, 7 coefficients).
    for (int power = 0; power <= 6; ++power) {
      Elem acc = c(0);
      for (int i = 0; i <= 3; ++i) {
        const int j = power - i;
        if (j >= 0 && j <= 3) acc = acc + k[i] * k[j];
      }
      for (int i = 0; i <= 2; ++i) {
        const int j = power - i;
        if (j >= 0 && j <= 4) acc = acc - c(4) * q[i] * e[j];
      }
      if (!is_zero(acc)) return false;
    }
    return true;
  }

  for (const auto& coefficient : k) {
    if (!is_zero(coefficient)) return false;
  }

  // Quartic a^2 x^4 + 2ab x^3y + (b^2 + 2ac) x^2y^2 + 2bc xy^3 + c^2 y^4 with
  // e0 the x^4 coefficient (index 4).
  const Elem& e0 = e[4];
  const Elem& e1 = e[3];
  const Elem& e2 = e[2];
  const Elem& e3 = e[1];
  const Elem& e4 = e[0];
  if (!is_zero(e0)) {
    if (!up_to_sign && field.sign(e0) < 0) return false;
    const Elem core = c(4) * e0 * e2 - e1 * e1;
    if (!is_zero(e1 * core - c(8) * e0 * e0 * e3)) return false;
    if (!is_zero(core * core - c(64) * e0 * e0 * e0 * e4)) return false;
    return true;
  }
  if (!is_zero(e1)) return false;
  // y^2 (e2 x^2 + e3 xy + e4 y^2).
  if (!up_to_sign && (field.sign(e2) < 0 || field.sign(e4) < 0)) return false;
  return is_zero(e3 * e3 - c(4) * e2 * e4);
}

}  // namespace hesslab::detail
