#pragma once

// The differential realization of sl2 on polynomials in rho and the T operator
// built from it.

#include "sqes/model/params.hpp"
#include "sqes/opcalc/diff_operator.hpp"

namespace sqes::qes {

using opcalc::DiffOperator;
using opcalc::LaurentPoly;

struct Sl2Realization {
  int j = 0;
  DiffOperator plus;   // rho^2 D - j rho
  DiffOperator minus;  // D
  DiffOperator zero;   // rho D - j/2
};

inline Sl2Realization sl2_generators(int j) {
  if (j < 0) throw DomainError("sl2_generators: j must be non-negative");
  Sl2Realization s;
  s.j = j;
  s.plus = DiffOperator::term(1, LaurentPoly::monomial(2)) + DiffOperator::multiply(LaurentPoly::monomial(1, -j));
  s.minus = DiffOperator::derivative();
  s.zero = DiffOperator::term(1, LaurentPoly::monomial(1)) + DiffOperator::multiply(Rational(-j, 2));
  return s;
}

/// T = -J0 J- + (j+2)/2 J- + 16 c^4 hbar^3 q J+ + 4 c^2 hbar M omega J0.
inline DiffOperator build_T(const model::PhysicalParams& p, int j) {
  p.require_qes();
  const Sl2Realization s = sl2_generators(j);
  const Rational eta2 = model::eta_squared(p).value;
  const Rational w = 4 * p.oscillator_unit();
  return -opcalc::compose(s.zero, s.minus) + Rational(j + 2, 2) * s.minus + eta2 * s.plus + w * s.zero;
}

}  // namespace sqes::qes
