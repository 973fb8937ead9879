#pragma once

// Radial potentials and the one-dimensional radial operators whose
// eigenvalues are eps^2 = E^2 - M^2 c^4.

#include "sqes/model/params.hpp"
#include "sqes/opcalc/diff_operator.hpp"

namespace sqes::model {

using opcalc::DiffOperator;
using opcalc::LaurentPoly;

namespace detail {
inline void require_positive_radius(const Rational& r) {
  if (r <= 0) throw DomainError("radius must be positive");
}
inline Rational centrifugal(const PhysicalParams& p, int m) {
  return p.hbar * p.hbar * (Rational(m) * m - Rational(1, 4));
}
inline Rational magnetic_constant(const PhysicalParams& p, int m, MagneticConstant conv) {
  const Rational eb = p.e_charge * *p.B;
  return conv == MagneticConstant::AsPrinted ? p.hbar * eb * (m - 1) : p.hbar * eb * (1 - m);
}
inline const PhysicalParams& require_field(const PhysicalParams& p) {
  if (!p.B) throw ConfigError("magnetic potential needs B");
  return p;
}
}  // namespace detail

/// hbar^2(m^2-1/4)/r^2 + q^2 r^6 - 2 M omega q r^4 + (M^2 omega^2 - 2 hbar q (2-m)) r^2
inline Rational potential_free(const PhysicalParams& p, int m, const Rational& r) {
  detail::require_positive_radius(r);
  const Rational r2 = r * r;
  return detail::centrifugal(p, m) / r2 + p.q * p.q * ipow(r2, 3) - 2 * p.M * p.omega * p.q * r2 * r2 +
         (p.M * p.M * p.omega * p.omega - 2 * p.hbar * p.q * (2 - m)) * r2;
}

/// Symmetric-gauge potential; the sign of the hbar e B (m-1) constant follows `conv`.
inline Rational potential_magnetic(const PhysicalParams& p, int m, const Rational& r,
                                   MagneticConstant conv = MagneticConstant::FieldConsistent) {
  detail::require_positive_radius(r);
  detail::require_field(p);
  const Rational eb = p.e_charge * *p.B;
  const Rational r2 = r * r;
  const Rational mw = p.M * p.omega;
  return detail::centrifugal(p, m) / r2 + detail::magnetic_constant(p, m, conv) + p.q * p.q * ipow(r2, 3) -
         (2 * mw - eb) * p.q * r2 * r2 + ((mw - eb / 2) * (mw - eb / 2) - 2 * p.hbar * p.q * (2 - m)) * r2;
}

/// Coefficients of potential_magnetic as a Laurent polynomial in r.
inline LaurentPoly potential_magnetic_coefficients(const PhysicalParams& p, int m,
                                                   MagneticConstant conv = MagneticConstant::FieldConsistent) {
  detail::require_field(p);
  const Rational eb = p.e_charge * *p.B;
  const Rational mw = p.M * p.omega;
  return LaurentPoly::monomial(-2, detail::centrifugal(p, m)) + LaurentPoly(detail::magnetic_constant(p, m, conv)) +
         LaurentPoly::monomial(6, p.q * p.q) + LaurentPoly::monomial(4, -(2 * mw - eb) * p.q) +
         LaurentPoly::monomial(2, (mw - eb / 2) * (mw - eb / 2) - 2 * p.hbar * p.q * (2 - m));
}

inline LaurentPoly potential_free_coefficients(const PhysicalParams& p, int m) {
  return LaurentPoly::monomial(-2, detail::centrifugal(p, m)) + LaurentPoly::monomial(6, p.q * p.q) +
         LaurentPoly::monomial(4, -2 * p.M * p.omega * p.q) +
         LaurentPoly::monomial(2, p.M * p.M * p.omega * p.omega - 2 * p.hbar * p.q * (2 - m));
}

/// Constant 2 hbar M omega (1-m) added to the potential in the radial equation.
inline Rational spin_orbit_shift(const PhysicalParams& p, int m) { return 2 * p.hbar * p.M * p.omega * (1 - m); }

struct RadialOperator {
  DiffOperator op;
  bool qes_capable = true;  // false when q = 0
  PhysicalParams params;    // with B filled in for field mode
};

/// -c^2 hbar^2 d^2/dr^2 + c^2 [V(r) + 2 hbar M omega (1-m)], free or at B = 2 M omega / e.
inline RadialOperator radial_operator(const PhysicalParams& params, int m, Mode mode,
                                      MagneticConstant conv = MagneticConstant::FieldConsistent) {
  params.validate();
  PhysicalParams p = mode == Mode::Field ? with_qes_field(params) : params;
  const Rational c2 = p.c * p.c;
  LaurentPoly v = mode == Mode::Free ? potential_free_coefficients(p, m) : potential_magnetic_coefficients(p, m, conv);
  v += LaurentPoly(spin_orbit_shift(p, m));
  DiffOperator op = DiffOperator::term(2, LaurentPoly(-c2 * p.hbar * p.hbar)) + DiffOperator::multiply(v * c2);
  return {op, p.q != 0, p};
}

/// Constant term of c^2 [V + shift], evaluated from the closed forms.
inline Rational potential_constant(const PhysicalParams& params, int m, Mode mode,
                                   MagneticConstant conv = MagneticConstant::FieldConsistent) {
  const Rational c2 = params.c * params.c;
  if (mode == Mode::Free) return c2 * spin_orbit_shift(params, m);
  PhysicalParams p = with_qes_field(params);
  return c2 * (detail::magnetic_constant(p, m, conv) + spin_orbit_shift(p, m));
}

}  // namespace sqes::model
