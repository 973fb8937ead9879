#pragma once

// Exact construction checks: the quotient-ring residual and the comparison of
// the T operator with the derived critical polynomial.

#include <vector>

#include "sqes/qes/sl2.hpp"
#include "sqes/qes/spectrum.hpp"

namespace sqes::qes {

/// F = sum_k f_k(x) rho^k with symbolic x. Returns the coefficients of
/// A F - x F reduced modulo the critical polynomial; all zero iff the
/// construction is exact.
inline std::vector<RationalPoly> quotient_residual(const DiffOperator& rho_operator,
                                                   const opcalc::ThreeTermRecurrence& rec) {
  const RationalPoly x = RationalPoly::x();
  const auto f = series_coefficients(rec, x);
  const RationalPoly critical = polynomial_family(rec, Normalization::Monic).critical();
  const Poly<RationalPoly> F(f);
  const Poly<RationalPoly> image = opcalc::apply(rho_operator, F) - F * x;
  std::vector<RationalPoly> residue;
  for (int k = 0; k <= image.degree(); ++k) residue.push_back(image.coeff(k) % critical);
  return residue;
}

inline bool residual_vanishes(const std::vector<RationalPoly>& residue) {
  for (const auto& r : residue)
    if (!r.is_zero()) return false;
  return true;
}

/// Eigenvalue shift of gauge g read straight off the potential: the constant of
/// c^2 [V + shift] plus the constant -c^2 hbar^2 (phi'' + phi'^2) contributes.
inline Rational direct_ledger_shift(const PhysicalParams& p, int m, Mode mode, const GaugeAnsatz& g,
                                    model::MagneticConstant conv = model::MagneticConstant::FieldConsistent) {
  return model::potential_constant(p, m, mode, conv) + p.c * p.c * p.hbar * p.hbar * g.b / g.hbar * (1 + 2 * g.s);
}

struct CrossPathReport {
  int j = 0;
  RationalPoly t_charpoly;           // det(lambda - T) on span{1, ..., rho^j}
  RationalPoly derived_critical;     // reduced variable
  Rational ledger_shift;             // physical eps^2 = reduced + shift
  bool literal_match = false;        // lambda = eps^2 + 2 M c^2 hbar omega
  bool reflected_match = false;      // T(q) against the derived polynomial at -q
  Rational implied_offset;           // lambda - eps^2 under the reflected match
};

/// Compares the eigenvalues of T on the (j+1)-dimensional module with the
/// derived free-mode critical roots.
inline CrossPathReport cross_path(const PhysicalParams& p, int j) {
  CrossPathReport r;
  r.j = j;
  r.t_charpoly = opcalc::characteristic_polynomial(opcalc::monomial_matrix(build_T(p, j), j));
  const DerivedRecurrence d = derived_auto(p, j, Mode::Free);
  r.derived_critical = polynomial_family(d.rec, Normalization::Monic).critical();
  r.ledger_shift = d.ledger.shift;
  const Rational w = 4 * p.oscillator_unit();
  // det(lambda - T) = P_phys(lambda - w/2) = P_crit(lambda - w/2 - shift)
  r.literal_match = r.t_charpoly == r.derived_critical.taylor_shift(-w / 2 - r.ledger_shift);

  PhysicalParams reflected = p;
  reflected.q = -p.q;
  const DerivedRecurrence dr = derived_auto(reflected, j, Mode::Free);
  const RationalPoly crit_reflected = polynomial_family(dr.rec, Normalization::Monic).critical();
  r.reflected_match = r.t_charpoly == crit_reflected.taylor_shift(w * j / 2);
  r.implied_offset = -w * j / 2 - dr.ledger.shift;
  return r;
}

}  // namespace sqes::qes
