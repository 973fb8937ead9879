#pragma once

// Energy polynomials P_0 ... P_{j+1} generated by a three-term recurrence.

#include <vector>

#include "sqes/opcalc/recurrence.hpp"

namespace sqes::qes {

using opcalc::RecurrenceSource;
using opcalc::ThreeTermRecurrence;

enum class Normalization { Monic, AsPrinted };

inline const char* to_string(Normalization n) { return n == Normalization::Monic ? "monic" : "as-printed"; }

struct PolynomialFamily {
  std::vector<RationalPoly> P;  // P[0] ... P[j+1], polynomials in the recurrence variable x
  Normalization normalization = Normalization::Monic;
  RecurrenceSource source = RecurrenceSource::Derived;
  int j = 0;

  const RationalPoly& critical() const { return P.back(); }
};

/// Monic: P_{k+1} = (x - beta_k) P_k - alpha_{k-1} gamma_k P_{k-1}, which only
/// needs the products alpha_{k-1} gamma_k and so survives rows with alpha = 0.
/// As-printed: P_{k+1} = ((x - beta_k) P_k - gamma_k P_{k-1}) / alpha_k, the
/// series coefficients of F themselves.
inline PolynomialFamily polynomial_family(const ThreeTermRecurrence& rec, Normalization norm) {
  PolynomialFamily fam;
  fam.normalization = norm;
  fam.source = rec.source;
  fam.j = rec.j;
  const RationalPoly x = RationalPoly::x();
  fam.P.push_back(RationalPoly(Rational(1)));
  for (int k = 0; k <= rec.j; ++k) {
    RationalPoly next = (x - RationalPoly(rec.beta_at(k))) * fam.P[k];
    if (norm == Normalization::Monic) {
      if (k > 0) next -= fam.P[k - 1] * (rec.alpha_at(k - 1) * rec.gamma_at(k));
    } else {
      if (k > 0) next -= fam.P[k - 1] * rec.gamma_at(k);
      const Rational a = rec.alpha_at(k);
      if (a == 0)
        throw DegenerateRecurrence("recurrence row " + std::to_string(k) + " has alpha = 0; P_" +
                                       std::to_string(k + 1) + " is undefined",
                                   k);
      next = next * (Rational(1) / a);
    }
    fam.P.push_back(std::move(next));
  }
  return fam;
}

}  // namespace sqes::qes
