#pragma once

// Similarity transforms f = r^s exp(-b r^2/(2 hbar) - a r^4/(4 hbar)) F.

#include <string>
#include <utility>

#include "sqes/opcalc/diff_operator.hpp"
#include "sqes/opcalc/ledger.hpp"

namespace sqes::opcalc {

enum class Normalizability { Normalizable, DivergentAtOrigin, DivergentAtInfinity, DivergentAtBoth };

inline const char* to_string(Normalizability n) {
  switch (n) {
    case Normalizability::Normalizable: return "normalizable";
    case Normalizability::DivergentAtOrigin: return "divergent-at-origin";
    case Normalizability::DivergentAtInfinity: return "divergent-at-infinity";
    case Normalizability::DivergentAtBoth: return "divergent-at-both";
  }
  return "?";
}

struct GaugeAnsatz {
  Rational s = 0;      // power of r
  Rational b = 0;      // gaussian coefficient, decaying for b > 0
  Rational a = 0;      // quartic coefficient, decaying for a > 0
  Rational hbar = 1;

  GaugeAnsatz inverse() const { return {-s, -b, -a, hbar}; }

  /// phi' where the prefactor is exp(phi).
  LaurentPoly log_derivative() const {
    return LaurentPoly::monomial(-1, s) + LaurentPoly::monomial(1, -b / hbar) + LaurentPoly::monomial(3, -a / hbar);
  }

  bool decays_at_infinity() const { return a > 0 || (a == 0 && b > 0); }
  bool regular_at_origin() const { return s >= Rational(1, 2); }

  Normalizability classify() const {
    bool origin = regular_at_origin(), infinity = decays_at_infinity();
    if (origin && infinity) return Normalizability::Normalizable;
    if (infinity) return Normalizability::DivergentAtOrigin;
    if (origin) return Normalizability::DivergentAtInfinity;
    return Normalizability::DivergentAtBoth;
  }

  friend bool operator==(const GaugeAnsatz&, const GaugeAnsatz&) = default;
};

inline std::string describe(const GaugeAnsatz& g) {
  return "s=" + sqes::to_string(g.s) + " b=" + sqes::to_string(g.b) + " a=" + sqes::to_string(g.a);
}

struct Conjugated {
  DiffOperator op;
  SpectralLedger ledger;
};

/// G^-1 A G with G = exp(phi); the constant term of the result is moved into
/// the ledger so the returned operator has zero constant coefficient.
inline Conjugated conjugate(const DiffOperator& a, const GaugeAnsatz& g) {
  // G^-1 D G = D + phi'
  const DiffOperator shifted_d = DiffOperator::derivative() + DiffOperator::multiply(g.log_derivative());
  DiffOperator out;
  DiffOperator power = DiffOperator::identity();
  int reached = 0;
  for (const auto& [k, c] : a.terms()) {
    while (reached < k) {
      power = compose(shifted_d, power, 2);
      ++reached;
    }
    out += compose(DiffOperator::multiply(c), power, 2);
  }
  Rational constant = out.coeff(0).coeff(0);
  out -= DiffOperator::multiply(constant);
  return {out, SpectralLedger::shifted(constant, "gauge " + describe(g) + ": constant swept")};
}

/// conjugate() plus the checks that make the result usable downstream: no
/// centrifugal residue and r -> -r parity intact.
inline Conjugated gauge_conjugate(const DiffOperator& a, const GaugeAnsatz& g) {
  Conjugated c = conjugate(a, g);
  const LaurentPoly c0 = c.op.coeff(0);
  if (c0.min_exponent() < 0) {
    LaurentPoly residue;
    for (const auto& [e, v] : c0.terms())
      if (e < 0) residue += LaurentPoly::monomial(e, v);
    throw GaugeInconsistency("gauge " + describe(g) + " leaves a singular multiplicative residue",
                             to_string(residue, "r"));
  }
  if (!c.op.is_even()) {
    std::string odd;
    for (const auto& [k, coef] : c.op.terms())
      if (!coef.has_parity(k)) odd += "[D^" + std::to_string(k) + ": " + to_string(coef, "r") + "]";
    throw GaugeInconsistency("gauge " + describe(g) + " breaks r -> -r parity", odd);
  }
  return c;
}

}  // namespace sqes::opcalc
