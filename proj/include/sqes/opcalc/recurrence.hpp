#pragma once

// Three-term recurrences induced by band operators on power series.

#include <optional>
#include <string>
#include <vector>

#include "sqes/opcalc/diff_operator.hpp"
#include "sqes/opcalc/ledger.hpp"

namespace sqes::opcalc {

enum class RecurrenceSource { PaperFree, PaperField, Derived };

inline const char* to_string(RecurrenceSource s) {
  switch (s) {
    case RecurrenceSource::PaperFree: return "paper-eq15";
    case RecurrenceSource::PaperField: return "paper-field";
    case RecurrenceSource::Derived: return "derived";
  }
  return "?";
}

/// x f_k = alpha(k) f_{k+1} + beta(k) f_k + gamma(k) f_{k-1}, with the
/// coefficients held as exact polynomials in the row index k.
struct ThreeTermRecurrence {
  RationalPoly alpha, beta, gamma;
  int j = 0;
  RecurrenceSource source = RecurrenceSource::Derived;
  SpectralLedger ledger;

  Rational alpha_at(int k) const { return alpha(Rational(k)); }
  Rational beta_at(int k) const { return beta(Rational(k)); }
  Rational gamma_at(int k) const { return gamma(Rational(k)); }

  /// Smallest n >= 0 with gamma(n+1) == 0: span{1..rho^n} is then invariant.
  std::optional<int> truncation_degree() const {
    const RationalPoly raising = gamma.taylor_shift(Rational(1));
    if (raising.is_zero()) return 0;
    if (raising.degree() == 0) return std::nullopt;
    Rational bound = 0;
    for (int i = 0; i < raising.degree(); ++i) bound = std::max(bound, abs(raising.coeff(i) / raising.leading()));
    const long limit = (1 + bound).convert_to<long>() + 1;
    for (long n = 0; n <= limit; ++n)
      if (raising(Rational(n)) == 0) return static_cast<int>(n);
    return std::nullopt;
  }

  /// Rows k in [0, j] whose alpha vanishes.
  std::vector<int> degenerate_rows() const {
    std::vector<int> rows;
    for (int k = 0; k <= j; ++k)
      if (alpha_at(k) == 0) rows.push_back(k);
    return rows;
  }

  /// Same recurrence in the physical variable x_phys = scale * x + shift.
  ThreeTermRecurrence in_physical_variable() const {
    ThreeTermRecurrence r = *this;
    r.alpha = alpha * ledger.scale;
    r.beta = beta * ledger.scale + RationalPoly(ledger.shift);
    r.gamma = gamma * ledger.scale;
    r.ledger = SpectralLedger::identity();
    r.ledger.provenance = ledger.provenance;
    r.ledger.provenance.push_back("expressed in physical variable");
    return r;
  }
};

inline RationalPoly falling_factorial(int order) {
  RationalPoly p(Rational(1));
  for (int i = 0; i < order; ++i) p = p * (RationalPoly::x() - RationalPoly(Rational(i)));
  return p;
}

/// x F = A F on F = sum f_k rho^k. Requires each term c rho^e D^k to shift
/// degree by e - k in {-1, 0, 1}.
inline ThreeTermRecurrence series_recurrence(const DiffOperator& a) {
  RationalPoly lower, diag, raise;  // t_d(n): image of rho^n lands on rho^(n+d)
  for (const auto& [k, c] : a.terms())
    for (const auto& [e, v] : c.terms()) {
      if (e < 0) throw NotQesError("negative power rho^" + std::to_string(e) + " in operator");
      const int shift = e - k;
      RationalPoly t = falling_factorial(k) * v;
      if (shift == -1)
        lower += t;
      else if (shift == 0)
        diag += t;
      else if (shift == 1)
        raise += t;
      else
        throw NotQesError("term rho^" + std::to_string(e) + " D^" + std::to_string(k) + " shifts degree by " +
                          std::to_string(shift));
    }
  ThreeTermRecurrence rec;
  rec.alpha = lower.taylor_shift(Rational(1));
  rec.beta = diag;
  rec.gamma = raise.taylor_shift(Rational(-1));
  return rec;
}

}  // namespace sqes::opcalc
