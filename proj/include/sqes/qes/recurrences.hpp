#pragma once

// Recurrences for the series coefficients of F(rho): the ones printed in the
// source derivation, and the ones obtained mechanically from the radial
// operator through a chosen gauge.

#include <optional>
#include <string>
#include <vector>

#include "sqes/model/potential.hpp"
#include "sqes/opcalc/change_variable.hpp"
#include "sqes/opcalc/gauge.hpp"
#include "sqes/opcalc/recurrence.hpp"

namespace sqes::qes {

using model::Mode;
using model::PhysicalParams;
using opcalc::DiffOperator;
using opcalc::GaugeAnsatz;
using opcalc::LaurentPoly;
using opcalc::Normalizability;
using opcalc::SpectralLedger;

namespace detail {
inline RationalPoly linear(const Rational& c0, const Rational& c1) {
  return RationalPoly(std::vector<Rational>{c0, c1});
}
inline void require_j(int j) {
  if (j < 0) throw DomainError("j must be non-negative");
}
}  // namespace detail

/// Constant swept out of the field-mode radial operator, c^2 * 4 hbar M omega (1-m).
inline Rational field_ledger_shift(const PhysicalParams& p, int j,
                                   model::MagneticConstant conv = model::MagneticConstant::FieldConsistent) {
  return model::potential_constant(p, j + 2, Mode::Field, conv);
}

/// The recurrences as printed, with x the printed eigenvalue symbol:
/// free  16qc^4hbar^3 (k-j) P_{k+1} + (x + 4Mc^2hbar omega (j-k+1)) P_k - k(j-k+2) P_{k-1} = 0
/// field 16qc^4hbar^3 P_{k+1} - x P_k + k(j+2-k) P_{k-1} = 0
inline opcalc::ThreeTermRecurrence paper_recurrence(const PhysicalParams& p, int j, Mode mode) {
  p.require_qes();
  detail::require_j(j);
  const Rational eta2 = model::eta_squared(p).value;
  const Rational w = 4 * p.oscillator_unit();
  opcalc::ThreeTermRecurrence rec;
  rec.j = j;
  if (mode == Mode::Free) {
    rec.source = opcalc::RecurrenceSource::PaperFree;
    rec.alpha = detail::linear(eta2 * j, -eta2);
    rec.beta = detail::linear(-w * (j + 1), w);
    rec.gamma = detail::linear(0, 1) * detail::linear(j + 2, -1);
    rec.ledger.provenance.push_back("printed free recurrence: eigenvalue is the physical eps^2");
  } else {
    rec.source = opcalc::RecurrenceSource::PaperField;
    rec.alpha = RationalPoly(eta2);
    rec.beta = RationalPoly{};
    rec.gamma = detail::linear(0, 1) * detail::linear(j + 2, -1);
    rec.ledger = SpectralLedger::shifted(field_ledger_shift(p, j), "field-mode constant 4 hbar M omega (1-m) c^2");
  }
  return rec;
}

/// Gauge with the radial problem's hbar filled in.
inline GaugeAnsatz gauge_for(const PhysicalParams& p, Rational s, Rational b, Rational a) {
  return GaugeAnsatz{std::move(s), std::move(b), std::move(a), p.hbar};
}

struct DerivedRecurrence {
  opcalc::ThreeTermRecurrence rec;  // in the reduced variable; rec.ledger maps it to physical eps^2
  SpectralLedger ledger;
  DiffOperator rho_operator;        // transformed operator with zero constant term
  GaugeAnsatz gauge;
};

/// radial_operator -> gauge_conjugate -> change_variable_sqrt(L = 2 c hbar) -> series_recurrence.
inline DerivedRecurrence derived_recurrence(const PhysicalParams& p, int j, const GaugeAnsatz& g, Mode mode,
                                            model::MagneticConstant conv = model::MagneticConstant::FieldConsistent) {
  p.require_qes();
  detail::require_j(j);
  const auto radial = model::radial_operator(p, j + 2, mode, conv);
  const auto conj = opcalc::gauge_conjugate(radial.op, g);
  DerivedRecurrence out;
  out.gauge = g;
  out.rho_operator = opcalc::change_variable_sqrt(conj.op, p.length_scale());
  out.rec = opcalc::series_recurrence(out.rho_operator);
  out.rec.j = j;
  out.rec.source = opcalc::RecurrenceSource::Derived;
  out.ledger = conj.ledger;
  out.ledger.provenance.push_back("rho = r^2/(2 c hbar)^2: eigenvalue unchanged");
  out.rec.ledger = out.ledger;
  return out;
}

/// The printed rho-equations with m = j + 2, as operators whose eigenvalue is
/// the printed eps^2.
inline DiffOperator printed_rho_operator(const PhysicalParams& p, int j, Mode mode) {
  const Rational eta2 = model::eta_squared(p).value;
  const Rational w = 4 * p.oscillator_unit();
  const int m = j + 2;
  DiffOperator op = DiffOperator::term(2, LaurentPoly::monomial(1, -1));
  if (mode == Mode::Free) {
    op += DiffOperator::term(1, LaurentPoly(Rational(m - 1)) + LaurentPoly::monomial(1, w) +
                                    LaurentPoly::monomial(2, -eta2));
    op += DiffOperator::multiply(LaurentPoly(-w * (m - 1)) + LaurentPoly::monomial(1, eta2 * (m - 2)));
  } else {
    op += DiffOperator::term(1, LaurentPoly(Rational(j + 1)) + LaurentPoly::monomial(2, -eta2));
    op += DiffOperator::multiply(LaurentPoly::monomial(1, eta2 * j));
  }
  return op;
}

enum class PrintedMatch { None, Reduced, Physical };

inline const char* to_string(PrintedMatch m) {
  switch (m) {
    case PrintedMatch::None: return "no";
    case PrintedMatch::Reduced: return "yes (eigenvalue read as reduced eps~^2)";
    case PrintedMatch::Physical: return "yes (eigenvalue read as physical eps^2)";
  }
  return "?";
}

struct GaugeCandidate {
  GaugeAnsatz gauge;
  bool accepted = false;
  std::string diagnostic;  // rejection reason or a note
  std::optional<DerivedRecurrence> derived;
  std::optional<int> truncation;
  PrintedMatch printed = PrintedMatch::None;
  Normalizability normalizability = Normalizability::DivergentAtBoth;
};

/// Enumerates s in {1/2 - m, m + 1/2}, b in {M omega, -M omega, 0}, a in {-q, q}
/// (the printed-equation gauge first) and runs the pipeline on each.
inline std::vector<GaugeCandidate> gauge_search(const PhysicalParams& p, int j, Mode mode,
                                                model::MagneticConstant conv = model::MagneticConstant::FieldConsistent) {
  p.require_qes();
  detail::require_j(j);
  const int m = j + 2;
  const Rational mw = p.M * p.omega;
  const DiffOperator printed = printed_rho_operator(p, j, mode);
  std::vector<GaugeCandidate> out;
  for (const Rational& s : {Rational(1, 2) - m, Rational(m) + Rational(1, 2)})
    for (const Rational& b : {mw, Rational(-mw), Rational(0)})
      for (const Rational& a : {Rational(-p.q), p.q}) {
        GaugeCandidate c;
        c.gauge = gauge_for(p, s, b, a);
        bool duplicate = false;
        for (const auto& seen : out) duplicate = duplicate || seen.gauge == c.gauge;
        if (duplicate) continue;
        c.normalizability = c.gauge.classify();
        try {
          c.derived = derived_recurrence(p, j, c.gauge, mode, conv);
          c.accepted = true;
          c.truncation = c.derived->rec.truncation_degree();
          const DiffOperator& rho = c.derived->rho_operator;
          if (rho == printed)
            c.printed = PrintedMatch::Reduced;
          else if (rho + DiffOperator::multiply(c.derived->ledger.shift) == printed)
            c.printed = PrintedMatch::Physical;
          if (!c.truncation)
            c.diagnostic = "QES band but no polynomial truncation";
          else if (*c.truncation != j)
            c.diagnostic = "truncates at degree " + std::to_string(*c.truncation) + ", not j";
        } catch (const GaugeInconsistency& e) {
          c.diagnostic = std::string(e.what()) + ": " + e.residue();
        } catch (const Error& e) {
          c.diagnostic = e.what();
        }
        out.push_back(std::move(c));
      }
  bool any = false;
  for (const auto& c : out) any = any || c.accepted;
  if (!any) throw NotQesError("no gauge candidate yields a three-term band");
  return out;
}

enum class GaugePolicy { Auto, Index };

/// Auto prefers the gauge reproducing the printed equation, then any gauge
/// truncating at degree j. Index counts accepted candidates only.
inline const GaugeCandidate& select_gauge(const std::vector<GaugeCandidate>& cands, GaugePolicy policy, int index = 0) {
  std::vector<const GaugeCandidate*> accepted;
  for (const auto& c : cands)
    if (c.accepted) accepted.push_back(&c);
  if (policy == GaugePolicy::Index) {
    if (index < 0 || index >= static_cast<int>(accepted.size()))
      throw ConfigError("gauge index " + std::to_string(index) + " out of range (" +
                        std::to_string(accepted.size()) + " accepted candidates)");
    return *accepted[static_cast<size_t>(index)];
  }
  const int j = cands.empty() || !cands.front().derived ? -1 : cands.front().derived->rec.j;
  for (const auto* c : accepted)
    if (c->printed != PrintedMatch::None && c->truncation && *c->truncation == c->derived->rec.j) return *c;
  for (const auto* c : accepted)
    if (c->truncation && *c->truncation == c->derived->rec.j) return *c;
  throw NotQesError("no gauge candidate truncates at degree j" + (j >= 0 ? " = " + std::to_string(j) : std::string()));
}

/// Derived recurrence through the automatically selected gauge.
inline DerivedRecurrence derived_auto(const PhysicalParams& p, int j, Mode mode,
                                      model::MagneticConstant conv = model::MagneticConstant::FieldConsistent) {
  return *select_gauge(gauge_search(p, j, mode, conv), GaugePolicy::Auto).derived;
}

}  // namespace sqes::qes
