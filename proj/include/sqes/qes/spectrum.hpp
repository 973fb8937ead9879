#pragma once

// QES spectra: critical roots mapped through the ledger, energies, and the
// series coefficients of F at each root.

#include <optional>
#include <vector>

#include "sqes/qes/family.hpp"
#include "sqes/qes/recurrences.hpp"
#include "sqes/qes/roots.hpp"

namespace sqes::qes {

enum class SpectrumSource { Paper, Derived };

inline const char* to_string(SpectrumSource s) { return s == SpectrumSource::Paper ? "paper" : "derived"; }

struct QesRoot {
  RootEnclosure reduced;   // in the recurrence variable
  RootEnclosure physical;  // eps^2 = ledger(reduced)
  model::SpectralValue energy;
  std::vector<Rational> coefficients;  // c_0 ... c_j of F at the reduced midpoint
};

struct QesSpectrum {
  int j = 0;
  int m = 2;
  Mode mode = Mode::Free;
  SpectrumSource source = SpectrumSource::Derived;
  std::optional<GaugeAnsatz> gauge;
  opcalc::ThreeTermRecurrence rec;
  SpectralLedger ledger;
  PolynomialFamily family;  // monic
  std::vector<QesRoot> roots;
  int digits = 50;
  PhysicalParams params;

  const RationalPoly& critical() const { return family.critical(); }
};

/// Series coefficients f_0 = 1, f_{k+1} = ((x - beta_k) f_k - gamma_k f_{k-1}) / alpha_k for k < j.
template <class T>
std::vector<T> series_coefficients(const opcalc::ThreeTermRecurrence& rec, const T& x) {
  std::vector<T> f{T(Rational(1))};
  for (int k = 0; k < rec.j; ++k) {
    const Rational a = rec.alpha_at(k);
    if (a == 0)
      throw DegenerateRecurrence("row " + std::to_string(k) + " has alpha = 0; series coefficient undefined", k);
    T next = (x - T(rec.beta_at(k))) * f[static_cast<size_t>(k)];
    if (k > 0) next = next - T(rec.gamma_at(k)) * f[static_cast<size_t>(k - 1)];
    f.push_back(next * T(Rational(1) / a));
  }
  return f;
}

namespace detail {
inline RootEnclosure map_enclosure(const SpectralLedger& l, const RootEnclosure& r) {
  Rational a = l.to_physical(r.lo), b = l.to_physical(r.hi);
  if (b < a) std::swap(a, b);
  return {a, b};
}
}  // namespace detail

inline QesSpectrum assemble_spectrum(const PhysicalParams& p, const opcalc::ThreeTermRecurrence& rec, Mode mode,
                                     SpectrumSource source, std::optional<GaugeAnsatz> gauge, int digits) {
  QesSpectrum s;
  s.j = rec.j;
  s.m = rec.j + 2;
  s.mode = mode;
  s.source = source;
  s.gauge = std::move(gauge);
  s.rec = rec;
  s.ledger = rec.ledger;
  s.digits = digits;
  s.params = p;
  s.family = polynomial_family(rec, Normalization::Monic);
  for (const auto& enc : critical_roots(s.critical(), digits)) {
    QesRoot r;
    r.reduced = enc;
    r.physical = detail::map_enclosure(s.ledger, enc);
    r.energy = model::energy_from_epsilon2(p, r.physical.midpoint(), digits);
    if (!enc.exact()) r.energy.exact = false;
    r.coefficients = series_coefficients(rec, enc.midpoint());
    s.roots.push_back(std::move(r));
  }
  return s;
}

struct SpectrumOptions {
  SpectrumSource source = SpectrumSource::Derived;
  GaugePolicy policy = GaugePolicy::Auto;
  int gauge_index = 0;
  int digits = 50;
  model::MagneticConstant convention = model::MagneticConstant::FieldConsistent;
};

inline QesSpectrum spectrum(const PhysicalParams& p, int j, Mode mode, const SpectrumOptions& opt = {}) {
  if (opt.source == SpectrumSource::Paper)
    return assemble_spectrum(p, paper_recurrence(p, j, mode), mode, opt.source, std::nullopt, opt.digits);
  const auto cands = gauge_search(p, j, mode, opt.convention);
  const DerivedRecurrence& d = *select_gauge(cands, opt.policy, opt.gauge_index).derived;
  return assemble_spectrum(p, d.rec, mode, opt.source, d.gauge, opt.digits);
}

}  // namespace sqes::qes
