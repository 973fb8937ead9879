#pragma once

#include <string>
#include <vector>

#include "sqes/rational.hpp"

namespace sqes::opcalc {

/// physical eigenvalue = scale * (transformed-operator eigenvalue) + shift
struct SpectralLedger {
  Rational shift = 0;
  Rational scale = 1;
  std::vector<std::string> provenance;

  static SpectralLedger identity() { return {}; }
  static SpectralLedger shifted(Rational delta, std::string why) {
    SpectralLedger l;
    l.shift = std::move(delta);
    l.provenance.push_back(std::move(why));
    return l;
  }

  Rational to_physical(const Rational& reduced) const { return scale * reduced + shift; }
  Rational to_reduced(const Rational& physical) const { return (physical - shift) / scale; }

  /// Ledger of a further transformation applied after this one.
  SpectralLedger then(const SpectralLedger& inner) const {
    SpectralLedger out;
    out.scale = scale * inner.scale;
    out.shift = scale * inner.shift + shift;
    out.provenance = provenance;
    out.provenance.insert(out.provenance.end(), inner.provenance.begin(), inner.provenance.end());
    return out;
  }

  bool same_map(const SpectralLedger& o) const { return shift == o.shift && scale == o.scale; }
};

}  // namespace sqes::opcalc
