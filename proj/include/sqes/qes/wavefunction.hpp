#pragma once

// Closed-form radial wavefunctions f(r) = r^s exp(-b r^2/(2 hbar) - a r^4/(4 hbar)) P(rho).

#include <cmath>
#include <string>

#include "sqes/qes/spectrum.hpp"

namespace sqes::qes {

struct RadialWavefunction {
  GaugeAnsatz gauge;
  RationalPoly P;            // polynomial part in rho
  Rational length_scale = 2; // rho = r^2 / length_scale^2
  int m = 2;
  Rational eigenvalue;       // physical eps^2 the coefficients were built for
  Normalizability classification = Normalizability::DivergentAtBoth;

  /// P(r^2 / L^2) as a polynomial in r.
  RationalPoly in_r() const {
    const Rational l2 = length_scale * length_scale;
    std::vector<Rational> c(P.is_zero() ? 0 : static_cast<size_t>(2 * P.degree() + 1));
    for (int k = 0; k <= P.degree(); ++k) c[static_cast<size_t>(2 * k)] = P.coeff(k) / ipow(l2, k);
    return RationalPoly(std::move(c));
  }

  long double prefactor(long double r) const {
    const long double h = to_long_double(gauge.hbar);
    const long double r2 = r * r;
    return std::pow(r, to_long_double(gauge.s)) *
           std::exp(-to_long_double(gauge.b) * r2 / (2 * h) - to_long_double(gauge.a) * r2 * r2 / (4 * h));
  }

  long double operator()(long double r) const {
    const long double rho = r * r / (to_long_double(length_scale) * to_long_double(length_scale));
    long double acc = 0;
    for (int k = P.degree(); k >= 0; --k) acc = acc * rho + to_long_double(P.coeff(k));
    return prefactor(r) * acc;
  }
};

/// Wavefunction of root `index` of a derived-mode spectrum.
inline RadialWavefunction wavefunction(const QesSpectrum& s, int index) {
  if (!s.gauge) throw ConfigError("wavefunctions need a derived-mode spectrum (the gauge is part of f)");
  if (index < 0 || index >= static_cast<int>(s.roots.size()))
    throw ConfigError("root index " + std::to_string(index) + " out of range (" + std::to_string(s.roots.size()) +
                      " roots)");
  const QesRoot& r = s.roots[static_cast<size_t>(index)];
  RadialWavefunction wf;
  wf.gauge = *s.gauge;
  wf.P = RationalPoly(r.coefficients);
  wf.length_scale = s.params.length_scale();
  wf.m = s.m;
  wf.eigenvalue = r.physical.midpoint();
  wf.classification = wf.gauge.classify();
  return wf;
}

inline std::string describe(const RadialWavefunction& wf) {
  return "r^(" + sqes::to_string(wf.gauge.s) + ") exp(-(" + sqes::to_string(wf.gauge.b) + ") r^2/(2 hbar) - (" +
         sqes::to_string(wf.gauge.a) + ") r^4/(4 hbar)) P(rho), rho = r^2/" +
         sqes::to_string(wf.length_scale * wf.length_scale);
}

}  // namespace sqes::qes
