#pragma once

// Relative residual of a closed-form wavefunction in the physical radial
// equation. With f = exp(phi) Q(r), H f - x f = exp(phi) [-k (Q'' + 2 phi' Q' +
// (phi'' + phi'^2) Q) + (U - x) Q]; the bracket is evaluated exactly and only
// the exp(phi) weight in long double.

#include <cmath>

#include "sqes/oracle/problem.hpp"
#include "sqes/qes/wavefunction.hpp"

namespace sqes::oracle {

struct Window {
  Rational lo = Rational(1, 2);
  Rational hi = Rational(5, 2);
  int samples = 200;
};

inline long double residual(const qes::RadialWavefunction& wf, const Problem& p, const Rational& x,
                            const Window& w = {}) {
  if (!(w.lo > 0) || !(w.hi > w.lo) || w.samples < 1) throw DomainError("residual: window must satisfy 0 < lo < hi");
  const RationalPoly Q = wf.in_r(), dQ = Q.derivative(), d2Q = dQ.derivative();
  const Rational k = p.kinetic();
  const auto& g = wf.gauge;
  long double num = 0, den = 0;
  for (int i = 0; i <= w.samples; ++i) {
    const Rational r = w.lo + (w.hi - w.lo) * i / w.samples;
    const Rational r2 = r * r;
    const Rational d1 = g.s / r - g.b * r / g.hbar - g.a * r * r2 / g.hbar;
    const Rational d2 = -g.s / r2 - g.b / g.hbar - 3 * g.a * r2 / g.hbar;
    const Rational q = Q(r);
    const Rational bracket = -k * (d2Q(r) + 2 * d1 * dQ(r) + (d2 + d1 * d1) * q) + (p.potential_at(r) - x) * q;
    const long double rl = to_long_double(r);
    const long double weight = wf.prefactor(rl);
    const long double hx = weight * to_long_double(bracket);
    // ||x f|| in the denominator, ||f|| when x = 0
    const long double fx = weight * to_long_double(x == 0 ? Rational(1) : x) * to_long_double(q);
    num += hx * hx;
    den += fx * fx;
  }
  if (den == 0) throw DomainError("residual: wavefunction vanishes on the window");
  return std::sqrt(num / den);
}

}  // namespace sqes::oracle
