#pragma once

// The physical radial operator -k d^2/dr^2 + U(r) seen by the numerical
// solvers, with k = c^2 hbar^2 and U = c^2 [V + 2 hbar M omega (1-m)].

#include <cmath>
#include <string>

#include "sqes/model/potential.hpp"

namespace sqes::oracle {

using model::Mode;
using model::PhysicalParams;

enum class PotentialKind { Physical, Box };

struct Problem {
  PhysicalParams params;
  int m = 2;
  Mode mode = Mode::Free;
  PotentialKind kind = PotentialKind::Physical;
  model::MagneticConstant convention = model::MagneticConstant::FieldConsistent;

  static Problem box(Rational c = 1, Rational hbar = 1) {
    Problem p;
    p.kind = PotentialKind::Box;
    p.params.c = std::move(c);
    p.params.hbar = std::move(hbar);
    return p;
  }

  Rational kinetic() const { return params.c * params.c * params.hbar * params.hbar; }

  /// U as a Laurent polynomial in r, built from the potential formulas.
  opcalc::LaurentPoly potential() const {
    if (kind == PotentialKind::Box) return {};
    const Rational c2 = params.c * params.c;
    if (mode == Mode::Free)
      return (model::potential_free_coefficients(params, m) + opcalc::LaurentPoly(model::spin_orbit_shift(params, m))) *
             c2;
    const PhysicalParams p = model::with_qes_field(params);
    return (model::potential_magnetic_coefficients(p, m, convention) +
            opcalc::LaurentPoly(model::spin_orbit_shift(p, m))) *
           c2;
  }

  /// Exact U(r) by direct substitution into the potential formulas.
  Rational potential_at(const Rational& r) const {
    if (kind == PotentialKind::Box) return 0;
    const Rational c2 = params.c * params.c;
    if (mode == Mode::Free) return c2 * (model::potential_free(params, m, r) + model::spin_orbit_shift(params, m));
    const PhysicalParams p = model::with_qes_field(params);
    return c2 * (model::potential_magnetic(p, m, r, convention) + model::spin_orbit_shift(p, m));
  }

  /// Regular indicial exponent at the origin.
  Rational regular_exponent() const { return kind == PotentialKind::Box ? Rational(1) : Rational(std::abs(m)) + Rational(1, 2); }

  std::string describe() const {
    if (kind == PotentialKind::Box) return "box";
    return std::string(model::to_string(mode)) + " m=" + std::to_string(m);
  }
};

/// U(r) evaluated in long double from the exact coefficients.
class PotentialEvaluator {
 public:
  explicit PotentialEvaluator(const Problem& p) {
    const opcalc::LaurentPoly u = p.potential();
    for (const auto& [e, c] : u.terms()) terms_.push_back({e, to_long_double(c)});
    kinetic_ = to_long_double(p.kinetic());
  }
  long double operator()(long double r) const {
    long double acc = 0;
    for (const auto& t : terms_) acc += t.c * std::pow(r, static_cast<long double>(t.e));
    return acc;
  }
  long double kinetic() const { return kinetic_; }
  long double constant_term() const {
    for (const auto& t : terms_)
      if (t.e == 0) return t.c;
    return 0;
  }

 private:
  struct Term {
    int e;
    long double c;
  };
  std::vector<Term> terms_;
  long double kinetic_ = 1;
};

}  // namespace sqes::oracle
