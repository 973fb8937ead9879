#pragma once

#include <optional>
#include <string>

#include "sqes/rational.hpp"

namespace sqes::model {

enum class Mode { Free, Field };

inline const char* to_string(Mode m) { return m == Mode::Free ? "free" : "field"; }

inline Mode parse_mode(const std::string& s) {
  if (s == "free") return Mode::Free;
  if (s == "field") return Mode::Field;
  throw ConfigError("unknown mode '" + s + "' (expected free or field)");
}

/// Sign of the hbar*e*B*(m-1) constant in the symmetric-gauge potential.
/// FieldConsistent uses hbar*e*B*(1-m), which at B = 2 M omega / e reproduces
/// the constant 4 hbar M omega (1-m) of the field-mode radial equation.
enum class MagneticConstant { FieldConsistent, AsPrinted };

inline const char* to_string(MagneticConstant c) {
  return c == MagneticConstant::FieldConsistent ? "field-consistent" : "as-printed";
}

/// All constants exact. Defaults are the natural-unit test profile.
struct PhysicalParams {
  Rational M = 1;
  Rational c = 1;
  Rational hbar = 1;
  Rational omega = 1;
  Rational q = 1;
  Rational e_charge = 1;
  std::optional<Rational> B;

  void validate() const {
    if (M <= 0) throw DomainError("M must be positive");
    if (c <= 0) throw DomainError("c must be positive");
    if (hbar <= 0) throw DomainError("hbar must be positive");
    if (omega < 0) throw DomainError("omega must be non-negative");
  }

  /// Requirement of every QES operation.
  void require_qes() const {
    validate();
    if (q == 0) throw DomainError("q = 0 degenerates the QES recurrences");
  }

  Rational rest_energy_squared() const { return M * M * ipow(c, 4); }  // M^2 c^4
  Rational length_scale() const { return 2 * c * hbar; }               // r = 2 c hbar sqrt(rho)
  Rational oscillator_unit() const { return M * c * c * hbar * omega; } // M c^2 hbar omega
  Rational sextic_unit() const { return q * ipow(c, 4) * ipow(hbar, 3); } // q c^4 hbar^3

  friend bool operator==(const PhysicalParams&, const PhysicalParams&) = default;
};

struct QuantumNumbers {
  int m = 2;
  int j = 0;

  /// The QES identification m = j + 2.
  static QuantumNumbers for_qes(int j) {
    if (j < 0) throw DomainError("j must be non-negative");
    return {j + 2, j};
  }
  void require_qes() const {
    if (j < 0) throw DomainError("j must be non-negative");
    if (m != j + 2) throw ConfigError("QES requires m = j + 2 (got m=" + std::to_string(m) +
                                      ", j=" + std::to_string(j) + ")");
  }
};

struct EtaSquared {
  Rational value;
  bool degenerate = false;
};

/// eta^2 = 16 q c^4 hbar^3
inline EtaSquared eta_squared(const PhysicalParams& p) {
  return {16 * p.sextic_unit(), p.q == 0};
}

/// Magnetic field at which the r^4 term of the symmetric-gauge potential vanishes.
inline Rational qes_field(const PhysicalParams& p) {
  if (p.e_charge == 0) throw DomainError("qes_field: charge must be non-zero");
  return 2 * p.M * p.omega / p.e_charge;
}

/// Copy of p with B set to the QES field; rejects an explicit conflicting B.
inline PhysicalParams with_qes_field(PhysicalParams p) {
  Rational star = qes_field(p);
  if (p.B && *p.B != star)
    throw ConfigError("field mode requires B = 2 M omega / e = " + sqes::to_string(star) + ", got " + sqes::to_string(*p.B));
  p.B = star;
  return p;
}

/// E = +-sqrt(M^2 c^4 + eps^2), or a subcritical flag when that is negative.
struct SpectralValue {
  Rational epsilon_squared;
  bool subcritical = false;
  bool exact = false;         // E is exactly rational
  Rational energy;            // +E (exact, or floor-approximated to `digits`)
  int digits = 0;

  std::optional<std::pair<Rational, Rational>> energy_pair() const {
    if (subcritical) return std::nullopt;
    return std::make_pair(energy, Rational(-energy));
  }
};

inline SpectralValue energy_from_epsilon2(const PhysicalParams& p, const Rational& x, int digits = 50) {
  SpectralValue v;
  v.epsilon_squared = x;
  v.digits = digits;
  const Rational e2 = p.rest_energy_squared() + x;
  if (e2 < 0) {
    v.subcritical = true;
    return v;
  }
  if (auto root = exact_sqrt(e2)) {
    v.exact = true;
    v.energy = *root;
  } else {
    v.energy = sqrt_floor(e2, digits + 2);
  }
  return v;
}

}  // namespace sqes::model
