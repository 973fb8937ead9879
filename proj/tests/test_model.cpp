#include <gtest/gtest.h>

#include <random>

#include "sqes/model/potential.hpp"

using namespace sqes;
using namespace sqes::model;

namespace {
PhysicalParams unit_params(Rational q) {
  PhysicalParams p;
  p.q = q;
  return p;
}
}  // namespace

TEST(PotentialFree, DirectSubstitution) {
  EXPECT_EQ(potential_free(unit_params(0), 2, 1), Rational(475, 100));
  EXPECT_EQ(potential_free(unit_params(1), 2, 1), Rational(375, 100));
  EXPECT_EQ(potential_free(unit_params(1), 3, 2), parse_rational("46.1875"));
  EXPECT_THROW(potential_free(unit_params(1), 2, 0), DomainError);
  EXPECT_THROW(potential_free(unit_params(1), 2, -1), DomainError);
}

TEST(PotentialFree, HarmonicLimitIdentity) {
  // q = 0, m = 2: 3.75/r^2 + r^2 for every r
  auto coeffs = potential_free_coefficients(unit_params(0), 2);
  EXPECT_EQ(coeffs, LaurentPoly::monomial(-2, Rational(15, 4)) + LaurentPoly::monomial(2, 1));
  for (int i = 1; i < 20; ++i) {
    Rational r(i, 7);
    EXPECT_EQ(potential_free(unit_params(0), 2, r), Rational(15, 4) / (r * r) + r * r);
    EXPECT_EQ(coeffs(r), potential_free(unit_params(0), 2, r));
  }
}

TEST(PotentialMagnetic, AsPrintedSign) {
  PhysicalParams p = unit_params(1);
  p.B = 2;
  EXPECT_EQ(potential_magnetic(p, 3, 1, MagneticConstant::AsPrinted), parse_rational("15.75"));
  EXPECT_EQ(potential_magnetic(p, 3, 2, MagneticConstant::AsPrinted), parse_rational("78.1875"));
  // field-consistent sign flips the 4 into -4
  EXPECT_EQ(potential_magnetic(p, 3, 1), parse_rational("7.75"));
}

TEST(PotentialMagnetic, Errors) {
  PhysicalParams p = unit_params(1);
  EXPECT_THROW(potential_magnetic(p, 3, 1), ConfigError);
  p.B = 2;
  EXPECT_THROW(potential_magnetic(p, 3, 0), DomainError);
}

TEST(PotentialMagnetic, QuarticVanishesAtQesField) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    PhysicalParams p;
    p.M = Rational(d(rng), d(rng));
    p.omega = Rational(d(rng), d(rng));
    p.q = Rational(d(rng) - 5, d(rng));
    int e = d(rng) - 5;
    p.e_charge = Rational(e == 0 ? 1 : e, d(rng));
    p.B = qes_field(p);
    for (int m = -2; m < 6; ++m) {
      EXPECT_EQ(potential_magnetic_coefficients(p, m).coeff(4), 0);
      EXPECT_EQ(potential_magnetic_coefficients(p, m, MagneticConstant::AsPrinted).coeff(4), 0);
      Rational r(d(rng), 3);
      EXPECT_EQ(potential_magnetic_coefficients(p, m)(r), potential_magnetic(p, m, r));
    }
  }
}

TEST(QesField, Values) {
  PhysicalParams p;
  EXPECT_EQ(qes_field(p), 2);
  p.e_charge = 2;
  EXPECT_EQ(qes_field(p), 1);
  p.e_charge = 1;
  p.M = Rational(1, 2);
  p.omega = 3;
  EXPECT_EQ(qes_field(p), 3);
  p.e_charge = 0;
  EXPECT_THROW(qes_field(p), DomainError);
}

TEST(EnergyMap, Examples) {
  PhysicalParams p;
  auto v = energy_from_epsilon2(p, 0);
  ASSERT_TRUE(v.energy_pair());
  EXPECT_TRUE(v.exact);
  EXPECT_EQ(v.energy_pair()->first, 1);
  EXPECT_EQ(v.energy_pair()->second, -1);

  p.M = 2;  // Mc^2 = 2
  v = energy_from_epsilon2(p, 5);
  EXPECT_TRUE(v.exact);
  EXPECT_EQ(v.energy, 3);

  p.M = 1;
  v = energy_from_epsilon2(p, -4);
  EXPECT_TRUE(v.subcritical);
  EXPECT_FALSE(v.energy_pair());
}

TEST(EnergyMap, InverseRelationHolds) {
  PhysicalParams p;
  p.M = Rational(3, 2);
  p.c = Rational(2);
  for (int i = -10; i < 30; ++i) {
    Rational x(i * 7, 3);
    auto v = energy_from_epsilon2(p, x, 40);
    if (v.subcritical) {
      EXPECT_LT(p.rest_energy_squared() + x, 0);
      continue;
    }
    Rational residual = v.energy * v.energy - p.rest_energy_squared() - x;
    if (v.exact)
      EXPECT_EQ(residual, 0);
    else
      EXPECT_LT(abs(residual), Rational(1, pow10(38)));
  }
}

TEST(EtaSquared, Values) {
  PhysicalParams p;
  EXPECT_EQ(eta_squared(p).value, 16);
  EXPECT_FALSE(eta_squared(p).degenerate);
  p.q = 2;
  EXPECT_EQ(eta_squared(p).value, 32);
  p.q = 0;
  EXPECT_EQ(eta_squared(p).value, 0);
  EXPECT_TRUE(eta_squared(p).degenerate);
}

TEST(RadialOperator, FreeHarmonic) {
  auto r = radial_operator(unit_params(0), 2, Mode::Free);
  EXPECT_FALSE(r.qes_capable);
  DiffOperator expected = DiffOperator::term(2, Rational(-1)) +
                          DiffOperator::multiply(LaurentPoly::monomial(-2, Rational(15, 4)) +
                                                 LaurentPoly::monomial(2, 1) + LaurentPoly(Rational(-2)));
  EXPECT_EQ(r.op, expected);
}

TEST(RadialOperator, FieldMode) {
  auto r2 = radial_operator(unit_params(1), 2, Mode::Field);
  EXPECT_TRUE(r2.qes_capable);
  EXPECT_EQ(*r2.params.B, 2);
  EXPECT_EQ(r2.op, DiffOperator::term(2, Rational(-1)) +
                       DiffOperator::multiply(LaurentPoly::monomial(-2, Rational(15, 4)) +
                                              LaurentPoly::monomial(6, 1) + LaurentPoly(Rational(-4))));
  auto r3 = radial_operator(unit_params(1), 3, Mode::Field);
  EXPECT_EQ(r3.op, DiffOperator::term(2, Rational(-1)) +
                       DiffOperator::multiply(LaurentPoly::monomial(-2, Rational(35, 4)) +
                                              LaurentPoly::monomial(6, 1) + LaurentPoly::monomial(2, 2) +
                                              LaurentPoly(Rational(-8))));
}

TEST(RadialOperator, FieldModeRejectsConflictingB) {
  PhysicalParams p = unit_params(1);
  p.B = 3;
  EXPECT_THROW(radial_operator(p, 2, Mode::Field), ConfigError);
}

TEST(RadialOperator, CoefficientsAreEven) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(1, 9);
  for (int trial = 0; trial < 30; ++trial) {
    PhysicalParams p;
    p.M = Rational(d(rng), d(rng));
    p.c = Rational(d(rng), d(rng));
    p.hbar = Rational(d(rng), d(rng));
    p.omega = Rational(d(rng), d(rng));
    p.q = Rational(d(rng) - 5, d(rng));
    for (Mode mode : {Mode::Free, Mode::Field}) {
      auto op = radial_operator(p, d(rng), mode).op;
      EXPECT_TRUE(op.is_even());
      for (const auto& [k, c] : op.terms())
        for (const auto& [e, v] : c.terms()) EXPECT_EQ(e % 2, 0);
    }
  }
}

TEST(RadialOperator, ConstantMatchesClosedForm) {
  PhysicalParams p;
  p.M = 3;
  p.omega = Rational(1, 2);
  p.c = 2;
  for (int m = 2; m < 6; ++m) {
    EXPECT_EQ(radial_operator(p, m, Mode::Free).op.coeff(0).coeff(0), potential_constant(p, m, Mode::Free));
    EXPECT_EQ(radial_operator(p, m, Mode::Field).op.coeff(0).coeff(0), potential_constant(p, m, Mode::Field));
    // field mode: c^2 * 4 hbar M omega (1-m)
    EXPECT_EQ(potential_constant(p, m, Mode::Field), p.c * p.c * 4 * p.hbar * p.M * p.omega * (1 - m));
  }
}

TEST(QuantumNumbers, QesIdentification) {
  auto qn = QuantumNumbers::for_qes(3);
  EXPECT_EQ(qn.m, 5);
  EXPECT_THROW(QuantumNumbers::for_qes(-1), DomainError);
  QuantumNumbers bad{4, 1};
  EXPECT_THROW(bad.require_qes(), ConfigError);
}
