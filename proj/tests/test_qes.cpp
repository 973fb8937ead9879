#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "sqes/qes/checks.hpp"
#include "sqes/qes/tables.hpp"
#include "sqes/qes/wavefunction.hpp"

using namespace sqes;
using namespace sqes::qes;
using model::PhysicalParams;

namespace {

RationalPoly X() { return RationalPoly::x(); }
RationalPoly C(const Rational& c) { return RationalPoly(c); }

PhysicalParams random_params(std::mt19937& rng, bool positive_q = true) {
  std::uniform_int_distribution<int> d(1, 9);
  PhysicalParams p;
  p.M = Rational(d(rng), d(rng));
  p.c = Rational(d(rng), d(rng));
  p.hbar = Rational(d(rng), d(rng));
  p.omega = Rational(d(rng), d(rng));
  p.q = Rational(d(rng), d(rng));
  if (!positive_q && d(rng) % 2) p.q = -p.q;
  return p;
}

// det(x - M) for the tridiagonal matrix of the printed field rho-equation on
// span{1..rho^j}: -rho D^2 + (j+1 - eta2 rho^2) D + eta2 j rho sends rho^k to
// k(j+2-k) rho^(k-1) + eta2 (j-k) rho^(k+1).
RationalPoly field_oracle(int j, const Rational& eta2) {
  RationalPoly prev(Rational(1)), cur = X();
  if (j == 0) return cur;
  for (int k = 1; k <= j; ++k) {
    const Rational up = Rational(k * (j + 2 - k)), down = eta2 * (j - k + 1);
    RationalPoly next = X() * cur - C(up * down) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Same for the printed free equation in the physical variable; its diagonal
// is w k - w (m - 1).
RationalPoly free_oracle(int j, const Rational& w, const Rational& eta2) {
  auto diag = [&](int k) { return w * k - w * (j + 1); };
  RationalPoly prev(Rational(1)), cur = X() - C(diag(0));
  for (int k = 1; k <= j; ++k) {
    const Rational up = Rational(k * (j + 2 - k)), down = eta2 * (j - k + 1);
    RationalPoly next = (X() - C(diag(k))) * cur - C(up * down) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> eigen_roots(const RationalPoly& p) {
  const int n = p.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -to_long_double(p.coeff(i) / p.leading());
  Eigen::VectorXcd ev = comp.eigenvalues();
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(ev(i).real());
  std::sort(out.begin(), out.end());
  return out;
}

RationalPoly derived_critical(const PhysicalParams& p, int j, Mode mode, bool physical = false) {
  auto d = derived_auto(p, j, mode);
  return polynomial_family(physical ? d.rec.in_physical_variable() : d.rec, Normalization::Monic).critical();
}

}  // namespace

TEST(Sl2, GeneratorActions) {
  EXPECT_TRUE(opcalc::apply(sl2_generators(2).plus, RationalPoly::monomial(2)).is_zero());
  EXPECT_TRUE(opcalc::apply(sl2_generators(0).zero, RationalPoly(Rational(1))).is_zero());
  EXPECT_THROW(sl2_generators(-1), DomainError);
}

TEST(Sl2, CommutationRelationsExactUpToTwelve) {
  for (int j = 0; j <= 12; ++j) {
    const auto s = sl2_generators(j);
    EXPECT_TRUE((opcalc::commutator(s.zero, s.plus) - s.plus).is_zero());
    EXPECT_TRUE((opcalc::commutator(s.zero, s.minus) + s.minus).is_zero());
    const DiffOperator casimir_check = opcalc::commutator(s.plus, s.minus) + Rational(2) * s.zero;
    EXPECT_TRUE(casimir_check.is_zero());
    for (int k = 0; k <= 2 * j; ++k)
      EXPECT_TRUE(opcalc::apply(casimir_check, RationalPoly::monomial(k)).is_zero());
  }
}

TEST(TOperator, PreservesModule) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 5; ++trial) {
    PhysicalParams p = random_params(rng);
    for (int j = 0; j <= 12; ++j) {
      auto m = opcalc::monomial_matrix(build_T(p, j), j);
      EXPECT_EQ(m.size(), static_cast<size_t>(j + 1));
    }
  }
  PhysicalParams unit;
  EXPECT_EQ(opcalc::monomial_matrix(build_T(unit, 0), 0).size(), 1u);
  EXPECT_THROW(opcalc::monomial_matrix(build_T(unit, 1), 2), RepresentationError);
  unit.q = 0;
  EXPECT_THROW(build_T(unit, 1), DomainError);
}

// With the printed offset the T eigenvalues do not reproduce the derived
// critical roots; they do after q -> -q with lambda = eps^2 + 2Mc^2hbar omega (j+2).
TEST(TOperator, CrossPathWithDerivedCriticalPolynomial) {
  PhysicalParams unit;
  auto r1 = cross_path(unit, 1);
  EXPECT_EQ(r1.t_charpoly, X() * X() + C(28));
  EXPECT_EQ(r1.derived_critical, (X() - C(8)) * (X() + C(4)));
  EXPECT_FALSE(r1.literal_match);
  EXPECT_TRUE(r1.reflected_match);

  std::mt19937 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    PhysicalParams p = random_params(rng, false);
    const Rational w = 4 * p.oscillator_unit();
    for (int j = 0; j <= 6; ++j) {
      auto r = cross_path(p, j);
      EXPECT_TRUE(r.reflected_match) << "j=" << j;
      EXPECT_EQ(r.implied_offset, w * (j + 2) / 2);
      if (j >= 1) {
        EXPECT_FALSE(r.literal_match) << "j=" << j;
      }
    }
  }
}

TEST(PaperRecurrence, FieldFirstRowAndFree) {
  PhysicalParams unit;
  auto field = paper_recurrence(unit, 3, Mode::Field);
  auto fam = polynomial_family(field, Normalization::Monic);
  EXPECT_EQ(fam.P[0], C(1));
  EXPECT_EQ(fam.P[1], X());
  auto as_printed = polynomial_family(field, Normalization::AsPrinted);
  EXPECT_EQ(as_printed.P[1], X() * Rational(1, 16));  // eta^2 P_1 = x P_0

  auto free = paper_recurrence(unit, 2, Mode::Free);
  EXPECT_EQ(free.degenerate_rows(), std::vector<int>{2});
  try {
    polynomial_family(free, Normalization::AsPrinted);
    FAIL() << "expected degenerate row";
  } catch (const DegenerateRecurrence& e) {
    EXPECT_EQ(e.row(), 2);
  }
}

TEST(PaperRecurrence, FreeMonicFamilyMatchesDerived) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 4; ++trial) {
    PhysicalParams p = random_params(rng);
    for (int j = 0; j <= 5; ++j)
      EXPECT_EQ(polynomial_family(paper_recurrence(p, j, Mode::Free), Normalization::Monic).critical(),
                derived_critical(p, j, Mode::Free, true));
  }
}

TEST(PaperRecurrence, FieldDivergesFromTableFromSecondOrder) {
  PhysicalParams unit;
  const Rational eta2 = 16;
  auto crit = [&](int j) { return polynomial_family(paper_recurrence(unit, j, Mode::Field), Normalization::Monic).critical(); };
  EXPECT_EQ(crit(0), X());
  EXPECT_EQ(crit(1), X() * X() - C(2 * eta2));
  // printed recurrence gives x^3 - 7 eta^2 x where the table has -10 eta^2 x
  EXPECT_EQ(crit(2), X() * X() * X() - C(7 * eta2) * X());
}

TEST(DerivedRecurrence, SpecExamples) {
  PhysicalParams unit;
  EXPECT_EQ(derived_critical(unit, 1, Mode::Field), X() * X() - C(32));
  EXPECT_EQ(derived_critical(unit, 1, Mode::Free, true), (X() + C(4)) * (X() + C(8)) - C(32));
  const RationalPoly x2 = X() * X();
  EXPECT_EQ(derived_critical(unit, 3, Mode::Field), x2 * x2 - C(30 * 16) * x2 + C(72 * 256));
}

TEST(DerivedRecurrence, CoefficientsInTheRowIndex) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    PhysicalParams p = random_params(rng, false);
    const Rational w = 4 * p.oscillator_unit(), eta2 = model::eta_squared(p).value;
    for (int j = 0; j <= 6; ++j)
      for (Mode mode : {Mode::Free, Mode::Field}) {
        auto d = derived_auto(p, j, mode);
        auto phys = d.rec.in_physical_variable();
        for (int k = 0; k <= j; ++k) {
          EXPECT_EQ(d.rec.alpha_at(k), Rational((k + 1) * (j + 1 - k)));
          EXPECT_EQ(d.rec.gamma_at(k), eta2 * (j - k + 1));
          if (mode == Mode::Free) EXPECT_EQ(phys.beta_at(k), -w * (j + 1 - k));
          else EXPECT_EQ(d.rec.beta_at(k), 0);
        }
        EXPECT_EQ(d.rec.truncation_degree(), j);
        EXPECT_TRUE(d.rec.degenerate_rows().empty());
      }
  }
}

TEST(DerivedRecurrence, AgreesWithHandBuiltTridiagonalDeterminant) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    PhysicalParams p = random_params(rng, false);
    const Rational w = 4 * p.oscillator_unit(), eta2 = model::eta_squared(p).value;
    for (int j = 0; j <= 8; ++j) {
      EXPECT_EQ(derived_critical(p, j, Mode::Field), field_oracle(j, eta2));
      EXPECT_EQ(derived_critical(p, j, Mode::Free, true), free_oracle(j, w, eta2));
    }
  }
}

TEST(DerivedRecurrence, LedgerMatchesDirectConstant) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    PhysicalParams p = random_params(rng);
    for (int j = 0; j <= 4; ++j) {
      auto field = derived_auto(p, j, Mode::Field);
      EXPECT_EQ(field.ledger.shift, model::potential_constant(p, j + 2, Mode::Field));
      auto free = derived_auto(p, j, Mode::Free);
      // gaussian part contributes c^2 hbar b (1 + 2s)
      const auto& g = free.gauge;
      EXPECT_EQ(free.ledger.shift,
                model::potential_constant(p, j + 2, Mode::Free) + p.c * p.c * p.hbar * g.b * (1 + 2 * g.s));
      EXPECT_EQ(free.ledger.shift, -4 * p.oscillator_unit() * (j + 1));
    }
  }
}

TEST(PolynomialFamily, FieldTableEntries) {
  PhysicalParams unit;
  const Rational t = 16;
  auto fam2 = polynomial_family(derived_auto(unit, 2, Mode::Field).rec, Normalization::Monic);
  EXPECT_EQ(fam2.P[0], C(1));
  EXPECT_EQ(fam2.P[3], X() * X() * X() - C(10 * t) * X());
  auto fam4 = polynomial_family(derived_auto(unit, 4, Mode::Field).rec, Normalization::Monic);
  RationalPoly x = X(), x3 = x * x * x;
  EXPECT_EQ(fam4.P[5], x3 * x * x - C(70 * t) * x3 + C(712 * t * t) * x);
  for (int k = 0; k <= 5; ++k) {
    EXPECT_EQ(fam4.P[k].degree(), k);
    EXPECT_TRUE(has_degree_parity(fam4.P[k]));
  }
}

TEST(Roots, SpecExamples) {
  PhysicalParams unit;
  auto r0 = critical_roots(derived_critical(unit, 0, Mode::Field), 50);
  ASSERT_EQ(r0.size(), 1u);
  EXPECT_TRUE(r0[0].exact());
  EXPECT_EQ(r0[0].lo, 0);

  auto r1 = critical_roots(derived_critical(unit, 1, Mode::Field), 50);
  ASSERT_EQ(r1.size(), 2u);
  const long double s32 = std::sqrt(32.0L);
  EXPECT_NEAR(to_long_double(r1[0].midpoint()), -s32, 1e-15);
  EXPECT_NEAR(to_long_double(r1[1].midpoint()), s32, 1e-15);
  EXPECT_EQ(to_decimal(r1[1].midpoint(), 14), "5.65685424949238");
  for (const auto& r : r1) EXPECT_LT(r.width(), Rational(1, pow10(50)));
  // exact check: 32 lies between the squared endpoints
  EXPECT_LE(r1[1].lo * r1[1].lo, 32);
  EXPECT_GE(r1[1].hi * r1[1].hi, 32);

  auto r3 = critical_roots(derived_critical(unit, 3, Mode::Field), 30);
  ASSERT_EQ(r3.size(), 4u);
  const long double big = std::sqrt((15 + std::sqrt(153.0L)) * 16), small = std::sqrt((15 - std::sqrt(153.0L)) * 16);
  EXPECT_NEAR(to_long_double(r3[3].midpoint()), big, 1e-14);
  EXPECT_NEAR(to_long_double(r3[2].midpoint()), small, 1e-14);
  EXPECT_NEAR(to_long_double(r3[0].midpoint()), -big, 1e-14);
  EXPECT_NEAR(to_long_double(r3[1].midpoint()), -small, 1e-14);
}

TEST(Roots, RationalRootsComeOutExact) {
  auto r = isolate_real_roots((X() - C(8)) * (X() + C(4)) * (X() - C(Rational(-7, 3))) * (X() * X() - C(2)), 40);
  ASSERT_EQ(r.size(), 5u);
  const std::vector<Rational> exact{-4, Rational(-7, 3), 8};
  int hits = 0;
  for (const auto& e : r)
    if (e.exact()) {
      EXPECT_EQ(e.lo, exact[static_cast<size_t>(hits)]);
      ++hits;
    }
  EXPECT_EQ(hits, 3);
  EXPECT_EQ(simplest_between(Rational(31, 10), Rational(33, 10)), Rational(13, 4));
  EXPECT_EQ(simplest_between(Rational(-12, 5), Rational(-9, 4)), Rational(-7, 3));
  EXPECT_EQ(simplest_between(Rational(-1, 3), Rational(1, 7)), 0);
}

TEST(Roots, NonRealRootsAreReported) {
  const RationalPoly p = X() * X() + C(28);
  try {
    critical_roots(p, 20);
    FAIL() << "expected violation";
  } catch (const RootPropertyViolation& e) {
    EXPECT_EQ(e.polynomial(), "x^2 + 28");
  }
  EXPECT_THROW(critical_roots(X() * X(), 20), RootPropertyViolation);
}

TEST(Roots, RealSimpleInterlacingSymmetricUpToEight) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 3; ++trial) {
    PhysicalParams p = random_params(rng);
    for (int j = 0; j <= 8; ++j)
      for (Mode mode : {Mode::Free, Mode::Field}) {
        auto fam = polynomial_family(derived_auto(p, j, mode).rec, Normalization::Monic);
        auto roots = critical_roots(fam.critical(), 50);
        ASSERT_EQ(roots.size(), static_cast<size_t>(j + 1));
        EXPECT_EQ(distinct_real_roots(fam.critical()), j + 1);
        EXPECT_TRUE(interlaces(fam.P[static_cast<size_t>(j)], fam.critical(), roots)) << j;
        for (size_t i = 1; i < roots.size(); ++i) EXPECT_LT(roots[i - 1].hi, roots[i].lo);
        if (mode == Mode::Field) {
          EXPECT_TRUE(has_degree_parity(fam.critical()));
          EXPECT_TRUE(symmetric_about_zero(roots));
        }
        // floating cross-check against companion-matrix eigenvalues
        auto approx = eigen_roots(fam.critical());
        for (size_t i = 0; i < roots.size(); ++i) {
          const double exact = static_cast<double>(to_long_double(roots[i].midpoint()));
          EXPECT_NEAR(approx[i], exact, 1e-6 * (1 + std::abs(exact)));
        }
      }
  }
}

TEST(Roots, InterlacingRejectsBadPairs) {
  const RationalPoly upper = (X() - C(1)) * (X() - C(2)) * (X() - C(3));
  auto roots = isolate_real_roots(upper, 10);
  EXPECT_TRUE(interlaces((X() - C(Rational(3, 2))) * (X() - C(Rational(5, 2))), upper, roots));
  EXPECT_FALSE(interlaces((X() - C(Rational(3, 2))) * (X() - C(Rational(7, 4))), upper, roots));
  EXPECT_FALSE(interlaces((X() - C(1)) * (X() - C(Rational(5, 2))), upper, roots));
}

TEST(Spectrum, FreeGroundLevels) {
  PhysicalParams unit;
  auto s = spectrum(unit, 0, Mode::Free);
  ASSERT_EQ(s.roots.size(), 1u);
  EXPECT_EQ(s.roots[0].reduced.lo, 0);
  EXPECT_TRUE(s.roots[0].physical.exact());
  EXPECT_EQ(s.roots[0].physical.lo, -4);

  PhysicalParams heavy;
  heavy.M = 5;  // M c^2 = 5, hbar omega = 1
  auto h = spectrum(heavy, 0, Mode::Free);
  EXPECT_EQ(h.roots[0].physical.lo, -20);
  ASSERT_TRUE(h.roots[0].energy.energy_pair());
  EXPECT_FALSE(h.roots[0].energy.subcritical);
  const Rational e = h.roots[0].energy.energy;
  EXPECT_LE(e * e, 5);
  EXPECT_GT(e * e, 5 - Rational(1, pow10(48)));
}

TEST(Spectrum, FieldGroundLevelLedger) {
  PhysicalParams unit;
  auto s = spectrum(unit, 0, Mode::Field);
  ASSERT_EQ(s.roots.size(), 1u);
  EXPECT_EQ(s.roots[0].reduced.lo, 0);
  EXPECT_EQ(s.ledger.shift, model::potential_constant(unit, 2, Mode::Field));
  EXPECT_EQ(s.roots[0].physical.lo, -4);
  EXPECT_EQ(s.roots[0].coefficients, std::vector<Rational>{1});
}

TEST(Spectrum, CoefficientsSolveTruncatedSystem) {
  PhysicalParams unit;
  auto s = spectrum(unit, 3, Mode::Field, {SpectrumSource::Derived, GaugePolicy::Auto, 0, 60, {}});
  for (const auto& root : s.roots) {
    // row j of the recurrence closes: x f_j = beta_j f_j + gamma_j f_{j-1} up to enclosure width
    const Rational x = root.reduced.midpoint();
    const auto& f = root.coefficients;
    const Rational row = x * f[3] - s.rec.beta_at(3) * f[3] - s.rec.gamma_at(3) * f[2];
    EXPECT_LT(abs(row), Rational(1, pow10(50)));
  }
}

TEST(Spectrum, PaperSourceFree) {
  PhysicalParams unit;
  auto s = spectrum(unit, 1, Mode::Free, {SpectrumSource::Paper, GaugePolicy::Auto, 0, 40, {}});
  auto d = spectrum(unit, 1, Mode::Free);
  ASSERT_EQ(s.roots.size(), 2u);
  for (size_t i = 0; i < 2; ++i) EXPECT_LT(abs(s.roots[i].physical.midpoint() - d.roots[i].physical.midpoint()), Rational(1, pow10(38)));
}

TEST(QuotientRing, ResidualVanishesBothModes) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 2; ++trial) {
    PhysicalParams p = random_params(rng, false);
    for (int j = 0; j <= 6; ++j)
      for (Mode mode : {Mode::Free, Mode::Field}) {
        auto d = derived_auto(p, j, mode);
        EXPECT_TRUE(residual_vanishes(quotient_residual(d.rho_operator, d.rec))) << j;
      }
  }
}

TEST(QuotientRing, DetectsAPerturbedOperator) {
  PhysicalParams unit;
  auto d = derived_auto(unit, 2, Mode::Field);
  DiffOperator bad = d.rho_operator + DiffOperator::multiply(LaurentPoly::monomial(1, 1));
  EXPECT_FALSE(residual_vanishes(quotient_residual(bad, d.rec)));
}

TEST(GaugeSearch, PrintedEquationsAreReproduced) {
  PhysicalParams unit;
  for (int j = 0; j <= 3; ++j) {
    auto field = gauge_search(unit, j, Mode::Field);
    bool printed = false;
    for (const auto& c : field)
      if (c.printed == PrintedMatch::Reduced) {
        printed = true;
        EXPECT_EQ(c.gauge.s, Rational(1, 2) - (j + 2));
        EXPECT_EQ(c.gauge.b, 0);
        EXPECT_EQ(c.gauge.a, -1);
        EXPECT_EQ(c.normalizability, Normalizability::DivergentAtBoth);
      }
    EXPECT_TRUE(printed);

    auto free = gauge_search(unit, j, Mode::Free);
    printed = false;
    for (const auto& c : free)
      if (c.printed == PrintedMatch::Physical) {
        printed = true;
        EXPECT_EQ(c.gauge.b, 1);
        EXPECT_EQ(c.gauge.a, -1);
      }
    EXPECT_TRUE(printed);
  }
}

TEST(GaugeSearch, RegularDecayingCandidateIsDiagnosed) {
  PhysicalParams unit;
  auto field = gauge_search(unit, 1, Mode::Field);
  const GaugeCandidate* regular = nullptr;
  for (const auto& c : field)
    if (c.gauge.s == Rational(7, 2) && c.gauge.a == 1 && c.gauge.b == 0) regular = &c;
  ASSERT_NE(regular, nullptr);
  EXPECT_EQ(regular->normalizability, Normalizability::Normalizable);
  // either rejected with a reason or accepted without truncation at j
  if (regular->accepted)
    EXPECT_FALSE(regular->truncation && *regular->truncation == 1);
  else
    EXPECT_FALSE(regular->diagnostic.empty());
  EXPECT_EQ(field.size(), 12u);
}

TEST(Wavefunction, FieldGroundState) {
  PhysicalParams unit;
  auto s = spectrum(unit, 0, Mode::Field);
  auto wf = wavefunction(s, 0);
  EXPECT_EQ(wf.P, C(1));
  EXPECT_EQ(wf.gauge.s, Rational(-3, 2));
  EXPECT_EQ(wf.gauge.a, -1);
  EXPECT_EQ(wf.classification, Normalizability::DivergentAtBoth);
  EXPECT_NEAR(static_cast<double>(wf(1.0L)), std::exp(0.25), 1e-15);
  EXPECT_THROW(wavefunction(s, 1), ConfigError);
}

TEST(Wavefunction, OscillatorReferenceIsNormalizable) {
  RadialWavefunction wf;
  wf.gauge = GaugeAnsatz{Rational(5, 2), 1, 0, 1};
  wf.P = C(1);
  EXPECT_EQ(wf.gauge.classify(), Normalizability::Normalizable);
  EXPECT_NEAR(static_cast<double>(wf(2.0L)), std::pow(2.0, 2.5) * std::exp(-2.0), 1e-14);
}

TEST(Tables, HardEntriesMatchExactly) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(compare_with_table(Mode::Free, n).match) << "free P" << n;
  for (int n = 1; n <= 5; ++n) EXPECT_TRUE(compare_with_table(Mode::Field, n).match) << "field P" << n;
}

TEST(Tables, ReportOnlyEntriesProduceVerdicts) {
  auto p4 = compare_with_table(Mode::Free, 4);
  EXPECT_FALSE(p4.hard);
  EXPECT_TRUE(p4.match);
  for (int n = 6; n <= 8; ++n) EXPECT_TRUE(compare_with_table(Mode::Field, n).match) << n;
  auto p9 = compare_with_table(Mode::Field, 9);
  bool saw = false;
  for (const auto& t : p9.terms)
    if (t.monomial == Monomial{1, 0, 4}) {
      saw = true;
      EXPECT_EQ(*t.paper, 88504707);
      ASSERT_TRUE(t.derived);
      EXPECT_FALSE(t.match);
      EXPECT_EQ(*t.derived, 88504704);
    }
  EXPECT_TRUE(saw);
  // every other term of P_9 agrees
  int mismatches = 0;
  for (const auto& t : p9.terms) mismatches += !t.match;
  EXPECT_EQ(mismatches, 1);
}

TEST(Tables, Rendering) {
  EXPECT_EQ(render(paper_table(Mode::Field, 5), Mode::Field, true), "x⁵ − 70η²x³ + 712η⁴x");
  EXPECT_EQ(render(paper_table(Mode::Field, 2), Mode::Field, false), "x^2 - 2 eta^2");
  EXPECT_EQ(render(paper_table(Mode::Free, 1), Mode::Free, true), "x + 4(Mc²ħω)");
}
