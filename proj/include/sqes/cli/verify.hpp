#pragma once

// The invariant suite behind `sqes verify`.

#include <chrono>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sqes/cli/format.hpp"
#include "sqes/oracle/residual.hpp"
#include "sqes/oracle/shoot.hpp"
#include "sqes/qes/checks.hpp"
#include "sqes/qes/tables.hpp"
#include "sqes/qes/wavefunction.hpp"

namespace sqes::cli {

enum class Status { Pass, Fail, Skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  bool fast = false;          // skip the numerical oracle
  bool inject_fault = false;  // flip a sign in the derived operator (negative control)
};

namespace checks {

using model::Mode;
using model::PhysicalParams;
using opcalc::DiffOperator;

inline model::PhysicalParams random_tuple(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(1, 9);
  PhysicalParams p;
  p.M = Rational(d(rng), d(rng));
  p.c = Rational(d(rng), d(rng));
  p.hbar = Rational(d(rng), d(rng));
  p.omega = Rational(d(rng), d(rng));
  p.q = Rational(d(rng), d(rng));
  return p;
}

/// Empty string on success, otherwise the first failure.
inline std::string sl2_relations(int max_j) {
  for (int j = 0; j <= max_j; ++j) {
    const auto s = qes::sl2_generators(j);
    if (!(opcalc::commutator(s.zero, s.plus) - s.plus).is_zero()) return "[J0,J+] != J+ at j=" + std::to_string(j);
    if (!(opcalc::commutator(s.zero, s.minus) + s.minus).is_zero()) return "[J0,J-] != -J- at j=" + std::to_string(j);
    if (!(opcalc::commutator(s.plus, s.minus) + Rational(2) * s.zero).is_zero())
      return "[J+,J-] != -2 J0 at j=" + std::to_string(j);
  }
  return {};
}

inline std::string t_invariance(int max_j, int tuples, unsigned seed = 12) {
  std::mt19937 rng(seed);
  for (int t = 0; t < tuples; ++t) {
    const PhysicalParams p = random_tuple(rng);
    for (int j = 0; j <= max_j; ++j) {
      try {
        opcalc::monomial_matrix(qes::build_T(p, j), j);
      } catch (const Error& e) {
        return "T leaves the module at j=" + std::to_string(j) + ": " + e.what();
      }
    }
  }
  return {};
}

inline std::string table_matches(Mode mode, int through) {
  for (int n = 1; n <= through; ++n)
    if (!qes::compare_with_table(mode, n).match)
      return std::string(model::to_string(mode)) + " P" + std::to_string(n) + " differs from the table";
  return {};
}

/// The derived operator with the sign of its zeroth-order term flipped.
inline DiffOperator faulted(const DiffOperator& op) {
  DiffOperator out;
  for (const auto& [order, coef] : op.terms())
    out += DiffOperator::term(order, order == 0 ? coef * Rational(-1) : coef);
  return out;
}

inline std::string quotient_residuals(int max_j, bool inject_fault) {
  const PhysicalParams unit;
  std::mt19937 rng(5);
  for (const PhysicalParams& p : {unit, random_tuple(rng)})
    for (Mode mode : {Mode::Free, Mode::Field})
      for (int j = 0; j <= max_j; ++j) {
        const auto d = qes::derived_auto(p, j, mode);
        const DiffOperator op = inject_fault ? faulted(d.rho_operator) : d.rho_operator;
        if (!qes::residual_vanishes(qes::quotient_residual(op, d.rec)))
          return std::string(model::to_string(mode)) + " j=" + std::to_string(j) + ": A F - x F is not 0 mod P_" +
                 std::to_string(j + 1);
      }
  return {};
}

inline long double worst_ode_residual(int max_j, int digits, std::string* where = nullptr) {
  const PhysicalParams unit;
  long double worst = 0;
  for (Mode mode : {Mode::Free, Mode::Field})
    for (int j = 0; j <= max_j; ++j) {
      qes::SpectrumOptions opt;
      opt.digits = digits;
      const auto s = qes::spectrum(unit, j, mode, opt);
      oracle::Problem prob;
      prob.params = unit;
      prob.mode = mode;
      prob.m = j + 2;
      for (int i = 0; i <= j; ++i) {
        const auto wf = qes::wavefunction(s, i);
        const long double r = oracle::residual(wf, prob, wf.eigenvalue);
        if (!(r <= worst)) {
          worst = r;
          if (where) *where = std::string(model::to_string(mode)) + " j=" + std::to_string(j) + " root " + std::to_string(i);
        }
      }
    }
  return worst;
}

inline std::string root_properties(int max_j) {
  std::mt19937 rng(9);
  const PhysicalParams unit;
  for (const PhysicalParams& p : {unit, random_tuple(rng)})
    for (Mode mode : {Mode::Free, Mode::Field})
      for (int j = 0; j <= max_j; ++j) {
        const std::string where = std::string(model::to_string(mode)) + " j=" + std::to_string(j);
        const auto fam = qes::polynomial_family(qes::derived_auto(p, j, mode).rec, qes::Normalization::Monic);
        const RationalPoly& crit = fam.critical();
        const RationalPoly& lower = fam.P[static_cast<size_t>(j)];
        std::vector<qes::RootEnclosure> roots;
        try {
          roots = qes::critical_roots(crit, 30);
        } catch (const RootPropertyViolation& e) {
          return where + ": " + e.what();
        }
        if (static_cast<int>(roots.size()) != j + 1) return where + ": wrong root count";
        if (!qes::interlaces(lower, crit, roots)) return where + ": P_j and P_{j+1} do not interlace";
        if (mode == Mode::Field && !qes::symmetric_about_zero(roots)) return where + ": roots not symmetric about 0";
      }
  return {};
}

inline std::string ledger_consistency(int max_j) {
  std::mt19937 rng(21);
  const PhysicalParams unit;
  for (const PhysicalParams& p : {unit, random_tuple(rng), random_tuple(rng)})
    for (Mode mode : {Mode::Free, Mode::Field})
      for (int j = 0; j <= max_j; ++j)
        for (const auto& c : qes::gauge_search(p, j, mode)) {
          if (!c.accepted) continue;
          if (c.derived->ledger.shift != qes::direct_ledger_shift(p, j + 2, mode, c.gauge))
            return std::string(model::to_string(mode)) + " j=" + std::to_string(j) + " gauge " +
                   opcalc::describe(c.gauge) + ": pipeline and direct shifts differ";
        }
  return {};
}

inline std::string oracle_analytic() {
  constexpr long double pi = std::numbers::pi_v<long double>;
  const auto box = oracle::refine(oracle::Problem::box(), 3, oracle::Grid{pi, 4096});
  for (int n = 1; n <= 3; ++n) {
    const auto& l = box.levels[static_cast<size_t>(n - 1)];
    if (std::abs(l.value - n * n) > 1e-8L) return "box level " + std::to_string(n) + " = " + std::to_string(static_cast<double>(l.value));
    if (!(std::abs(l.order - 2) <= 0.3L)) return "box observed order " + std::to_string(static_cast<double>(l.order));
  }
  for (int m : {2, 3}) {
    oracle::Problem p;
    p.params.q = 0;
    p.m = m;
    const oracle::Grid g{10, 4096};
    const auto s = oracle::refine(p, 3, g);
    for (int n = 0; n < 3; ++n) {
      const auto& l = s.levels[static_cast<size_t>(n)];
      if (std::abs(l.value - 4 * (n + 1)) > 1e-6L)
        return "oscillator m=" + std::to_string(m) + " level " + std::to_string(n) + " off";
      if (!(std::abs(l.order - 2) <= 0.3L)) return "oscillator observed order " + std::to_string(static_cast<double>(l.order));
      const auto sh = oracle::shoot(p, l.value, {l.value - 1, l.value + 1}, g);
      if (std::abs(sh.value - l.value) > sh.error + l.error)
        return "refine and shoot disagree at m=" + std::to_string(m) + " level " + std::to_string(n);
    }
  }
  return {};
}

}  // namespace checks

inline std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  auto run = [&](std::string name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = body();
      r.status = r.detail.empty() ? Status::Pass : Status::Fail;
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  };
  run("sl2-relations", [] { return checks::sl2_relations(12); });
  run("t-invariance", [] { return checks::t_invariance(12, 5); });
  run("free-table", [] { return checks::table_matches(model::Mode::Free, 3); });
  run("field-table", [] { return checks::table_matches(model::Mode::Field, 5); });
  run("quotient-residual", [&] { return checks::quotient_residuals(6, opt.inject_fault); });
  run("ode-residual", [] {
    std::string where;
    const long double worst = checks::worst_ode_residual(3, 50, &where);
    return worst < 1e-10L ? std::string() : "residual " + fixed(worst, 3) + " at " + where;
  });
  run("root-properties", [] { return checks::root_properties(8); });
  run("ledger-consistency", [] { return checks::ledger_consistency(4); });
  if (opt.fast) {
    out.push_back({"oracle-analytic", Status::Skipped, "--fast", 0});
  } else {
    run("oracle-analytic", [] { return checks::oracle_analytic(); });
  }
  return out;
}

}  // namespace sqes::cli
