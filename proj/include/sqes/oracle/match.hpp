#pragma once

// Nearest-neighbour comparison of QES roots (mapped to physical eps^2) against
// oracle eigenvalues.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "sqes/oracle/fd.hpp"
#include "sqes/qes/spectrum.hpp"

namespace sqes::oracle {

enum class Verdict { Matched, Unmatched };

inline const char* to_string(Verdict v) { return v == Verdict::Matched ? "MATCHED" : "UNMATCHED"; }

struct RootMatch {
  long double qes = 0;
  std::optional<int> nearest;  // index into the oracle levels; empty if all are flagged
  long double oracle = 0;
  long double oracle_error = 0;
  long double gap = 0;       // oracle - qes
  long double relative = 0;  // |gap| / max(|qes|, |oracle|, 1)
  Verdict verdict = Verdict::Unmatched;
};

struct MatchReport {
  long double tol = 1e-4L;
  Rational ledger_shift;
  std::string gauge;  // provenance of the QES side
  std::vector<RootMatch> roots;

  int matched() const {
    int n = 0;
    for (const auto& r : roots) n += r.verdict == Verdict::Matched;
    return n;
  }
};

/// Core matcher on plain lists. Flagged oracle values never match.
inline std::vector<RootMatch> match_values(const std::vector<long double>& qes, const std::vector<long double>& oracle,
                                           const std::vector<long double>& errors, const std::vector<bool>& flagged,
                                           long double tol) {
  std::vector<RootMatch> out;
  for (long double x : qes) {
    RootMatch m;
    m.qes = x;
    for (size_t i = 0; i < oracle.size(); ++i) {
      if (i < flagged.size() && flagged[i]) continue;
      if (!m.nearest || std::abs(oracle[i] - x) < std::abs(m.oracle - x)) {
        m.nearest = static_cast<int>(i);
        m.oracle = oracle[i];
        m.oracle_error = i < errors.size() ? errors[i] : 0;
      }
    }
    if (m.nearest) {
      m.gap = m.oracle - x;
      m.relative = std::abs(m.gap) / std::max({std::abs(x), std::abs(m.oracle), 1.0L});
      m.verdict = m.relative <= tol ? Verdict::Matched : Verdict::Unmatched;
    }
    out.push_back(m);
  }
  return out;
}

inline MatchReport match_report(const qes::QesSpectrum& q, const OracleSpectrum& o, long double tol = 1e-4L) {
  if (o.problem.kind != PotentialKind::Physical || o.problem.mode != q.mode || o.problem.m != q.m ||
      !(o.problem.params == q.params))
    throw ConfigError("match_report: oracle and QES spectra describe different problems");
  MatchReport r;
  r.tol = tol;
  r.ledger_shift = q.ledger.shift;
  r.gauge = q.gauge ? opcalc::describe(*q.gauge) : std::string("paper recurrence");
  std::vector<long double> xs, vals, errs;
  std::vector<bool> flags;
  for (const auto& root : q.roots) xs.push_back(to_long_double(root.physical.midpoint()));
  for (const auto& l : o.levels) {
    vals.push_back(l.value);
    errs.push_back(l.error);
    flags.push_back(l.flagged);
  }
  r.roots = match_values(xs, vals, errs, flags, tol);
  return r;
}

}  // namespace sqes::oracle
