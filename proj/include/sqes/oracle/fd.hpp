#pragma once

// Second-order finite differences on a Dirichlet grid, Sturm-count bisection
// and Richardson refinement.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "sqes/oracle/problem.hpp"

namespace sqes::oracle {

struct Grid {
  long double r_max = 0;
  int N = 0;  // interior nodes r_i = i h, i = 1 .. N-1

  long double h() const { return r_max / N; }
  void validate() const {
    if (!(r_max > 0)) throw DomainError("grid: r_max must be positive");
    if (N < 64) throw DomainError("grid: N must be at least 64");
  }
  Grid refined(int factor) const { return {r_max, N * factor}; }
};

struct Tridiagonal {
  std::vector<long double> diag;
  std::vector<long double> off;  // off[i] couples i and i+1
  long double spacing = 0;

  size_t size() const { return diag.size(); }
};

inline Tridiagonal discretize(const Problem& p, const Grid& g) {
  g.validate();
  const PotentialEvaluator U(p);
  const long double h = g.h();
  const long double k = U.kinetic() / (h * h);
  Tridiagonal t;
  t.spacing = h;
  t.diag.resize(static_cast<size_t>(g.N - 1));
  t.off.assign(static_cast<size_t>(g.N - 2), -k);
  for (int i = 1; i < g.N; ++i) {
    const long double u = U(i * h);
    if (!std::isfinite(u))
      throw DomainError("potential overflows at r = " + std::to_string(static_cast<double>(i * h)) +
                        "; try a smaller r_max");
    t.diag[static_cast<size_t>(i - 1)] = 2 * k + u;
  }
  return t;
}

/// Number of eigenvalues strictly below x (LDL^T inertia).
inline int sturm_count(const Tridiagonal& t, long double x) {
  const long double tiny = std::numeric_limits<long double>::min() * 1e10L;
  int count = 0;
  long double q = 1;
  for (size_t i = 0; i < t.size(); ++i) {
    const long double e2 = i == 0 ? 0 : t.off[i - 1] * t.off[i - 1];
    q = t.diag[i] - x - (i == 0 ? 0 : e2 / q);
    if (q == 0) q = -tiny;
    if (q < 0) ++count;
  }
  return count;
}

inline std::pair<long double, long double> gershgorin(const Tridiagonal& t) {
  long double lo = std::numeric_limits<long double>::max(), hi = std::numeric_limits<long double>::lowest();
  for (size_t i = 0; i < t.size(); ++i) {
    long double r = (i > 0 ? std::abs(t.off[i - 1]) : 0) + (i < t.off.size() ? std::abs(t.off[i]) : 0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

/// Lowest `count` eigenvalues, each bisected to relative width `rel_tol`.
inline std::vector<long double> eigenvalues_bisection(const Tridiagonal& t, int count, long double rel_tol = 1e-13L) {
  if (count < 0 || static_cast<size_t>(count) > t.size())
    throw DomainError("eigenvalues_bisection: count exceeds the dimension");
  auto [glo, ghi] = gershgorin(t);
  std::vector<long double> out;
  long double floor_lo = glo;
  for (int k = 0; k < count; ++k) {
    long double lo = floor_lo, hi = ghi;  // count(lo) <= k < count(hi)
    while (hi - lo > rel_tol * std::max({std::abs(lo), std::abs(hi), 1e-30L})) {
      const long double mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(t, mid) > k)
        hi = mid;
      else
        lo = mid;
    }
    out.push_back(lo + (hi - lo) / 2);
    floor_lo = lo;
  }
  return out;
}

struct ConvergenceRecord {
  long double E_h = 0, E_h2 = 0, E_h4 = 0;
  long double richardson = 0;  // two-level extrapolant
  long double order = 0;       // observed order
  long double value = 0;
  long double error = 0;
  bool flagged = false;
};

struct OracleSpectrum {
  Problem problem;
  Grid grid;
  std::vector<ConvergenceRecord> levels;

  std::vector<long double> values() const {
    std::vector<long double> v;
    for (const auto& l : levels) v.push_back(l.value);
    return v;
  }
};

/// Solves at h, h/2, h/4; eliminates h^2 then h^4 by Richardson extrapolation.
inline OracleSpectrum refine(const Problem& p, int count, const Grid& base) {
  const Tridiagonal t1 = discretize(p, base), t2 = discretize(p, base.refined(2)), t4 = discretize(p, base.refined(4));
  const auto e1 = eigenvalues_bisection(t1, count), e2 = eigenvalues_bisection(t2, count),
             e4 = eigenvalues_bisection(t4, count);
  OracleSpectrum s;
  s.problem = p;
  s.grid = base;
  const long double eps = std::numeric_limits<long double>::epsilon();
  const auto [glo, ghi] = gershgorin(t4);
  const long double rounding = 64 * eps * std::max(std::abs(glo), std::abs(ghi));
  for (int k = 0; k < count; ++k) {
    ConvergenceRecord c;
    c.E_h = e1[static_cast<size_t>(k)];
    c.E_h2 = e2[static_cast<size_t>(k)];
    c.E_h4 = e4[static_cast<size_t>(k)];
    const long double r1 = (4 * c.E_h2 - c.E_h) / 3, r2 = (4 * c.E_h4 - c.E_h2) / 3;
    c.richardson = r2;
    c.value = r2 + (r2 - r1) / 15;
    const long double d1 = c.E_h - c.E_h2, d2 = c.E_h2 - c.E_h4;
    const long double noise = rounding + 1e-13L * std::abs(c.E_h4);
    if (std::abs(d2) <= 4 * noise) {
      c.order = std::numeric_limits<long double>::quiet_NaN();  // converged below resolution
    } else {
      c.order = std::log2(std::abs(d1 / d2));
      c.flagged = (d1 > 0) != (d2 > 0) || c.order < 1.7L || c.order > 2.3L;
    }
    c.error = std::abs(r2 - r1) + 4 * noise;
    s.levels.push_back(c);
  }
  for (size_t k = 1; k < s.levels.size(); ++k)
    if (!(s.levels[k].value > s.levels[k - 1].value)) s.levels[k].flagged = s.levels[k - 1].flagged = true;
  return s;
}

/// Smallest r_max (grown geometrically) with r_max >= 1.5 x the outer turning
/// point of the highest sought level and U(r_max) - U_min >= margin (E_max - U_min).
inline long double choose_r_max(const Problem& p, int count, long double margin = 4) {
  const PotentialEvaluator U(p);
  long double r = 4;
  for (int iter = 0; iter < 40; ++iter) {
    const Grid coarse{r, 2048};
    const auto e = eigenvalues_bisection(discretize(p, coarse), count, 1e-9L);
    const long double e_max = e.back();
    long double u_min = std::numeric_limits<long double>::max(), turning = 0;
    for (int i = 1; i < coarse.N; ++i) {
      const long double x = i * coarse.h(), u = U(x);
      u_min = std::min(u_min, u);
      if (u <= e_max) turning = x;
    }
    long double need = 1.5L * turning;
    const long double level = u_min + margin * (e_max - u_min);
    long double x = std::max(turning, coarse.h());
    while (U(x) < level && x < 1e6L) x *= 1.01L;
    need = std::max(need, x);
    if (need <= r) return r;
    r = need * 1.1L;
  }
  throw DomainError("choose_r_max: potential does not confine the requested levels");
}

}  // namespace sqes::oracle
