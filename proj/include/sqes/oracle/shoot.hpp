#pragma once

// Independent eigenvalue check: Numerov integration from both ends, matched
// by the discrete Wronskian, root bracketed with TOMS 748.

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <optional>

#include "sqes/oracle/fd.hpp"

namespace sqes::oracle {

class NotFound : public Error {
 public:
  using Error::Error;
};

struct ShootResult {
  long double value = 0;
  long double error = 0;
  long double coarse = 0;  // at N, the value uses N and 2N
};

namespace detail {

/// Normalized Wronskian of the outward and inward Numerov solutions at the
/// node `match`. Zero exactly at eigenvalues of the discrete problem.
inline long double matching_wronskian(const Problem& p, const PotentialEvaluator& U, const Grid& g, int match,
                                      long double E) {
  const long double h = g.h(), h2 = h * h / 12;
  const long double k = U.kinetic();
  auto gfun = [&](int i) { return (U(i * h) - E) / k; };
  const int N = g.N;

  // outward from the regular Frobenius branch r^s (1 + c2 r^2)
  const long double s = to_long_double(p.regular_exponent());
  const long double c2 = p.kind == PotentialKind::Box ? -E / k / 6 : (U.constant_term() - E) / (k * (4 * s + 2));
  auto frob = [&](int i) {
    const long double r = i * h;
    return std::pow(r, s) * (1 + c2 * r * r);
  };
  long double a0 = frob(1), a1 = frob(2);
  long double ga0 = gfun(1), ga1 = gfun(2);
  for (int i = 2; i < match + 1; ++i) {
    const long double gn = gfun(i + 1);
    const long double next = (2 * a1 * (1 + 5 * h2 * ga1) - a0 * (1 - h2 * ga0)) / (1 - h2 * gn);
    a0 = a1;
    a1 = next;
    ga0 = ga1;
    ga1 = gn;
    if (std::abs(a1) > 1e300L) {
      a0 /= 1e300L;
      a1 /= 1e300L;
    }
  }
  // a0 = f_out(match), a1 = f_out(match + 1)

  // inward from the Dirichlet end f(N) = 0
  long double b1 = 0, b0 = 1e-30L;  // b1 = f(i+1), b0 = f(i), starting at i = N-1
  long double gb1 = gfun(N), gb0 = gfun(N - 1);
  for (int i = N - 1; i > match; --i) {
    const long double gp = gfun(i - 1);
    const long double prev = (2 * b0 * (1 + 5 * h2 * gb0) - b1 * (1 - h2 * gb1)) / (1 - h2 * gp);
    b1 = b0;
    b0 = prev;
    gb1 = gb0;
    gb0 = gp;
    if (std::abs(b0) > 1e300L) {
      b0 /= 1e300L;
      b1 /= 1e300L;
    }
  }
  // b0 = f_in(match), b1 = f_in(match + 1)
  const long double w = a0 * b1 - a1 * b0;
  return w / (std::hypot(a0, a1) * std::hypot(b0, b1));
}

inline int matching_node(const PotentialEvaluator& U, const Grid& g, long double E) {
  int turning = g.N / 2;
  for (int i = 1; i < g.N; ++i)
    if (U(i * g.h()) <= E) turning = i;
  return std::clamp(turning, g.N / 5, 4 * g.N / 5);
}

inline long double shoot_once(const Problem& p, const Grid& g, long double lo, long double hi, long double target) {
  const PotentialEvaluator U(p);
  const int match = matching_node(U, g, target);
  auto f = [&](long double E) { return matching_wronskian(p, U, g, match, E); };
  const long double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw NotFound("no sign change of the matching Wronskian in [" + std::to_string(static_cast<double>(lo)) + ", " +
                   std::to_string(static_cast<double>(hi)) + "]");
  boost::uintmax_t iters = 200;
  auto tol = [](long double a, long double b) {
    return std::abs(a - b) <= 1e-15L * std::max({std::abs(a), std::abs(b), 1e-30L});
  };
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  return r.first + (r.second - r.first) / 2;
}

}  // namespace detail

/// Eigenvalue in `bracket`, computed at N and 2N and extrapolated assuming the
/// fourth-order Numerov error.
inline ShootResult shoot(const Problem& p, long double target, std::pair<long double, long double> bracket,
                         const Grid& g) {
  g.validate();
  const long double e1 = detail::shoot_once(p, g, bracket.first, bracket.second, target);
  const long double e2 = detail::shoot_once(p, g.refined(2), bracket.first, bracket.second, target);
  ShootResult r;
  r.coarse = e1;
  r.value = e2 + (e2 - e1) / 15;
  r.error = std::abs(e2 - e1) / 15 + 1e-12L * std::max(std::abs(e2), 1.0L);
  return r;
}

}  // namespace sqes::oracle
