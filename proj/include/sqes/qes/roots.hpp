#pragma once

// Certified real-root isolation by Sturm sequences and bisection on exact
// rationals.

#include <algorithm>
#include <string>
#include <vector>

#include "sqes/poly.hpp"

namespace sqes::qes {

/// Root in (lo, hi]; lo == hi means the root is exactly that rational.
struct RootEnclosure {
  Rational lo, hi;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

inline RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

inline RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 0) return p;
  return divmod(p, poly_gcd(p, p.derivative())).first;
}

class SturmSequence {
 public:
  /// p must be squarefree for counts to be exact.
  explicit SturmSequence(const RationalPoly& p) {
    seq_.push_back(p);
    if (p.degree() <= 0) return;
    seq_.push_back(p.derivative());
    while (seq_.back().degree() > 0) {
      RationalPoly r = -(seq_[seq_.size() - 2] % seq_.back());
      if (r.is_zero()) break;
      seq_.push_back(std::move(r));
    }
  }

  int variations(const Rational& x) const {
    int count = 0, last = 0;
    for (const auto& q : seq_) {
      const int s = sign(q(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<RationalPoly> seq_;
};

/// Every real root lies in (-bound, bound).
inline Rational cauchy_bound(const RationalPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p.coeff(i) / p.leading()));
  return m + 1;
}

/// Number of distinct real roots.
inline int distinct_real_roots(const RationalPoly& p) {
  if (p.degree() <= 0) return 0;
  const RationalPoly sf = squarefree_part(p);
  const Rational b = cauchy_bound(sf);
  return SturmSequence(sf).count(-b, b);
}

/// Sorted enclosures of all distinct real roots of p, each of width < 10^-digits.
/// Rational with the smallest denominator in [lo, hi], by continued fractions.
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_between(-hi, -lo);
  const Integer fl = floor_integer(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  return Rational(fl) + Rational(1) / simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
}

inline std::vector<RootEnclosure> isolate_real_roots(const RationalPoly& p, int digits) {
  std::vector<RootEnclosure> out;
  if (p.degree() <= 0) return out;
  const RationalPoly sf = squarefree_part(p);
  const SturmSequence sturm(sf);
  const Rational bound = cauchy_bound(sf);
  const Rational target = Rational(1) / Rational(pow10(static_cast<unsigned>(std::max(digits, 0))));

  struct Pending {
    Rational lo, hi;
    int n;
  };
  std::vector<Pending> stack{{-bound, bound, sturm.count(-bound, bound)}};
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    if (cur.n == 0) continue;
    if (cur.n > 1) {
      const Rational mid = (cur.lo + cur.hi) / 2;
      const int left = sturm.count(cur.lo, mid);
      stack.push_back({mid, cur.hi, cur.n - left});
      stack.push_back({cur.lo, mid, left});
      continue;
    }
    // one simple root in (lo, hi]
    Rational lo = cur.lo, hi = cur.hi;
    int sh = sign(sf(hi));
    if (sh == 0) {
      out.push_back({hi, hi});
      continue;
    }
    while (hi - lo >= target) {
      const Rational mid = (lo + hi) / 2;
      const int sm = sign(sf(mid));
      if (sm == 0) {
        lo = hi = mid;
        break;
      }
      if (sm == sh)
        hi = mid;
      else
        lo = mid;
    }
    // bisection rarely lands on a rational root; its simplest neighbour does
    if (lo != hi) {
      const Rational c = simplest_between(lo, hi);
      if (c > lo && sign(sf(c)) == 0) lo = hi = c;
    }
    out.push_back({lo, hi});
  }
  std::sort(out.begin(), out.end(), [](const RootEnclosure& a, const RootEnclosure& b) { return a.hi < b.hi; });
  return out;
}

/// Roots of a polynomial required to have deg p real simple roots.
inline std::vector<RootEnclosure> critical_roots(const RationalPoly& p, int digits) {
  const int real = distinct_real_roots(p);
  if (real < p.degree() || poly_gcd(p, p.derivative()).degree() > 0)
    throw RootPropertyViolation("expected " + std::to_string(p.degree()) + " real simple roots, found " +
                                    std::to_string(real) + " distinct real roots",
                                to_string(p));
  return isolate_real_roots(p, digits);
}

/// Strict interlacing: exactly one root of `lower` between consecutive roots of
/// `upper`, none outside, and no common roots.
inline bool interlaces(const RationalPoly& lower, const RationalPoly& upper, const std::vector<RootEnclosure>& roots) {
  if (lower.degree() + 1 != upper.degree()) return false;
  if (poly_gcd(lower, upper).degree() > 0) return false;
  if (lower.degree() == 0) return true;
  const SturmSequence s(squarefree_part(lower));
  if (s.count(-cauchy_bound(lower), roots.front().lo) != 0) return false;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (!roots[i].exact() && s.count(roots[i].lo, roots[i].hi) != 0) return false;
    if (i + 1 < roots.size() && s.count(roots[i].hi, roots[i + 1].lo) != 1) return false;
  }
  return s.count(roots.back().hi, cauchy_bound(lower)) == 0;
}

/// p(-x) = (-1)^deg p(x).
inline bool has_degree_parity(const RationalPoly& p) {
  for (int i = 0; i <= p.degree(); ++i)
    if ((p.degree() - i) % 2 != 0 && p.coeff(i) != 0) return false;
  return true;
}

/// Root set mirrored by x -> -x: enclosure i overlaps the negation of enclosure n-1-i.
inline bool symmetric_about_zero(const std::vector<RootEnclosure>& roots) {
  const size_t n = roots.size();
  for (size_t i = 0; i < n; ++i) {
    const RootEnclosure& a = roots[i];
    const RootEnclosure& b = roots[n - 1 - i];
    if (a.hi < -b.hi || -b.lo < a.lo) return false;
  }
  return true;
}

}  // namespace sqes::qes
