#pragma once

#include <cmath>
#include <map>
#include <string>

#include "sqes/poly.hpp"
#include "sqes/rational.hpp"

namespace sqes::opcalc {

/// Finite Laurent polynomial sum_e c_e t^e with exact coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Rational constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(0, std::move(constant));
  }
  static LaurentPoly monomial(int exponent, Rational coeff = 1) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
    return p;
  }
  static LaurentPoly from_poly(const RationalPoly& p) {
    LaurentPoly out;
    for (int i = 0; i <= p.degree(); ++i)
      if (p.coeff(i) != 0) out.terms_.emplace(i, p.coeff(i));
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Rational>& terms() const { return terms_; }
  Rational coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  /// True when every exponent has the parity of `p` (zero counts for both).
  bool has_parity(int p) const {
    for (const auto& [e, c] : terms_)
      if (((e - p) % 2 + 2) % 2 != 0) return false;
    return true;
  }

  LaurentPoly derivative() const {
    LaurentPoly d;
    for (const auto& [e, c] : terms_)
      if (e != 0) d.terms_.emplace(e - 1, c * e);
    return d;
  }

  /// Requires no negative exponents.
  RationalPoly to_poly() const {
    if (!terms_.empty() && min_exponent() < 0) throw RepresentationError("Laurent term with negative exponent");
    std::vector<Rational> v(terms_.empty() ? 0 : static_cast<size_t>(max_exponent()) + 1);
    for (const auto& [e, c] : terms_) v[static_cast<size_t>(e)] = c;
    return RationalPoly(std::move(v));
  }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) acc += c * ipow(t, e);
    return acc;
  }
  long double evaluate(long double t) const {
    long double acc = 0;
    for (const auto& [e, c] : terms_) acc += to_long_double(c) * std::pow(t, static_cast<long double>(e));
    return acc;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly() - a; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
    return out;
  }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) {
    if (s == 0) return {};
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return std::move(a) * s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void add(int e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<int, Rational> terms_;
};

/// "3/4*r^-2 - r^2 + 2", highest power first.
inline std::string to_string(const LaurentPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    bool unit = mag == 1 && e != 0;
    if (!unit) out += sqes::to_string(mag);
    if (e != 0) {
      if (!unit) out += "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace sqes::opcalc
