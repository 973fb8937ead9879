#pragma once

// Dense univariate polynomials over an exact commutative ring.

#include <algorithm>
#include <ostream>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sqes/errors.hpp"
#include "sqes/rational.hpp"

namespace sqes {

template <class R>
class Poly {
 public:
  using coefficient_type = R;

  Poly() = default;
  Poly(R constant) {  // NOLINT(google-explicit-constructor): scalars embed
    if (!(constant == R{})) c_.push_back(std::move(constant));
  }
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(int degree, R coeff = R(1)) {
    if (coeff == R{}) return {};
    std::vector<R> v(static_cast<size_t>(degree) + 1);
    v.back() = std::move(coeff);
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }

  R coeff(int i) const {
    if (i < 0 || i > degree()) return R{};
    return c_[static_cast<size_t>(i)];
  }
  const R& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class T>
  T operator()(const T& x) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * R(static_cast<long>(i));
    return Poly(std::move(d));
  }

  /// p(x + a), by repeated synthetic division.
  Poly taylor_shift(const R& a) const {
    std::vector<R> v = c_;
    const size_t n = v.size();
    for (size_t i = 0; i + 1 < n; ++i)
      for (size_t k = n - 1; k > i; --k) v[k - 1] += a * v[k];
    return Poly(std::move(v));
  }

  /// p(s * x).
  Poly scale_argument(const R& s) const {
    std::vector<R> v = c_;
    R f(1);
    for (auto& coef : v) {
      coef *= f;
      f *= s;
    }
    return Poly(std::move(v));
  }

  Poly monic() const { return *this * (R(1) / leading()); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const R& s) {
    for (auto& coef : c_) coef = coef * s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& coef : a.c_) coef = -coef;
    return a;
  }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t k = 0; k < b.c_.size(); ++k) v[i + k] += a.c_[i] * b.c_[k];
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == R{}) c_.pop_back();
  }

  std::vector<R> c_;
};

using RationalPoly = Poly<Rational>;

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<R>{}, a};
  std::vector<R> quot(static_cast<size_t>(a.degree() - db) + 1);
  const R& lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    R f = rem[static_cast<size_t>(i)] / lead;
    quot[static_cast<size_t>(i - db)] = f;
    if (f == R{}) continue;
    for (int k = 0; k <= db; ++k) rem[static_cast<size_t>(i - db + k)] -= f * b.coeff(k);
  }
  rem.resize(static_cast<size_t>(db));
  return {Poly<R>(std::move(quot)), Poly<R>(std::move(rem))};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
  return divmod(a, b).second;
}

/// Renders in a variable name, highest power first: "x^2 - 3/2*x + 1".
inline std::string to_string(const RationalPoly& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    bool unit = mag == 1 && i > 0;
    if (!unit) out += to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

/// Newton-form interpolation through (nodes[i], values[i]); nodes distinct.
inline RationalPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  const size_t n = nodes.size();
  if (values.size() != n) throw DomainError("interpolate: size mismatch");
  std::vector<Rational> dd = values;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
      if (i == level) break;
    }
  RationalPoly result;
  for (size_t i = n; i-- > 0;) {
    result = result * (RationalPoly::x() - RationalPoly(nodes[i])) + RationalPoly(dd[i]);
  }
  return result;
}

}  // namespace sqes

namespace sqes {
inline std::ostream& operator<<(std::ostream& os, const RationalPoly& p) { return os << to_string(p); }
}  // namespace sqes
