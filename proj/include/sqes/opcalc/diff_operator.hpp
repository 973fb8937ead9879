#pragma once

// Linear differential operators sum_k c_k(t) D^k with exact Laurent
// coefficients, closed under composition.

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "sqes/opcalc/laurent.hpp"
#include "sqes/poly.hpp"

namespace sqes::opcalc {

/// Centrifugal terms only: coefficients never go below t^-2 per composition level.
inline constexpr int kLaurentFloor = -2;

using Matrix = std::vector<std::vector<Rational>>;

class DiffOperator {
 public:
  DiffOperator() = default;

  static DiffOperator derivative(int order = 1) { return term(order, Rational(1)); }
  static DiffOperator multiply(LaurentPoly f) { return term(0, std::move(f)); }
  static DiffOperator identity() { return multiply(Rational(1)); }
  static DiffOperator term(int order, LaurentPoly coeff) {
    DiffOperator op;
    op.add(order, coeff);
    return op;
  }

  const std::map<int, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(int order) const {
    auto it = terms_.find(order);
    return it == terms_.end() ? LaurentPoly{} : it->second;
  }
  bool is_zero() const { return terms_.empty(); }
  int order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  int min_exponent() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::min(m, c.min_exponent());
    return m;
  }

  /// Invariance under t -> -t: the D^k coefficient has only exponents of parity k.
  bool is_even() const {
    for (const auto& [k, c] : terms_)
      if (!c.has_parity(k)) return false;
    return true;
  }

  DiffOperator& operator+=(const DiffOperator& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  DiffOperator& operator-=(const DiffOperator& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator-(const DiffOperator& a) { return DiffOperator() - a; }
  friend DiffOperator operator*(const Rational& s, const DiffOperator& a) {
    DiffOperator out;
    for (const auto& [k, c] : a.terms_) out.add(k, c * s);
    return out;
  }
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

 private:
  void add(int order, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(order, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<int, LaurentPoly> terms_;
};

inline Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// (A o B) f = A(B f). The result may reach kLaurentFloor * depth_allowance.
inline DiffOperator compose(const DiffOperator& a, const DiffOperator& b, int depth_allowance = 1) {
  DiffOperator out;
  for (const auto& [i, ca] : a.terms())
    for (const auto& [k, cb] : b.terms()) {
      // D^i (cb D^k) = sum_l C(i,l) cb^(l) D^(i-l+k)
      LaurentPoly deriv = cb;
      for (int l = 0; l <= i; ++l) {
        if (deriv.is_zero()) break;
        out += DiffOperator::term(i - l + k, ca * deriv * binomial(i, l));
        deriv = deriv.derivative();
      }
    }
  const int floor = kLaurentFloor * depth_allowance;
  if (out.min_exponent() < floor)
    throw RepresentationError("composition reaches exponent " + std::to_string(out.min_exponent()) +
                              " below the Laurent floor " + std::to_string(floor));
  return out;
}

inline DiffOperator commutator(const DiffOperator& a, const DiffOperator& b, int depth_allowance = 1) {
  return compose(a, b, depth_allowance) - compose(b, a, depth_allowance);
}

/// Exact image of a polynomial in t. R is the polynomial coefficient ring
/// (Rational, or e.g. RationalPoly for coefficients depending on a symbol).
template <class R>
Poly<R> apply(const DiffOperator& op, const Poly<R>& p) {
  std::map<int, R> image;
  for (const auto& [k, c] : op.terms()) {
    for (int n = k; n <= p.degree(); ++n) {
      R pc = p.coeff(n);
      if (pc == R{}) continue;
      Rational falling = 1;
      for (int i = 0; i < k; ++i) falling *= n - i;
      for (const auto& [e, ce] : c.terms()) image[n - k + e] += pc * R(ce * falling);
    }
  }
  int top = -1;
  for (const auto& [e, v] : image) {
    if (v == R{}) continue;
    if (e < 0) throw RepresentationError("image has a term of negative exponent " + std::to_string(e));
    top = std::max(top, e);
  }
  std::vector<R> out(static_cast<size_t>(top + 1));
  for (const auto& [e, v] : image)
    if (e >= 0 && e <= top) out[static_cast<size_t>(e)] = v;
  return Poly<R>(std::move(out));
}

/// Exact image of a Laurent polynomial (no representation limits).
inline LaurentPoly apply(const DiffOperator& op, const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [k, c] : op.terms()) {
    LaurentPoly d = f;
    for (int i = 0; i < k; ++i) d = d.derivative();
    out += c * d;
  }
  return out;
}

/// Action on span{1, t, ..., t^n}: column k holds the image of t^k.
inline Matrix monomial_matrix(const DiffOperator& op, int n) {
  Matrix m(static_cast<size_t>(n) + 1, std::vector<Rational>(static_cast<size_t>(n) + 1));
  std::string overflow;
  for (int k = 0; k <= n; ++k) {
    RationalPoly img = apply(op, RationalPoly::monomial(k));
    if (img.degree() > n) {
      overflow += (overflow.empty() ? "" : ", ") + std::string("t^") + std::to_string(k) + " -> degree " +
                  std::to_string(img.degree());
      continue;
    }
    for (int i = 0; i <= img.degree(); ++i) m[static_cast<size_t>(i)][static_cast<size_t>(k)] = img.coeff(i);
  }
  if (!overflow.empty())
    throw RepresentationError("operator does not preserve polynomials of degree <= " + std::to_string(n) + ": " +
                              overflow);
  return m;
}

/// Canonical text "(c_2)*D^2 + (c_1)*D + (c_0)", highest order first.
inline std::string to_string(const DiffOperator& op, const std::string& var) {
  if (op.is_zero()) return "0";
  std::string out;
  for (auto it = op.terms().rbegin(); it != op.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(it->second, var) + ")";
    if (it->first >= 1) out += "*D";
    if (it->first > 1) out += "^" + std::to_string(it->first);
  }
  return out;
}

/// Characteristic polynomial det(x I - m) by Faddeev-LeVerrier.
inline RationalPoly characteristic_polynomial(const Matrix& m) {
  const size_t n = m.size();
  auto mul = [n](const Matrix& a, const Matrix& b) {
    Matrix c(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (a[i][k] == 0) continue;
        for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
      }
    return c;
  };
  std::vector<Rational> coeffs(n + 1);
  coeffs[n] = 1;
  Matrix mk(n, std::vector<Rational>(n));  // M_0 = 0
  for (size_t k = 1; k <= n; ++k) {
    Matrix am = mul(m, mk);
    for (size_t i = 0; i < n; ++i) am[i][i] += coeffs[n - k + 1];
    mk = am;                     // M_k = A M_{k-1} + c_{n-k+1} I
    Matrix amk = mul(m, mk);
    Rational tr = 0;
    for (size_t i = 0; i < n; ++i) tr += amk[i][i];
    coeffs[n - k] = -tr / static_cast<long>(k);
  }
  return RationalPoly(std::move(coeffs));
}

}  // namespace sqes::opcalc

namespace sqes::opcalc {
inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p, "t"); }
inline std::ostream& operator<<(std::ostream& os, const DiffOperator& op) { return os << to_string(op, "t"); }
}  // namespace sqes::opcalc
