#pragma once

// Exact rational arithmetic helpers on top of GMP.

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "sqes/errors.hpp"

namespace sqes {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline Integer pow10(unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

inline Rational ipow(const Rational& x, int n) {
  if (n < 0) return Rational(1) / ipow(x, -n);
  Rational r = 1, b = x;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

inline Integer floor_integer(const Rational& x) {
  Integer q = num(x) / den(x);  // truncates toward zero
  if (x < 0 && Rational(q) != x) q -= 1;
  return q;
}

inline int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

/// "p" or "p/q" in lowest terms.
inline std::string to_string(const Rational& x) {
  if (den(x) == 1) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

/// Parses "3", "-3/4", "0.25", "1e-3", "+2.5E2" exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return ConfigError("not an exact decimal or rational: '" + std::string(text) + "'"); };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t p = 0;
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  s = s.substr(p);
  if (s.empty()) throw fail();

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational a = parse_rational(s.substr(0, slash));
    Rational b = parse_rational(s.substr(slash + 1));
    if (b == 0) throw fail();
    return a / b;
  }

  size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  int frac_digits = 0;
  bool seen_point = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_point) throw fail();
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i];
      if (seen_point) ++frac_digits;
    } else {
      throw fail();
    }
  }
  if (digits.empty()) throw fail();
  long exponent = 0;
  if (i < s.size()) {
    std::string e = s.substr(i + 1);
    if (e.empty()) throw fail();
    size_t used = 0;
    try {
      exponent = std::stol(e, &used);
    } catch (...) {
      throw fail();
    }
    if (used != e.size() || exponent > 4000 || exponent < -4000) throw fail();
  }
  // a leading 0 would make GMP read octal
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational value{Integer(digits)};
  long shift = exponent - frac_digits;
  if (shift >= 0)
    value *= Rational(pow10(static_cast<unsigned>(shift)));
  else
    value /= Rational(pow10(static_cast<unsigned>(-shift)));
  return negative ? Rational(-value) : value;
}

/// Nearest integer, halves rounded away from zero.
inline Integer round_nearest(const Rational& x) {
  Integer n = num(x), d = den(x);
  Integer twice = 2 * (n < 0 ? Integer(-n) : n) + d;
  Integer q = twice / (2 * d);
  return n < 0 ? Integer(-q) : q;
}

/// Fixed-point rendering with exactly `digits` fractional digits (rounded).
inline std::string to_decimal(const Rational& x, int digits) {
  Integer scaled = round_nearest(x * Rational(pow10(static_cast<unsigned>(digits))));
  bool negative = scaled < 0;
  std::string body = (negative ? Integer(-scaled) : scaled).str();
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  return (negative ? "-" : "") + body;
}

inline std::optional<Integer> exact_isqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

/// sqrt(x) when it is rational, otherwise nullopt. Requires x >= 0.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
  auto a = exact_isqrt(num(x));
  auto b = exact_isqrt(den(x));
  if (!a || !b) return std::nullopt;
  return Rational(*a, *b);
}

/// floor(sqrt(x) * 10^digits) / 10^digits for x >= 0.
inline Rational sqrt_floor(const Rational& x, int digits) {
  if (x < 0) throw DomainError("sqrt of negative rational");
  Integer scale = pow10(static_cast<unsigned>(digits));
  // sqrt(n/d) * s = sqrt(n * d * s^2) / d
  Integer radicand = num(x) * den(x) * scale * scale;
  Integer root = boost::multiprecision::sqrt(radicand);
  return Rational(root, den(x) * scale);
}

inline long double to_long_double(const Rational& x) {
  Integer n = num(x), d = den(x);
  // mantissas of up to ~60 bits convert exactly enough; larger ones go through double.
  if (boost::multiprecision::msb(d) < 62 &&
      (n == 0 || boost::multiprecision::msb(n < 0 ? Integer(-n) : n) < 62))
    return static_cast<long double>(n.convert_to<long long>()) /
           static_cast<long double>(d.convert_to<long long>());
  return static_cast<long double>(x.convert_to<double>());
}

/// Exact rational value of a finite binary floating-point number.
inline Rational from_long_double(long double v) {
  if (!std::isfinite(v)) throw DomainError("non-finite value");
  int exponent = 0;
  long double mantissa = std::frexp(v, &exponent);
  // 64-bit significand for x87 long double
  long double scaled = std::ldexp(mantissa, 64);
  long long whole = static_cast<long long>(scaled / 2);  // keep within range
  Rational r = Rational(Integer(whole)) * 2 + Rational(Integer(static_cast<long long>(scaled - 2.0L * whole)));
  int shift = exponent - 64;
  if (shift >= 0) return r * ipow(Rational(2), shift);
  return r / ipow(Rational(2), -shift);
}

}  // namespace sqes
