#pragma once

// Rendering helpers: every emitted number is either tagged exact or carries
// an error bound, and long doubles print with a fixed format.

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "sqes/qes/roots.hpp"

namespace sqes::cli {

using Json = nlohmann::ordered_json;

inline std::string fixed(long double v, int precision = 15) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", precision, v);
  return buf;
}

inline Json exact_number(const Rational& x) { return Json{{"value", sqes::to_string(x)}, {"exact", true}}; }

inline Json float_number(long double v, long double err) {
  return Json{{"value", fixed(v)}, {"error", fixed(err, 3)}};
}

/// A root enclosure, exact when it collapsed to a point.
inline Json enclosure_number(const qes::RootEnclosure& e, int digits) {
  if (e.exact()) return exact_number(e.lo);
  return Json{{"value", to_decimal(e.midpoint(), digits)}, {"error", "1e-" + std::to_string(digits)}};
}

inline std::string enclosure_text(const qes::RootEnclosure& e, int digits) {
  return e.exact() ? sqes::to_string(e.lo) : to_decimal(e.midpoint(), digits);
}

/// "rho^2" -> "ρ²" for pretty output.
inline std::string superscripts(const std::string& s, const std::string& var, const std::string& uvar) {
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (size_t i = 0; i < s.size();) {
    if (s.compare(i, var.size(), var) == 0) {
      out += uvar;
      i += var.size();
      continue;
    }
    if (s[i] == '^') {
      size_t k = i + 1;
      std::string neg;
      if (k < s.size() && s[k] == '-') {
        neg = "⁻";
        ++k;
      }
      size_t start = k;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k > start) {
        out += neg;
        for (size_t d = start; d < k; ++d) out += sup[s[d] - '0'];
        i = k;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

inline std::string paint(const std::string& s, bool good, bool color) {
  if (!color) return s;
  return std::string(good ? "\x1b[32m" : "\x1b[31m") + s + "\x1b[0m";
}

}  // namespace sqes::cli
