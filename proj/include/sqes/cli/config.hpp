#pragma once

// Run configuration shared by all subcommands.

#include <optional>
#include <string>

#include "sqes/model/params.hpp"
#include "sqes/qes/spectrum.hpp"

namespace sqes::cli {

using model::Mode;

enum class Format { Pretty, Json, Csv };

inline Format parse_format(const std::string& s) {
  if (s == "pretty") return Format::Pretty;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw ConfigError("unknown format '" + s + "' (expected json, csv or pretty)");
}

inline qes::GaugePolicy parse_policy(const std::string& s) {
  if (s == "auto") return qes::GaugePolicy::Auto;
  if (s == "index") return qes::GaugePolicy::Index;
  throw ConfigError("unknown gauge policy '" + s + "' (expected auto or index)");
}

inline qes::SpectrumSource parse_source(const std::string& s) {
  if (s == "derived") return qes::SpectrumSource::Derived;
  if (s == "paper") return qes::SpectrumSource::Paper;
  throw ConfigError("unknown recurrence source '" + s + "' (expected derived or paper)");
}

inline model::MagneticConstant parse_convention(const std::string& s) {
  if (s == "field-consistent") return model::MagneticConstant::FieldConsistent;
  if (s == "as-printed") return model::MagneticConstant::AsPrinted;
  throw ConfigError("unknown magnetic convention '" + s + "' (expected field-consistent or as-printed)");
}

struct RunConfig {
  std::string command;
  Mode mode = Mode::Free;
  std::optional<int> j, m;
  model::PhysicalParams params;
  int digits = 50;

  // oracle
  int N = 8192;
  std::optional<long double> r_max;
  std::optional<int> count;
  long double tol = 1e-4L;
  bool box = false;
  bool oracle = false;

  Format format = Format::Pretty;
  qes::GaugePolicy policy = qes::GaugePolicy::Auto;
  int gauge_index = 0;
  qes::SpectrumSource source = qes::SpectrumSource::Derived;
  model::MagneticConstant convention = model::MagneticConstant::FieldConsistent;

  // wavefunction
  int root = 0;
  int samples = 101;
  Rational r_from = Rational(1, 20);
  Rational r_to = 3;

  // verify
  bool fast = false;
  bool inject_fault = false;

  bool color = false;

  int resolved_j() const {
    if (j) return *j;
    if (m) return *m - 2;
    return 0;
  }
  int resolved_m() const { return m ? *m : resolved_j() + 2; }

  void validate() const {
    if (j && m && *m != *j + 2)
      throw ConfigError("m = j + 2 is required when both are given (got j=" + std::to_string(*j) +
                        ", m=" + std::to_string(*m) + ")");
    if (j && *j < 0) throw ConfigError("j must be non-negative");
    if (digits < 15) throw ConfigError("digits must be at least 15");
    if (N < 64) throw ConfigError("N must be at least 64");
    if (count && *count < 1) throw ConfigError("count must be positive");
    if (r_max && !(*r_max > 0)) throw ConfigError("rmax must be positive");
    if (!(tol > 0)) throw ConfigError("tol must be positive");
    if (samples < 0) throw ConfigError("samples must be non-negative");
    if (!(r_to > r_from) || r_from < 0) throw ConfigError("wavefunction range needs 0 <= from < to");
    params.validate();
  }
};

}  // namespace sqes::cli
