#pragma once

// The subcommands. Each builds its JSON document first; the pretty and CSV
// renderings are derived from the same data.

#include <cmath>
#include <sstream>
#include <string>

#include "sqes/cli/config.hpp"
#include "sqes/cli/format.hpp"
#include "sqes/cli/verify.hpp"
#include "sqes/oracle/match.hpp"
#include "sqes/oracle/residual.hpp"
#include "sqes/qes/checks.hpp"
#include "sqes/qes/tables.hpp"
#include "sqes/qes/wavefunction.hpp"

namespace sqes::cli {

struct Output {
  Json json;
  std::string pretty;
  std::string csv;
  int exit_code = 0;
};

namespace detail {

inline Json params_json(const model::PhysicalParams& p) {
  Json j;
  j["M"] = sqes::to_string(p.M);
  j["c"] = sqes::to_string(p.c);
  j["hbar"] = sqes::to_string(p.hbar);
  j["omega"] = sqes::to_string(p.omega);
  j["q"] = sqes::to_string(p.q);
  j["e"] = sqes::to_string(p.e_charge);
  j["B"] = p.B ? Json(sqes::to_string(*p.B)) : Json(nullptr);
  return j;
}

inline Json ledger_json(const opcalc::SpectralLedger& l) {
  return Json{{"shift", exact_number(l.shift)}, {"scale", exact_number(l.scale)}, {"provenance", l.provenance}};
}

inline Json gauge_json(const opcalc::GaugeAnsatz& g) {
  return Json{{"s", sqes::to_string(g.s)},
              {"b", sqes::to_string(g.b)},
              {"a", sqes::to_string(g.a)},
              {"normalizability", opcalc::to_string(g.classify())}};
}

inline Json header(const RunConfig& cfg, const std::string& command) {
  Json j;
  j["command"] = command;
  j["mode"] = model::to_string(cfg.mode);
  j["j"] = cfg.resolved_j();
  j["m"] = cfg.resolved_m();
  j["params"] = params_json(cfg.params);
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

inline std::string pad(std::string s, size_t width) {
  // pad by visible characters; multi-byte UTF-8 sequences count once
  size_t visible = 0;
  for (unsigned char ch : s) visible += (ch & 0xC0) != 0x80;
  if (visible < width) s.append(width - visible, ' ');
  return s;
}

// --- polynomial table rows ---

inline Json table_row(Mode mode, int n) {
  Json row;
  row["n"] = n;
  const bool in_table = n <= qes::table_size(mode);
  qes::SymbolicPoly derived;
  if (in_table) {
    const auto cmp = qes::compare_with_table(mode, n);
    derived = cmp.derived;
    row["derived"] = qes::render(derived, mode, false);
    row["derived_unicode"] = qes::render(derived, mode, true);
    row["paper"] = qes::render(cmp.paper, mode, false);
    row["verdict"] = cmp.match ? "MATCH" : "MISMATCH";
    row["hard"] = cmp.hard;
    Json terms = Json::array();
    for (const auto& t : cmp.terms) {
      Json tj;
      tj["term"] = qes::render(qes::SymbolicPoly{{t.monomial, Rational(1)}}, mode, false);
      tj["paper"] = t.paper ? Json(sqes::to_string(*t.paper)) : Json(nullptr);
      tj["derived"] = t.derived ? Json(sqes::to_string(*t.derived)) : Json(nullptr);
      tj["match"] = t.match;
      terms.push_back(tj);
    }
    row["terms"] = terms;
  } else {
    derived = qes::derived_symbolic(mode, n - 1);
    row["derived"] = qes::render(derived, mode, false);
    row["derived_unicode"] = qes::render(derived, mode, true);
    row["paper"] = nullptr;
    row["verdict"] = "NO TABLE ENTRY";
    row["hard"] = false;
    row["terms"] = Json::array();
  }
  return row;
}

inline std::string table_row_pretty(const Json& row, bool color) {
  std::ostringstream os;
  const std::string verdict = row["verdict"].get<std::string>();
  os << pad("P" + std::to_string(row["n"].get<int>()), 5) << row["derived_unicode"].get<std::string>() << "\n"
     << "     diff-vs-paper: " << paint(verdict, verdict != "MISMATCH", color)
     << (row["hard"].get<bool>() ? "" : " (report only)") << "\n";
  for (const auto& t : row["terms"])
    if (!t["match"].get<bool>())
      os << "       " << t["term"].get<std::string>() << ": paper "
         << (t["paper"].is_null() ? std::string("absent") : t["paper"].get<std::string>()) << ", derived "
         << (t["derived"].is_null() ? std::string("absent") : t["derived"].get<std::string>()) << "\n";
  return os.str();
}

// --- spectra ---

inline qes::SpectrumOptions spectrum_options(const RunConfig& cfg) {
  qes::SpectrumOptions opt;
  opt.source = cfg.source;
  opt.policy = cfg.policy;
  opt.gauge_index = cfg.gauge_index;
  opt.digits = cfg.digits;
  opt.convention = cfg.convention;
  return opt;
}

inline Json energy_json(const qes::QesRoot& r, int digits) {
  Json j;
  j["subcritical"] = r.energy.subcritical;
  if (r.energy.subcritical) {
    j["E"] = nullptr;
    return j;
  }
  if (r.energy.exact) {
    j["E"] = Json::array({exact_number(r.energy.energy), exact_number(-r.energy.energy)});
    return j;
  }
  // midpoint error plus the truncation of the square root
  const long double e = to_long_double(r.energy.energy);
  const long double err = to_long_double(r.physical.width()) / (4 * e) + std::pow(10.0L, -(digits + 2));
  const std::string mag = to_decimal(r.energy.energy, digits);
  j["E"] = Json::array({Json{{"value", mag}, {"error", fixed(err, 3)}},
                        Json{{"value", "-" + mag}, {"error", fixed(err, 3)}}});
  return j;
}

inline Json spectrum_json(const qes::QesSpectrum& s) {
  Json j;
  j["source"] = qes::to_string(s.source);
  j["digits"] = s.digits;
  j["gauge"] = s.gauge ? gauge_json(*s.gauge) : Json(nullptr);
  j["ledger"] = ledger_json(s.ledger);
  j["critical_polynomial"] = sqes::to_string(s.critical());
  Json roots = Json::array();
  for (size_t i = 0; i < s.roots.size(); ++i) {
    const auto& r = s.roots[i];
    Json rj;
    rj["index"] = i;
    rj["reduced"] = enclosure_number(r.reduced, s.digits);
    rj["physical"] = enclosure_number(r.physical, s.digits);
    rj["energy"] = energy_json(r, s.digits);
    roots.push_back(rj);
  }
  j["roots"] = roots;
  return j;
}

inline std::string spectrum_pretty(const qes::QesSpectrum& s, int digits_shown) {
  std::ostringstream os;
  os << "critical polynomial: " << sqes::to_string(s.critical()) << "\n";
  os << "ledger: eps^2 = eps~^2 + (" << sqes::to_string(s.ledger.shift) << ")\n";
  if (s.gauge) os << "gauge: " << opcalc::describe(*s.gauge) << " (" << opcalc::to_string(s.gauge->classify()) << ")\n";
  for (size_t i = 0; i < s.roots.size(); ++i) {
    const auto& r = s.roots[i];
    os << "root " << i << ": eps~^2 = " << enclosure_text(r.reduced, digits_shown)
       << "  eps^2 = " << enclosure_text(r.physical, digits_shown);
    if (r.energy.subcritical)
      os << "  E: subcritical (M^2c^4 + eps^2 < 0)";
    else
      os << "  E = +-" << (r.energy.exact ? sqes::to_string(r.energy.energy) : to_decimal(r.energy.energy, digits_shown));
    os << "\n";
  }
  return os.str();
}

inline int default_count(const RunConfig& cfg) { return cfg.count ? *cfg.count : 2 * cfg.resolved_j() + 6; }

inline oracle::Problem physical_problem(const RunConfig& cfg) {
  oracle::Problem p;
  p.params = cfg.params;
  p.m = cfg.resolved_m();
  p.mode = cfg.mode;
  p.convention = cfg.convention;
  return p;
}

inline oracle::OracleSpectrum run_oracle(const oracle::Problem& p, int count, const RunConfig& cfg) {
  const long double r_max = cfg.r_max ? *cfg.r_max : oracle::choose_r_max(p, count);
  return oracle::refine(p, count, oracle::Grid{r_max, cfg.N});
}

inline Json oracle_json(const oracle::OracleSpectrum& o) {
  Json j;
  j["problem"] = o.problem.describe();
  j["r_max"] = fixed(o.grid.r_max);
  j["N"] = o.grid.N;
  Json levels = Json::array();
  for (size_t n = 0; n < o.levels.size(); ++n) {
    const auto& l = o.levels[n];
    Json lj;
    lj["n"] = n;
    lj["eigenvalue"] = float_number(l.value, l.error);
    lj["E_h"] = fixed(l.E_h);
    lj["E_h2"] = fixed(l.E_h2);
    lj["E_h4"] = fixed(l.E_h4);
    lj["richardson"] = fixed(l.richardson);
    lj["order"] = std::isnan(l.order) ? Json(nullptr) : Json(fixed(l.order, 4));
    lj["flagged"] = l.flagged;
    levels.push_back(lj);
  }
  j["levels"] = levels;
  return j;
}

inline std::string oracle_pretty(const oracle::OracleSpectrum& o) {
  std::ostringstream os;
  os << "oracle: " << o.problem.describe() << ", r_max = " << fixed(o.grid.r_max) << ", N = " << o.grid.N
     << " (also 2N, 4N)\n";
  for (size_t n = 0; n < o.levels.size(); ++n) {
    const auto& l = o.levels[n];
    os << "  " << pad(std::to_string(n), 4) << pad(fixed(l.value), 24) << "+- " << pad(fixed(l.error, 3), 12)
       << "order " << (std::isnan(l.order) ? std::string("converged") : fixed(l.order, 4))
       << (l.flagged ? "  FLAGGED" : "") << "\n";
  }
  return os.str();
}

inline Json match_json(const oracle::MatchReport& m) {
  Json j;
  j["tol"] = fixed(m.tol, 3);
  j["ledger_shift"] = exact_number(m.ledger_shift);
  j["gauge"] = m.gauge;
  j["matched"] = m.matched();
  Json roots = Json::array();
  for (size_t i = 0; i < m.roots.size(); ++i) {
    const auto& r = m.roots[i];
    Json rj;
    rj["index"] = i;
    rj["qes"] = fixed(r.qes, 18);
    rj["nearest"] = r.nearest ? Json(*r.nearest) : Json(nullptr);
    rj["oracle"] = r.nearest ? float_number(r.oracle, r.oracle_error) : Json(nullptr);
    rj["gap"] = fixed(r.gap);
    rj["relative_gap"] = fixed(r.relative, 6);
    rj["verdict"] = oracle::to_string(r.verdict);
    roots.push_back(rj);
  }
  j["roots"] = roots;
  return j;
}

inline std::string match_pretty(const oracle::MatchReport& m, bool color) {
  std::ostringstream os;
  os << "match (relative tol " << fixed(m.tol, 3) << ", ledger shift " << sqes::to_string(m.ledger_shift) << ", "
     << m.gauge << ")\n";
  for (size_t i = 0; i < m.roots.size(); ++i) {
    const auto& r = m.roots[i];
    os << "  root " << i << ": eps^2 = " << pad(fixed(r.qes), 22);
    if (r.nearest)
      os << "nearest oracle level " << *r.nearest << " = " << pad(fixed(r.oracle), 22) << "rel gap " << pad(fixed(r.relative, 3), 11);
    else
      os << "no unflagged oracle level  ";
    os << paint(oracle::to_string(r.verdict), r.verdict == oracle::Verdict::Matched, color) << "\n";
  }
  return os.str();
}

}  // namespace detail

inline Output cmd_derive(const RunConfig& cfg) {
  const int j = cfg.resolved_j();
  const auto cands = qes::gauge_search(cfg.params, j, cfg.mode, cfg.convention);
  const auto& chosen = qes::select_gauge(cands, cfg.policy, cfg.gauge_index);
  Output out;
  out.json = detail::header(cfg, "derive");
  out.json["printed_rho_operator"] = opcalc::to_string(qes::printed_rho_operator(cfg.params, j, cfg.mode), "rho");
  Json list = Json::array();
  std::ostringstream pretty, csv;
  pretty << "mode " << model::to_string(cfg.mode) << ", j = " << j << ", m = " << j + 2 << "\n";
  pretty << "printed rho-equation: "
         << superscripts(out.json["printed_rho_operator"].get<std::string>(), "rho", "ρ") << "\n\n";
  csv << "index,s,b,a,accepted,truncation,reproduces_printed,ledger_shift,normalizability\n";
  int selected = -1;
  for (size_t i = 0; i < cands.size(); ++i) {
    const auto& c = cands[i];
    if (&c == &chosen) selected = static_cast<int>(i);
    Json cj;
    cj["index"] = i;
    cj["gauge"] = detail::gauge_json(c.gauge);
    cj["accepted"] = c.accepted;
    cj["diagnostic"] = c.diagnostic;
    cj["truncation"] = c.truncation ? Json(*c.truncation) : Json(nullptr);
    cj["reproduces_printed"] = qes::to_string(c.printed);
    if (c.derived) {
      cj["rho_operator"] = opcalc::to_string(c.derived->rho_operator, "rho");
      cj["recurrence"] = Json{{"alpha", sqes::to_string(c.derived->rec.alpha, "k")},
                              {"beta", sqes::to_string(c.derived->rec.beta, "k")},
                              {"gamma", sqes::to_string(c.derived->rec.gamma, "k")}};
      cj["ledger"] = detail::ledger_json(c.derived->ledger);
    } else {
      cj["rho_operator"] = nullptr;
      cj["recurrence"] = nullptr;
      cj["ledger"] = nullptr;
    }
    list.push_back(cj);

    pretty << "[" << i << "] " << opcalc::describe(c.gauge) << "  (" << opcalc::to_string(c.gauge.classify()) << ")\n";
    if (c.derived) {
      pretty << "    rho-operator: " << superscripts(cj["rho_operator"].get<std::string>(), "rho", "ρ") << "\n"
             << "    recurrence:   x f_k = (" << cj["recurrence"]["alpha"].get<std::string>() << ") f_{k+1} + ("
             << cj["recurrence"]["beta"].get<std::string>() << ") f_k + ("
             << cj["recurrence"]["gamma"].get<std::string>() << ") f_{k-1}\n"
             << "    ledger shift: " << sqes::to_string(c.derived->ledger.shift) << "\n"
             << "    truncation:   " << (c.truncation ? std::to_string(*c.truncation) : std::string("none")) << "\n";
    } else {
      pretty << "    rejected: " << c.diagnostic << "\n";
    }
    if (c.derived && !c.diagnostic.empty()) pretty << "    note: " << c.diagnostic << "\n";
    pretty << "    reproduces printed ODE: " << qes::to_string(c.printed) << "\n";
    csv << i << "," << sqes::to_string(c.gauge.s) << "," << sqes::to_string(c.gauge.b) << ","
        << sqes::to_string(c.gauge.a) << "," << (c.accepted ? "true" : "false") << ","
        << (c.truncation ? std::to_string(*c.truncation) : std::string()) << ","
        << detail::csv_field(qes::to_string(c.printed)) << ","
        << (c.derived ? sqes::to_string(c.derived->ledger.shift) : std::string()) << ","
        << opcalc::to_string(c.gauge.classify()) << "\n";
  }
  out.json["candidates"] = list;
  out.json["selected"] = selected;
  pretty << "\nselected: [" << selected << "]\n";
  out.pretty = pretty.str();
  out.csv = csv.str();
  return out;
}

inline Output cmd_polys(const RunConfig& cfg) {
  const int j = cfg.resolved_j();
  Output out;
  out.json = detail::header(cfg, "polys");
  out.json.erase("params");  // the table is symbolic in the parameters
  out.json["variable"] = cfg.mode == Mode::Free ? "physical eps^2" : "reduced eps~^2";
  Json rows = Json::array();
  std::ostringstream pretty, csv;
  pretty << "monic energy polynomials, " << model::to_string(cfg.mode) << " mode (x = "
         << (cfg.mode == Mode::Free ? "ε²" : "ε̃²") << ")\n";
  csv << "n,verdict,derived,paper\n";
  for (int n = 1; n <= j + 1; ++n) {
    const Json row = detail::table_row(cfg.mode, n);
    pretty << detail::table_row_pretty(row, cfg.color);
    csv << n << "," << row["verdict"].get<std::string>() << "," << detail::csv_field(row["derived"].get<std::string>())
        << "," << (row["paper"].is_null() ? std::string() : detail::csv_field(row["paper"].get<std::string>())) << "\n";
    rows.push_back(row);
  }
  out.json["rows"] = rows;
  out.pretty = pretty.str();
  out.csv = csv.str();
  return out;
}

inline Output cmd_spectrum(const RunConfig& cfg) {
  const int j = cfg.resolved_j();
  const auto s = qes::spectrum(cfg.params, j, cfg.mode, detail::spectrum_options(cfg));
  Output out;
  out.json = detail::header(cfg, "spectrum");
  out.json["spectrum"] = detail::spectrum_json(s);
  std::ostringstream pretty, csv;
  pretty << "mode " << model::to_string(cfg.mode) << ", j = " << j << ", " << qes::to_string(s.source)
         << " recurrence\n"
         << detail::spectrum_pretty(s, std::min(cfg.digits, 30));
  csv << "index,reduced,physical,error,E\n";
  for (size_t i = 0; i < s.roots.size(); ++i) {
    const auto& r = s.roots[i];
    csv << i << "," << enclosure_text(r.reduced, s.digits) << "," << enclosure_text(r.physical, s.digits) << ","
        << (r.physical.exact() ? "exact" : "1e-" + std::to_string(s.digits)) << ","
        << (r.energy.subcritical ? std::string("subcritical")
                                 : (r.energy.exact ? sqes::to_string(r.energy.energy)
                                                   : to_decimal(r.energy.energy, s.digits)))
        << "\n";
  }
  if (cfg.oracle) {
    const auto o = detail::run_oracle(detail::physical_problem(cfg), detail::default_count(cfg), cfg);
    const auto m = oracle::match_report(s, o, cfg.tol);
    out.json["oracle"] = detail::oracle_json(o);
    out.json["match"] = detail::match_json(m);
    pretty << "\n" << detail::oracle_pretty(o) << "\n" << detail::match_pretty(m, cfg.color);
  }
  out.pretty = pretty.str();
  out.csv = csv.str();
  return out;
}

inline Output cmd_oracle(const RunConfig& cfg) {
  oracle::Problem p;
  if (cfg.box) {
    if (!cfg.r_max) throw ConfigError("--box needs --rmax");
    p = oracle::Problem::box(cfg.params.c, cfg.params.hbar);
  } else {
    p = detail::physical_problem(cfg);
  }
  const auto o = detail::run_oracle(p, cfg.count ? *cfg.count : 5, cfg);
  Output out;
  out.json["command"] = "oracle";
  out.json["mode"] = cfg.box ? "box" : model::to_string(cfg.mode);
  out.json["m"] = cfg.box ? Json(nullptr) : Json(cfg.resolved_m());
  out.json["params"] = detail::params_json(cfg.params);
  out.json["oracle"] = detail::oracle_json(o);
  out.pretty = detail::oracle_pretty(o);
  std::ostringstream csv;
  csv << "n,eigenvalue,error\n";
  for (size_t n = 0; n < o.levels.size(); ++n)
    csv << n << "," << fixed(o.levels[n].value) << "," << fixed(o.levels[n].error, 3) << "\n";
  out.csv = csv.str();
  return out;
}

inline Output cmd_wavefunction(const RunConfig& cfg) {
  qes::RadialWavefunction wf;
  std::string what;
  const auto& p = cfg.params;
  if (cfg.mode == Mode::Free && p.q == 0) {
    // analytic oscillator ground state, the non-QES reference
    const int m = cfg.resolved_m();
    wf.gauge = opcalc::GaugeAnsatz{Rational(std::abs(m)) + Rational(1, 2), p.M * p.omega, 0, p.hbar};
    wf.P = RationalPoly(Rational(1));
    wf.length_scale = p.length_scale();
    wf.m = m;
    wf.eigenvalue = 4 * p.oscillator_unit();
    wf.classification = wf.gauge.classify();
    what = "oscillator ground state (q = 0)";
  } else {
    const auto s = qes::spectrum(p, cfg.resolved_j(), cfg.mode, detail::spectrum_options(cfg));
    wf = qes::wavefunction(s, cfg.root);
    what = "QES root " + std::to_string(cfg.root);
  }
  Output out;
  out.json = detail::header(cfg, "wavefunction");
  out.json["state"] = what;
  out.json["form"] = qes::describe(wf);
  out.json["gauge"] = detail::gauge_json(wf.gauge);
  out.json["polynomial"] = sqes::to_string(wf.P, "rho");
  out.json["eigenvalue"] = exact_number(wf.eigenvalue);
  std::ostringstream csv;
  csv << "# " << what << "\n# f(r) = " << qes::describe(wf) << "\n# P(rho) = " << sqes::to_string(wf.P, "rho")
      << "\n# gauge: " << opcalc::describe(wf.gauge) << "\n# normalizability: " << opcalc::to_string(wf.classification)
      << "\n# eigenvalue eps^2 = " << sqes::to_string(wf.eigenvalue) << "\nr,f\n";
  Json samples = Json::array();
  for (int i = 0; i < cfg.samples; ++i) {
    const Rational r = cfg.samples == 1 ? cfg.r_from : cfg.r_from + (cfg.r_to - cfg.r_from) * i / (cfg.samples - 1);
    const long double f = wf(to_long_double(r));
    csv << to_decimal(r, 6) << "," << fixed(f) << "\n";
    samples.push_back(Json{{"r", to_decimal(r, 6)}, {"f", fixed(f)}});
  }
  out.json["samples"] = samples;
  out.csv = csv.str();
  out.pretty = out.csv;
  return out;
}

inline Output cmd_verify(const RunConfig& cfg) {
  const auto results = run_verify({cfg.fast, cfg.inject_fault});
  Output out;
  out.json["command"] = "verify";
  Json list = Json::array();
  std::ostringstream pretty, csv;
  csv << "name,status,detail\n";
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.status != Status::Fail;
    list.push_back(Json{{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
    pretty << detail::pad(r.name, 22) << paint(to_string(r.status), r.status != Status::Fail, cfg.color);
    if (!r.detail.empty()) pretty << "  " << r.detail;
    pretty << "  (" << fixed(r.seconds, 3) << " s)\n";
    csv << r.name << "," << to_string(r.status) << "," << detail::csv_field(r.detail) << "\n";
  }
  out.json["checks"] = list;
  out.json["passed"] = ok;
  out.exit_code = ok ? 0 : 1;
  out.pretty = pretty.str();
  out.csv = csv.str();
  return out;
}

/// Polynomial row, spectrum, oracle and match in one report, with the ledger
/// shift re-derived from the potential as a cross-check.
inline Output cmd_compare(const RunConfig& cfg) {
  const int j = cfg.resolved_j();
  RunConfig derived = cfg;
  derived.source = qes::SpectrumSource::Derived;
  const auto s = qes::spectrum(cfg.params, j, cfg.mode, detail::spectrum_options(derived));
  const auto o = detail::run_oracle(detail::physical_problem(cfg), detail::default_count(cfg), cfg);
  const auto m = oracle::match_report(s, o, cfg.tol);
  const Rational direct = qes::direct_ledger_shift(cfg.params, j + 2, cfg.mode, *s.gauge, cfg.convention);
  const bool ledger_ok = direct == s.ledger.shift;

  Output out;
  out.json = detail::header(cfg, "compare");
  const bool in_table = j + 1 <= qes::table_size(cfg.mode);
  const Json row = in_table ? detail::table_row(cfg.mode, j + 1) : Json(nullptr);
  out.json["table"] = row;
  out.json["spectrum"] = detail::spectrum_json(s);
  out.json["oracle"] = detail::oracle_json(o);
  out.json["match"] = detail::match_json(m);
  out.json["ledger_check"] = Json{{"pipeline", exact_number(s.ledger.shift)},
                                  {"direct", exact_number(direct)},
                                  {"agree", ledger_ok}};
  std::ostringstream pretty;
  pretty << "compare: mode " << model::to_string(cfg.mode) << ", j = " << j << ", m = " << j + 2 << "\n\n";
  if (in_table) pretty << detail::table_row_pretty(row, cfg.color) << "\n";
  pretty << detail::spectrum_pretty(s, std::min(cfg.digits, 30)) << "\n"
         << detail::oracle_pretty(o) << "\n"
         << detail::match_pretty(m, cfg.color) << "\n"
         << "ledger shift: pipeline " << sqes::to_string(s.ledger.shift) << ", direct " << sqes::to_string(direct)
         << "  " << paint(ledger_ok ? "AGREE" : "DISAGREE", ledger_ok, cfg.color) << "\n";
  if (cfg.mode == Mode::Free) {
    const auto cp = qes::cross_path(cfg.params, j);
    out.json["cross_path"] = Json{{"t_charpoly", sqes::to_string(cp.t_charpoly, "lambda")},
                                  {"derived_critical", sqes::to_string(cp.derived_critical)},
                                  {"literal_match", cp.literal_match},
                                  {"reflected_match", cp.reflected_match},
                                  {"implied_offset", exact_number(cp.implied_offset)}};
    pretty << "T operator: det(lambda - T) = " << sqes::to_string(cp.t_charpoly, "lambda") << "\n"
           << "  against derived critical polynomial with lambda = eps^2 + 2Mc^2hbar omega: "
           << (cp.literal_match ? "equal" : "not equal") << "\n"
           << "  with q -> -q: " << (cp.reflected_match ? "equal" : "not equal")
           << ", lambda - eps^2 = " << sqes::to_string(cp.implied_offset) << "\n";
  }
  out.json["physicality"] = Json{{"normalizability", opcalc::to_string(s.gauge->classify())},
                                 {"matched", m.matched()},
                                 {"roots", m.roots.size()}};
  pretty << "physicality: " << m.matched() << " of " << m.roots.size() << " QES roots matched; gauge is "
         << opcalc::to_string(s.gauge->classify()) << "\n";
  out.pretty = pretty.str();
  std::ostringstream csv;
  csv << "index,qes,nearest,oracle,error,relative_gap,verdict\n";
  for (size_t i = 0; i < m.roots.size(); ++i) {
    const auto& r = m.roots[i];
    csv << i << "," << fixed(r.qes) << "," << (r.nearest ? std::to_string(*r.nearest) : std::string()) << ","
        << (r.nearest ? fixed(r.oracle) : std::string()) << "," << (r.nearest ? fixed(r.oracle_error, 3) : std::string())
        << "," << fixed(r.relative, 6) << "," << oracle::to_string(r.verdict) << "\n";
  }
  out.csv = csv.str();
  out.exit_code = ledger_ok ? 0 : 1;
  return out;
}

}  // namespace sqes::cli
