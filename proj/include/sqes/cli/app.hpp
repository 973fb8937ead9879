#pragma once

// Argument parsing and dispatch. Exit codes: 0 success or finding, 1 internal
// or invariant failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "sqes/cli/commands.hpp"

namespace sqes::cli {

inline bool color_allowed(bool is_tty) {
  const char* nc = std::getenv("NO_COLOR");
  return is_tty && (nc == nullptr || *nc == '\0');
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, bool tty = false) {
  CLI::App app{"Exact QES spectra of the sextic Dirac oscillator, with a numerical oracle", "sqes"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "flat key=value file; command-line flags override it");

  std::string mode = "free", format = "pretty", gauge = "auto", source = "derived", convention = "field-consistent";
  std::string M = "1", c = "1", hbar = "1", omega = "1", q = "1", e = "1", B, r_from = "0.05", r_to = "3";
  int j = 0, m = 0, digits = 50, N = 8192, count = 0, gauge_index = 0, root = 0, samples = 101;
  long double r_max = 0, tol = 1e-4L;
  bool box = false, with_oracle = false, fast = false, inject_fault = false;

  auto* o_j = app.add_option("--j", j, "QES index j >= 0 (m = j + 2)");
  auto* o_m = app.add_option("--m", m, "angular quantum number");
  app.add_option("--mode", mode, "free or field");
  app.add_option("--M", M, "mass");
  app.add_option("--c", c, "speed of light");
  app.add_option("--hbar", hbar, "reduced Planck constant");
  app.add_option("--omega", omega, "oscillator frequency");
  app.add_option("--q", q, "sextic coupling");
  app.add_option("--e", e, "charge");
  auto* o_B = app.add_option("--B", B, "magnetic field (field mode fixes it to 2 M omega / e)");
  app.add_option("--digits", digits, "root precision in decimal digits (>= 15)");
  app.add_option("--N", N, "oracle base grid size");
  auto* o_rmax = app.add_option("--rmax", r_max, "oracle domain [0, rmax]");
  auto* o_count = app.add_option("--count", count, "number of oracle eigenvalues");
  app.add_option("--tol", tol, "relative match tolerance");
  app.add_option("--format", format, "json, csv or pretty");
  app.add_option("--gauge", gauge, "gauge selection: auto or index");
  app.add_option("--gauge-index", gauge_index, "accepted-candidate index for --gauge index");
  app.add_option("--source", source, "recurrence source: derived or paper");
  app.add_option("--convention", convention, "magnetic constant sign: field-consistent or as-printed");
  app.add_option("--root", root, "root index for wavefunction");
  app.add_option("--samples", samples, "number of wavefunction samples");
  app.add_option("--from", r_from, "first wavefunction sample radius");
  app.add_option("--to", r_to, "last wavefunction sample radius");
  app.add_flag("--oracle", with_oracle, "append an oracle run and match report (spectrum)");
  app.add_flag("--fast", fast, "skip oracle runs (verify)");
  app.add_flag("--box", box)->group("");
  app.add_flag("--inject-fault", inject_fault)->group("");

  const char* names[][2] = {{"derive", "gauge candidates, rho-operators, recurrences, ledgers"},
                            {"polys", "monic energy polynomials with a diff against the published tables"},
                            {"spectrum", "QES roots, physical eps^2 and energies"},
                            {"oracle", "numerical eigenvalues with convergence records"},
                            {"wavefunction", "samples of a closed-form wavefunction"},
                            {"verify", "invariant suite"},
                            {"compare", "polys + spectrum + oracle + match in one report"}};
  for (const auto& [name, help] : names) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "sqes: " << ex.what() << "\n" << "run 'sqes --help' for usage\n";
    return 2;
  }

  RunConfig cfg;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.mode = model::parse_mode(mode);
    if (o_j->count()) cfg.j = j;
    if (o_m->count()) cfg.m = m;
    cfg.params.M = parse_rational(M);
    cfg.params.c = parse_rational(c);
    cfg.params.hbar = parse_rational(hbar);
    cfg.params.omega = parse_rational(omega);
    cfg.params.q = parse_rational(q);
    cfg.params.e_charge = parse_rational(e);
    if (o_B->count()) cfg.params.B = parse_rational(B);
    cfg.digits = digits;
    cfg.N = N;
    if (o_rmax->count()) cfg.r_max = r_max;
    if (o_count->count()) cfg.count = count;
    cfg.tol = tol;
    cfg.format = parse_format(format);
    cfg.policy = parse_policy(gauge);
    cfg.gauge_index = gauge_index;
    cfg.source = parse_source(source);
    cfg.convention = parse_convention(convention);
    cfg.root = root;
    cfg.samples = samples;
    cfg.r_from = parse_rational(r_from);
    cfg.r_to = parse_rational(r_to);
    cfg.box = box;
    cfg.oracle = with_oracle;
    cfg.fast = fast;
    cfg.inject_fault = inject_fault;
    cfg.color = cfg.format == Format::Pretty && color_allowed(tty);
    cfg.validate();
  } catch (const Error& ex) {
    err << "sqes: " << ex.what() << "\n";
    return 2;
  }

  Output result;
  try {
    if (cfg.command == "derive") result = cmd_derive(cfg);
    else if (cfg.command == "polys") result = cmd_polys(cfg);
    else if (cfg.command == "spectrum") result = cmd_spectrum(cfg);
    else if (cfg.command == "oracle") result = cmd_oracle(cfg);
    else if (cfg.command == "wavefunction") result = cmd_wavefunction(cfg);
    else if (cfg.command == "verify") result = cmd_verify(cfg);
    else result = cmd_compare(cfg);
  } catch (const ConfigError& ex) {
    err << "sqes: " << ex.what() << "\n";
    return 2;
  } catch (const DomainError& ex) {
    err << "sqes: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "sqes: internal error: " << ex.what() << "\n";
    return 1;
  }

  switch (cfg.format) {
    case Format::Json: out << result.json.dump(2) << "\n"; break;
    case Format::Csv: out << result.csv; break;
    case Format::Pretty: out << result.pretty; break;
  }
  if (result.exit_code == 1 && cfg.command == "verify") {
    for (const auto& check : result.json["checks"])
      if (check["status"] == "FAIL") err << "sqes: invariant failed: " << check["name"].get<std::string>() << "\n";
  }
  return result.exit_code;
}

}  // namespace sqes::cli
