#pragma once

#include "detvar/cache.hpp"
#include "detvar/classes.hpp"
#include "detvar/document.hpp"
#include "detvar/errors.hpp"
#include "detvar/lagrangian.hpp"
#include "detvar/microlocal.hpp"
#include "detvar/scan.hpp"
#include "detvar/schubert.hpp"
#include "detvar/tables.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#ifndef DETVAR_DATA_DIR
#define DETVAR_DATA_DIR "data"
#endif

namespace detvar {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_consistency = 3;

struct CliOptions {
  std::string command;
  std::optional<int> m, n, k;
  std::string format = "csv";
  std::optional<std::string> cache_dir;
  std::optional<int> max_box;
  bool check = false;
  bool timing = false;
  std::string fixtures = std::string(DETVAR_DATA_DIR) + "/published_tables.json";
};

namespace detail {

inline int need(const std::optional<int>& v, const char* flag, const std::string& command) {
  if (!v) throw DomainError(command + " needs " + flag);
  return *v;
}

inline void add_check(OutputDocument& doc, std::string name, bool passed) {
  doc.checks.push_back({std::move(name), passed});
}

inline std::string mnk(int m, int n, int k) {
  return "tau_{" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(k) + "}";
}

inline void class_command(OutputDocument& doc, const CliOptions& o) {
  const int m = need(o.m, "-m", o.command), n = need(o.n, "-n", o.command), k = need(o.k, "-k", o.command);
  doc.m = m, doc.n = n, doc.k = k;
  if (o.command == "cm") {
    set_payload(doc, cm_class(m, n, k));
    if (o.check && k >= 1) {
      add_check(doc, "closed sum = trace(A H B)", cm_class_trace(m, n, k) == cm_class(m, n, k));
      add_check(doc, "closed sum = sum_l trace(alpha^l B)", cm_class_alpha(m, n, k) == cm_class(m, n, k));
    }
  } else {
    const ProjClass c = o.command == "csm" ? csm_class(m, n, k) : csm_open(m, n, k);
    set_payload(doc, c);
    if (o.check) {
      ProjClass sum(ambient_dimension(m, n)), eu(ambient_dimension(m, n));
      for (int i = k; i <= n - 1; ++i) {
        sum += csm_open(m, n, i);
        eu += binomial(i, k) * csm_open(m, n, i);
      }
      add_check(doc, "sum of open strata = c_SM of closure", sum == csm_class(m, n, k));
      add_check(doc, "Eu-weighted open strata = c_M", eu == cm_class(m, n, k));
    }
  }
}

inline void hypersurface_command(OutputDocument& doc, const CliOptions& o) {
  const int n = need(o.n, "-n", o.command);
  if (o.m && *o.m != n) throw DomainError(o.command + " is defined for square matrices (m = n)");
  if (o.k && *o.k != 1) throw DomainError(o.command + " is defined for k = 1");
  doc.m = n, doc.n = n, doc.k = 1;
  if (o.command == "fulton") {
    const ProjClass c = chern_fulton_hypersurface(n);
    set_payload(doc, c);
    if (o.check) add_check(doc, "H^1 coefficient = degree n", c.h_powers().at(1) == n);
  } else {
    const ProjClass c = milnor_class(n);
    set_payload(doc, c);
    if (o.check) add_check(doc, "supported on tau_{n,n,2}", n == 2 ? c.is_zero() : c.dimension() <= variety_dimension(n, n, 2));
  }
}

inline void cycle_command(OutputDocument& doc, const CliOptions& o) {
  const int m = need(o.m, "-m", o.command), n = need(o.n, "-n", o.command), k = need(o.k, "-k", o.command);
  doc.m = m, doc.n = n, doc.k = k;
  if (o.command == "conormal") {
    set_payload(doc, conormal(m, n, k));
    if (o.check) add_check(doc, "dagger(Con) = Con(" + mnk(m, n, n - k) + ")", dagger(conormal(m, n, k)) == conormal(m, n, n - k));
  } else if (o.command == "charcycle") {
    set_payload(doc, charcycle(m, n, k));
    if (o.check) add_check(doc, "Ch = ch(c_SM)", charcycle(m, n, k) == ch_from_class(csm_class(m, n, k)));
  } else {
    set_payload(doc, charcycle_open(m, n, k));
    if (o.check) add_check(doc, "Ch = ch(c_SM)", charcycle_open(m, n, k) == ch_from_class(csm_open(m, n, k)));
  }
}

inline void strata_command(OutputDocument& doc, const CliOptions& o) {
  const int m = need(o.m, "-m", o.command), n = need(o.n, "-n", o.command), k = need(o.k, "-k", o.command);
  doc.m = m, doc.n = n, doc.k = k;
  if (o.command == "eu") {
    const StrataVector eu = euler_obstruction(m, n, k);
    set_payload(doc, eu);
    if (o.check) {
      ProjClass s(ambient_dimension(m, n));
      for (int i = k; i <= n - 1; ++i) s += eu[i] * csm_open(m, n, i);
      add_check(doc, "c_*(Eu) = c_M", s == cm_class(m, n, k));
    }
  } else {
    const StrataVector r = solve_multiplicities(determinantal_index_system(m, n, k));
    set_payload(doc, r);
    if (o.check) {
      bool ok = true;
      try {
        (void)ic_char_cycle(m, n, k);
      } catch (const ConsistencyError&) {
        ok = false;
      }
      add_check(doc, "CC(IC) = Con", ok);
    }
  }
}

inline void dual_check_command(OutputDocument& doc, const CliOptions& o) {
  const int m = need(o.m, "-m", o.command), n = need(o.n, "-n", o.command), k = need(o.k, "-k", o.command);
  require_parameters(m, n, k, 1);
  doc.m = m, doc.n = n, doc.k = k;
  const DualClass d = dual_cm(cm_class(m, n, k), variety_dimension(m, n, k));
  set_payload(doc, d.cm);
  add_check(doc, "dual dimension = dim " + mnk(m, n, n - k), d.dimension == variety_dimension(m, n, n - k));
  add_check(doc, "dual c_M = c_M(" + mnk(m, n, n - k) + ")", d.cm == cm_class(m, n, n - k));
  add_check(doc, "J_N is an involution here",
            dual_cm(d.cm, d.dimension).cm == cm_class(m, n, k));
}

inline void tables_command(OutputDocument& doc, const CliOptions& o) {
  const TableReport report = reproduce_published_tables(load_table_fixtures(o.fixtures));
  std::string current;
  bool row_ok = true;
  auto flush = [&] {
    if (!current.empty()) add_check(doc, current, row_ok);
  };
  for (const auto& cell : report.cells) {
    if (cell.row != current) {
      flush();
      current = cell.row;
      row_ok = true;
    }
    if (!cell.ok) {
      row_ok = false;
      add_check(doc, cell.row + " [" + std::to_string(cell.index) + "]: expected " + cell.expected +
                         ", computed " + cell.actual, false);
    }
  }
  flush();
  add_check(doc, std::to_string(report.cells.size()) + " cells, " + std::to_string(report.failures()) +
                     " differ", report.all_pass());
}

} // namespace detail

/// Builds the document for one subcommand. Throws on bad parameters or a failed
/// internal route comparison.
inline OutputDocument compute_document(const CliOptions& o) {
  OutputDocument doc;
  doc.kind = o.command;
  const std::string& c = o.command;
  if (c == "cm" || c == "csm" || c == "csm_open") {
    detail::class_command(doc, o);
  } else if (c == "fulton" || c == "milnor") {
    detail::hypersurface_command(doc, o);
  } else if (c == "conormal" || c == "charcycle" || c == "charcycle_open") {
    detail::cycle_command(doc, o);
  } else if (c == "eu" || c == "microlocal") {
    detail::strata_command(doc, o);
  } else if (c == "polar") {
    const int m = detail::need(o.m, "-m", c), n = detail::need(o.n, "-n", c), k = detail::need(o.k, "-k", c);
    doc.m = m, doc.n = n, doc.k = k;
    set_payload(doc, StrataVector(0, polar_degrees(m, n, k).values));
    doc.basis = "delta_l";
    if (o.check) detail::add_check(doc, "Con coefficients = Piene degrees", true);
  } else if (c == "ged") {
    const int m = detail::need(o.m, "-m", c), n = detail::need(o.n, "-n", c), k = detail::need(o.k, "-k", c);
    doc.m = m, doc.n = n, doc.k = k;
    set_payload(doc, ged(m, n, k));
    if (o.check) detail::add_check(doc, "gED(" + detail::mnk(m, n, k) + ") = gED(" + detail::mnk(m, n, n - k) + ")", ged(m, n, k) == ged(m, n, n - k));
  } else if (c == "amatrix") {
    const int m = detail::need(o.m, "-m", c), n = detail::need(o.n, "-n", c), k = detail::need(o.k, "-k", c);
    doc.m = m, doc.n = n, doc.k = k;
    const IntMatrix a = a_matrix(m, n, k);
    set_payload(doc, a);
    if (o.check) {
      bool upper = true;
      for (int i = 0; i < a.rows(); ++i)
        for (int p = 0; p < i; ++p) upper = upper && a(i, p) == 0;
      detail::add_check(doc, "A_{i,p} = 0 for i > p", upper);
    }
  } else if (c == "dual_check") {
    detail::dual_check_command(doc, o);
  } else if (c == "symmetry") {
    doc.m = detail::need(o.m, "-m", c), doc.n = detail::need(o.n, "-n", c);
    for (const auto& item : symmetry_check(doc.m, doc.n).items) detail::add_check(doc, item.identity, item.holds);
  } else if (c == "scan") {
    doc.m = detail::need(o.m, "-m", c), doc.n = detail::need(o.n, "-n", c);
    const ScanReport r = scan_conjectures(doc.m, doc.n);
    for (const auto& v : r.effectivity_violations)
      doc.violations.push_back({"effectivity", v.m, v.n, v.k, v.l, to_decimal(v.coefficient)});
    for (const auto& v : r.vanishing_violations)
      doc.violations.push_back({"vanishing", v.m, v.n, v.k, v.l, to_decimal(v.coefficient)});
    doc.instances_checked = r.instances_checked;
  } else if (c == "tables") {
    detail::tables_command(doc, o);
  } else {
    throw DomainError("unknown subcommand '" + c + "'");
  }

  auto& p = doc.meta.parameters;
  if (o.m) p["m"] = std::to_string(*o.m);
  if (o.n) p["n"] = std::to_string(*o.n);
  if (o.k) p["k"] = std::to_string(*o.k);
  if (o.max_box) p["max_box"] = std::to_string(*o.max_box);
  p["check"] = o.check ? "true" : "false";
  return doc;
}

inline OutputFormat parse_format(const std::string& f) {
  if (f == "json") return OutputFormat::json;
  if (f == "markdown") return OutputFormat::markdown;
  return OutputFormat::csv;
}

/// Entry point of the detvar tool. Exit codes: 0 ok, 2 usage or parameter error,
/// 3 failed consistency check.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliOptions o;
  CLI::App app{"Exact characteristic classes of generic determinantal varieties", "detvar"};
  app.set_version_flag("--version", DETVAR_VERSION);
  app.require_subcommand(1);

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"cm", "Chern-Mather class on [P^0..P^N]"},
      {"csm", "Chern-Schwartz-MacPherson class of tau_{m,n,k}"},
      {"csm_open", "CSM class of the open stratum tau_{m,n,k} minus tau_{m,n,k+1}"},
      {"eu", "local Euler obstruction on the strata k..n-1"},
      {"fulton", "Chern-Fulton class of the n x n determinant hypersurface"},
      {"milnor", "Milnor class of the n x n determinant hypersurface"},
      {"conormal", "projectivized conormal cycle in P^N x P^N"},
      {"charcycle", "characteristic cycle of tau_{m,n,k}"},
      {"charcycle_open", "characteristic cycle of the open stratum"},
      {"polar", "polar degrees delta_0..delta_d"},
      {"ged", "generic Euclidean distance degree"},
      {"microlocal", "microlocal multiplicities of the IC sheaf"},
      {"amatrix", "the integral matrix A_{i,p}(m,n,k)"},
      {"dual_check", "c_M of the dual variety via the J_N involution"},
      {"symmetry", "dagger symmetries of characteristic cycles (-m, -n)"},
      {"scan", "check the effectivity and vanishing conjectures for m <= M, n <= N (-m M -n N)"},
      {"tables", "compare the bundled published tables with fresh computations"}};

  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&o, name = std::string(name)] { o.command = name; });
  }
  app.add_option("-m", o.m, "rows");
  app.add_option("-n", o.n, "columns");
  app.add_option("-k", o.k, "kernel dimension");
  app.add_option("--format", o.format, "json, csv or markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  app.add_option("--cache-dir", o.cache_dir, "cache directory (overrides $DETVAR_CACHE_DIR)");
  app.add_option("--max-box", o.max_box, "largest Grassmannian dimension k(n-k) accepted")
      ->check(CLI::PositiveNumber);
  app.add_flag("--check", o.check, "also evaluate independent routes and report them");
  app.add_flag("--timing", o.timing, "print elapsed time to stderr");
  app.add_option("--fixtures", o.fixtures, "fixture file for the tables subcommand")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) { // --help, --version
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(DETVAR_VERSION) + "\n"
                                                              : app.help());
      return exit_ok;
    }
    err << "detvar: " << e.what() << "\n";
    return exit_usage;
  }

  const auto start = std::chrono::steady_clock::now();
  std::optional<std::filesystem::path> cache_dir;
  try {
    cache_dir = resolve_cache_dir(o.cache_dir);
  } catch (const std::exception& e) {
    err << "warning: " << e.what() << "\n";
  }
  if (cache_dir) (void)load_cache(*cache_dir, err);

  int status = exit_ok;
  try {
    std::optional<ScopedBoxLimit> limit;
    if (o.max_box) limit.emplace(*o.max_box);
    const OutputDocument doc = compute_document(o);
    out << render(doc, parse_format(o.format));
    if (!doc.all_checks_pass()) status = exit_consistency;
  } catch (const ConsistencyError& e) {
    err << "detvar: consistency check failed: " << e.what() << "\n";
    status = exit_consistency;
  } catch (const DomainError& e) {
    err << "detvar: " << e.what() << "\n";
    return exit_usage;
  } catch (const SizeError& e) {
    err << "detvar: " << e.what() << "\n";
    return exit_usage;
  } catch (const ContractViolation& e) {
    err << "detvar: " << e.what() << "\n";
    return exit_usage;
  }

  if (cache_dir) {
    try {
      store_cache(*cache_dir);
    } catch (const std::exception& e) {
      err << "warning: could not write cache: " << e.what() << "\n";
    }
  }
  if (o.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    err << "elapsed: " << ms.count() << " ms\n";
  }
  return status;
}

} // namespace detvar
