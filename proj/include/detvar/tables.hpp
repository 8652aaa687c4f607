#pragma once

#include "detvar/classes.hpp"
#include "detvar/errors.hpp"
#include "detvar/lagrangian.hpp"
#include "detvar/schubert.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace detvar {

/// One published row: kind in {cm, csm, csm_open, conormal, charcycle, charcycle_open,
/// ged, amatrix, fulton, milnor}. Classes are listed on [P^0..P^N], cycles from
/// h1^N h2 down to h1 h2^N, matrices row-major.
struct TableRow {
  std::string table;
  std::string kind;
  int m = 0, n = 0, k = 0;
  std::vector<std::string> values;
};

struct TableCell {
  std::string row;
  int index = 0;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct TableReport {
  std::vector<TableCell> cells;
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : cells) f += c.ok ? 0 : 1;
    return f;
  }
  bool all_pass() const { return failures() == 0; }
};

inline std::vector<TableRow> parse_table_fixtures(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != "detvar-fixtures")
      throw ContractViolation("not a fixture file");
    std::vector<TableRow> rows;
    for (const auto& r : j.at("rows")) {
      TableRow row;
      row.table = r.at("table").get<std::string>();
      row.kind = r.at("kind").get<std::string>();
      row.m = r.at("m").get<int>();
      row.n = r.at("n").get<int>();
      row.k = r.value("k", 0);
      row.values = r.at("values").get<std::vector<std::string>>();
      rows.push_back(std::move(row));
    }
    return rows;
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("malformed fixture file: ") + e.what());
  }
}

inline std::vector<TableRow> load_table_fixtures(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ContractViolation("cannot read fixture file " + file.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_table_fixtures(nlohmann::json::parse(buffer.str()));
  } catch (const nlohmann::json::parse_error& e) {
    throw ContractViolation("malformed fixture file " + file.string() + ": " + e.what());
  }
}

inline std::string row_label(const TableRow& r) {
  std::string label = r.kind + "(" + std::to_string(r.m) + "," + std::to_string(r.n);
  if (r.kind != "fulton" && r.kind != "milnor") label += "," + std::to_string(r.k);
  return label + ")";
}

/// Freshly computed values for a fixture row, as decimal strings.
inline std::vector<std::string> compute_table_row(const TableRow& r) {
  auto dec = [](const std::vector<Integer>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_decimal(x));
    return out;
  };
  if (r.kind == "cm") return dec(cm_class(r.m, r.n, r.k).coefficients());
  if (r.kind == "csm") return dec(csm_class(r.m, r.n, r.k).coefficients());
  if (r.kind == "csm_open") return dec(csm_open(r.m, r.n, r.k).coefficients());
  if (r.kind == "conormal") return dec(conormal(r.m, r.n, r.k).by_h2_exponent());
  if (r.kind == "charcycle") return dec(charcycle(r.m, r.n, r.k).by_h2_exponent());
  if (r.kind == "charcycle_open") return dec(charcycle_open(r.m, r.n, r.k).by_h2_exponent());
  if (r.kind == "ged") return {to_decimal(ged(r.m, r.n, r.k))};
  if (r.kind == "amatrix") return dec(a_matrix(r.m, r.n, r.k).data());
  if (r.kind == "fulton") return dec(chern_fulton_hypersurface(r.n).coefficients());
  if (r.kind == "milnor") return dec(milnor_class(r.n).coefficients());
  throw ContractViolation("unknown fixture kind '" + r.kind + "'");
}

/// Compares every fixture cell with a fresh computation. Rows that fail to compute,
/// or have the wrong length, flag every cell.
inline TableReport reproduce_published_tables(const std::vector<TableRow>& rows) {
  TableReport report;
  for (const auto& r : rows) {
    const std::string label = r.table + ": " + row_label(r);
    std::vector<std::string> actual;
    std::string error;
    try {
      actual = compute_table_row(r);
    } catch (const std::exception& e) {
      error = std::string("error: ") + e.what();
    }
    const std::size_t width = std::max(actual.size(), r.values.size());
    for (std::size_t i = 0; i < width; ++i) {
      TableCell cell{label, static_cast<int>(i), i < r.values.size() ? r.values[i] : "(missing)",
                     !error.empty() ? error : (i < actual.size() ? actual[i] : "(missing)"), false};
      cell.ok = error.empty() && actual.size() == r.values.size() && cell.expected == cell.actual;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

} // namespace detvar
