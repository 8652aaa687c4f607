#pragma once

#include "detvar/bi_proj_class.hpp"
#include "detvar/errors.hpp"
#include "detvar/int_matrix.hpp"
#include "detvar/integer.hpp"
#include "detvar/proj_class.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#ifndef DETVAR_VERSION
#define DETVAR_VERSION "0.1.0"
#endif

namespace detvar {

inline constexpr int document_format_version = 1;

inline constexpr std::array<std::string_view, 17> document_kinds = {
    "cm",        "csm",       "csm_open",       "eu",    "fulton", "milnor",
    "conormal",  "charcycle", "charcycle_open", "polar", "ged",    "microlocal",
    "amatrix",   "dual_check", "symmetry",      "scan",  "tables"};

inline bool is_document_kind(std::string_view kind) {
  return std::find(document_kinds.begin(), document_kinds.end(), kind) != document_kinds.end();
}

/// Basis tags. "P^l" for classes, "h1^(N+1-j) h2^j" for cycles (j from index_origin),
/// "stratum" for strata vectors, "delta_l" for polar degrees, "matrix" (row-major, with shape),
/// "scalar" and "none".
struct Check {
  std::string name;
  bool passed = false;
  friend bool operator==(const Check&, const Check&) = default;
};

struct Violation {
  std::string conjecture; // "effectivity" or "vanishing"
  int m = 0, n = 0, k = 0, l = 0;
  std::string coefficient;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct DocumentMeta {
  std::string tool_version = DETVAR_VERSION;
  std::map<std::string, std::string> parameters;
  friend bool operator==(const DocumentMeta&, const DocumentMeta&) = default;
};

struct OutputDocument {
  int version = document_format_version;
  std::string kind;
  int m = 0, n = 0;
  std::optional<int> k;
  std::string basis = "none";
  int index_origin = 0;
  std::vector<std::string> coefficients;
  std::optional<std::pair<int, int>> shape;
  std::vector<Check> checks;
  std::vector<Violation> violations;
  std::optional<long long> instances_checked;
  DocumentMeta meta;

  bool all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

// ---------------------------------------------------------------------------
// Payload builders

namespace detail {
inline std::vector<std::string> decimals(const std::vector<Integer>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}
} // namespace detail

inline void set_payload(OutputDocument& doc, const ProjClass& c) {
  doc.basis = "P^l";
  doc.index_origin = 0;
  doc.coefficients = detail::decimals(c.coefficients());
}

inline void set_payload(OutputDocument& doc, const BiProjClass& c) {
  doc.basis = "h1^(N+1-j) h2^j";
  doc.index_origin = 1;
  doc.coefficients = detail::decimals(c.by_h2_exponent());
}

inline void set_payload(OutputDocument& doc, const StrataVector& v) {
  doc.basis = "stratum";
  doc.index_origin = v.lo();
  doc.coefficients = detail::decimals(v.values());
}

inline void set_payload(OutputDocument& doc, const IntMatrix& a) {
  doc.basis = "matrix";
  doc.index_origin = 0;
  doc.shape = std::make_pair(a.rows(), a.cols());
  doc.coefficients = detail::decimals(a.data());
}

inline void set_payload(OutputDocument& doc, const Integer& x) {
  doc.basis = "scalar";
  doc.index_origin = 0;
  doc.coefficients = {to_decimal(x)};
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json to_json(const OutputDocument& doc) {
  nlohmann::ordered_json j;
  j["version"] = doc.version;
  j["kind"] = doc.kind;
  j["m"] = doc.m;
  j["n"] = doc.n;
  j["k"] = doc.k ? nlohmann::ordered_json(*doc.k) : nlohmann::ordered_json(nullptr);
  j["basis"] = doc.basis;
  j["index_origin"] = doc.index_origin;
  j["coefficients"] = doc.coefficients;
  if (doc.shape) j["shape"] = {doc.shape->first, doc.shape->second};
  if (!doc.checks.empty()) {
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : doc.checks) arr.push_back({{"name", c.name}, {"passed", c.passed}});
  }
  if (doc.instances_checked || !doc.violations.empty()) {
    auto& arr = j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : doc.violations)
      arr.push_back({{"conjecture", v.conjecture},
                     {"m", v.m},
                     {"n", v.n},
                     {"k", v.k},
                     {"l", v.l},
                     {"coefficient", v.coefficient}});
  }
  if (doc.instances_checked) j["instances_checked"] = *doc.instances_checked;
  j["meta"] = {{"tool_version", doc.meta.tool_version}, {"parameters", doc.meta.parameters}};
  return j;
}

inline std::string to_json_string(const OutputDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline OutputDocument document_from_json(const nlohmann::json& j) {
  try {
    OutputDocument doc;
    doc.version = j.at("version").get<int>();
    if (doc.version != document_format_version)
      throw ContractViolation("unsupported document version " + std::to_string(doc.version));
    doc.kind = j.at("kind").get<std::string>();
    if (!is_document_kind(doc.kind)) throw ContractViolation("unknown document kind '" + doc.kind + "'");
    doc.m = j.at("m").get<int>();
    doc.n = j.at("n").get<int>();
    if (!j.at("k").is_null()) doc.k = j.at("k").get<int>();
    doc.basis = j.at("basis").get<std::string>();
    doc.index_origin = j.at("index_origin").get<int>();
    doc.coefficients = j.at("coefficients").get<std::vector<std::string>>();
    for (const auto& c : doc.coefficients) (void)from_decimal(c);
    if (j.contains("shape")) doc.shape = std::make_pair(j["shape"].at(0).get<int>(), j["shape"].at(1).get<int>());
    if (j.contains("checks"))
      for (const auto& c : j["checks"]) doc.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>()});
    if (j.contains("instances_checked")) doc.instances_checked = j["instances_checked"].get<long long>();
    if (j.contains("violations"))
      for (const auto& v : j["violations"])
        doc.violations.push_back({v.at("conjecture").get<std::string>(), v.at("m").get<int>(),
                                  v.at("n").get<int>(), v.at("k").get<int>(), v.at("l").get<int>(),
                                  v.at("coefficient").get<std::string>()});
    const auto& meta = j.at("meta");
    doc.meta.tool_version = meta.at("tool_version").get<std::string>();
    doc.meta.parameters = meta.at("parameters").get<std::map<std::string, std::string>>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ContractViolation(std::string("malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ContractViolation(std::string("malformed document: ") + e.what());
  }
}

inline OutputDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ContractViolation(std::string("malformed document: ") + e.what());
  }
  return document_from_json(j);
}

// ---------------------------------------------------------------------------
// CSV and markdown

namespace detail {

inline std::string join(const std::vector<std::string>& v, std::string_view sep, std::size_t from = 0,
                        std::size_t to = std::string::npos) {
  std::string out;
  to = std::min(to, v.size());
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out += sep;
    out += v[i];
  }
  return out;
}

inline std::string report_lines_csv(const OutputDocument& doc) {
  std::string out;
  for (const auto& c : doc.checks) out += "check," + c.name + "," + (c.passed ? "pass" : "fail") + "\n";
  for (const auto& v : doc.violations)
    out += "violation," + v.conjecture + "," + std::to_string(v.m) + "," + std::to_string(v.n) + "," +
           std::to_string(v.k) + "," + std::to_string(v.l) + "," + v.coefficient + "\n";
  if (doc.instances_checked) out += "instances_checked," + std::to_string(*doc.instances_checked) + "\n";
  return out;
}

inline std::string column_label(const OutputDocument& doc, std::size_t i) {
  const int idx = doc.index_origin + static_cast<int>(i);
  if (doc.basis == "P^l") return "P^" + std::to_string(idx);
  if (doc.basis == "h1^(N+1-j) h2^j") {
    const int top = static_cast<int>(doc.coefficients.size()) + 1; // N + 1
    auto mono = [](const char* h, int e) {
      return e == 1 ? std::string(h) : std::string(h) + "^" + std::to_string(e);
    };
    return mono("h1", top - idx) + mono("h2", idx);
  }
  if (doc.basis == "stratum") return "stratum " + std::to_string(idx);
  if (doc.basis == "delta_l") return "delta_" + std::to_string(idx);
  return std::to_string(idx);
}

inline std::string row_label(const OutputDocument& doc) {
  std::string label = doc.kind + "(" + std::to_string(doc.m) + "," + std::to_string(doc.n);
  if (doc.k) label += "," + std::to_string(*doc.k);
  return label + ")";
}

} // namespace detail

inline std::string to_csv(const OutputDocument& doc) {
  std::string out;
  if (doc.shape) {
    const auto cols = static_cast<std::size_t>(doc.shape->second);
    for (std::size_t r = 0; r < static_cast<std::size_t>(doc.shape->first); ++r)
      out += detail::join(doc.coefficients, ",", r * cols, (r + 1) * cols) + "\n";
  } else if (!doc.coefficients.empty()) {
    out += detail::join(doc.coefficients, ",") + "\n";
  }
  return out + detail::report_lines_csv(doc);
}

inline std::string to_markdown(const OutputDocument& doc) {
  std::ostringstream os;
  if (doc.shape) {
    const int rows = doc.shape->first, cols = doc.shape->second;
    os << "| " << detail::row_label(doc);
    for (int c = 0; c < cols; ++c) os << " | " << c;
    os << " |\n|---";
    for (int c = 0; c < cols; ++c) os << "|---";
    os << "|\n";
    for (int r = 0; r < rows; ++r) {
      os << "| " << r;
      for (int c = 0; c < cols; ++c)
        os << " | " << doc.coefficients[static_cast<std::size_t>(r * cols + c)];
      os << " |\n";
    }
  } else if (!doc.coefficients.empty()) {
    os << "| Table";
    if (doc.basis == "scalar") {
      os << " | " << doc.kind;
    } else {
      for (std::size_t i = 0; i < doc.coefficients.size(); ++i) os << " | " << detail::column_label(doc, i);
    }
    os << " |\n|---";
    for (std::size_t i = 0; i < doc.coefficients.size(); ++i) os << "|---";
    os << "|\n| " << detail::row_label(doc);
    for (const auto& c : doc.coefficients) os << " | " << c;
    os << " |\n";
  }
  if (!doc.checks.empty()) {
    if (!doc.coefficients.empty()) os << "\n";
    os << "| check | result |\n|---|---|\n";
    for (const auto& c : doc.checks) os << "| " << c.name << " | " << (c.passed ? "pass" : "fail") << " |\n";
  }
  if (doc.instances_checked) {
    os << "\ninstances checked: " << *doc.instances_checked << "\n";
    if (!doc.violations.empty()) {
      os << "\n| conjecture | m | n | k | l | coefficient |\n|---|---|---|---|---|---|\n";
      for (const auto& v : doc.violations)
        os << "| " << v.conjecture << " | " << v.m << " | " << v.n << " | " << v.k << " | " << v.l << " | "
           << v.coefficient << " |\n";
    }
  }
  return os.str();
}

enum class OutputFormat { json, csv, markdown };

inline std::string render(const OutputDocument& doc, OutputFormat format) {
  switch (format) {
  case OutputFormat::json: return to_json_string(doc);
  case OutputFormat::csv: return to_csv(doc);
  case OutputFormat::markdown: return to_markdown(doc);
  }
  return {};
}

} // namespace detvar
