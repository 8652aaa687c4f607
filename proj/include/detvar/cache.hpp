#pragma once

#include "detvar/classes.hpp"
#include "detvar/errors.hpp"
#include "detvar/integer.hpp"
#include "detvar/partition.hpp"
#include "detvar/proj_class.hpp"
#include "detvar/schubert.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace detvar {

inline constexpr const char* cache_format_tag = "detvar-cache";
inline constexpr int cache_format_version = 1;
inline constexpr const char* cache_file_name = "detvar-cache.json";
inline constexpr const char* cache_env_var = "DETVAR_CACHE_DIR";

/// --cache-dir wins over the environment; nullopt means memory only.
inline std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv(cache_env_var); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

namespace detail {

inline std::string fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

inline nlohmann::json partition_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const nlohmann::json& j) {
  return Partition(j.get<std::vector<int>>());
}

inline nlohmann::json cache_payload() {
  nlohmann::json lr = nlohmann::json::array();
  for (const auto& [key, terms] : lr_cache_snapshot()) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [nu, c] : terms) t.push_back({partition_json(nu), to_decimal(c)});
    lr.push_back({{"lambda", partition_json(key.first)}, {"mu", partition_json(key.second)}, {"terms", t}});
  }
  nlohmann::json cm = nlohmann::json::array();
  for (const auto& [key, c] : cm_cache_snapshot()) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& x : c.coefficients()) coeffs.push_back(to_decimal(x));
    cm.push_back({{"m", std::get<0>(key)}, {"n", std::get<1>(key)}, {"k", std::get<2>(key)}, {"coefficients", coeffs}});
  }
  return {{"lr", lr}, {"cm", cm}};
}

// Decodes everything before seeding, so a malformed file seeds nothing.
inline void seed_from_payload(const nlohmann::json& payload) {
  using LrTerms = std::vector<std::pair<Partition, Integer>>;
  std::vector<std::tuple<Partition, Partition, LrTerms>> lr;
  for (const auto& e : payload.at("lr")) {
    LrTerms terms;
    for (const auto& t : e.at("terms"))
      terms.emplace_back(partition_from_json(t.at(0)), from_decimal(t.at(1).get<std::string>()));
    lr.emplace_back(partition_from_json(e.at("lambda")), partition_from_json(e.at("mu")), std::move(terms));
  }
  std::vector<std::tuple<int, int, int, ProjClass>> cm;
  for (const auto& e : payload.at("cm")) {
    std::vector<Integer> coeffs;
    for (const auto& c : e.at("coefficients")) coeffs.push_back(from_decimal(c.get<std::string>()));
    const int m = e.at("m").get<int>(), n = e.at("n").get<int>(), k = e.at("k").get<int>();
    require_parameters(m, n, k, 1);
    if (static_cast<int>(coeffs.size()) != m * n) throw ContractViolation("cached class has the wrong length");
    cm.emplace_back(m, n, k, ProjClass::from_coefficients(std::move(coeffs)));
  }
  for (auto& [lambda, mu, terms] : lr) lr_cache_seed(lambda, mu, terms);
  for (auto& [m, n, k, c] : cm) cm_cache_seed(m, n, k, std::move(c));
}

} // namespace detail

enum class CacheLoad { missing, loaded, stale, corrupt };

/// Seeds the in-memory caches from dir. Never throws on bad files: a stale format
/// is ignored (and later rebuilt), a corrupt one is reported on warn and ignored.
inline CacheLoad load_cache(const std::filesystem::path& dir, std::ostream& warn) {
  const auto file = dir / cache_file_name;
  std::ifstream in(file, std::ios::binary);
  if (!in) return CacheLoad::missing;
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    const auto doc = nlohmann::json::parse(buffer.str());
    if (doc.at("format").get<std::string>() != cache_format_tag ||
        doc.at("version").get<int>() != cache_format_version) {
      warn << "warning: cache " << file.string() << " has another format version; rebuilding\n";
      return CacheLoad::stale;
    }
    const auto& payload = doc.at("payload");
    if (detail::fnv1a64(payload.dump()) != doc.at("checksum").get<std::string>())
      throw ContractViolation("checksum mismatch");
    detail::seed_from_payload(payload);
    return CacheLoad::loaded;
  } catch (const std::exception& e) {
    warn << "warning: ignoring corrupt cache " << file.string() << " (" << e.what() << "); recomputing\n";
    return CacheLoad::corrupt;
  }
}

/// Writes the current caches to dir (write to a temporary, then rename).
inline void store_cache(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto payload = detail::cache_payload();
  const nlohmann::json doc = {{"format", cache_format_tag},
                              {"version", cache_format_version},
                              {"checksum", detail::fnv1a64(payload.dump())},
                              {"payload", payload}};
  const auto file = dir / cache_file_name;
  const auto tmp = dir / (std::string(cache_file_name) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

} // namespace detvar
