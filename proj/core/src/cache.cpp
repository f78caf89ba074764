#include "heckecat/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "heckecat/errors.hpp"

namespace heckecat {

namespace {

constexpr int kFormatVersion = 1;

std::string env_or_empty(const char* name) {
  const char* value = std::getenv(name);
  return value == nullptr ? std::string() : std::string(value);
}

}  // namespace

std::filesystem::path cache_directory(const std::string& override_dir) {
  if (!override_dir.empty()) return std::filesystem::path(override_dir);
  if (const std::string env = env_or_empty("HECKECAT_CACHE"); !env.empty()) {
    return std::filesystem::path(env);
  }
  if (const std::string xdg = env_or_empty("XDG_DATA_HOME"); !xdg.empty()) {
    return std::filesystem::path(xdg) / "heckecat";
  }
  const std::string home = env_or_empty("HOME");
  if (home.empty()) return std::filesystem::path("heckecat-cache");
  return std::filesystem::path(home) / ".local" / "share" / "heckecat";
}

std::filesystem::path cache_file(const CartanType& type,
                                 const std::string& override_dir) {
  return cache_directory(override_dir) / ("kl_" + type.str() + ".json");
}

std::filesystem::path save_kl_cache(KLCache& cache,
                                    const std::string& override_dir) {
  const KLCache::Table table = cache.export_table();

  nlohmann::json p = nlohmann::json::array();
  for (const auto& [words, coeffs] : table.p) {
    nlohmann::json row = nlohmann::json::array();
    row.push_back(words.first);
    row.push_back(words.second);
    for (const std::int64_t c : coeffs) row.push_back(c);
    p.push_back(std::move(row));
  }
  nlohmann::json mu = nlohmann::json::array();
  for (const auto& [words, value] : table.mu) {
    mu.push_back(nlohmann::json::array({words.first, words.second, value}));
  }
  const nlohmann::json doc = {{"format_version", kFormatVersion},
                              {"cartan", cache.group().type().str()},
                              {"P", std::move(p)},
                              {"mu", std::move(mu)}};

  const std::filesystem::path path =
      cache_file(cache.group().type(), override_dir);
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) {
    throw Error("cannot create cache directory " +
                path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw Error("failed writing " + path.string());
  return path;
}

bool load_kl_cache(KLCache& cache, const std::string& override_dir,
                   std::uint64_t seed, int spot_checks) {
  const std::filesystem::path path =
      cache_file(cache.group().type(), override_dir);
  std::ifstream in(path);
  if (!in) return false;

  const nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw CacheValidationError(path.string() + " is not valid JSON");
  }
  if (!doc.contains("format_version") ||
      doc["format_version"] != kFormatVersion) {
    throw CacheValidationError(path.string() +
                               " has an unsupported format_version");
  }
  if (!doc.contains("cartan") ||
      doc["cartan"] != cache.group().type().str()) {
    throw CacheValidationError(path.string() + " stores a different group");
  }
  if (!doc.contains("P") || !doc["P"].is_array() || !doc.contains("mu") ||
      !doc["mu"].is_array()) {
    throw CacheValidationError(path.string() + " is missing P/mu tables");
  }

  KLCache::Table table;
  for (const auto& row : doc["P"]) {
    if (!row.is_array() || row.size() < 3 || !row[0].is_string() ||
        !row[1].is_string()) {
      throw CacheValidationError(path.string() + " has a malformed P entry");
    }
    std::vector<std::int64_t> coeffs;
    coeffs.reserve(row.size() - 2);
    for (std::size_t i = 2; i < row.size(); ++i) {
      if (!row[i].is_number_integer()) {
        throw CacheValidationError(path.string() + " has a malformed P entry");
      }
      coeffs.push_back(row[i].get<std::int64_t>());
    }
    table.p.push_back({{row[0].get<std::string>(), row[1].get<std::string>()},
                       std::move(coeffs)});
  }
  for (const auto& row : doc["mu"]) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_string() ||
        !row[1].is_string() || !row[2].is_number_integer()) {
      throw CacheValidationError(path.string() + " has a malformed mu entry");
    }
    table.mu.push_back({{row[0].get<std::string>(), row[1].get<std::string>()},
                        row[2].get<std::int64_t>()});
  }

  cache.import_table(table, seed, spot_checks);
  return true;
}

}  // namespace heckecat
