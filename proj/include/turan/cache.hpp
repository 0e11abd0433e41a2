#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace turan {

inline constexpr std::string_view kToolVersion = "turan 0.1.0";

enum class Method { enumeration, formula, construction };

std::string to_string(Method m);
Method method_from_string(std::string_view s);

struct CacheRecord {
  int n = 0;
  int k = 0;
  int s = 0;
  std::string pattern;  // canonical graph6 of H
  std::int64_t value = 0;
  std::vector<std::string> witnesses;
  Method method = Method::enumeration;
  std::string tool_version{kToolVersion};

  friend bool operator==(const CacheRecord&, const CacheRecord&) = default;
};

nlohmann::json to_json(const CacheRecord& r);
CacheRecord cache_record_from_json(const nlohmann::json& j);

/// Append-only newline-delimited JSON store of search results.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path) : path_(std::move(path)) {}

  /// Newest record for the key written by this tool version. Unparseable
  /// lines are skipped and counted in warnings().
  std::optional<CacheRecord> get(int n, int k, int s, std::string_view pattern);
  void put(const CacheRecord& record);

  std::size_t warnings() const noexcept { return warnings_; }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::size_t warnings_ = 0;
};

}  // namespace turan
