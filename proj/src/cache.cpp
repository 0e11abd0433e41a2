#include "turan/cache.hpp"

#include <fstream>

#include "turan/errors.hpp"

namespace turan {

std::string to_string(Method m) {
  switch (m) {
    case Method::enumeration:
      return "enumeration";
    case Method::formula:
      return "formula";
    case Method::construction:
      return "construction";
  }
  return "enumeration";
}

Method method_from_string(std::string_view s) {
  if (s == "enumeration") return Method::enumeration;
  if (s == "formula") return Method::formula;
  if (s == "construction") return Method::construction;
  throw ArgumentError("unknown method '" + std::string(s) + "'");
}

nlohmann::json to_json(const CacheRecord& r) {
  return {
      {"n", r.n},
      {"k", r.k},
      {"s", r.s},
      {"pattern", r.pattern},
      {"value", r.value},
      {"witnesses", r.witnesses},
      {"method", to_string(r.method)},
      {"tool_version", r.tool_version},
  };
}

CacheRecord cache_record_from_json(const nlohmann::json& j) {
  CacheRecord r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.s = j.at("s").get<int>();
  r.pattern = j.at("pattern").get<std::string>();
  r.value = j.at("value").get<std::int64_t>();
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.method = method_from_string(j.at("method").get<std::string>());
  r.tool_version = j.at("tool_version").get<std::string>();
  return r;
}

std::optional<CacheRecord> ResultCache::get(int n, int k, int s, std::string_view pattern) {
  warnings_ = 0;
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) return std::nullopt;
  std::ifstream in(path_);
  if (!in) throw Error("cannot read cache file " + path_.string());

  std::optional<CacheRecord> newest;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CacheRecord rec;
    try {
      rec = cache_record_from_json(nlohmann::json::parse(line));
    } catch (const std::exception&) {
      ++warnings_;
      continue;
    }
    if (rec.tool_version != kToolVersion) continue;
    if (rec.n == n && rec.k == k && rec.s == s && rec.pattern == pattern) newest = std::move(rec);
  }
  return newest;
}

void ResultCache::put(const CacheRecord& record) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot write cache file " + path_.string());
  out << to_json(record).dump() << '\n';
  if (!out) throw Error("write to cache file " + path_.string() + " failed");
}

}  // namespace turan
