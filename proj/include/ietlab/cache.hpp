#pragma once

#include <nlohmann/json.hpp>

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <unistd.h>

namespace ietlab::cache {

inline constexpr int schema_version = 1;

struct CacheKey {
  std::string kind;
  std::int64_t n = 0;
  std::int64_t b = -1;  // -1 when the command has no b
  int schema = schema_version;

  std::string filename() const {
    std::string out = kind + "-n" + std::to_string(n);
    if (b >= 0) out += "-b" + std::to_string(b);
    return out + "-v" + std::to_string(schema) + ".json";
  }
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

/// 64-bit FNV-1a, rendered as 16 hex digits.
inline std::string checksum(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct CacheEntry {
  CacheKey key;
  nlohmann::json payload;

  nlohmann::json document() const {
    return {{"key", {{"kind", key.kind}, {"n", key.n}, {"b", key.b}, {"schema", key.schema}}},
            {"checksum", checksum(payload.dump())},
            {"payload", payload}};
  }

  /// Rejects documents whose key differs from `expected` or whose checksum
  /// does not match the payload.
  static std::optional<CacheEntry> from_document(const nlohmann::json& doc, const CacheKey& expected) {
    try {
      const auto& k = doc.at("key");
      CacheKey key{k.at("kind").get<std::string>(), k.at("n").get<std::int64_t>(), k.at("b").get<std::int64_t>(),
                   k.at("schema").get<int>()};
      if (!(key == expected)) return std::nullopt;
      CacheEntry entry{key, doc.at("payload")};
      if (doc.at("checksum").get<std::string>() != checksum(entry.payload.dump())) return std::nullopt;
      return entry;
    } catch (const nlohmann::json::exception&) {
      return std::nullopt;
    }
  }
};

class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& directory() const { return dir_; }

  std::optional<nlohmann::json> load(const CacheKey& key) const {
    std::ifstream in(dir_ / key.filename());
    if (!in) return std::nullopt;
    const auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) return std::nullopt;
    auto entry = CacheEntry::from_document(doc, key);
    if (!entry) return std::nullopt;
    return entry->payload;
  }

  /// Writes to a unique temporary name in the same directory, then renames.
  void store(const CacheKey& key, const nlohmann::json& payload) const {
    std::filesystem::create_directories(dir_);
    static std::atomic<unsigned> counter{0};
    const auto target = dir_ / key.filename();
    auto temp = target;
    temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
      std::ofstream out(temp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::filesystem::filesystem_error("cannot write cache file", temp, std::make_error_code(std::errc::io_error));
      out << CacheEntry{key, payload}.document().dump() << '\n';
      if (!out.flush()) throw std::filesystem::filesystem_error("cannot write cache file", temp, std::make_error_code(std::errc::io_error));
    }
    std::filesystem::rename(temp, target);
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace ietlab::cache
