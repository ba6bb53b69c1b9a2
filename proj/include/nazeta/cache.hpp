#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace nazeta {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCacheDirEnv = "NAZETA_CACHE_DIR";

std::uint64_t fnv1a64(std::string_view data);

// Content-addressed store of result payloads. Entries record the full key
// material and the tool version; a mismatch in either is treated as a miss.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::string tool_version = kToolVersion);

  // Reads the directory from NAZETA_CACHE_DIR; nullopt when unset or empty.
  static std::optional<ResultCache> from_env();

  static std::string key_material(std::string_view curve_json, std::string_view command,
                                  std::string_view params_json);

  std::optional<std::string> get(const std::string& material) const;
  // Write to a temporary file, then rename over the entry.
  void put(const std::string& material, const std::string& payload) const;

  std::filesystem::path entry_path(const std::string& material) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::string version_;
};

}  // namespace nazeta
