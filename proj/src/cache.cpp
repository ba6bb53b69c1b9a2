#include "nazeta/cache.hpp"

#include "nazeta/errors.hpp"
#include "nazeta/json_io.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace nazeta {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string tool_version)
    : dir_(std::move(dir)), version_(std::move(tool_version)) {}

std::optional<ResultCache> ResultCache::from_env() {
  const char* dir = std::getenv(kCacheDirEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return ResultCache(dir);
}

std::string ResultCache::key_material(std::string_view curve_json, std::string_view command,
                                      std::string_view params_json) {
  std::string out;
  out.reserve(curve_json.size() + command.size() + params_json.size() + 2);
  out.append(curve_json).push_back('\n');
  out.append(command).push_back('\n');
  out.append(params_json);
  return out;
}

std::filesystem::path ResultCache::entry_path(const std::string& material) const {
  char name[24];
  std::snprintf(name, sizeof name, "%016llx", static_cast<unsigned long long>(fnv1a64(material)));
  return dir_ / (std::string(name) + ".json");
}

std::optional<std::string> ResultCache::get(const std::string& material) const {
  std::ifstream in(entry_path(material), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  json entry = json::parse(buf.str(), nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("tool_version", std::string{}) != version_) return std::nullopt;
  if (entry.value("key", std::string{}) != material) return std::nullopt;
  if (!entry.contains("payload") || !entry.at("payload").is_string()) return std::nullopt;
  return entry.at("payload").get<std::string>();
}

void ResultCache::put(const std::string& material, const std::string& payload) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw InputError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const auto target = entry_path(material);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write cache entry " + tmp.string());
    out << json{{"key", material}, {"tool_version", version_}, {"payload", payload}}.dump();
    if (!out) throw InputError("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw InputError("cannot publish cache entry " + target.string());
  }
}

}  // namespace nazeta
