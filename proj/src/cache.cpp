#include "orthoforms/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "orthoforms/poly_binary.hpp"
#include "orthoforms/version.hpp"

namespace orthoforms {

std::filesystem::path CacheConfig::default_directory() {
  if (const char* env = std::getenv("ORTHOFORMS_CACHE"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".orthoforms-cache");
}

std::filesystem::path CacheConfig::resolved_directory() const {
  return directory.empty() ? default_directory() : directory;
}

std::filesystem::path cache_entry_path(const CacheConfig& cfg,
                                       const std::string& target) {
  return cfg.resolved_directory() / (std::string("v") + kToolVersion) /
         (target + ".ofb");
}

std::optional<Polynomial> cache_load(const CacheConfig& cfg, const std::string& target,
                                     SpacePtr expected_space) {
  if (!cfg.enabled) return std::nullopt;
  std::filesystem::path path = cache_entry_path(cfg, target);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return poly_from_binary(bytes, std::move(expected_space));
  } catch (const FormatError& e) {
    throw FormatError("cache entry " + path.string() + ": " + e.what());
  }
}

void cache_store(const CacheConfig& cfg, const std::string& target,
                 const Polynomial& value) {
  if (!cfg.enabled) return;
  std::filesystem::path path = cache_entry_path(cfg, target);
  std::filesystem::create_directories(path.parent_path());
  std::vector<std::uint8_t> bytes = poly_to_binary(value);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              std::streamsize(bytes.size()));
    if (!out) throw Error("cache write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace orthoforms
