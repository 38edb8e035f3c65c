#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "orthoforms/polynomial.hpp"

namespace orthoforms {

/// On-disk artifact cache. Entries are binary polynomial files keyed by
/// (tool version, target name); the payload hash embedded in the format
/// detects corruption on load.
struct CacheConfig {
  std::filesystem::path directory;  // empty: resolve default
  bool enabled = true;

  /// Default directory: $ORTHOFORMS_CACHE or .orthoforms-cache/.
  static std::filesystem::path default_directory();
  std::filesystem::path resolved_directory() const;
};

std::filesystem::path cache_entry_path(const CacheConfig& cfg,
                                       const std::string& target);

/// nullopt when the cache is disabled or the entry is missing. Throws
/// FormatError on a corrupt entry (hash mismatch, bad layout, wrong space).
std::optional<Polynomial> cache_load(const CacheConfig& cfg, const std::string& target,
                                     SpacePtr expected_space);

void cache_store(const CacheConfig& cfg, const std::string& target,
                 const Polynomial& value);

}  // namespace orthoforms
