#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "orthoforms/cache.hpp"
#include "orthoforms/weierstrass.hpp"

namespace orthoforms {

enum class CheckStatus { Pass, Fail, Inconclusive };

const char* check_status_name(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string details_json;  // object text; failing checks carry a counterexample
  double wall_seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  unsigned attempts = 40;
  unsigned truncate = 120;
  bool allow_inconclusive = false;
  unsigned jobs = 0;  // 0: pick a small default
  bool timings = false;
  CacheConfig cache;
};

/// Cache-aware, memoized access to the pipeline artifacts. Thread safe; a
/// target is computed at most once per store. Corrupt cache entries
/// surface as FormatError.
class ArtifactStore {
public:
  explicit ArtifactStore(CacheConfig cache);

  /// Targets: g2, g3, h, r20, k120 (parameter space) and delta60 (published
  /// primitive form over the invariant space).
  const Polynomial& get(const std::string& target);

  static const std::vector<std::string>& target_names();

  /// Hashes of all targets acquired so far, keyed by target.
  std::map<std::string, std::string> hashes() const;

private:
  const Polynomial& get_locked(const std::string& target);

  CacheConfig cache_;
  mutable std::recursive_mutex mutex_;
  std::map<std::string, Polynomial> memo_;
};

/// Suites: pipeline, rings, group, symfunc; "all" expands to every suite.
std::vector<std::string> suite_check_names(const std::vector<std::string>& suites);

/// Runs the named checks on a bounded worker pool. Results are ordered by
/// check name regardless of scheduling.
std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const VerifyOptions& opts, ArtifactStore& store);

bool all_passed(const std::vector<CheckResult>& results, bool allow_inconclusive);

/// Deterministic report (keys sorted, timings only on request).
std::string verification_report_json(const std::vector<CheckResult>& results,
                                     const VerifyOptions& opts,
                                     const std::vector<std::string>& suites,
                                     const ArtifactStore& store);

}  // namespace orthoforms
