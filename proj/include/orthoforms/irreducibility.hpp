#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthoforms/polynomial.hpp"

namespace orthoforms {

/// Affine line tau -> offset + tau * direction in the dehomogenized
/// variables (entries follow `variables`).
struct AffineLine {
  std::vector<std::string> variables;
  std::vector<long> direction;
  std::vector<long> offset;
};

/// Replayable record of an irreducibility run. A positive certificate is
/// sound: a degree-preserving line restriction that stays degree-preserving
/// and irreducible mod the recorded prime forces irreducibility over the
/// rationals. "inconclusive" carries no claim.
struct IrreducibilityCertificate {
  std::string target_hash;
  std::string pivot;
  std::uint32_t prime = 0;
  AffineLine line;
  unsigned restricted_degree = 0;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
  unsigned attempt_index = 0;
  std::string verdict;  // "irreducible" | "inconclusive"

  bool positive() const { return verdict == "irreducible"; }

  std::string to_json_text() const;
  static IrreducibilityCertificate from_json_text(const std::string& text);
};

/// Substitutes pivot -> 1. Preconditions: f quasi-homogeneous and not
/// divisible by the pivot variable (checked by exact division).
Polynomial dehomogenize(const Polynomial& f, std::size_t pivot);

/// Default prime pool: the first 40 primes above 10,000.
const std::vector<std::uint32_t>& default_certificate_primes();

/// One-sided randomized certification of irreducibility over the
/// rationals. Preconditions (errors named individually): f nonconstant,
/// primitive (integer coefficients of content 1), quasi-homogeneous, not
/// divisible by any variable. Up to `attempts` independent tries; each
/// draws a line with coefficients in [-20, 20] (direction not all zero)
/// in the variables left after dehomogenizing along the first occurring
/// variable, requires the restriction to preserve plain degree, reduces
/// mod a fresh prime and runs the deterministic mod-p test. The first
/// success by attempt index is returned; exhaustion yields "inconclusive".
IrreducibilityCertificate certify_irreducible(
    const Polynomial& f, unsigned attempts, std::uint64_t seed,
    const std::vector<std::uint32_t>& primes = default_certificate_primes());

/// Re-derives the verdict from the recorded data alone (positive
/// certificates replay without randomness; inconclusive ones re-run the
/// recorded attempt budget). True when the replay matches.
bool replay_certificate(const Polynomial& f, const IrreducibilityCertificate& cert);

}  // namespace orthoforms
