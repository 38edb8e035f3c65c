#pragma once

#include <cstdint>
#include <vector>

#include "orthoforms/polynomial.hpp"

namespace orthoforms {

/// Compact binary polynomial format, used by the on-disk cache.
/// Layout (all integers little-endian):
///   magic "OFPB", u32 format version, u64 FNV-1a of the payload,
///   payload: u32 nvars, per variable (u32 name length, bytes, i64 weight),
///            u64 term count, per term (nvars x u32 exponents,
///            coefficient as sign-magnitude numerator then magnitude
///            denominator, each: i8 sign, u32 limb count, u64 limbs).
std::vector<std::uint8_t> poly_to_binary(const Polynomial& f);

/// Validates magic, version and payload hash; throws FormatError on
/// corruption. The embedded space must structurally match `space` when
/// one is supplied (pass nullptr to accept the embedded space).
Polynomial poly_from_binary(const std::vector<std::uint8_t>& bytes, SpacePtr space);

}  // namespace orthoforms
