#pragma once

#include <array>

#include "orthoforms/polynomial.hpp"

namespace orthoforms {

using SixPoint = std::array<Rat, 6>;

/// x_1..x_6, unit weights.
SpacePtr six_point_space();

/// Membership in the quartic locus: sum x_i = 0 and
/// (sum x_i^2)^2 = 4 sum x_i^4.
bool igusa_member(const SixPoint& p);

/// prod_{i<j} (x_i - x_j)^2 over the 15 pairs.
Rat vandermonde_disc(const SixPoint& p);
Polynomial vandermonde_disc_symbolic();

/// Discriminant of the monic binary sextic prod(s - x_i w) via the
/// elimination route; equals vandermonde_disc under the fixed sign
/// convention.
Rat monic_from_roots_disc(const SixPoint& p);

/// e_i and p_i for 1 <= i <= 6 (index range checked).
Rat elementary_symmetric(const SixPoint& p, unsigned i);
Rat power_sum(const SixPoint& p, unsigned i);
Polynomial elementary_symmetric_symbolic(unsigned i);
Polynomial power_sum_symbolic(unsigned i);

/// Generic-coefficient identity behind monic_from_roots_disc: the
/// discriminant of prod(s - r_i w) as a symbolic polynomial in the roots
/// equals prod_{i<j} (r_i - r_j)^2. Checked at the given degree.
bool roots_disc_identity_holds(unsigned degree);

}  // namespace orthoforms
