#pragma once

#include <string>
#include <vector>

#include "orthoforms/errors.hpp"

namespace orthoforms {

/// Generator/relation weight data of a graded presentation. Square-root
/// generators s contribute a relation s^2 = (weight-2w element); plain
/// relation weights cover presentations given abstractly. For the rings
/// checked here the relation weights are exactly twice the square-root
/// generator weights.
struct WeightedPresentation {
  std::vector<unsigned> free_weights;
  std::vector<unsigned> sqrt_weights;
  std::vector<unsigned> relation_weights;
};

/// Truncated integer power series; coefficients c[0..truncation].
struct PowerSeries {
  unsigned truncation = 0;
  std::vector<long long> c;

  static PowerSeries one(unsigned n);
  bool operator==(const PowerSeries& other) const = default;
};

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// Coefficient-wise equality; throws DegreeError on truncation mismatch.
bool series_equal(const PowerSeries& a, const PowerSeries& b);

/// Expansion of prod(1 - T^r) / prod(1 - T^w) over all generator weights w
/// (free and square-root) and relation weights r (plain plus 2x square
/// root), the complete-intersection form.
PowerSeries hilbert_from_rational(const WeightedPresentation& p, unsigned n);

/// Independent counting oracle: enumerates normal-form monomials (free
/// exponent vectors times square-free flags in the square-root generators)
/// and tabulates weights directly. Plain relation weights are not
/// expressible here and are rejected.
PowerSeries hilbert_from_counting(const WeightedPresentation& p, unsigned n);

/// Weights 4,4,6,8,10,10,12,30 with relations 8,20,60: the full ring of
/// forms with characters (free 4,6,8,10,12 plus square roots 4,10,30).
WeightedPresentation characters_ring_presentation();
/// Free 4,6,8,10,12 plus the square root of weight 10 (relation 20).
WeightedPresentation gamma1_ring_presentation();
/// Free polynomial ring on 4,6,8,10,12.
WeightedPresentation vinberg_ring_presentation();

/// Checks characters-series == gamma1-series * (1+T^4)(1+T^30) to order n.
bool character_factor_check(unsigned n);

std::string series_to_json_text(const PowerSeries& s, const WeightedPresentation& p,
                                const std::string& label);

}  // namespace orthoforms
