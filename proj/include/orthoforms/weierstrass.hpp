#pragma once

#include <array>
#include <optional>

#include "orthoforms/polynomial.hpp"

namespace orthoforms {

/// Variable space for the Weierstrass family: base coordinates x, w
/// (weight 0) and the six parameters u_53, u_44, u_35, u_75, u_66, u_57
/// with scaling weights 4, 4, 4, 6, 6, 6.
SpacePtr uxw_space();

/// Invariant-ring space t_4, t_6, t_8, t_10, s_10, t_12 with weights
/// 4, 6, 8, 10, 10, 12.
SpacePtr t_space();

/// Indices within uxw_space, in declaration order.
struct UxwIndex {
  std::size_t x, w, u53, u44, u35, u75, u66, u57;
};
const UxwIndex& uxw_index();

/// Six parameters, either generic symbols or exact rationals. Order:
/// u_53, u_44, u_35, u_75, u_66, u_57.
struct WeierstrassData {
  std::optional<std::array<Rat, 6>> numeric;

  static WeierstrassData generic() { return {}; }
  static WeierstrassData at(std::array<Rat, 6> values) { return {std::move(values)}; }
  bool is_numeric() const { return numeric.has_value(); }
};

/// False iff (u_35 = u_57 = 0) or (u_53 = u_75 = 0), the excluded locus
/// where the fiber degenerates beyond rational double points.
bool is_valid_parameter(const WeierstrassData& u);

/// g2 = u_53 x^5 w^3 + u_44 x^4 w^4 + u_35 x^3 w^5 (parameters substituted
/// in numeric mode; always over uxw_space).
Polynomial build_g2(const WeierstrassData& u = WeierstrassData::generic());
/// g3 = u_75 x^7 w^5 + u_66 x^6 w^6 + u_57 x^5 w^7.
Polynomial build_g3(const WeierstrassData& u = WeierstrassData::generic());

/// The six invariants of the base-torus action. Fields are polynomials over
/// uxw_space; in numeric mode they are constants.
struct InvariantSet {
  Polynomial t4, t6, t8, t10, s10, t12;
};
InvariantSet invariants_from_u(const WeierstrassData& u = WeierstrassData::generic());

/// h = (4 g2^3 + 27 g3^2) / (x^9 w^9): a binary sextic in (x, w) whose
/// coefficients have scaling weight 12. NotDivisibleError would falsify the
/// construction and cannot occur.
Polynomial compute_h(const WeierstrassData& u = WeierstrassData::generic());

/// Resultant of the quadratic cofactors of g2 and g3: the 4x4 Sylvester
/// determinant, homogeneous of weight 20.
Polynomial compute_r20(const WeierstrassData& u = WeierstrassData::generic());

/// Discriminant of h with respect to (x, w): weight 120.
Polynomial compute_k120(const WeierstrassData& u = WeierstrassData::generic());

/// Exact quotient k120 / r20^3 in the parameter variables (weight 60).
Polynomial compute_delta60_u(const Polynomial& k120, const Polynomial& r20);

/// Rewrites a base-torus-invariant polynomial in the parameters into the
/// invariant generators: u_44 -> t_4, u_66 -> t_6, balanced monomials in
/// (u_53, u_35, u_75, u_57) factored through t_8 = u_53 u_35,
/// t_12 = u_75 u_57, u_53 u_57 = (t_10 + s_10)/2, u_35 u_75 =
/// (t_10 - s_10)/2, then s_10^2 reduced to t_10^2 - 4 t_8 t_12 so the
/// result has s_10-degree <= 1. Throws NotBalancedError when a monomial is
/// not invariant. With verify_roundtrip, substitutes the invariant
/// definitions back and checks the original is reproduced.
Polynomial rewrite_u_to_ts(const Polynomial& f, bool verify_roundtrip = false);

/// Substitution map used by the round trip: t-variables to their
/// u-expressions over uxw_space.
std::vector<std::pair<std::string, Polynomial>> t_to_u_bindings();

/// The index-swap involution u_53 <-> u_35, u_75 <-> u_57 (x, w, u_44,
/// u_66 fixed).
Polynomial sigma1_swap(const Polynomial& f);

enum class TorusAction { Lambda, Mu };

/// Per-variable weights of the chosen action over uxw_space: lambda is the
/// grading weight (x, w count 0); mu weights are x: -1, w: +1 and i - j on
/// u_ij, so invariants have mu-weight 0.
std::array<long, 8> action_weights(TorusAction action);

/// Common action weight of a homogeneous polynomial; nullopt for zero,
/// PreconditionError when terms disagree.
std::optional<long> action_weight(const Polynomial& f, TorusAction action);

/// Everything the pipeline produces, over uxw_space except the t-space
/// forms. delta60_t is the published primitive normal form; delta60_content
/// is the rational factor with delta60_u == rewrite^(-1)(delta60_content *
/// delta60_t).
struct PipelineArtifacts {
  Polynomial g2, g3, h, r20, k120;
  Polynomial delta60_u;       // quotient in the parameter variables
  Polynomial delta60_t;       // primitive normal form over t_space
  Polynomial delta8_t;        // t_8
  Polynomial delta20_t;       // t_10^2 - 4 t_8 t_12
  Polynomial r20_t;           // r20 rewritten (s_10-free)
  Rat delta60_content;        // content removed by normalization
};

/// Runs the full symbolic chain with its internal consistency checks
/// (weights, swap invariance, re-multiplication witness, t-space identity).
PipelineArtifacts run_pipeline();

}  // namespace orthoforms
