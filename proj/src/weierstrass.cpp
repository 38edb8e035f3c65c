#include "orthoforms/weierstrass.hpp"

#include <map>

#include "orthoforms/resultant.hpp"

namespace orthoforms {

SpacePtr uxw_space() {
  static SpacePtr sp = VariableSpace::create(
      {"x", "w", "u_53", "u_44", "u_35", "u_75", "u_66", "u_57"},
      {0, 0, 4, 4, 4, 6, 6, 6});
  return sp;
}

SpacePtr t_space() {
  static SpacePtr sp = VariableSpace::create(
      {"t_4", "t_6", "t_8", "t_10", "s_10", "t_12"}, {4, 6, 8, 10, 10, 12});
  return sp;
}

const UxwIndex& uxw_index() {
  static UxwIndex idx = [] {
    SpacePtr sp = uxw_space();
    UxwIndex i;
    i.x = sp->require_index("x");
    i.w = sp->require_index("w");
    i.u53 = sp->require_index("u_53");
    i.u44 = sp->require_index("u_44");
    i.u35 = sp->require_index("u_35");
    i.u75 = sp->require_index("u_75");
    i.u66 = sp->require_index("u_66");
    i.u57 = sp->require_index("u_57");
    return i;
  }();
  return idx;
}

namespace {

// Order matches WeierstrassData: u_53, u_44, u_35, u_75, u_66, u_57.
const std::array<std::size_t, 6>& parameter_indices() {
  static std::array<std::size_t, 6> p = [] {
    const UxwIndex& i = uxw_index();
    return std::array<std::size_t, 6>{i.u53, i.u44, i.u35, i.u75, i.u66, i.u57};
  }();
  return p;
}

// Coefficient of parameter slot k: the symbol in generic mode, the value in
// numeric mode (as a single-term polynomial factor).
Polynomial parameter_factor(const WeierstrassData& u, std::size_t slot) {
  SpacePtr sp = uxw_space();
  if (u.is_numeric()) return Polynomial::constant(sp, (*u.numeric)[slot]);
  return Polynomial::variable(sp, parameter_indices()[slot]);
}

Polynomial xw_monomial(unsigned ex, unsigned ew) {
  SpacePtr sp = uxw_space();
  Monomial m(sp->size());
  m.set_exp(uxw_index().x, ex);
  m.set_exp(uxw_index().w, ew);
  return Polynomial::monomial_term(sp, std::move(m), Rat(1));
}

}  // namespace

bool is_valid_parameter(const WeierstrassData& u) {
  if (!u.is_numeric())
    throw PreconditionError("validity predicate needs numeric parameters");
  const auto& v = *u.numeric;
  const Rat &u53 = v[0], &u35 = v[2], &u75 = v[3], &u57 = v[5];
  if (u35 == 0 && u57 == 0) return false;
  if (u53 == 0 && u75 == 0) return false;
  return true;
}

Polynomial build_g2(const WeierstrassData& u) {
  return parameter_factor(u, 0) * xw_monomial(5, 3) +
         parameter_factor(u, 1) * xw_monomial(4, 4) +
         parameter_factor(u, 2) * xw_monomial(3, 5);
}

Polynomial build_g3(const WeierstrassData& u) {
  return parameter_factor(u, 3) * xw_monomial(7, 5) +
         parameter_factor(u, 4) * xw_monomial(6, 6) +
         parameter_factor(u, 5) * xw_monomial(5, 7);
}

InvariantSet invariants_from_u(const WeierstrassData& u) {
  Polynomial u53 = parameter_factor(u, 0), u44 = parameter_factor(u, 1),
             u35 = parameter_factor(u, 2), u75 = parameter_factor(u, 3),
             u66 = parameter_factor(u, 4), u57 = parameter_factor(u, 5);
  InvariantSet inv{u44,
                   u66,
                   u53 * u35,
                   u53 * u57 + u35 * u75,
                   u53 * u57 - u35 * u75,
                   u75 * u57};
  return inv;
}

Polynomial compute_h(const WeierstrassData& u) {
  Polynomial g2 = build_g2(u), g3 = build_g3(u);
  Polynomial disc = g2.pow(3).scaled(Rat(4)) + g3.pow(2).scaled(Rat(27));
  return disc.exact_div(xw_monomial(9, 9));
}

Polynomial compute_r20(const WeierstrassData& u) {
  // Quadratic cofactors of g2 and g3 at w = 1: g2 = x^3 w^3 (a x^2 + b x w
  // + c w^2), g3 = x^5 w^5 (d x^2 + e x w + f w^2).
  SpacePtr sp = uxw_space();
  const UxwIndex& ix = uxw_index();
  Polynomial x = Polynomial::variable(sp, ix.x);
  Polynomial a_quad = parameter_factor(u, 0) * x.pow(2) +
                      parameter_factor(u, 1) * x + parameter_factor(u, 2);
  Polynomial b_quad = parameter_factor(u, 3) * x.pow(2) +
                      parameter_factor(u, 4) * x + parameter_factor(u, 5);
  return resultant(a_quad, b_quad, ix.x, 2, 2);
}

Polynomial compute_k120(const WeierstrassData& u) {
  Polynomial h = compute_h(u);
  return binary_discriminant(h, uxw_index().x, uxw_index().w, 6);
}

Polynomial compute_delta60_u(const Polynomial& k120, const Polynomial& r20) {
  return k120.exact_div(r20.pow(3));
}

Polynomial sigma1_swap(const Polynomial& f) {
  if (!compatible(f.space(), uxw_space()))
    throw SpaceMismatchError("index swap is defined over the parameter space");
  const UxwIndex& ix = uxw_index();
  std::vector<Polynomial::Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    unsigned e53 = m.exp(ix.u53), e35 = m.exp(ix.u35);
    unsigned e75 = m.exp(ix.u75), e57 = m.exp(ix.u57);
    m.set_exp(ix.u53, e35);
    m.set_exp(ix.u35, e53);
    m.set_exp(ix.u75, e57);
    m.set_exp(ix.u57, e75);
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(f.space(), std::move(out));
}

std::array<long, 8> action_weights(TorusAction action) {
  // Slot order: x, w, u_53, u_44, u_35, u_75, u_66, u_57.
  if (action == TorusAction::Lambda) return {0, 0, 4, 4, 4, 6, 6, 6};
  return {-1, 1, 2, 0, -2, 2, 0, -2};
}

std::optional<long> action_weight(const Polynomial& f, TorusAction action) {
  if (!compatible(f.space(), uxw_space()))
    throw SpaceMismatchError("torus actions are defined over the parameter space");
  auto w = action_weights(action);
  return f.homogeneous_weight(std::span<const long>(w.data(), w.size()));
}

namespace {

struct TIndex {
  std::size_t t4, t6, t8, t10, s10, t12;
};

const TIndex& t_index() {
  static TIndex idx = [] {
    SpacePtr sp = t_space();
    TIndex i;
    i.t4 = sp->require_index("t_4");
    i.t6 = sp->require_index("t_6");
    i.t8 = sp->require_index("t_8");
    i.t10 = sp->require_index("t_10");
    i.s10 = sp->require_index("s_10");
    i.t12 = sp->require_index("t_12");
    return i;
  }();
  return idx;
}

// (t_10 + s_10)/2 and (t_10 - s_10)/2, the images of u_53 u_57 and
// u_35 u_75.
Polynomial half_sum(bool plus) {
  SpacePtr sp = t_space();
  const TIndex& ix = t_index();
  Polynomial t10 = Polynomial::variable(sp, ix.t10);
  Polynomial s10 = Polynomial::variable(sp, ix.s10);
  Polynomial sum = plus ? t10 + s10 : t10 - s10;
  return sum.scaled(rat(1, 2));
}

// Reduces s_10-degree to <= 1 using s_10^2 = t_10^2 - 4 t_8 t_12.
Polynomial reduce_s10(const Polynomial& f) {
  SpacePtr sp = t_space();
  const TIndex& ix = t_index();
  Polynomial delta20 =
      Polynomial::variable(sp, ix.t10).pow(2) -
      (Polynomial::variable(sp, ix.t8) * Polynomial::variable(sp, ix.t12))
          .scaled(Rat(4));
  std::map<unsigned, Polynomial> delta20_pow;
  auto pow_of = [&](unsigned k) -> const Polynomial& {
    auto it = delta20_pow.find(k);
    if (it != delta20_pow.end()) return it->second;
    return delta20_pow.emplace(k, delta20.pow(k)).first->second;
  };
  Polynomial acc = Polynomial::zero(sp);
  for (const auto& t : f.terms()) {
    unsigned e = t.mono.exp(ix.s10);
    if (e < 2) {
      acc = acc + Polynomial::monomial_term(sp, t.mono, t.coeff);
      continue;
    }
    Monomial m = t.mono;
    m.set_exp(ix.s10, e % 2);
    acc = acc + Polynomial::monomial_term(sp, std::move(m), t.coeff) * pow_of(e / 2);
  }
  return acc;
}

}  // namespace

std::vector<std::pair<std::string, Polynomial>> t_to_u_bindings() {
  WeierstrassData generic = WeierstrassData::generic();
  InvariantSet inv = invariants_from_u(generic);
  return {{"t_4", inv.t4},   {"t_6", inv.t6},   {"t_8", inv.t8},
          {"t_10", inv.t10}, {"s_10", inv.s10}, {"t_12", inv.t12}};
}

Polynomial rewrite_u_to_ts(const Polynomial& f, bool verify_roundtrip) {
  if (!compatible(f.space(), uxw_space()))
    throw SpaceMismatchError("rewrite is defined over the parameter space");
  const UxwIndex& ix = uxw_index();
  SpacePtr tsp = t_space();
  const TIndex& tix = t_index();

  std::map<unsigned, Polynomial> plus_pow, minus_pow;
  auto binomial_pow = [&](bool plus, unsigned k) -> const Polynomial& {
    auto& memo = plus ? plus_pow : minus_pow;
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    return memo.emplace(k, half_sum(plus).pow(k)).first->second;
  };

  Polynomial acc = Polynomial::zero(tsp);
  for (const auto& t : f.terms()) {
    if (t.mono.exp(ix.x) || t.mono.exp(ix.w))
      throw NotBalancedError("rewrite: base coordinates x, w must not occur");
    unsigned a = t.mono.exp(ix.u53), c = t.mono.exp(ix.u35);
    unsigned d = t.mono.exp(ix.u75), e = t.mono.exp(ix.u57);
    if ((unsigned long)a + d != (unsigned long)c + e)
      throw NotBalancedError("rewrite: monomial is not invariant under the base torus");
    unsigned i8 = std::min(a, c), i12 = std::min(d, e);
    a -= i8;
    c -= i8;
    d -= i12;
    e -= i12;
    // The leftover is (u_53 u_57)^a or (u_35 u_75)^c; balance forces the
    // paired exponents equal and the other pair zero.
    Monomial m(tsp->size());
    m.set_exp(tix.t4, t.mono.exp(ix.u44));
    m.set_exp(tix.t6, t.mono.exp(ix.u66));
    m.set_exp(tix.t8, i8);
    m.set_exp(tix.t12, i12);
    Polynomial term = Polynomial::monomial_term(tsp, std::move(m), t.coeff);
    if (a > 0) {
      term = term * binomial_pow(true, a);
    } else if (c > 0) {
      term = term * binomial_pow(false, c);
    }
    acc = acc + term;
  }
  Polynomial result = reduce_s10(acc);

  if (verify_roundtrip) {
    Polynomial back = result.substitute(t_to_u_bindings(), uxw_space());
    if (back != f)
      throw Error("rewrite round trip failed to reproduce the input");
  }
  return result;
}

PipelineArtifacts run_pipeline() {
  WeierstrassData generic = WeierstrassData::generic();
  PipelineArtifacts art{
      build_g2(generic),  build_g3(generic),
      compute_h(generic), compute_r20(generic),
      compute_k120(generic),
      Polynomial::zero(uxw_space()), Polynomial::zero(t_space()),
      Polynomial::zero(t_space()),   Polynomial::zero(t_space()),
      Polynomial::zero(t_space()),   Rat(0)};

  auto expect = [](bool ok, const char* what) {
    if (!ok) throw Error(std::string("pipeline check failed: ") + what);
  };

  expect(action_weight(art.h, TorusAction::Lambda) == 12, "h weight 12");
  expect(action_weight(art.r20, TorusAction::Lambda) == 20, "r20 weight 20");
  expect(action_weight(art.k120, TorusAction::Lambda) == 120, "k120 weight 120");
  expect(action_weight(art.k120, TorusAction::Mu) == 0, "k120 base-torus invariance");
  expect(sigma1_swap(art.r20) == art.r20, "r20 swap invariance");
  expect(sigma1_swap(art.k120) == art.k120, "k120 swap invariance");

  art.delta60_u = compute_delta60_u(art.k120, art.r20);
  expect(art.k120 == art.r20.pow(3) * art.delta60_u, "re-multiplication witness");
  expect(action_weight(art.delta60_u, TorusAction::Lambda) == 60, "delta60 weight 60");

  Polynomial delta60_t_raw = rewrite_u_to_ts(art.delta60_u, /*verify_roundtrip=*/true);
  expect(delta60_t_raw.max_exponent(t_space()->require_index("s_10")) == 0,
         "delta60 is s_10-free");
  art.delta60_t = delta60_t_raw.primitive_normal_form();
  art.delta60_content = delta60_t_raw.leading_term().coeff /
                        art.delta60_t.leading_term().coeff;

  art.r20_t = rewrite_u_to_ts(art.r20, /*verify_roundtrip=*/true);
  expect(art.r20_t.max_exponent(t_space()->require_index("s_10")) == 0,
         "r20 rewrite is s_10-free");

  // Double-entry bookkeeping across the rewrite: the division identity must
  // also hold after rewriting both sides.
  Polynomial k120_t = rewrite_u_to_ts(art.k120);
  expect(k120_t == art.r20_t.pow(3) * delta60_t_raw, "t-space identity");

  SpacePtr tsp = t_space();
  art.delta8_t = Polynomial::variable(tsp, "t_8");
  art.delta20_t = Polynomial::variable(tsp, "t_10").pow(2) -
                  (Polynomial::variable(tsp, "t_8") *
                   Polynomial::variable(tsp, "t_12"))
                      .scaled(Rat(4));
  return art;
}

}  // namespace orthoforms
