#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthoforms/resultant.hpp"
#include "orthoforms/rng.hpp"
#include "orthoforms/weierstrass.hpp"
#include "test_util.hpp"

using namespace orthoforms;
using testutil::mul_naive;

namespace {

Polynomial uvar(const char* name, unsigned e = 1) {
  return Polynomial::variable(uxw_space(), name, e);
}

const PipelineArtifacts& artifacts() {
  static PipelineArtifacts art = run_pipeline();
  return art;
}

}  // namespace

TEST_CASE("g2 and g3 are the stated trinomials") {
  Polynomial g2 = build_g2();
  Polynomial expected_g2 = uvar("u_53") * uvar("x", 5) * uvar("w", 3) +
                           uvar("u_44") * uvar("x", 4) * uvar("w", 4) +
                           uvar("u_35") * uvar("x", 3) * uvar("w", 5);
  CHECK(g2 == expected_g2);
  Polynomial g3 = build_g3();
  Polynomial expected_g3 = uvar("u_75") * uvar("x", 7) * uvar("w", 5) +
                           uvar("u_66") * uvar("x", 6) * uvar("w", 6) +
                           uvar("u_57") * uvar("x", 5) * uvar("w", 7);
  CHECK(g3 == expected_g3);
  CHECK(action_weight(g2, TorusAction::Lambda) == 4);
  CHECK(action_weight(g3, TorusAction::Lambda) == 6);
  CHECK(action_weight(g2, TorusAction::Mu) == 0);
}

TEST_CASE("numeric parameter modes") {
  WeierstrassData u = WeierstrassData::at({Rat(1), Rat(0), Rat(0), Rat(2), Rat(3), Rat(4)});
  CHECK(build_g2(u) == uvar("x", 5) * uvar("w", 3));
  WeierstrassData zero3 =
      WeierstrassData::at({Rat(1), Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)});
  CHECK(build_g3(zero3).is_zero());
}

TEST_CASE("index swap naturality for g3") {
  Polynomial swapped = sigma1_swap(build_g3());
  Polynomial expected = uvar("u_57") * uvar("x", 7) * uvar("w", 5) +
                        uvar("u_66") * uvar("x", 6) * uvar("w", 6) +
                        uvar("u_75") * uvar("x", 5) * uvar("w", 7);
  CHECK(swapped == expected);
  // Numeric naturality: swapping parameters before or after agree.
  WeierstrassData u = WeierstrassData::at(
      {Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13)});
  WeierstrassData swapped_u = WeierstrassData::at(
      {Rat(5), Rat(3), Rat(2), Rat(13), Rat(11), Rat(7)});
  CHECK(sigma1_swap(build_g3(u)) == build_g3(swapped_u));
}

TEST_CASE("invariants") {
  InvariantSet inv = invariants_from_u();
  CHECK(inv.t8 == uvar("u_53") * uvar("u_35"));
  CHECK(inv.t10 == uvar("u_53") * uvar("u_57") + uvar("u_35") * uvar("u_75"));
  CHECK(inv.s10 == uvar("u_53") * uvar("u_57") - uvar("u_35") * uvar("u_75"));
  CHECK(inv.t12 == uvar("u_75") * uvar("u_57"));

  WeierstrassData ones = WeierstrassData::at(
      {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
  InvariantSet at1 = invariants_from_u(ones);
  CHECK(at1.t4.constant_value() == 1);
  CHECK(at1.t6.constant_value() == 1);
  CHECK(at1.t8.constant_value() == 1);
  CHECK(at1.t10.constant_value() == 2);
  CHECK(at1.s10.constant_value() == 0);
  CHECK(at1.t12.constant_value() == 1);

  // s_10^2 = t_10^2 - 4 t_8 t_12 identically.
  CHECK(inv.s10.pow(2) == inv.t10.pow(2) - (inv.t8 * inv.t12).scaled(Rat(4)));
  // Every invariant is mu-invariant.
  for (const Polynomial* p : {&inv.t4, &inv.t6, &inv.t8, &inv.t10, &inv.s10, &inv.t12})
    CHECK(action_weight(*p, TorusAction::Mu) == 0);
  CHECK(action_weight(inv.t12, TorusAction::Lambda) == 12);
  CHECK(action_weight(uvar("u_53"), TorusAction::Mu) == 2);
}

TEST_CASE("action weight rejects mixed polynomials") {
  CHECK_THROWS_AS(action_weight(uvar("u_53") + uvar("u_66"), TorusAction::Mu),
                  PreconditionError);
  CHECK(!action_weight(Polynomial::zero(uxw_space()), TorusAction::Lambda).has_value());
}

TEST_CASE("h equals the cofactor expansion and has the stated degrees") {
  const Polynomial& h = artifacts().h;
  // Independent route: h must equal 4 A^3 + 27 x w B^2 for the quadratic
  // cofactors A, B, expanded by repeated addition.
  Polynomial A = uvar("u_53") * uvar("x", 2) + uvar("u_44") * uvar("x") * uvar("w") +
                 uvar("u_35") * uvar("w", 2);
  Polynomial B = uvar("u_75") * uvar("x", 2) + uvar("u_66") * uvar("x") * uvar("w") +
                 uvar("u_57") * uvar("w", 2);
  Polynomial oracle = mul_naive(mul_naive(A, A), A).scaled(Rat(4)) +
                      mul_naive(uvar("x") * uvar("w"), mul_naive(B, B)).scaled(Rat(27));
  CHECK(h == oracle);
  CHECK(h.term_count() == oracle.term_count());

  const UxwIndex& ix = uxw_index();
  Polynomial c6 = h.coefficient_of(ix.x, 6).coefficient_of(ix.w, 0);
  CHECK(c6 == uvar("u_53", 3).scaled(Rat(4)));
  std::array<std::size_t, 2> xw{ix.x, ix.w};
  CHECK(h.plain_degree_in(xw) == 6);
  CHECK(action_weight(h, TorusAction::Lambda) == 12);
}

TEST_CASE("compute_h rejects nothing and divides exactly") {
  Polynomial g2 = build_g2(), g3 = build_g3();
  Polynomial disc = g2.pow(3).scaled(Rat(4)) + g3.pow(2).scaled(Rat(27));
  Polynomial back = disc.exact_div(artifacts().h);
  const UxwIndex& ix = uxw_index();
  Monomial m(uxw_space()->size());
  m.set_exp(ix.x, 9);
  m.set_exp(ix.w, 9);
  CHECK(back == Polynomial::monomial_term(uxw_space(), std::move(m), Rat(1)));
}

TEST_CASE("r20 closed form, weight, swap invariance") {
  const Polynomial& r20 = artifacts().r20;
  Polynomial closed =
      (uvar("u_53") * uvar("u_57") - uvar("u_35") * uvar("u_75")).pow(2) -
      (uvar("u_53") * uvar("u_66") - uvar("u_44") * uvar("u_75")) *
          (uvar("u_44") * uvar("u_57") - uvar("u_35") * uvar("u_66"));
  CHECK(r20 == closed);
  CHECK(action_weight(r20, TorusAction::Lambda) == 20);
  CHECK(sigma1_swap(r20) == r20);
  CHECK(action_weight(r20, TorusAction::Mu) == 0);
}

TEST_CASE("r20 rewrites to the known invariant form") {
  Polynomial r20_t = rewrite_u_to_ts(artifacts().r20, /*verify_roundtrip=*/true);
  SpacePtr t = t_space();
  CHECK(r20_t.max_exponent(t->require_index("s_10")) == 0);
  Polynomial expected = Polynomial::parse(
      "t_10^2 - 4*t_8*t_12 - t_4*t_6*t_10 + t_6^2*t_8 + t_4^2*t_12", t);
  CHECK(r20_t == expected);
  CHECK(r20_t.weighted_degree() == 20);
}

TEST_CASE("k120 weight and symmetries") {
  const Polynomial& k120 = artifacts().k120;
  CHECK(k120.is_quasi_homogeneous());
  CHECK(action_weight(k120, TorusAction::Lambda) == 120);
  CHECK(action_weight(k120, TorusAction::Mu) == 0);
  CHECK(sigma1_swap(k120) == k120);
  CHECK(k120.term_count() < 54000);
}

TEST_CASE("k120 specialization commutes at the all-ones parameter") {
  WeierstrassData ones = WeierstrassData::at(
      {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
  REQUIRE(is_valid_parameter(ones));
  const UxwIndex& ix = uxw_index();
  std::vector<Rat> point(uxw_space()->size(), Rat(1));
  Rat symbolic = artifacts().k120.evaluate(point);
  Polynomial h1 = compute_h(ones);
  Rat numeric = binary_discriminant(h1, ix.x, ix.w, 6).constant_value();
  CHECK(symbolic == numeric);
}

TEST_CASE("k120 specialization commutes at 20 random valid parameters") {
  Rng rng(derive_seed(7, "k120-points-test"));
  const UxwIndex& ix = uxw_index();
  for (int trial = 0; trial < 20; ++trial) {
    std::array<Rat, 6> coords;
    for (auto& c : coords) {
      long num = 0;
      while (num == 0) num = rng.int_in(-9, 9);
      c = rat(num, rng.int_in(1, 4));
    }
    WeierstrassData u = WeierstrassData::at(coords);
    REQUIRE(is_valid_parameter(u));
    std::vector<Rat> point(uxw_space()->size(), Rat(1));
    point[ix.u53] = coords[0];
    point[ix.u44] = coords[1];
    point[ix.u35] = coords[2];
    point[ix.u75] = coords[3];
    point[ix.u66] = coords[4];
    point[ix.u57] = coords[5];
    Rat symbolic = artifacts().k120.evaluate(point);
    Rat numeric =
        binary_discriminant(compute_h(u), ix.x, ix.w, 6).constant_value();
    CHECK(symbolic == numeric);
  }
}

TEST_CASE("delta60: division, rewrite, normal form") {
  const PipelineArtifacts& art = artifacts();
  CHECK(art.k120 == art.r20.pow(3) * art.delta60_u);
  CHECK(action_weight(art.delta60_u, TorusAction::Lambda) == 60);
  CHECK(art.delta60_t.weighted_degree() == 60);
  CHECK(art.delta60_t.max_exponent(t_space()->require_index("s_10")) == 0);
  CHECK(art.delta60_t.content() == 1);
  CHECK(rat_sign(art.delta60_t.leading_term().coeff) > 0);
  // Stability across runs: a fresh pipeline reproduces the artifact.
  PipelineArtifacts fresh = run_pipeline();
  CHECK(fresh.delta60_t == art.delta60_t);
  CHECK(fresh.delta60_t.content_hash() == art.delta60_t.content_hash());
}

TEST_CASE("delta60 is not divisible by any generator and not a square") {
  const Polynomial& d = artifacts().delta60_t;
  SpacePtr t = t_space();
  for (const char* name : {"t_4", "t_6", "t_8", "t_10", "t_12"})
    CHECK_THROWS_AS(d.exact_div(Polynomial::variable(t, name)), NotDivisibleError);
  // Restriction to a fixed line is squarefree, so d is not a perfect square.
  SpacePtr line = VariableSpace::create_unit({"tau"});
  Polynomial tau = Polynomial::variable(line, std::size_t(0));
  std::vector<std::pair<std::string, Polynomial>> bindings;
  long dir[] = {3, -2, 5, 7, 1}, off[] = {1, 2, -1, 3, 2};
  int k = 0;
  for (const char* name : {"t_4", "t_6", "t_8", "t_10", "t_12"}) {
    bindings.emplace_back(name, tau.scaled(Rat(dir[k])) +
                                    Polynomial::constant(line, Rat(off[k])));
    ++k;
  }
  bindings.emplace_back("s_10", Polynomial::zero(line));
  Polynomial restricted = d.substitute(bindings, line);
  unsigned deg = restricted.max_exponent(0);
  REQUIRE(deg >= 2);
  Polynomial res = resultant(restricted, restricted.derivative(0), 0, deg, deg - 1);
  CHECK(!res.is_zero());
}

TEST_CASE("rewrite examples") {
  SpacePtr t = t_space();
  CHECK(rewrite_u_to_ts(uvar("u_53") * uvar("u_35")) ==
        Polynomial::variable(t, "t_8"));
  Polynomial half_plus = (Polynomial::variable(t, "t_10") +
                          Polynomial::variable(t, "s_10"))
                             .scaled(rat(1, 2));
  CHECK(rewrite_u_to_ts(uvar("u_53") * uvar("u_57")) == half_plus);
  Polynomial prod = uvar("u_53") * uvar("u_57") * uvar("u_35") * uvar("u_75");
  CHECK(rewrite_u_to_ts(prod) ==
        Polynomial::variable(t, "t_8") * Polynomial::variable(t, "t_12"));
  CHECK_THROWS_AS(rewrite_u_to_ts(uvar("u_53")), NotBalancedError);
  CHECK_THROWS_AS(rewrite_u_to_ts(uvar("x") * uvar("w")), NotBalancedError);
  // Round trips reproduce inputs.
  Polynomial mix = (uvar("u_53") * uvar("u_57")).pow(3) +
                   (uvar("u_44") * uvar("u_66")).pow(2) * uvar("u_53") * uvar("u_35");
  CHECK(rewrite_u_to_ts(mix, /*verify_roundtrip=*/true)
            .substitute(t_to_u_bindings(), uxw_space()) == mix);
}

TEST_CASE("index swap examples") {
  InvariantSet inv = invariants_from_u();
  CHECK(sigma1_swap(inv.t10) == inv.t10);
  CHECK(sigma1_swap(inv.s10) == -inv.s10);
  Polynomial cofactor = uvar("u_53") * uvar("x", 2) +
                        uvar("u_44") * uvar("x") * uvar("w") + uvar("u_35") * uvar("w", 2);
  Polynomial reversed = uvar("u_35") * uvar("x", 2) +
                        uvar("u_44") * uvar("x") * uvar("w") + uvar("u_53") * uvar("w", 2);
  CHECK(sigma1_swap(cofactor) == reversed);
}

TEST_CASE("parameter validity predicate") {
  auto valid = [](std::array<long, 6> v) {
    std::array<Rat, 6> r;
    for (std::size_t i = 0; i < 6; ++i) r[i] = Rat(v[i]);
    return is_valid_parameter(WeierstrassData::at(r));
  };
  CHECK(valid({1, 1, 1, 1, 1, 1}));
  CHECK(!valid({1, 1, 0, 1, 1, 0}));
  CHECK(!valid({0, 1, 1, 0, 1, 1}));
  CHECK_THROWS_AS(is_valid_parameter(WeierstrassData::generic()), PreconditionError);
}

TEST_CASE("published delta60 spot values") {
  // The published form has integer coefficients and reproduces the raw
  // quotient after rescaling by the recorded content.
  const PipelineArtifacts& art = artifacts();
  Polynomial rescaled = art.delta60_t.scaled(art.delta60_content);
  Polynomial raw = rewrite_u_to_ts(art.delta60_u);
  CHECK(rescaled == raw);
}
