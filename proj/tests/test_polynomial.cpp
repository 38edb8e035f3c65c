#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthoforms/weierstrass.hpp"
#include "test_util.hpp"

using namespace orthoforms;
using testutil::mul_naive;
using testutil::random_poly;
using testutil::x_space;
using testutil::xy_space;

namespace {

Polynomial parse_x(const std::string& text) { return Polynomial::parse(text, x_space()); }

}  // namespace

TEST_CASE("addition: cancellation, identity, partial cancellation") {
  Polynomial x = Polynomial::variable(x_space(), "x");
  Polynomial one = Polynomial::constant(x_space(), Rat(1));
  CHECK((x + one) + (-x + one) == Polynomial::constant(x_space(), Rat(2)));
  Polynomial f = parse_x("x^3 - 2*x + 5");
  CHECK(f + Polynomial::zero(x_space()) == f);
  CHECK(parse_x("x^2 - 1") + one == parse_x("x^2"));
}

TEST_CASE("addition rejects mixed spaces") {
  Polynomial a = Polynomial::variable(x_space(), "x");
  Polynomial b = Polynomial::variable(xy_space(), "y");
  CHECK_THROWS_AS(a + b, SpaceMismatchError);
  CHECK_THROWS_AS(a * b, SpaceMismatchError);
}

TEST_CASE("multiplication basics") {
  Polynomial x = Polynomial::variable(x_space(), "x");
  Polynomial one = Polynomial::constant(x_space(), Rat(1));
  CHECK((x + one) * (x - one) == parse_x("x^2 - 1"));
  CHECK((x + one) * Polynomial::zero(x_space()) == Polynomial::zero(x_space()));
}

TEST_CASE("trinomial cube against the repeated-addition oracle") {
  SpacePtr sp = VariableSpace::create_unit({"x", "w", "a", "b", "c"});
  Polynomial quad =
      Polynomial::variable(sp, "a") * Polynomial::variable(sp, "x", 2) +
      Polynomial::variable(sp, "b") * Polynomial::variable(sp, "x") *
          Polynomial::variable(sp, "w") +
      Polynomial::variable(sp, "c") * Polynomial::variable(sp, "w", 2);
  Polynomial cube = quad.pow(3);
  Polynomial oracle = mul_naive(mul_naive(quad, quad), quad);
  CHECK(cube == oracle);
  CHECK(cube.term_count() == 10);
  // Coefficient of x^4 w^2.
  std::size_t xv = sp->require_index("x"), wv = sp->require_index("w");
  Polynomial cxw = cube.coefficient_of(xv, 4).coefficient_of(wv, 2);
  Polynomial expected =
      (Polynomial::variable(sp, "a").pow(2) * Polynomial::variable(sp, "c") +
       Polynomial::variable(sp, "a") * Polynomial::variable(sp, "b").pow(2))
          .scaled(Rat(3));
  CHECK(cxw == expected);
}

TEST_CASE("product strategies agree") {
  Rng rng(101);
  SpacePtr sp = VariableSpace::create_unit({"x", "y", "z"});
  for (int i = 0; i < 30; ++i) {
    Polynomial f = random_poly(sp, 25, 6, rng);
    Polynomial g = random_poly(sp, 25, 6, rng);
    Polynomial a = mul_schoolbook(f, g);
    CHECK(a == mul_heap_merge(f, g));
    CHECK(a == mul_naive(f, g));
  }
}

TEST_CASE("packed and generic product paths agree on large exponents") {
  Rng rng(707);
  SpacePtr sp = xy_space();
  // Exponents beyond the packed-path bound force the ordered-map path.
  Polynomial f = random_poly(sp, 20, 300, rng);
  Polynomial g = random_poly(sp, 20, 300, rng);
  CHECK(mul_schoolbook(f, g) == mul_naive(f, g));
}

TEST_CASE("exact division") {
  CHECK(parse_x("x^2 - 1").exact_div(parse_x("x - 1")) == parse_x("x + 1"));
  CHECK_THROWS_AS(parse_x("x").exact_div(Polynomial::zero(x_space())),
                  DivisionByZeroError);
  try {
    parse_x("x^2 + 1").exact_div(parse_x("x + 1"));
    CHECK(false);
  } catch (const NotDivisibleError& e) {
    CHECK(e.leading_monomial() == "1");  // remainder 2, unit monomial
  }
}

TEST_CASE("division by a monomial divisor") {
  SpacePtr sp = xy_space();
  Polynomial f = Polynomial::parse("3*x^3*y^2 - 6*x^2*y^4", sp);
  Polynomial m = Polynomial::parse("3*x^2*y^2", sp);
  CHECK(f.exact_div(m) == Polynomial::parse("x - 2*y^2", sp));
  CHECK_THROWS_AS(Polynomial::parse("x + y", sp).exact_div(m), NotDivisibleError);
}

TEST_CASE("exact_div(mul(q,g), g) == q on random inputs") {
  Rng rng(202);
  SpacePtr sp = VariableSpace::create_unit({"x", "y", "z"});
  for (int i = 0; i < 60; ++i) {
    Polynomial q = random_poly(sp, 12, 5, rng);
    Polynomial g = random_poly(sp, 12, 5, rng);
    if (g.is_zero()) continue;
    CHECK((q * g).exact_div(g) == q);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(303);
  SpacePtr sp = VariableSpace::create_unit({"x", "y"});
  for (int i = 0; i < 40; ++i) {
    Polynomial f = random_poly(sp, 8, 4, rng);
    Polynomial g = random_poly(sp, 8, 4, rng);
    Polynomial h = random_poly(sp, 8, 4, rng);
    CHECK(f + g == g + f);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("weighted degree") {
  SpacePtr t = t_space();
  Polynomial delta20 = Polynomial::parse("t_10^2 - 4*t_8*t_12", t);
  CHECK(delta20.weighted_degree() == 20);
  CHECK(!Polynomial::zero(t).weighted_degree().has_value());
  SpacePtr u = uxw_space();
  Polynomial t8 = Polynomial::parse("u_53*u_35", u);
  CHECK(t8.weighted_degree() == 8);
}

TEST_CASE("quasi-homogeneity") {
  SpacePtr t = t_space();
  CHECK(Polynomial::parse("t_10^2 - 4*t_8*t_12", t).is_quasi_homogeneous());
  CHECK(!Polynomial::parse("t_4 + t_6", t).is_quasi_homogeneous());
  CHECK(Polynomial::zero(t).is_quasi_homogeneous());
}

TEST_CASE("weighted degree is additive on quasi-homogeneous factors") {
  SpacePtr t = t_space();
  Rng rng(404);
  // Random quasi-homogeneous polynomials built from weight-buckets.
  auto random_quasi = [&](long weight) {
    std::vector<Polynomial::Term> terms;
    // crude enumeration of monomials with the target weight
    for (unsigned a = 0; 4 * a <= unsigned(weight); ++a)
      for (unsigned b = 0; 4 * a + 6 * b <= unsigned(weight); ++b)
        for (unsigned c = 0; 4 * a + 6 * b + 8 * c <= unsigned(weight); ++c)
          for (unsigned d = 0; 4 * a + 6 * b + 8 * c + 10 * d <= unsigned(weight); ++d) {
            long rest = weight - long(4 * a + 6 * b + 8 * c + 10 * d);
            if (rest < 0 || rest % 12) continue;
            Monomial m{a, b, c, d, 0, unsigned(rest / 12)};
            if (rng.below(3) == 0)
              terms.push_back({m, Rat(rng.int_in(1, 9))});
          }
    return Polynomial::from_terms(t, std::move(terms));
  };
  for (int i = 0; i < 10; ++i) {
    Polynomial f = random_quasi(24);
    Polynomial g = random_quasi(20);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(f.is_quasi_homogeneous());
    CHECK(g.is_quasi_homogeneous());
    CHECK((f * g).weighted_degree() == 44);
  }
}

TEST_CASE("substitution") {
  SpacePtr sp = x_space();
  Polynomial f = parse_x("x^2");
  Polynomial image = parse_x("x + 1");
  CHECK(f.substitute({{"x", image}}, sp) == parse_x("x^2 + 2*x + 1"));

  // Identity bindings are the identity map.
  Rng rng(505);
  SpacePtr sp2 = VariableSpace::create_unit({"x", "y"});
  for (int i = 0; i < 10; ++i) {
    Polynomial g = random_poly(sp2, 10, 5, rng);
    CHECK(g.substitute({}, sp2) == g);
  }

  // Unbound variable with no identity image in the target.
  SpacePtr narrow = VariableSpace::create_unit({"y"});
  Polynomial uses_x = Polynomial::parse("x*y", sp2);
  CHECK_THROWS_AS(uses_x.substitute({}, narrow), UnboundVariableError);
}

TEST_CASE("torus substitutions on t_8") {
  // lambda: u_ij -> lambda^((i+j)/2) u_ij sends t_8 to lambda^8 t_8.
  SpacePtr u = uxw_space();
  std::vector<std::string> names = u->names();
  std::vector<long> weights(u->weights().begin(), u->weights().end());
  names.push_back("lambda");
  weights.push_back(0);
  SpacePtr ul = VariableSpace::create(names, weights);
  Polynomial t8 = Polynomial::parse("u_53*u_35", u);
  auto lam = [&](unsigned e, const char* var) {
    return Polynomial::variable(ul, "lambda", e) * Polynomial::variable(ul, var);
  };
  Polynomial lam8 = t8.substitute({{"u_53", lam(4, "u_53")}, {"u_35", lam(4, "u_35")}}, ul);
  CHECK(lam8 == Polynomial::variable(ul, "lambda", 8) * Polynomial::parse("u_53*u_35", ul));

  // mu: u_53 -> mu^2 u_53, u_35 -> mu^-2 u_35, realized with a formal
  // inverse n (m*n = 1); after cancelling m n pairs the result is t_8 again.
  std::vector<std::string> names2 = u->names();
  std::vector<long> weights2(u->weights().begin(), u->weights().end());
  names2.push_back("m");
  names2.push_back("n");
  weights2.push_back(0);
  weights2.push_back(0);
  SpacePtr umn = VariableSpace::create(names2, weights2);
  Polynomial image = t8.substitute(
      {{"u_53", Polynomial::variable(umn, "m", 2) * Polynomial::variable(umn, "u_53")},
       {"u_35", Polynomial::variable(umn, "n", 2) * Polynomial::variable(umn, "u_35")}},
      umn);
  std::size_t mi = umn->require_index("m"), ni = umn->require_index("n");
  std::vector<Polynomial::Term> cancelled;
  for (const auto& t : image.terms()) {
    Monomial mono = t.mono;
    unsigned k = std::min(mono.exp(mi), mono.exp(ni));
    mono.set_exp(mi, mono.exp(mi) - k);
    mono.set_exp(ni, mono.exp(ni) - k);
    cancelled.push_back({std::move(mono), t.coeff});
  }
  Polynomial reduced = Polynomial::from_terms(umn, std::move(cancelled));
  CHECK(reduced == Polynomial::parse("u_53*u_35", umn));
}

TEST_CASE("evaluation") {
  Polynomial f = parse_x("x^2 - 1");
  CHECK(f.evaluate({{"x", Rat(3)}}) == Rat(8));
  Polynomial seven = Polynomial::constant(x_space(), Rat(7));
  CHECK(seven.evaluate({{"x", Rat(123)}}) == Rat(7));
  Polynomial prod = parse_x("x + 1") * parse_x("x - 1");
  for (long v = 2; v <= 10; ++v)
    CHECK(prod.evaluate({{"x", Rat(v)}}) == f.evaluate({{"x", Rat(v)}}));
  CHECK_THROWS_AS(Polynomial::parse("x*y", xy_space()).evaluate({{"x", Rat(1)}}),
                  PreconditionError);
}

TEST_CASE("canonical text form") {
  CHECK(parse_x("x^2 - 1").to_text() == "x^2 - 1");
  CHECK(Polynomial::zero(x_space()).to_text() == "0");
  CHECK(parse_x("-x + 1").to_text() == "-x + 1");
  SpacePtr t = t_space();
  Polynomial delta20 = Polynomial::parse("t_10^2 - 4*t_8*t_12", t);
  Polynomial built =
      Polynomial::variable(t, "t_10").pow(2) -
      (Polynomial::variable(t, "t_8") * Polynomial::variable(t, "t_12")).scaled(Rat(4));
  CHECK(delta20 == built);
  CHECK(delta20.to_text() == "t_10^2 - 4*t_8*t_12");
  CHECK(Polynomial::parse("1/2*x + 1/3", x_space()).to_text() == "1/2*x + 1/3");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(Polynomial::parse("", x_space()), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x + ", x_space()), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("y", x_space()), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x^", x_space()), ParseError);
  CHECK_THROWS_AS(Polynomial::parse("x x", xy_space()), ParseError);
  try {
    Polynomial::parse("x + q", xy_space());
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("serialize/parse round trip on random polynomials") {
  Rng rng(606);
  SpacePtr sp = VariableSpace::create_unit({"x", "y", "z", "u", "v"});
  for (int i = 0; i < 10; ++i) {
    Polynomial f = random_poly(sp, 50, 9, rng);
    CHECK(Polynomial::parse(f.to_text(), sp) == f);
  }
  // The large case: ~1000 terms.
  std::vector<Polynomial::Term> terms;
  for (int i = 0; i < 1400; ++i) {
    Monomial m(sp->size());
    for (std::size_t v = 0; v < sp->size(); ++v)
      m.set_exp(v, unsigned(rng.below(10)));
    terms.push_back({std::move(m), rat(rng.int_in(-99, 99), rng.int_in(1, 7))});
  }
  Polynomial big = Polynomial::from_terms(sp, std::move(terms));
  CHECK(big.term_count() > 900);
  Polynomial reparsed = Polynomial::parse(big.to_text(), sp);
  CHECK(reparsed == big);
}

TEST_CASE("content and primitive normal form") {
  SpacePtr sp = xy_space();
  Polynomial f = Polynomial::parse("6*x^2 - 9*y", sp);
  CHECK(f.content() == Rat(3));
  Polynomial g = Polynomial::parse("1/2*x + 3/4", sp);
  CHECK(g.content() == rat(1, 4));
  Polynomial neg = Polynomial::parse("-4*x^2*y - 6*x", sp);
  Polynomial prim = neg.primitive_normal_form();
  CHECK(prim == Polynomial::parse("2*x^2*y + 3*x", sp));
  CHECK(prim.content() == Rat(1));
  CHECK(rat_sign(prim.leading_term().coeff) > 0);
  CHECK_THROWS_AS(Polynomial::zero(sp).content(), PreconditionError);
}

TEST_CASE("grevlex order is a strict total order on small monomials") {
  // Antisymmetry and transitivity on an exhaustive small box.
  std::vector<Monomial> monos;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b)
      for (unsigned c = 0; c < 4; ++c) monos.push_back(Monomial{a, b, c});
  for (const auto& m1 : monos)
    for (const auto& m2 : monos) {
      int c12 = Monomial::grevlex_cmp(m1, m2);
      CHECK(c12 == -Monomial::grevlex_cmp(m2, m1));
      if (&m1 != &m2 && m1 == m2) CHECK(c12 == 0);
    }
  for (std::size_t i = 0; i < 40; ++i) {
    const Monomial &a = monos[i], &b = monos[(i * 7 + 3) % monos.size()],
                   &c = monos[(i * 13 + 5) % monos.size()];
    if (Monomial::grevlex_cmp(a, b) < 0 && Monomial::grevlex_cmp(b, c) < 0)
      CHECK(Monomial::grevlex_cmp(a, c) < 0);
  }
}
