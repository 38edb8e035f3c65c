#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthoforms/poly_matrix.hpp"
#include "orthoforms/resultant.hpp"
#include "orthoforms/weierstrass.hpp"
#include "test_util.hpp"

using namespace orthoforms;
using testutil::random_poly;

namespace {

SpacePtr abcd_space() {
  static SpacePtr sp = VariableSpace::create_unit({"a", "b", "c", "d"});
  return sp;
}

Polynomial v(const SpacePtr& sp, const char* name) {
  return Polynomial::variable(sp, name);
}

PolyMatrix random_int_matrix(std::size_t n, Rng& rng, const SpacePtr& sp) {
  PolyMatrix m(n, n, sp);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, Polynomial::constant(sp, Rat(rng.int_in(-9, 9))));
  return m;
}

}  // namespace

TEST_CASE("2x2 symbolic determinant") {
  SpacePtr sp = abcd_space();
  PolyMatrix m(2, 2, sp);
  m.set(0, 0, v(sp, "a"));
  m.set(0, 1, v(sp, "b"));
  m.set(1, 0, v(sp, "c"));
  m.set(1, 1, v(sp, "d"));
  Polynomial expected = v(sp, "a") * v(sp, "d") - v(sp, "b") * v(sp, "c");
  CHECK(bareiss_determinant(m) == expected);
  CHECK(cofactor_determinant(m) == expected);
}

TEST_CASE("determinant with equal rows vanishes") {
  SpacePtr sp = abcd_space();
  PolyMatrix m(3, 3, sp);
  for (std::size_t j = 0; j < 3; ++j) {
    m.set(0, j, v(sp, "a") + Polynomial::constant(sp, Rat(long(j))));
    m.set(2, j, v(sp, "a") + Polynomial::constant(sp, Rat(long(j))));
    m.set(1, j, v(sp, "b").pow(unsigned(j)));
  }
  CHECK(bareiss_determinant(m).is_zero());
}

TEST_CASE("1x1 and identity determinants") {
  SpacePtr sp = abcd_space();
  PolyMatrix m(1, 1, sp);
  m.set(0, 0, v(sp, "a"));
  CHECK(cofactor_determinant(m) == v(sp, "a"));
  CHECK(bareiss_determinant(m) == v(sp, "a"));
  PolyMatrix id(5, 5, sp);
  for (std::size_t i = 0; i < 5; ++i)
    id.set(i, i, Polynomial::constant(sp, Rat(1)));
  CHECK(cofactor_determinant(id) == Polynomial::constant(sp, Rat(1)));
  CHECK(bareiss_determinant(id) == Polynomial::constant(sp, Rat(1)));
}

TEST_CASE("non-square and dimension guards") {
  SpacePtr sp = abcd_space();
  PolyMatrix m(2, 3, sp);
  CHECK_THROWS_AS(bareiss_determinant(m), PreconditionError);
  PolyMatrix big(9, 9, sp);
  for (std::size_t i = 0; i < 9; ++i) big.set(i, i, Polynomial::constant(sp, Rat(1)));
  CHECK_THROWS_AS(cofactor_determinant(big), DegreeError);
  CHECK(bareiss_determinant(big) == Polynomial::constant(sp, Rat(1)));
}

TEST_CASE("bareiss agrees with the cofactor oracle on 100 random matrices") {
  Rng rng(1001);
  SpacePtr sp = abcd_space();
  for (int trial = 0; trial < 100; ++trial) {
    PolyMatrix m = random_int_matrix(4, rng, sp);
    CHECK(bareiss_determinant(m) == cofactor_determinant(m));
  }
  // And on matrices needing row swaps.
  for (int trial = 0; trial < 20; ++trial) {
    PolyMatrix m = random_int_matrix(4, rng, sp);
    m.set(0, 0, Polynomial::zero(sp));
    m.set(1, 1, Polynomial::zero(sp));
    CHECK(bareiss_determinant(m) == cofactor_determinant(m));
  }
}

TEST_CASE("bareiss agrees with cofactor on random polynomial matrices up to 6x6") {
  Rng rng(1002);
  SpacePtr sp = VariableSpace::create_unit({"a", "b"});
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < (n <= 4 ? 8 : 2); ++trial) {
      PolyMatrix m(n, n, sp);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          m.set(i, j, random_poly(sp, 3, 2, rng));
      CHECK(bareiss_determinant(m) == cofactor_determinant(m));
    }
  }
}

TEST_CASE("sylvester matrix layout") {
  SpacePtr sp = VariableSpace::create_unit({"x", "a", "b", "c", "d", "e", "f"});
  std::size_t xv = sp->require_index("x");
  Polynomial fq = v(sp, "a") * Polynomial::variable(sp, xv, 2) +
                  v(sp, "b") * Polynomial::variable(sp, xv) + v(sp, "c");
  Polynomial gq = v(sp, "d") * Polynomial::variable(sp, xv, 2) +
                  v(sp, "e") * Polynomial::variable(sp, xv) + v(sp, "f");
  PolyMatrix s = sylvester_matrix(fq, gq, xv, 2, 2);
  REQUIRE(s.rows() == 4);
  CHECK(s.at(0, 0) == v(sp, "a"));
  CHECK(s.at(0, 1) == v(sp, "b"));
  CHECK(s.at(0, 2) == v(sp, "c"));
  CHECK(s.at(0, 3).is_zero());
  CHECK(s.at(1, 0).is_zero());
  CHECK(s.at(1, 1) == v(sp, "a"));
  CHECK(s.at(2, 0) == v(sp, "d"));
  CHECK(s.at(2, 3).is_zero());
  CHECK(s.at(3, 1) == v(sp, "d"));
  CHECK(s.at(3, 3) == v(sp, "f"));

  // Linear case: [[a, b], [c, d]].
  Polynomial fl = v(sp, "a") * Polynomial::variable(sp, xv) + v(sp, "b");
  Polynomial gl = v(sp, "c") * Polynomial::variable(sp, xv) + v(sp, "d");
  PolyMatrix s2 = sylvester_matrix(fl, gl, xv, 1, 1);
  CHECK(s2.at(0, 0) == v(sp, "a"));
  CHECK(s2.at(0, 1) == v(sp, "b"));
  CHECK(s2.at(1, 0) == v(sp, "c"));
  CHECK(s2.at(1, 1) == v(sp, "d"));

  // Degree-deficient padding: declared 2, actual 1 -> leading zeros.
  PolyMatrix s3 = sylvester_matrix(fl, gq, xv, 2, 2);
  CHECK(s3.at(0, 0).is_zero());
  CHECK(s3.at(0, 1) == v(sp, "a"));
  CHECK(s3.at(0, 2) == v(sp, "b"));

  // Declared degree below the actual degree is an error.
  CHECK_THROWS_AS(sylvester_matrix(fq, gq, xv, 1, 2), DegreeError);
}

TEST_CASE("resultants of small cases") {
  SpacePtr sp = VariableSpace::create_unit({"x", "a", "b", "c", "d"});
  std::size_t xv = sp->require_index("x");
  Polynomial fl = v(sp, "a") * Polynomial::variable(sp, xv) + v(sp, "b");
  Polynomial gl = v(sp, "c") * Polynomial::variable(sp, xv) + v(sp, "d");
  CHECK(resultant(fl, gl, xv, 1, 1) ==
        v(sp, "a") * v(sp, "d") - v(sp, "b") * v(sp, "c"));

  SpacePtr sx = VariableSpace::create_unit({"x"});
  Polynomial f = Polynomial::parse("x^2 - 1", sx);
  Polynomial g = Polynomial::parse("x - 1", sx);
  CHECK(resultant(f, g, 0, 2, 1).is_zero());
}

TEST_CASE("resultant swap symmetry") {
  Rng rng(1003);
  SpacePtr sp = VariableSpace::create_unit({"x", "y"});
  std::size_t xv = 0;
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial f = random_poly(sp, 6, 3, rng);
    Polynomial g = random_poly(sp, 6, 3, rng);
    unsigned m = f.max_exponent(xv), n = g.max_exponent(xv);
    if (m == 0 || n == 0) continue;
    Polynomial rfg = resultant(f, g, xv, m, n);
    Polynomial rgf = resultant(g, f, xv, n, m);
    if ((m * n) % 2 == 1)
      CHECK(rfg == -rgf);
    else
      CHECK(rfg == rgf);
  }
}

TEST_CASE("resultant commutes with specialization when leads survive") {
  Rng rng(1004);
  SpacePtr sp = VariableSpace::create_unit({"x", "y"});
  SpacePtr sx = VariableSpace::create_unit({"x"});
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial f = random_poly(sp, 6, 3, rng);
    Polynomial g = random_poly(sp, 6, 3, rng);
    unsigned m = f.max_exponent(0), n = g.max_exponent(0);
    if (m == 0 || n == 0) continue;
    Rat y0 = rat(rng.int_in(-5, 5), rng.int_in(1, 3));
    auto specialize = [&](const Polynomial& p) {
      return p.substitute({{"y", Polynomial::constant(sx, y0)}}, sx);
    };
    Polynomial fs = specialize(f), gs = specialize(g);
    if (fs.max_exponent(0) != m || gs.max_exponent(0) != n) continue;
    Polynomial res = resultant(f, g, 0, m, n);
    Rat lhs = specialize(res).constant_value();
    Rat rhs = resultant(fs, gs, 0, m, n).constant_value();
    CHECK(lhs == rhs);
  }
}

TEST_CASE("binary discriminant of the generic quadratic") {
  SpacePtr sp = VariableSpace::create({"x", "w", "a", "b", "c"}, {0, 0, 1, 1, 1});
  std::size_t xv = 0, wv = 1;
  Polynomial f = v(sp, "a") * Polynomial::variable(sp, xv, 2) +
                 v(sp, "b") * Polynomial::variable(sp, xv) *
                     Polynomial::variable(sp, wv) +
                 v(sp, "c") * Polynomial::variable(sp, wv, 2);
  Polynomial disc = binary_discriminant(f, xv, wv, 2);
  Polynomial expected =
      v(sp, "b").pow(2) - (v(sp, "a") * v(sp, "c")).scaled(Rat(4));
  CHECK(disc == expected);
}

TEST_CASE("depressed cubic discriminant") {
  SpacePtr sp = VariableSpace::create({"y", "w", "p", "q"}, {0, 0, 1, 1});
  std::size_t yv = 0, wv = 1;
  // y^3 + p y w^2 + q w^3 as a binary cubic.
  Polynomial f = Polynomial::variable(sp, yv, 3) +
                 v(sp, "p") * Polynomial::variable(sp, yv) *
                     Polynomial::variable(sp, wv, 2) +
                 v(sp, "q") * Polynomial::variable(sp, wv, 3);
  Polynomial disc = binary_discriminant(f, yv, wv, 3);
  Polynomial expected = -(v(sp, "p").pow(3).scaled(Rat(4)) +
                          v(sp, "q").pow(2).scaled(Rat(27)));
  CHECK(disc == expected);
}

TEST_CASE("generic sextic discriminant is homogeneous of degree 10") {
  const Polynomial& disc = generic_binary_discriminant(6);
  CHECK(disc.is_quasi_homogeneous());
  CHECK(disc.weighted_degree() == 10);  // unit weights on the coefficients
  CHECK(disc.term_count() > 100);
}

TEST_CASE("forced double root kills the discriminant") {
  SpacePtr sp = VariableSpace::create({"x", "w", "p", "q", "r"}, {0, 0, 1, 1, 1});
  std::size_t xv = 0, wv = 1;
  Polynomial x = Polynomial::variable(sp, xv), w = Polynomial::variable(sp, wv);
  Polynomial dbl = (x - w) * (x - w);
  Polynomial generic = v(sp, "p") * x.pow(2) + v(sp, "q") * x * w + v(sp, "r") * w.pow(2);
  Polynomial f = dbl * generic;
  CHECK(binary_discriminant(f, xv, wv, 4).is_zero());
}

TEST_CASE("degenerate inputs are rejected") {
  SpacePtr sp = VariableSpace::create({"x", "w", "a"}, {0, 0, 1});
  Polynomial x = Polynomial::variable(sp, std::size_t(0));
  Polynomial w = Polynomial::variable(sp, std::size_t(1));
  // Not jointly homogeneous of the stated degree.
  CHECK_THROWS_AS(binary_discriminant(x.pow(2) + w, 0, 1, 2), PreconditionError);
  // Leading x-coefficient identically zero.
  Polynomial no_lead = v(sp, "a") * x * w + w.pow(2);
  CHECK_THROWS_AS(binary_discriminant(no_lead, 0, 1, 2), PreconditionError);
}

TEST_CASE("partials route is proportional with an n-dependent constant") {
  for (unsigned n = 2; n <= 6; ++n) {
    Rat ratio = partials_discriminant_ratio(n);
    CHECK(ratio != 0);
  }
  // The quadratic case pins the constant: Res(f_x, f_w) = -(b^2 - 4ac).
  CHECK(partials_discriminant_ratio(2) == Rat(-1));
}

TEST_CASE("partials route vanishes on x^n") {
  SpacePtr sp = VariableSpace::create({"x", "w"}, {0, 0});
  Polynomial xn = Polynomial::variable(sp, std::size_t(0), 5);
  CHECK(discriminant_via_partials(xn, 0, 1, 5).is_zero());
}

TEST_CASE("numeric and generic discriminant routes agree") {
  Rng rng(1005);
  SpacePtr sp = VariableSpace::create({"x", "w", "a"}, {0, 0, 1});
  std::size_t xv = 0, wv = 1;
  for (int trial = 0; trial < 10; ++trial) {
    // Random numeric quartic with nonzero leading coefficient.
    Polynomial f = Polynomial::zero(sp);
    for (unsigned i = 0; i <= 4; ++i) {
      long c = (i == 4) ? rng.int_in(1, 9) : rng.int_in(-9, 9);
      Monomial m(sp->size());
      m.set_exp(xv, i);
      m.set_exp(wv, 4 - i);
      f = f + Polynomial::monomial_term(sp, std::move(m), Rat(c));
    }
    Polynomial direct = binary_discriminant(f, xv, wv, 4);
    // Force the generic-substitution route by multiplying with a symbol and
    // dividing the weight back out: disc is degree 2(n-1)=6 in coefficients.
    Polynomial scaled = f * v(sp, "a");
    Polynomial lifted = binary_discriminant(scaled, xv, wv, 4);
    CHECK(lifted == direct * v(sp, "a").pow(6));
  }
}
