#include "orthoforms/symfunc.hpp"

#include "orthoforms/resultant.hpp"

namespace orthoforms {

SpacePtr six_point_space() {
  static SpacePtr sp = VariableSpace::create_unit(
      {"x_1", "x_2", "x_3", "x_4", "x_5", "x_6"});
  return sp;
}

bool igusa_member(const SixPoint& p) {
  Rat s1(0), s2(0), s4(0);
  for (const Rat& x : p) {
    s1 += x;
    Rat sq = x * x;
    s2 += sq;
    s4 += sq * sq;
  }
  return s1 == 0 && s2 * s2 == s4 * 4;
}

Rat vandermonde_disc(const SixPoint& p) {
  Rat prod(1);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      Rat d = p[i] - p[j];
      prod *= d * d;
    }
  return prod;
}

Polynomial vandermonde_disc_symbolic() {
  SpacePtr sp = six_point_space();
  Polynomial prod = Polynomial::constant(sp, Rat(1));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      Polynomial d = Polynomial::variable(sp, i) - Polynomial::variable(sp, j);
      prod = prod * d;
    }
  return prod * prod;
}

namespace {

SpacePtr monic_space() {
  static SpacePtr sp =
      VariableSpace::create({"s", "w"}, {0, 0});
  return sp;
}

}  // namespace

Rat monic_from_roots_disc(const SixPoint& p) {
  SpacePtr sp = monic_space();
  std::size_t s = 0, w = 1;
  Polynomial m = Polynomial::constant(sp, Rat(1));
  for (const Rat& root : p) {
    Polynomial factor =
        Polynomial::variable(sp, s) - Polynomial::variable(sp, w).scaled(root);
    m = m * factor;
  }
  Polynomial disc = binary_discriminant(m, s, w, 6);
  return disc.constant_value();
}

Rat elementary_symmetric(const SixPoint& p, unsigned i) {
  if (i < 1 || i > 6) throw PreconditionError("symmetric function index out of range");
  // e_i via the coefficient recurrence prod(1 + x_k T).
  std::array<Rat, 7> e{};
  e[0] = 1;
  for (const Rat& x : p)
    for (unsigned k = 6; k >= 1; --k) e[k] += e[k - 1] * x;
  return e[i];
}

Rat power_sum(const SixPoint& p, unsigned i) {
  if (i < 1 || i > 6) throw PreconditionError("symmetric function index out of range");
  Rat sum(0);
  for (const Rat& x : p) sum += rat_pow(x, i);
  return sum;
}

Polynomial elementary_symmetric_symbolic(unsigned i) {
  if (i < 1 || i > 6) throw PreconditionError("symmetric function index out of range");
  SpacePtr sp = six_point_space();
  std::vector<Polynomial> e(7, Polynomial::zero(sp));
  e[0] = Polynomial::constant(sp, Rat(1));
  for (std::size_t v = 0; v < 6; ++v) {
    Polynomial x = Polynomial::variable(sp, v);
    for (unsigned k = 6; k >= 1; --k) e[k] = e[k] + e[k - 1] * x;
  }
  return e[i];
}

Polynomial power_sum_symbolic(unsigned i) {
  if (i < 1 || i > 6) throw PreconditionError("symmetric function index out of range");
  SpacePtr sp = six_point_space();
  Polynomial sum = Polynomial::zero(sp);
  for (std::size_t v = 0; v < 6; ++v)
    sum = sum + Polynomial::variable(sp, v, i);
  return sum;
}

bool roots_disc_identity_holds(unsigned degree) {
  if (degree < 2 || degree > 6)
    throw PreconditionError("roots identity checked for degrees 2..6");
  std::vector<std::string> names{"s", "w"};
  for (unsigned i = 1; i <= degree; ++i) names.push_back("r_" + std::to_string(i));
  SpacePtr sp = VariableSpace::create_unit(std::move(names));
  std::size_t s = 0, w = 1;
  Polynomial m = Polynomial::constant(sp, Rat(1));
  for (unsigned i = 1; i <= degree; ++i) {
    Polynomial root = Polynomial::variable(sp, 1 + i);
    Polynomial factor =
        Polynomial::variable(sp, s) - Polynomial::variable(sp, w) * root;
    m = m * factor;
  }
  Polynomial disc = binary_discriminant(m, s, w, degree);
  Polynomial expected = Polynomial::constant(sp, Rat(1));
  for (unsigned i = 1; i <= degree; ++i)
    for (unsigned j = i + 1; j <= degree; ++j) {
      Polynomial d = Polynomial::variable(sp, 1 + i) - Polynomial::variable(sp, 1 + j);
      expected = expected * d * d;
    }
  return disc == expected;
}

}  // namespace orthoforms
