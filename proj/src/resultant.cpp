#include "orthoforms/resultant.hpp"

#include <map>
#include <mutex>

namespace orthoforms {

namespace {

// f as a univariate coefficient vector in var, leading (declared) first.
std::vector<Polynomial> coefficient_vector(const Polynomial& f, std::size_t var,
                                           unsigned declared) {
  if (f.max_exponent(var) > declared)
    throw DegreeError("actual degree in variable exceeds the declared degree");
  std::vector<Polynomial> coeffs;
  coeffs.reserve(declared + 1);
  for (unsigned d = declared + 1; d-- > 0;)
    coeffs.push_back(f.coefficient_of(var, d));
  return coeffs;
}

}  // namespace

PolyMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g,
                            std::size_t var, unsigned m, unsigned n) {
  if (!compatible(f.space(), g.space()))
    throw SpaceMismatchError("sylvester matrix of polynomials over different spaces");
  if (m + n == 0)
    throw PreconditionError("sylvester matrix needs m + n >= 1");
  auto fc = coefficient_vector(f, var, m);
  auto gc = coefficient_vector(g, var, n);
  PolyMatrix s(m + n, m + n, f.space());
  for (unsigned r = 0; r < n; ++r)
    for (unsigned c = 0; c <= m; ++c) s.set(r, r + c, fc[c]);
  for (unsigned r = 0; r < m; ++r)
    for (unsigned c = 0; c <= n; ++c) s.set(n + r, r + c, gc[c]);
  return s;
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var,
                     unsigned m, unsigned n) {
  if (m + n == 0) {
    if (!compatible(f.space(), g.space()))
      throw SpaceMismatchError("resultant of polynomials over different spaces");
    return Polynomial::constant(f.space(), Rat(1));
  }
  return bareiss_determinant(sylvester_matrix(f, g, var, m, n));
}

namespace {

SpacePtr generic_form_space(unsigned n) {
  std::vector<std::string> names{"x"};
  std::vector<long> weights{0};
  for (unsigned i = 0; i <= n; ++i) {
    names.push_back("a" + std::to_string(i));
    weights.push_back(1);
  }
  return VariableSpace::create(std::move(names), std::move(weights));
}

// Substitutes w = 1 by dropping the w exponent.
Polynomial drop_variable(const Polynomial& f, std::size_t var) {
  std::vector<Polynomial::Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.set_exp(var, 0);
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(f.space(), std::move(out));
}

int disc_sign(unsigned n) { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

struct BinaryFormView {
  std::vector<Polynomial> coeffs;  // coeffs[i] multiplies x^i w^(n-i)
  bool all_constant;
};

BinaryFormView split_binary_form(const Polynomial& f, std::size_t x_var,
                                 std::size_t w_var, unsigned n) {
  if (f.is_zero())
    throw PreconditionError("binary discriminant of the zero polynomial");
  for (const auto& t : f.terms())
    if ((unsigned long)t.mono.exp(x_var) + t.mono.exp(w_var) != n)
      throw PreconditionError(
          "binary discriminant: form is not jointly homogeneous of the stated degree");
  BinaryFormView view;
  view.all_constant = true;
  for (unsigned i = 0; i <= n; ++i) {
    std::vector<Polynomial::Term> terms;
    for (const auto& t : f.terms()) {
      if (t.mono.exp(x_var) != i) continue;
      Monomial m = t.mono;
      m.set_exp(x_var, 0);
      m.set_exp(w_var, 0);
      terms.push_back({std::move(m), t.coeff});
    }
    view.coeffs.push_back(Polynomial::from_terms(f.space(), std::move(terms)));
    if (!view.coeffs.back().is_constant()) view.all_constant = false;
  }
  if (view.coeffs[n].is_zero())
    throw PreconditionError("binary discriminant: leading x-coefficient vanishes");
  return view;
}

}  // namespace

const Polynomial& generic_binary_discriminant(unsigned n) {
  if (n < 2) throw PreconditionError("binary discriminant needs degree >= 2");
  static std::mutex mu;
  static std::map<unsigned, Polynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  SpacePtr sp = generic_form_space(n);
  std::size_t x = sp->require_index("x");
  Polynomial f = Polynomial::zero(sp);
  for (unsigned i = 0; i <= n; ++i) {
    Polynomial ai = Polynomial::variable(sp, "a" + std::to_string(i));
    f = f + ai * Polynomial::variable(sp, x, i);
  }
  Polynomial res = resultant(f, f.derivative(x), x, n, n - 1);
  Polynomial lead = Polynomial::variable(sp, "a" + std::to_string(n));
  Polynomial disc = res.exact_div(lead);
  if (disc_sign(n) < 0) disc = -disc;
  return cache.emplace(n, std::move(disc)).first->second;
}

Polynomial binary_discriminant(const Polynomial& f, std::size_t x_var,
                               std::size_t w_var, unsigned n) {
  if (n < 2) throw PreconditionError("binary discriminant needs degree >= 2");
  BinaryFormView view = split_binary_form(f, x_var, w_var, n);

  if (view.all_constant) {
    Polynomial fx = drop_variable(f, w_var);
    Polynomial res = resultant(fx, fx.derivative(x_var), x_var, n, n - 1);
    Polynomial disc = res.exact_div(view.coeffs[n]);
    return disc_sign(n) < 0 ? -disc : disc;
  }

  // Symbolic coefficients: specialize the cached generic discriminant.
  // Substitution into the Sylvester determinant commutes with det, so the
  // value is identical to the direct route.
  const Polynomial& generic = generic_binary_discriminant(n);
  std::vector<std::pair<std::string, Polynomial>> bindings;
  bindings.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i)
    bindings.emplace_back("a" + std::to_string(i), view.coeffs[i]);
  return generic.substitute(bindings, f.space());
}

Polynomial discriminant_via_partials(const Polynomial& f, std::size_t x_var,
                                     std::size_t w_var, unsigned n) {
  if (n < 2) throw PreconditionError("binary discriminant needs degree >= 2");
  split_binary_form(f, x_var, w_var, n);  // validates the form
  Polynomial fx = f.derivative(x_var);
  Polynomial fw = f.derivative(w_var);
  Polynomial fx1 = drop_variable(fx, w_var);
  Polynomial fw1 = drop_variable(fw, w_var);
  return resultant(fx1, fw1, x_var, n - 1, n - 1);
}

Rat partials_discriminant_ratio(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, Rat> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  SpacePtr sp = generic_form_space(n);
  std::size_t x = sp->require_index("x");
  // Build the generic form with an explicit w so both routes apply: use a
  // dedicated space with x and w.
  std::vector<std::string> names{"x", "w"};
  std::vector<long> weights{0, 0};
  for (unsigned i = 0; i <= n; ++i) {
    names.push_back("a" + std::to_string(i));
    weights.push_back(1);
  }
  SpacePtr spw = VariableSpace::create(std::move(names), std::move(weights));
  std::size_t xv = spw->require_index("x"), wv = spw->require_index("w");
  Polynomial f = Polynomial::zero(spw);
  for (unsigned i = 0; i <= n; ++i) {
    Monomial m(spw->size());
    m.set_exp(xv, i);
    m.set_exp(wv, n - i);
    m.set_exp(spw->require_index("a" + std::to_string(i)), 1);
    f = f + Polynomial::monomial_term(spw, std::move(m), Rat(1));
  }
  Polynomial via_partials = discriminant_via_partials(f, xv, wv, n);
  Polynomial disc = binary_discriminant(f, xv, wv, n);
  Polynomial quotient = via_partials.exact_div(disc);
  if (!quotient.is_constant())
    throw Error("partials discriminant ratio is not constant");
  Rat ratio = quotient.constant_value();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, ratio);
  (void)sp;
  (void)x;
  return ratio;
}

}  // namespace orthoforms
