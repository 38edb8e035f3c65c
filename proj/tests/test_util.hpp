#pragma once

#include "orthoforms/polynomial.hpp"
#include "orthoforms/rng.hpp"

namespace orthoforms::testutil {

inline SpacePtr xy_space() {
  static SpacePtr sp = VariableSpace::create_unit({"x", "y"});
  return sp;
}

inline SpacePtr x_space() {
  static SpacePtr sp = VariableSpace::create_unit({"x"});
  return sp;
}

inline Polynomial random_poly(const SpacePtr& sp, std::size_t max_terms,
                              unsigned max_exp, Rng& rng) {
  std::vector<Polynomial::Term> terms;
  std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < n; ++t) {
    Monomial m(sp->size());
    for (std::size_t v = 0; v < sp->size(); ++v)
      m.set_exp(v, unsigned(rng.below(max_exp + 1)));
    long num = rng.int_in(-30, 30);
    if (num == 0) num = 7;
    terms.push_back({std::move(m), rat(num, rng.int_in(1, 5))});
  }
  return Polynomial::from_terms(sp, std::move(terms));
}

/// Product by repeated addition of scaled-and-shifted copies; independent
/// of the kernel's accumulation strategies.
inline Polynomial mul_naive(const Polynomial& f, const Polynomial& g) {
  Polynomial acc = Polynomial::zero(f.space());
  for (const auto& tf : f.terms()) {
    std::vector<Polynomial::Term> shifted;
    for (const auto& tg : g.terms())
      shifted.push_back({tf.mono.times(tg.mono), tf.coeff * tg.coeff});
    acc = acc + Polynomial::from_terms(f.space(), std::move(shifted));
  }
  return acc;
}

}  // namespace orthoforms::testutil
