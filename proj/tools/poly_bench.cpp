// Micro-benchmark comparing the two product strategies on random sparse
// polynomials. The strategies must agree exactly; the timing difference
// drives the dispatch heuristic in operator*.

#include <chrono>
#include <iostream>

#include "orthoforms/polynomial.hpp"
#include "orthoforms/rng.hpp"

namespace of = orthoforms;

namespace {

of::Polynomial random_poly(const of::SpacePtr& sp, std::size_t terms,
                           unsigned max_exp, of::Rng& rng) {
  std::vector<of::Polynomial::Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    of::Monomial m(sp->size());
    for (std::size_t v = 0; v < sp->size(); ++v)
      m.set_exp(v, unsigned(rng.below(max_exp + 1)));
    long c = rng.int_in(-50, 50);
    if (c == 0) c = 1;
    out.push_back({std::move(m), of::Rat(c)});
  }
  return of::Polynomial::from_terms(sp, std::move(out));
}

template <typename F>
double time_ms(F&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main() {
  of::SpacePtr sp = of::VariableSpace::create_unit({"x", "y", "z", "u"});
  of::Rng rng(12345);
  std::cout << "terms_f terms_g schoolbook_ms heapmerge_ms equal\n";
  for (std::size_t nf : {20, 100, 400, 1500}) {
    for (std::size_t ng : {4, 100, 1500}) {
      of::Polynomial f = random_poly(sp, nf, 12, rng);
      of::Polynomial g = random_poly(sp, ng, 12, rng);
      of::Polynomial a =
          of::Polynomial::zero(sp), b = of::Polynomial::zero(sp);
      double ts = time_ms([&] { a = of::mul_schoolbook(f, g); });
      double th = time_ms([&] { b = of::mul_heap_merge(f, g); });
      std::cout << f.term_count() << " " << g.term_count() << " " << ts << " "
                << th << " " << (a == b ? "yes" : "NO") << "\n";
    }
  }
  return 0;
}
