#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orthoforms/monomial.hpp"
#include "orthoforms/rational.hpp"
#include "orthoforms/variable_space.hpp"

namespace orthoforms {

/// Sparse multivariate polynomial with exact rational coefficients over a
/// shared VariableSpace. Terms are kept in strictly descending grevlex
/// order with no zero coefficients, so two polynomials over the same space
/// are equal iff their term lists are identical. Values are immutable after
/// construction and safe to share between threads.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    Rat coeff;
  };

  explicit Polynomial(SpacePtr space) : space_(std::move(space)) {}

  static Polynomial zero(SpacePtr space) { return Polynomial(std::move(space)); }
  static Polynomial constant(SpacePtr space, Rat value);
  static Polynomial variable(SpacePtr space, std::size_t index, unsigned exp = 1);
  static Polynomial variable(SpacePtr space, std::string_view name, unsigned exp = 1);
  static Polynomial monomial_term(SpacePtr space, Monomial m, Rat coeff);
  /// Canonicalizes: merges duplicate monomials, drops zeros, sorts.
  static Polynomial from_terms(SpacePtr space, std::vector<Term> terms);

  const SpacePtr& space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Term& leading_term() const;

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
  }
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rat constant_value() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  Polynomial scaled(const Rat& c) const;
  Polynomial pow(unsigned n) const;

  /// Exact quotient q with *this == q*g. Throws NotDivisibleError (carrying
  /// the remainder's leading monomial) when no such q exists, and
  /// DivisionByZeroError for g == 0. Leading-term reduction in grevlex
  /// order with a final implicit remainder-is-zero guarantee.
  Polynomial exact_div(const Polynomial& g) const;

  /// Max weight-dot-exponent over terms; nullopt for the zero polynomial.
  std::optional<long> weighted_degree() const;
  /// True iff all terms share one weighted degree (zero polynomial: true).
  bool is_quasi_homogeneous() const;

  /// Common weight under an arbitrary signed weight vector. nullopt for the
  /// zero polynomial; PreconditionError when terms disagree.
  std::optional<long> homogeneous_weight(std::span<const long> weights) const;
  /// Max weight under an arbitrary signed weight vector; nullopt for zero.
  std::optional<long> max_weight(std::span<const long> weights) const;

  /// Max joint plain degree over the listed variables; nullopt for zero.
  std::optional<unsigned long> plain_degree_in(std::span<const std::size_t> vars) const;
  unsigned max_exponent(std::size_t var) const;
  /// Min exponent of var across terms (0 for the zero polynomial).
  unsigned min_exponent(std::size_t var) const;

  /// Coefficient of var^e: terms with exponent e in var, with that exponent
  /// removed. Result lives in the same space.
  Polynomial coefficient_of(std::size_t var, unsigned e) const;
  Polynomial derivative(std::size_t var) const;

  /// Simultaneous substitution. Bindings map variable names of this space to
  /// polynomials over the target space; a variable that occurs in f but is
  /// not bound must exist by name in the target space (identity binding),
  /// otherwise UnboundVariableError.
  Polynomial substitute(
      const std::vector<std::pair<std::string, Polynomial>>& bindings,
      SpacePtr target) const;

  /// Exact evaluation; point is indexed by this space. Every variable that
  /// occurs must be covered (the span must have full length).
  Rat evaluate(std::span<const Rat> point) const;
  Rat evaluate(const std::vector<std::pair<std::string, Rat>>& point) const;

  /// Positive rational c with (*this)/c integer-primitive. Throws on zero.
  Rat content() const;
  /// Integer content 1 and positive leading (grevlex) coefficient.
  Polynomial primitive_normal_form() const;

  /// Canonical deterministic text form; see parse() for the grammar.
  std::string to_text() const;
  static Polynomial parse(std::string_view text, SpacePtr space);

  /// FNV-1a over the canonical text form.
  std::uint64_t content_hash() const;

private:
  void assert_same_space(const Polynomial& g) const;
  static Polynomial from_sorted(SpacePtr space, std::vector<Term> sorted_terms);

  friend Polynomial mul_schoolbook(const Polynomial& f, const Polynomial& g);
  friend Polynomial mul_heap_merge(const Polynomial& f, const Polynomial& g);

  SpacePtr space_;
  std::vector<Term> terms_;
};

/// Hash-accumulation product (packed-key fast path when the space fits).
Polynomial mul_schoolbook(const Polynomial& f, const Polynomial& g);
/// Ordered k-way-merge product; identical results by construction.
Polynomial mul_heap_merge(const Polynomial& f, const Polynomial& g);

}  // namespace orthoforms
