#include "orthoforms/polynomial.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace orthoforms {

namespace {

bool term_greater(const Polynomial::Term& a, const Polynomial::Term& b) {
  return Monomial::grevlex_cmp(a.mono, b.mono) > 0;
}

// Packed-exponent fast path for products: one byte per variable.
constexpr std::size_t kPackMaxVars = 8;
constexpr unsigned kPackMaxInputExp = 127;  // sums stay below 256

bool packable(const Polynomial& f) {
  const std::size_t n = f.space()->size();
  if (n > kPackMaxVars) return false;
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono.exp(i) > kPackMaxInputExp) return false;
  return true;
}

std::uint64_t pack(const Monomial& m, std::size_t nvars) {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < nvars; ++i)
    key |= std::uint64_t(m.exp(i) & 0xff) << (8 * i);
  return key;
}

Monomial unpack(std::uint64_t key, std::size_t nvars) {
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    m.set_exp(i, unsigned((key >> (8 * i)) & 0xff));
  return m;
}

}  // namespace

Polynomial Polynomial::constant(SpacePtr space, Rat value) {
  Polynomial p(space);
  if (value != 0)
    p.terms_.push_back({Monomial(space->size()), std::move(value)});
  return p;
}

Polynomial Polynomial::variable(SpacePtr space, std::size_t index, unsigned exp) {
  if (index >= space->size())
    throw PreconditionError("variable index out of range");
  Polynomial p(space);
  if (exp == 0) return constant(std::move(space), Rat(1));
  Monomial m(space->size());
  m.set_exp(index, exp);
  p.terms_.push_back({std::move(m), Rat(1)});
  return p;
}

Polynomial Polynomial::variable(SpacePtr space, std::string_view name, unsigned exp) {
  std::size_t idx = space->require_index(name);
  return variable(std::move(space), idx, exp);
}

Polynomial Polynomial::monomial_term(SpacePtr space, Monomial m, Rat coeff) {
  if (m.nvars() != space->size())
    throw PreconditionError("monomial length does not match space");
  Polynomial p(space);
  if (coeff != 0) p.terms_.push_back({std::move(m), std::move(coeff)});
  return p;
}

Polynomial Polynomial::from_terms(SpacePtr space, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.nvars() != space->size())
      throw PreconditionError("term monomial length does not match space");
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  return from_sorted(std::move(space), std::move(out));
}

Polynomial Polynomial::from_sorted(SpacePtr space, std::vector<Term> sorted_terms) {
  Polynomial p(std::move(space));
  p.terms_ = std::move(sorted_terms);
  return p;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
  return terms_.front();
}

Rat Polynomial::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw PreconditionError("polynomial is not constant");
  return terms_[0].coeff;
}

void Polynomial::assert_same_space(const Polynomial& g) const {
  if (!compatible(space_, g.space_))
    throw SpaceMismatchError("polynomials over different variable spaces");
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono, -t.coeff});
  return from_sorted(space_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  assert_same_space(g);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = Monomial::grevlex_cmp(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(g.terms_[j++]);
    } else {
      Rat s = terms_[i].coeff + g.terms_[j].coeff;
      if (s != 0) out.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) out.push_back(g.terms_[j]);
  return from_sorted(space_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  assert_same_space(g);
  // Heap merge wins when one factor is tiny; results are identical.
  if (std::min(terms_.size(), g.terms_.size()) <= 2)
    return mul_heap_merge(*this, g);
  return mul_schoolbook(*this, g);
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (!compatible(space_, g.space_)) return false;
  if (terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != g.terms_[i].mono || terms_[i].coeff != g.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  if (c == 0) return zero(space_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono, t.coeff * c});
  return from_sorted(space_, std::move(out));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(space_, Rat(1));
  Polynomial base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Polynomial mul_schoolbook(const Polynomial& f, const Polynomial& g) {
  f.assert_same_space(g);
  const SpacePtr& space = f.space();
  if (f.is_zero() || g.is_zero()) return Polynomial::zero(space);
  const std::size_t n = space->size();

  if (packable(f) && packable(g)) {
    std::unordered_map<std::uint64_t, Rat> acc;
    acc.reserve(f.term_count() * 2 + g.term_count());
    std::vector<std::uint64_t> fk(f.term_count()), gk(g.term_count());
    for (std::size_t i = 0; i < f.term_count(); ++i) fk[i] = pack(f.terms()[i].mono, n);
    for (std::size_t j = 0; j < g.term_count(); ++j) gk[j] = pack(g.terms()[j].mono, n);
    Rat prod;
    for (std::size_t i = 0; i < f.term_count(); ++i) {
      const Rat& fc = f.terms()[i].coeff;
      for (std::size_t j = 0; j < g.term_count(); ++j) {
        prod = fc * g.terms()[j].coeff;
        acc[fk[i] + gk[j]] += prod;
      }
    }
    std::vector<Polynomial::Term> out;
    out.reserve(acc.size());
    for (auto& [key, coeff] : acc)
      if (coeff != 0) out.push_back({unpack(key, n), std::move(coeff)});
    std::sort(out.begin(), out.end(), term_greater);
    return Polynomial::from_sorted(space, std::move(out));
  }

  std::map<Monomial, Rat, GrevlexGreater> acc;
  for (const auto& tf : f.terms())
    for (const auto& tg : g.terms()) acc[tf.mono.times(tg.mono)] += tf.coeff * tg.coeff;
  std::vector<Polynomial::Term> out;
  out.reserve(acc.size());
  for (auto& [mono, coeff] : acc)
    if (coeff != 0) out.push_back({mono, std::move(coeff)});
  return Polynomial::from_sorted(space, std::move(out));
}

Polynomial mul_heap_merge(const Polynomial& f, const Polynomial& g) {
  f.assert_same_space(g);
  const SpacePtr& space = f.space();
  if (f.is_zero() || g.is_zero()) return Polynomial::zero(space);
  // Merge the |f| sorted streams term_i(f)*g by leading monomial.
  struct Node {
    Monomial mono;
    std::size_t fi, gj;
  };
  auto node_less = [](const Node& a, const Node& b) {
    return Monomial::grevlex_cmp(a.mono, b.mono) < 0;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(node_less)> heap(node_less);
  for (std::size_t i = 0; i < f.term_count(); ++i)
    heap.push({f.terms()[i].mono.times(g.terms()[0].mono), i, 0});
  std::vector<Polynomial::Term> out;
  while (!heap.empty()) {
    Node top = heap.top();
    heap.pop();
    Rat c = f.terms()[top.fi].coeff * g.terms()[top.gj].coeff;
    if (!out.empty() && out.back().mono == top.mono)
      out.back().coeff += c;
    else
      out.push_back({top.mono, std::move(c)});
    if (out.back().coeff == 0) out.pop_back();
    if (top.gj + 1 < g.term_count())
      heap.push({f.terms()[top.fi].mono.times(g.terms()[top.gj + 1].mono), top.fi,
                 top.gj + 1});
  }
  return Polynomial::from_sorted(space, std::move(out));
}

Polynomial Polynomial::exact_div(const Polynomial& g) const {
  assert_same_space(g);
  if (g.is_zero()) throw DivisionByZeroError();
  if (is_zero()) return zero(space_);

  const Term& lg = g.leading_term();

  // Monomial divisor: per-term exponent subtraction.
  if (g.term_count() == 1) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!lg.mono.divides(t.mono)) throw NotDivisibleError(monomial_term(space_, t.mono, Rat(1)).to_text());
      out.push_back({t.mono.divided_by(lg.mono), t.coeff / lg.coeff});
    }
    return from_sorted(space_, std::move(out));
  }

  std::map<Monomial, Rat, GrevlexGreater> rem;
  for (const auto& t : terms_) rem.emplace(t.mono, t.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    const Monomial& m = it->first;
    if (!lg.mono.divides(m))
      throw NotDivisibleError(monomial_term(space_, m, Rat(1)).to_text());
    Monomial qm = m.divided_by(lg.mono);
    Rat qc = it->second / lg.coeff;
    rem.erase(it);
    for (std::size_t k = 1; k < g.terms_.size(); ++k) {
      Monomial target = qm.times(g.terms_[k].mono);
      auto [pos, inserted] = rem.emplace(target, Rat(0));
      pos->second -= qc * g.terms_[k].coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  // Leading monomials of successive reduction steps strictly decrease, so
  // the quotient is already in descending order.
  return from_sorted(space_, std::move(quotient));
}

std::optional<long> Polynomial::weighted_degree() const {
  return max_weight(space_->weights());
}

bool Polynomial::is_quasi_homogeneous() const {
  if (terms_.empty()) return true;
  long w0 = terms_[0].mono.weighted_degree(space_->weights());
  for (const auto& t : terms_)
    if (t.mono.weighted_degree(space_->weights()) != w0) return false;
  return true;
}

std::optional<long> Polynomial::homogeneous_weight(std::span<const long> weights) const {
  if (terms_.empty()) return std::nullopt;
  long w0 = terms_[0].mono.weighted_degree(weights);
  for (const auto& t : terms_)
    if (t.mono.weighted_degree(weights) != w0)
      throw PreconditionError("polynomial is not homogeneous for the given weights");
  return w0;
}

std::optional<long> Polynomial::max_weight(std::span<const long> weights) const {
  if (terms_.empty()) return std::nullopt;
  long best = terms_[0].mono.weighted_degree(weights);
  for (const auto& t : terms_)
    best = std::max(best, t.mono.weighted_degree(weights));
  return best;
}

std::optional<unsigned long> Polynomial::plain_degree_in(
    std::span<const std::size_t> vars) const {
  if (terms_.empty()) return std::nullopt;
  unsigned long best = 0;
  for (const auto& t : terms_) {
    unsigned long d = 0;
    for (auto v : vars) d += t.mono.exp(v);
    best = std::max(best, d);
  }
  return best;
}

unsigned Polynomial::max_exponent(std::size_t var) const {
  unsigned best = 0;
  for (const auto& t : terms_) best = std::max(best, t.mono.exp(var));
  return best;
}

unsigned Polynomial::min_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  unsigned best = terms_[0].mono.exp(var);
  for (const auto& t : terms_) best = std::min(best, t.mono.exp(var));
  return best;
}

Polynomial Polynomial::coefficient_of(std::size_t var, unsigned e) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exp(var) != e) continue;
    Monomial m = t.mono;
    m.set_exp(var, 0);
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(space_, std::move(out));
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exp(var);
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set_exp(var, e - 1);
    out.push_back({std::move(m), t.coeff * long(e)});
  }
  return from_terms(space_, std::move(out));
}

Polynomial Polynomial::substitute(
    const std::vector<std::pair<std::string, Polynomial>>& bindings,
    SpacePtr target) const {
  const std::size_t n = space_->size();
  std::vector<const Polynomial*> image(n, nullptr);
  std::vector<Polynomial> storage;
  storage.reserve(bindings.size());
  for (const auto& [name, poly] : bindings) {
    space_->require_index(name);
    if (!compatible(poly.space(), target))
      throw SpaceMismatchError("substitution image not over the target space");
    storage.push_back(poly);
  }
  {
    std::size_t k = 0;
    for (const auto& [name, poly] : bindings)
      image[space_->require_index(name)] = &storage[k++];
  }

  // Lazily created identity images for unbound variables.
  std::vector<std::optional<Polynomial>> identity(n);
  auto image_of = [&](std::size_t v) -> const Polynomial& {
    if (image[v]) return *image[v];
    if (!identity[v]) {
      auto idx = target->index_of(space_->name(v));
      if (!idx)
        throw UnboundVariableError("unbound variable " + space_->name(v) +
                                   " has no identity image in target space");
      identity[v] = Polynomial::variable(target, *idx);
    }
    return *identity[v];
  };

  // Memoized powers per variable.
  std::vector<std::map<unsigned, Polynomial>> powers(n);
  auto power_of = [&](std::size_t v, unsigned e) -> const Polynomial& {
    auto& memo = powers[v];
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    return memo.emplace(e, image_of(v).pow(e)).first->second;
  };

  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < n; ++v) {
      unsigned e = t.mono.exp(v);
      if (e == 0) continue;
      term = term * power_of(v, e);
    }
    acc = acc + term;
  }
  return acc;
}

Rat Polynomial::evaluate(std::span<const Rat> point) const {
  if (point.size() != space_->size())
    throw PreconditionError("evaluation point has wrong length");
  const std::size_t n = space_->size();
  std::vector<std::map<unsigned, Rat>> powers(n);
  auto power_of = [&](std::size_t v, unsigned e) -> const Rat& {
    auto& memo = powers[v];
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    return memo.emplace(e, rat_pow(point[v], e)).first->second;
  };
  Rat acc(0);
  for (const auto& t : terms_) {
    Rat val = t.coeff;
    for (std::size_t v = 0; v < n; ++v) {
      unsigned e = t.mono.exp(v);
      if (e) val *= power_of(v, e);
    }
    acc += val;
  }
  return acc;
}

Rat Polynomial::evaluate(const std::vector<std::pair<std::string, Rat>>& point) const {
  std::vector<Rat> vec(space_->size(), Rat(0));
  std::vector<bool> bound(space_->size(), false);
  for (const auto& [name, value] : point) {
    std::size_t idx = space_->require_index(name);
    vec[idx] = value;
    bound[idx] = true;
  }
  for (const auto& t : terms_)
    for (std::size_t v = 0; v < space_->size(); ++v)
      if (t.mono.exp(v) && !bound[v])
        throw PreconditionError("missing binding for variable " + space_->name(v));
  return evaluate(vec);
}

Rat Polynomial::content() const {
  if (terms_.empty())
    throw PreconditionError("content of the zero polynomial is undefined");
  Int num_gcd(0), den_lcm(1);
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  return rat(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive_normal_form() const {
  if (terms_.empty()) return *this;
  Rat c = content();
  if (rat_sign(leading_term().coeff) < 0) c = -c;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono, t.coeff / c});
  return from_sorted(space_, std::move(out));
}

std::uint64_t Polynomial::content_hash() const { return fnv1a64(to_text()); }

}  // namespace orthoforms
