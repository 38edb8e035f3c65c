#include "orthoforms/irreducibility.hpp"

#include <json.hpp>

#include "orthoforms/modp.hpp"
#include "orthoforms/rng.hpp"

namespace orthoforms {

namespace {

SpacePtr line_space() {
  static SpacePtr sp = VariableSpace::create_unit({"tau"});
  return sp;
}

std::vector<std::size_t> occurring_variables(const Polynomial& f) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < f.space()->size(); ++v)
    if (f.max_exponent(v) > 0) vars.push_back(v);
  return vars;
}

unsigned long plain_total_degree(const Polynomial& f) {
  unsigned long best = 0;
  for (const auto& t : f.terms()) best = std::max(best, t.mono.total_degree());
  return best;
}

/// f restricted to the affine line: substitute var_k -> offset_k + tau *
/// direction_k for the listed variables (others must not occur).
Polynomial restrict_to_line(const Polynomial& f, const std::vector<std::size_t>& vars,
                            const std::vector<long>& direction,
                            const std::vector<long>& offset) {
  SpacePtr lsp = line_space();
  Polynomial tau = Polynomial::variable(lsp, std::size_t(0));
  std::vector<std::pair<std::string, Polynomial>> bindings;
  bindings.reserve(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    Polynomial image =
        tau.scaled(Rat(direction[k])) + Polynomial::constant(lsp, Rat(offset[k]));
    bindings.emplace_back(f.space()->name(vars[k]), std::move(image));
  }
  return f.substitute(bindings, lsp);
}

void check_preconditions(const Polynomial& f) {
  if (f.is_constant())
    throw PreconditionError("certify: polynomial is constant");
  if (!f.is_quasi_homogeneous())
    throw PreconditionError("certify: polynomial is not quasi-homogeneous");
  for (const auto& t : f.terms())
    if (t.coeff.get_den() != 1)
      throw PreconditionError("certify: polynomial is not primitive (rational coefficients)");
  if (f.content() != 1)
    throw PreconditionError("certify: polynomial is not primitive (content != 1)");
  for (std::size_t v = 0; v < f.space()->size(); ++v)
    if (f.term_count() && f.min_exponent(v) > 0)
      throw PreconditionError("certify: polynomial is divisible by variable " +
                              f.space()->name(v));
}

}  // namespace

Polynomial dehomogenize(const Polynomial& f, std::size_t pivot) {
  if (!f.is_quasi_homogeneous())
    throw PreconditionError("dehomogenize: polynomial is not quasi-homogeneous");
  bool divisible = true;
  try {
    (void)f.exact_div(Polynomial::variable(f.space(), pivot));
  } catch (const NotDivisibleError&) {
    divisible = false;
  }
  if (divisible)
    throw PreconditionError("dehomogenize: polynomial is divisible by the pivot " +
                            f.space()->name(pivot));
  std::vector<Polynomial::Term> out;
  out.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.set_exp(pivot, 0);
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(f.space(), std::move(out));
}

const std::vector<std::uint32_t>& default_certificate_primes() {
  static std::vector<std::uint32_t> primes = primes_above(10000, 40);
  return primes;
}

IrreducibilityCertificate certify_irreducible(
    const Polynomial& f, unsigned attempts, std::uint64_t seed,
    const std::vector<std::uint32_t>& primes) {
  check_preconditions(f);
  if (primes.empty()) throw PreconditionError("certify: empty prime pool");

  const std::size_t pivot = occurring_variables(f).front();
  Polynomial dehom = dehomogenize(f, pivot);
  std::vector<std::size_t> vars = occurring_variables(dehom);
  const unsigned long degree = plain_total_degree(dehom);

  IrreducibilityCertificate cert;
  cert.target_hash = hash_to_hex(f.content_hash());
  cert.pivot = f.space()->name(pivot);
  cert.seed = seed;
  cert.attempts = attempts;
  cert.verdict = "inconclusive";
  cert.attempt_index = attempts;
  for (auto v : vars) cert.line.variables.push_back(f.space()->name(v));

  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    Rng rng(derive_seed(seed, "irreducibility-line", fnv1a64(cert.target_hash) + attempt));
    std::vector<long> direction(vars.size()), offset(vars.size());
    bool all_zero = true;
    do {
      all_zero = true;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        direction[k] = rng.int_in(-20, 20);
        if (direction[k] != 0) all_zero = false;
      }
    } while (all_zero);
    for (std::size_t k = 0; k < vars.size(); ++k) offset[k] = rng.int_in(-20, 20);

    Polynomial restricted = restrict_to_line(dehom, vars, direction, offset);
    if (restricted.is_zero() ||
        restricted.max_exponent(0) != degree)
      continue;  // degree collapsed; proves nothing

    std::uint32_t p = primes[attempt % primes.size()];
    ModPPoly reduced = modp_reduce(restricted, 0, p);
    if (reduced.is_zero() || reduced.degree() != degree)
      continue;  // leading coefficient vanished mod p
    if (!modp_irreducible(reduced)) continue;

    cert.prime = p;
    cert.line.direction = direction;
    cert.line.offset = offset;
    cert.restricted_degree = unsigned(degree);
    cert.attempt_index = attempt;
    cert.verdict = "irreducible";
    return cert;
  }
  return cert;
}

bool replay_certificate(const Polynomial& f, const IrreducibilityCertificate& cert) {
  if (hash_to_hex(f.content_hash()) != cert.target_hash) return false;
  if (!cert.positive()) {
    IrreducibilityCertificate rerun =
        certify_irreducible(f, cert.attempts, cert.seed);
    return rerun.verdict == cert.verdict;
  }
  check_preconditions(f);
  auto pivot_idx = f.space()->index_of(cert.pivot);
  if (!pivot_idx) return false;
  Polynomial dehom = dehomogenize(f, *pivot_idx);
  std::vector<std::size_t> vars;
  for (const auto& name : cert.line.variables) {
    auto idx = f.space()->index_of(name);
    if (!idx) return false;
    vars.push_back(*idx);
  }
  if (cert.line.direction.size() != vars.size() ||
      cert.line.offset.size() != vars.size())
    return false;
  const unsigned long degree = plain_total_degree(dehom);
  if (degree != cert.restricted_degree) return false;
  Polynomial restricted =
      restrict_to_line(dehom, vars, cert.line.direction, cert.line.offset);
  if (restricted.is_zero() || restricted.max_exponent(0) != degree) return false;
  ModPPoly reduced = modp_reduce(restricted, 0, cert.prime);
  if (reduced.is_zero() || reduced.degree() != degree) return false;
  return modp_irreducible(reduced);
}

std::string IrreducibilityCertificate::to_json_text() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["target_hash"] = target_hash;
  j["pivot"] = pivot;
  j["prime"] = prime;
  j["line"] = {{"variables", line.variables},
               {"direction", line.direction},
               {"offset", line.offset}};
  j["restricted_degree"] = restricted_degree;
  j["seed"] = seed;
  j["attempts"] = attempts;
  j["attempt_index"] = attempt_index;
  j["verdict"] = verdict;
  return j.dump(2);
}

IrreducibilityCertificate IrreducibilityCertificate::from_json_text(
    const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  IrreducibilityCertificate cert;
  cert.target_hash = j.at("target_hash").get<std::string>();
  cert.pivot = j.at("pivot").get<std::string>();
  cert.prime = j.at("prime").get<std::uint32_t>();
  cert.line.variables = j.at("line").at("variables").get<std::vector<std::string>>();
  cert.line.direction = j.at("line").at("direction").get<std::vector<long>>();
  cert.line.offset = j.at("line").at("offset").get<std::vector<long>>();
  cert.restricted_degree = j.at("restricted_degree").get<unsigned>();
  cert.seed = j.at("seed").get<std::uint64_t>();
  cert.attempts = j.at("attempts").get<unsigned>();
  cert.attempt_index = j.at("attempt_index").get<unsigned>();
  cert.verdict = j.at("verdict").get<std::string>();
  return cert;
}

}  // namespace orthoforms
