#include "orthoforms/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <json.hpp>
#include <thread>

#include "orthoforms/group_f2.hpp"
#include "orthoforms/hilbert.hpp"
#include "orthoforms/irreducibility.hpp"
#include "orthoforms/poly_matrix.hpp"
#include "orthoforms/resultant.hpp"
#include "orthoforms/rng.hpp"
#include "orthoforms/symfunc.hpp"
#include "orthoforms/version.hpp"

namespace orthoforms {

using nlohmann::json;

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Inconclusive:
      return "inconclusive";
  }
  return "fail";
}

ArtifactStore::ArtifactStore(CacheConfig cache) : cache_(std::move(cache)) {}

const std::vector<std::string>& ArtifactStore::target_names() {
  static std::vector<std::string> names{"g2", "g3", "h", "r20", "k120", "delta60"};
  return names;
}

const Polynomial& ArtifactStore::get(const std::string& target) {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  return get_locked(target);
}

const Polynomial& ArtifactStore::get_locked(const std::string& target) {
  auto it = memo_.find(target);
  if (it != memo_.end()) return it->second;

  SpacePtr expected = target == "delta60" ? t_space() : uxw_space();
  if (auto cached = cache_load(cache_, target, expected))
    return memo_.emplace(target, std::move(*cached)).first->second;

  Polynomial value = Polynomial::zero(expected);
  if (target == "g2") {
    value = build_g2();
  } else if (target == "g3") {
    value = build_g3();
  } else if (target == "h") {
    value = compute_h();
  } else if (target == "r20") {
    value = compute_r20();
  } else if (target == "k120") {
    value = binary_discriminant(get_locked("h"), uxw_index().x, uxw_index().w, 6);
  } else if (target == "delta60") {
    Polynomial quotient = compute_delta60_u(get_locked("k120"), get_locked("r20"));
    value = rewrite_u_to_ts(quotient, /*verify_roundtrip=*/true).primitive_normal_form();
  } else {
    throw PreconditionError("unknown artifact target " + target);
  }
  cache_store(cache_, target, value);
  return memo_.emplace(target, std::move(value)).first->second;
}

std::map<std::string, std::string> ArtifactStore::hashes() const {
  std::lock_guard<std::recursive_mutex> lock(mutex_);
  std::map<std::string, std::string> out;
  for (const auto& [name, poly] : memo_)
    out.emplace(name, hash_to_hex(poly.content_hash()));
  return out;
}

namespace {

struct CheckContext {
  const VerifyOptions& opts;
  ArtifactStore& store;
};

/// Collects pass/fail evidence inside one check.
class Probe {
public:
  void expect(bool ok, const std::string& claim, const json& counterexample = {}) {
    if (ok) return;
    failed_ = true;
    json entry;
    entry["claim"] = claim;
    if (!counterexample.is_null()) entry["counterexample"] = counterexample;
    failures_.push_back(std::move(entry));
  }

  void note(const std::string& key, json value) { notes_[key] = std::move(value); }

  bool failed() const { return failed_; }

  CheckResult finish(const std::string& name,
                     CheckStatus ok_status = CheckStatus::Pass) const {
    CheckResult r;
    r.name = name;
    r.status = failed_ ? CheckStatus::Fail : ok_status;
    json d = notes_;
    if (failed_) d["failures"] = failures_;
    r.details_json = d.dump();
    return r;
  }

private:
  bool failed_ = false;
  json notes_ = json::object();
  std::vector<json> failures_;
};

Rat nonzero_small_rational(Rng& rng) {
  long num = 0;
  while (num == 0) num = rng.int_in(-9, 9);
  long den = rng.int_in(1, 4);
  return rat(num, den);
}

// ---------------------------------------------------------------- pipeline

CheckResult check_artifacts(const CheckContext& ctx) {
  Probe probe;
  try {
    for (const auto& target : ArtifactStore::target_names()) {
      const Polynomial& value = ctx.store.get(target);
      json info;
      info["hash"] = hash_to_hex(value.content_hash());
      info["terms"] = value.term_count();
      if (auto wd = value.weighted_degree()) info["weighted_degree"] = *wd;
      probe.note(target, info);
    }
  } catch (const FormatError& e) {
    probe.expect(false, "artifact acquisition", {{"error", e.what()}});
  }
  return probe.finish("pipeline.artifacts");
}

CheckResult check_delta20_identity(const CheckContext& ctx) {
  (void)ctx;
  Probe probe;
  InvariantSet inv = invariants_from_u();
  Polynomial lhs = inv.s10.pow(2);
  Polynomial rhs = inv.t10.pow(2) - (inv.t8 * inv.t12).scaled(Rat(4));
  probe.expect(lhs == rhs, "s_10^2 equals t_10^2 - 4 t_8 t_12 in the parameters",
               {{"difference_terms", (lhs - rhs).term_count()}});

  WeierstrassData ones = WeierstrassData::at(
      {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)});
  InvariantSet at_ones = invariants_from_u(ones);
  probe.expect(at_ones.t4.constant_value() == 1 && at_ones.t6.constant_value() == 1 &&
                   at_ones.t8.constant_value() == 1 &&
                   at_ones.t10.constant_value() == 2 &&
                   at_ones.s10.constant_value() == 0 &&
                   at_ones.t12.constant_value() == 1,
               "invariants at the all-ones parameter");
  return probe.finish("pipeline.delta20_identity");
}

CheckResult check_h_division(const CheckContext& ctx) {
  Probe probe;
  const Polynomial& h = ctx.store.get("h");
  const Polynomial& g2 = ctx.store.get("g2");
  const Polynomial& g3 = ctx.store.get("g3");
  Polynomial disc = g2.pow(3).scaled(Rat(4)) + g3.pow(2).scaled(Rat(27));
  SpacePtr sp = uxw_space();
  const UxwIndex& ix = uxw_index();
  Monomial m(sp->size());
  m.set_exp(ix.x, 9);
  m.set_exp(ix.w, 9);
  Polynomial x9w9 = Polynomial::monomial_term(sp, std::move(m), Rat(1));
  probe.expect(disc == x9w9 * h, "4 g2^3 + 27 g3^2 factors as x^9 w^9 times h");
  std::array<std::size_t, 2> xw{ix.x, ix.w};
  auto deg = h.plain_degree_in(xw);
  probe.expect(deg && *deg == 6, "h has joint (x, w) degree 6",
               {{"degree", deg ? long(*deg) : -1}});
  bool pure_sextic = true;
  for (const auto& t : h.terms())
    if (t.mono.exp(ix.x) + t.mono.exp(ix.w) != 6) pure_sextic = false;
  probe.expect(pure_sextic, "h is a binary sextic in (x, w)");
  probe.expect(action_weight(h, TorusAction::Lambda) == 12,
               "h has scaling weight 12");
  probe.note("terms", h.term_count());
  return probe.finish("pipeline.h_division");
}

CheckResult check_r20_closed_form(const CheckContext& ctx) {
  Probe probe;
  const Polynomial& r20 = ctx.store.get("r20");

  // Cofactor-expansion oracle on the same Sylvester matrix.
  SpacePtr sp = uxw_space();
  const UxwIndex& ix = uxw_index();
  Polynomial x = Polynomial::variable(sp, ix.x);
  Polynomial a_quad = Polynomial::variable(sp, ix.u53) * x.pow(2) +
                      Polynomial::variable(sp, ix.u44) * x +
                      Polynomial::variable(sp, ix.u35);
  Polynomial b_quad = Polynomial::variable(sp, ix.u75) * x.pow(2) +
                      Polynomial::variable(sp, ix.u66) * x +
                      Polynomial::variable(sp, ix.u57);
  PolyMatrix syl = sylvester_matrix(a_quad, b_quad, ix.x, 2, 2);
  probe.expect(cofactor_determinant(syl) == r20,
               "fraction-free determinant matches the cofactor oracle");

  auto v = [&](std::size_t i) { return Polynomial::variable(sp, i); };
  Polynomial closed =
      (v(ix.u53) * v(ix.u57) - v(ix.u35) * v(ix.u75)).pow(2) -
      (v(ix.u53) * v(ix.u66) - v(ix.u44) * v(ix.u75)) *
          (v(ix.u44) * v(ix.u57) - v(ix.u35) * v(ix.u66));
  probe.expect(r20 == closed, "closed form of the quadratic resultant");
  probe.expect(action_weight(r20, TorusAction::Lambda) == 20, "weight 20");
  probe.expect(sigma1_swap(r20) == r20, "index-swap invariance");
  Polynomial r20_t = rewrite_u_to_ts(r20, /*verify_roundtrip=*/true);
  probe.expect(r20_t.max_exponent(t_space()->require_index("s_10")) == 0,
               "rewrite to the invariant ring is s_10-free");
  probe.note("r20_t", r20_t.to_text());
  return probe.finish("pipeline.r20_closed_form");
}

CheckResult check_k120_invariance(const CheckContext& ctx) {
  Probe probe;
  const Polynomial& k120 = ctx.store.get("k120");
  auto wd = action_weight(k120, TorusAction::Lambda);
  probe.expect(wd == 120, "weight exactly 120", {{"weight", wd ? *wd : -1}});
  probe.expect(k120.is_quasi_homogeneous(), "quasi-homogeneous");
  auto mu = action_weight(k120, TorusAction::Mu);
  probe.expect(mu == 0, "base-torus invariance");
  probe.expect(sigma1_swap(k120) == k120, "index-swap invariance");
  probe.note("terms", k120.term_count());
  return probe.finish("pipeline.k120_invariance");
}

CheckResult check_k120_specialization(const CheckContext& ctx) {
  Probe probe;
  const Polynomial& k120 = ctx.store.get("k120");
  SpacePtr sp = uxw_space();
  Rng rng(derive_seed(ctx.opts.seed, "k120-specialization"));
  for (unsigned trial = 0; trial < 20; ++trial) {
    std::array<Rat, 6> coords;
    for (auto& c : coords) c = nonzero_small_rational(rng);
    WeierstrassData point = WeierstrassData::at(coords);
    if (!is_valid_parameter(point)) {
      probe.expect(false, "drawn parameter is valid");
      continue;
    }
    // Symbolic route: evaluate the precomputed discriminant.
    std::vector<Rat> full(sp->size(), Rat(1));  // x, w unused (exponent 0)
    const UxwIndex& ix = uxw_index();
    full[ix.u53] = coords[0];
    full[ix.u44] = coords[1];
    full[ix.u35] = coords[2];
    full[ix.u75] = coords[3];
    full[ix.u66] = coords[4];
    full[ix.u57] = coords[5];
    Rat symbolic = k120.evaluate(full);
    // Numeric route: discriminant of the specialized sextic.
    Polynomial h_num = compute_h(point);
    Polynomial disc = binary_discriminant(h_num, ix.x, ix.w, 6);
    Rat numeric = disc.constant_value();
    probe.expect(symbolic == numeric,
                 "specialize-then-discriminant equals discriminant-then-specialize",
                 {{"trial", trial},
                  {"symbolic", rat_to_string(symbolic)},
                  {"numeric", rat_to_string(numeric)}});
  }
  return probe.finish("pipeline.k120_specialization");
}

CheckResult check_delta60_division(const CheckContext& ctx) {
  Probe probe;
  const Polynomial& k120 = ctx.store.get("k120");
  const Polynomial& r20 = ctx.store.get("r20");
  const Polynomial& published = ctx.store.get("delta60");

  Polynomial quotient = compute_delta60_u(k120, r20);
  probe.expect(k120 == r20.pow(3) * quotient, "re-multiplication witness");
  probe.expect(action_weight(quotient, TorusAction::Lambda) == 60,
               "quotient has weight 60");

  Polynomial rewritten = rewrite_u_to_ts(quotient, /*verify_roundtrip=*/true);
  std::size_t s10 = t_space()->require_index("s_10");
  probe.expect(rewritten.max_exponent(s10) == 0, "rewrite is s_10-free");
  probe.expect(rewritten.weighted_degree() == 60, "invariant-ring weight 60");

  Polynomial primitive = rewritten.primitive_normal_form();
  probe.expect(primitive == published,
               "published artifact is the primitive normal form",
               {{"published_hash", hash_to_hex(published.content_hash())},
                {"recomputed_hash", hash_to_hex(primitive.content_hash())}});
  probe.expect(primitive.content() == 1 &&
                   rat_sign(primitive.leading_term().coeff) > 0,
               "primitive normalization (content 1, positive leading coefficient)");
  Rat content = rewritten.leading_term().coeff / primitive.leading_term().coeff;
  probe.note("normalization_constant", rat_to_string(content));
  probe.note("terms", primitive.term_count());

  // Double-entry bookkeeping: the identity must also hold after rewriting
  // both sides into the invariant ring.
  Polynomial k120_t = rewrite_u_to_ts(k120);
  Polynomial r20_t = rewrite_u_to_ts(r20);
  probe.expect(k120_t == r20_t.pow(3) * rewritten,
               "identity re-verified in the invariant ring");
  return probe.finish("pipeline.delta60_division");
}

CheckResult check_delta60_nondegenerate(const CheckContext& ctx) {
  Probe probe;
  const Polynomial& delta60 = ctx.store.get("delta60");
  SpacePtr sp = delta60.space();
  for (const char* name : {"t_4", "t_6", "t_8", "t_10", "t_12"}) {
    bool divisible = true;
    try {
      (void)delta60.exact_div(Polynomial::variable(sp, name));
    } catch (const NotDivisibleError&) {
      divisible = false;
    }
    probe.expect(!divisible, std::string("not divisible by ") + name);
  }

  // Squarefreeness of a random line restriction rules out a perfect square.
  Rng rng(derive_seed(ctx.opts.seed, "delta60-line"));
  SpacePtr line = VariableSpace::create_unit({"tau"});
  bool squarefree_found = false;
  for (unsigned attempt = 0; attempt < 5 && !squarefree_found; ++attempt) {
    std::vector<std::pair<std::string, Polynomial>> bindings;
    for (std::size_t v = 0; v < sp->size(); ++v) {
      if (sp->name(v) == "s_10") {
        bindings.emplace_back(sp->name(v), Polynomial::zero(line));
        continue;
      }
      Polynomial image = Polynomial::variable(line, std::size_t(0))
                             .scaled(Rat(rng.int_in(-20, 20))) +
                         Polynomial::constant(line, Rat(rng.int_in(-20, 20)));
      bindings.emplace_back(sp->name(v), std::move(image));
    }
    Polynomial restricted = delta60.substitute(bindings, line);
    if (restricted.is_zero()) continue;
    unsigned d = restricted.max_exponent(0);
    if (d < 2) continue;
    Polynomial res = resultant(restricted, restricted.derivative(0), 0, d, d - 1);
    if (!res.is_zero()) squarefree_found = true;
  }
  probe.expect(squarefree_found, "a random line restriction is squarefree");
  return probe.finish("pipeline.delta60_nondegenerate");
}

CheckResult check_delta60_irreducible(const CheckContext& ctx) {
  Probe probe;
  const Polynomial& delta60 = ctx.store.get("delta60");
  IrreducibilityCertificate cert = certify_irreducible(
      delta60, ctx.opts.attempts, derive_seed(ctx.opts.seed, "delta60-irreducible"));
  probe.note("certificate", json::parse(cert.to_json_text()));
  if (!cert.positive()) {
    CheckResult r = probe.finish("pipeline.delta60_irreducible");
    r.status = CheckStatus::Inconclusive;
    return r;
  }
  probe.expect(replay_certificate(delta60, cert), "certificate replays");
  return probe.finish("pipeline.delta60_irreducible");
}

// ------------------------------------------------------------------- rings

CheckResult hilbert_check(const std::string& name, const WeightedPresentation& p,
                          unsigned truncate) {
  Probe probe;
  PowerSeries rational = hilbert_from_rational(p, truncate);
  PowerSeries counting = hilbert_from_counting(p, truncate);
  bool equal = series_equal(rational, counting);
  json payload;
  if (!equal) {
    payload["rational"] = rational.c;
    payload["counting"] = counting.c;
  }
  probe.expect(equal, "rational expansion equals the counting oracle", payload);
  probe.expect(rational.c.at(0) == 1, "constant coefficient 1");
  bool nonneg = true;
  for (long long c : rational.c)
    if (c < 0) nonneg = false;
  probe.expect(nonneg, "all coefficients nonnegative");
  return probe.finish(name);
}

CheckResult check_hilbert_characters(const CheckContext& ctx) {
  return hilbert_check("rings.hilbert_characters", characters_ring_presentation(),
                       ctx.opts.truncate);
}

CheckResult check_hilbert_gamma1(const CheckContext& ctx) {
  return hilbert_check("rings.hilbert_gamma1", gamma1_ring_presentation(),
                       ctx.opts.truncate);
}

CheckResult check_hilbert_vinberg(const CheckContext& ctx) {
  return hilbert_check("rings.hilbert_vinberg", vinberg_ring_presentation(),
                       ctx.opts.truncate);
}

CheckResult check_character_factorization(const CheckContext& ctx) {
  Probe probe;
  probe.expect(character_factor_check(ctx.opts.truncate),
               "character series factors as base series times (1+T^4)(1+T^30)");
  return probe.finish("rings.character_factorization");
}

// ------------------------------------------------------------------- group

CheckResult check_form_preservation(const CheckContext& ctx) {
  (void)ctx;
  Probe probe;
  MatrixF2 gram = gram_uu();
  auto gens = sp4_f2_generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    probe.expect(preserves_form(gens[i], gram),
                 "generator " + std::to_string(i + 1) + " preserves the form");
  GroupClosure closure = generate_group(gens);
  bool all = true;
  for (std::uint64_t code : closure.elements)
    if (!preserves_form(MatrixF2::decode(code, 4), gram)) all = false;
  probe.expect(all, "every closure element preserves the form");
  return probe.finish("group.form_preservation");
}

CheckResult check_group_order(const CheckContext& ctx) {
  (void)ctx;
  Probe probe;
  GroupClosure closure = generate_group(sp4_f2_generators());
  probe.expect(closure.order == 720, "closure order 720",
               {{"order", closure.order}});
  probe.expect(s6_signature_check(closure),
               "element-order histogram matches the symmetric group on six letters");
  json hist = json::object();
  for (const auto& [order, count] : closure.order_histogram)
    hist[std::to_string(order)] = count;
  probe.note("histogram", hist);
  return probe.finish("group.sp4_order_s6_histogram");
}

CheckResult check_extension_order(const CheckContext& ctx) {
  (void)ctx;
  Probe probe;
  auto gens = extended_generators_6();
  GroupClosure closure = generate_group(gens);
  probe.expect(closure.order == 1440, "extended closure order 1440",
               {{"order", closure.order}});
  MatrixF2 central = MatrixF2::direct_sum(MatrixF2::identity(4), hyperbolic_plane());
  bool commutes = true;
  for (const auto& g : gens)
    if (!(central * g == g * central)) commutes = false;
  probe.expect(commutes, "I_4 + U is central among the generators");
  MatrixF2 sq = central * central;
  probe.expect(sq == MatrixF2::identity(6), "I_4 + U has order 2");
  return probe.finish("group.extension_order");
}

// ----------------------------------------------------------------- symfunc

CheckResult check_igusa(const CheckContext& ctx) {
  Probe probe;
  probe.expect(igusa_member({Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(0), Rat(0)}),
               "(1,1,-1,-1,0,0) lies on the quartic");
  probe.expect(!igusa_member({Rat(1), Rat(-1), Rat(0), Rat(0), Rat(0), Rat(0)}),
               "(1,-1,0,0,0,0) does not");
  probe.expect(igusa_member({Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}),
               "the origin lies on the quartic");
  Rng rng(derive_seed(ctx.opts.seed, "igusa-symmetry"));
  for (unsigned trial = 0; trial < 10; ++trial) {
    SixPoint p;
    for (auto& c : p) c = rat(rng.int_in(-6, 6), rng.int_in(1, 3));
    bool base = igusa_member(p);
    SixPoint swapped = p;
    std::swap(swapped[std::size_t(rng.below(6))], swapped[std::size_t(rng.below(6))]);
    probe.expect(igusa_member(swapped) == base, "permutation invariance");
    SixPoint negated;
    for (std::size_t i = 0; i < 6; ++i) negated[i] = -p[i];
    probe.expect(igusa_member(negated) == base, "sign-flip invariance");
  }
  return probe.finish("symfunc.igusa_quartic");
}

CheckResult check_newton(const CheckContext& ctx) {
  Probe probe;
  Rng rng(derive_seed(ctx.opts.seed, "newton-identities"));
  for (unsigned trial = 0; trial < 10; ++trial) {
    SixPoint p;
    for (auto& c : p) c = rat(rng.int_in(-8, 8), rng.int_in(1, 3));
    // p_k = sum_{i<k} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k
    for (unsigned k = 1; k <= 6; ++k) {
      Rat rhs(0);
      for (unsigned i = 1; i < k; ++i) {
        Rat term = elementary_symmetric(p, i) * power_sum(p, k - i);
        rhs += (i % 2 == 1) ? term : -term;
      }
      Rat last = elementary_symmetric(p, k) * long(k);
      rhs += (k % 2 == 1) ? last : -last;
      probe.expect(power_sum(p, k) == rhs, "identity at index " + std::to_string(k));
    }
  }
  return probe.finish("symfunc.newton_identities");
}

CheckResult check_vandermonde(const CheckContext& ctx) {
  Probe probe;
  SixPoint canonical{Rat(0), Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)};
  Rat frozen = rat(34560) * rat(34560);
  probe.expect(vandermonde_disc(canonical) == frozen,
               "product at (0,1,2,3,4,5) is 34560^2");
  probe.expect(monic_from_roots_disc(canonical) == frozen,
               "elimination route at (0,1,2,3,4,5) is 34560^2");
  Rng rng(derive_seed(ctx.opts.seed, "vandermonde-cross"));
  for (unsigned trial = 0; trial < 20; ++trial) {
    SixPoint p;
    for (auto& c : p) c = rat(rng.int_in(-12, 12), rng.int_in(1, 4));
    Rat direct = vandermonde_disc(p);
    Rat via_resultant = monic_from_roots_disc(p);
    probe.expect(direct == via_resultant, "routes agree",
                 {{"trial", trial},
                  {"direct", rat_to_string(direct)},
                  {"resultant", rat_to_string(via_resultant)}});
  }
  return probe.finish("symfunc.vandermonde_cross_check");
}

using CheckFn = std::function<CheckResult(const CheckContext&)>;

const std::vector<std::pair<std::string, CheckFn>>& check_registry() {
  static std::vector<std::pair<std::string, CheckFn>> registry = {
      {"pipeline.artifacts", check_artifacts},
      {"pipeline.delta20_identity", check_delta20_identity},
      {"pipeline.delta60_division", check_delta60_division},
      {"pipeline.delta60_irreducible", check_delta60_irreducible},
      {"pipeline.delta60_nondegenerate", check_delta60_nondegenerate},
      {"pipeline.h_division", check_h_division},
      {"pipeline.k120_invariance", check_k120_invariance},
      {"pipeline.k120_specialization", check_k120_specialization},
      {"pipeline.r20_closed_form", check_r20_closed_form},
      {"rings.character_factorization", check_character_factorization},
      {"rings.hilbert_characters", check_hilbert_characters},
      {"rings.hilbert_gamma1", check_hilbert_gamma1},
      {"rings.hilbert_vinberg", check_hilbert_vinberg},
      {"group.extension_order", check_extension_order},
      {"group.form_preservation", check_form_preservation},
      {"group.sp4_order_s6_histogram", check_group_order},
      {"symfunc.igusa_quartic", check_igusa},
      {"symfunc.newton_identities", check_newton},
      {"symfunc.vandermonde_cross_check", check_vandermonde},
  };
  return registry;
}

}  // namespace

std::vector<std::string> suite_check_names(const std::vector<std::string>& suites) {
  bool all = false;
  for (const auto& s : suites)
    if (s == "all") all = true;
  auto selected = [&](const std::string& name) {
    if (all) return true;
    for (const auto& s : suites)
      if (name.rfind(s + ".", 0) == 0) return true;
    return false;
  };
  for (const auto& s : suites)
    if (s != "all" && s != "pipeline" && s != "rings" && s != "group" &&
        s != "symfunc")
      throw PreconditionError("unknown suite " + s);
  std::vector<std::string> names;
  for (const auto& [name, fn] : check_registry())
    if (selected(name)) names.push_back(name);
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const VerifyOptions& opts, ArtifactStore& store) {
  std::vector<CheckFn> fns;
  for (const auto& name : names) {
    bool found = false;
    for (const auto& [n, fn] : check_registry()) {
      if (n == name) {
        fns.push_back(fn);
        found = true;
        break;
      }
    }
    if (!found) throw PreconditionError("unknown check " + name);
  }

  std::vector<CheckResult> results(names.size());
  std::atomic<std::size_t> next{0};
  unsigned jobs = opts.jobs ? opts.jobs : 2;
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(names.size(), 1));

  CheckContext ctx{opts, store};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= names.size()) return;
      auto start = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = fns[i](ctx);
      } catch (const std::exception& e) {
        r.name = names[i];
        r.status = CheckStatus::Fail;
        json failure;
        failure["claim"] = "check completed";
        failure["counterexample"] = json{{"error", e.what()}};
        json d;
        d["failures"] = json::array({failure});
        r.details_json = d.dump();
      }
      r.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
      results[i] = std::move(r);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return results;
}

bool all_passed(const std::vector<CheckResult>& results, bool allow_inconclusive) {
  for (const auto& r : results) {
    if (r.status == CheckStatus::Fail) return false;
    if (r.status == CheckStatus::Inconclusive && !allow_inconclusive) return false;
  }
  return true;
}

std::string verification_report_json(const std::vector<CheckResult>& results,
                                     const VerifyOptions& opts,
                                     const std::vector<std::string>& suites,
                                     const ArtifactStore& store) {
  json j;
  j["schema"] = 1;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["suites"] = suites;
  j["options"] = {{"seed", opts.seed},
                  {"attempts", opts.attempts},
                  {"truncate", opts.truncate},
                  {"allow_inconclusive", opts.allow_inconclusive}};
  json checks = json::array();
  for (const auto& r : results) {
    json c;
    c["name"] = r.name;
    c["status"] = check_status_name(r.status);
    c["details"] = json::parse(r.details_json.empty() ? "{}" : r.details_json);
    if (opts.timings) c["wall_time_ms"] = long(r.wall_seconds * 1000.0);
    checks.push_back(std::move(c));
  }
  j["checks"] = checks;
  j["artifact_hashes"] = store.hashes();
  return j.dump(2) + "\n";
}

}  // namespace orthoforms
