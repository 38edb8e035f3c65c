#include "orthoforms/modp.hpp"

namespace orthoforms {

namespace {

std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return std::uint32_t(s >= p ? s - p : s);
}

std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return std::uint32_t((std::uint64_t(a) * b) % p);
}

std::uint32_t powm(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t invm(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0 mod p.
  return powm(a, p - 2, p);
}

}  // namespace

std::size_t ModPPoly::degree() const {
  if (c.empty()) throw PreconditionError("degree of the zero polynomial mod p");
  return c.size() - 1;
}

ModPPoly modp_trim(ModPPoly g) {
  while (!g.c.empty() && g.c.back() == 0) g.c.pop_back();
  return g;
}

ModPPoly modp_reduce(const Polynomial& f, std::size_t var, std::uint32_t p) {
  if (p < 2 || !is_prime_u32(p)) throw PreconditionError("modulus must be prime");
  for (const auto& t : f.terms())
    for (std::size_t v = 0; v < f.space()->size(); ++v)
      if (v != var && t.mono.exp(v))
        throw PreconditionError("mod-p reduction needs a univariate polynomial");
  ModPPoly g;
  g.p = p;
  g.c.assign(f.is_zero() ? 0 : f.max_exponent(var) + 1, 0);
  for (const auto& t : f.terms()) {
    const Rat& q = t.coeff;
    Int num_mod = q.get_num() % p;
    Int den_mod = q.get_den() % p;
    std::uint32_t den = std::uint32_t(den_mod.get_ui());
    if (den == 0)
      throw PreconditionError("coefficient denominator divisible by the modulus");
    Int num_reduced = (num_mod % p + p) % p;
    std::uint32_t num = std::uint32_t(num_reduced.get_ui());
    g.c[t.mono.exp(var)] = mulm(num, invm(den, p), p);
  }
  return modp_trim(std::move(g));
}

ModPPoly modp_mul(const ModPPoly& a, const ModPPoly& b) {
  if (a.p != b.p) throw PreconditionError("mod-p arithmetic with mixed moduli");
  ModPPoly r;
  r.p = a.p;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = addm(r.c[i + j], mulm(a.c[i], b.c[j], r.p), r.p);
  }
  return modp_trim(std::move(r));
}

ModPPoly modp_mod(const ModPPoly& a, const ModPPoly& g) {
  if (a.p != g.p) throw PreconditionError("mod-p arithmetic with mixed moduli");
  if (g.is_zero()) throw PreconditionError("division by zero mod p");
  ModPPoly r = a;
  const std::size_t dg = g.degree();
  std::uint32_t lead_inv = invm(g.c.back(), g.p);
  while (!r.c.empty() && r.c.size() - 1 >= dg && r.c.size() >= g.c.size()) {
    std::size_t shift = r.c.size() - g.c.size();
    std::uint32_t factor = mulm(r.c.back(), lead_inv, r.p);
    if (factor != 0)
      for (std::size_t i = 0; i < g.c.size(); ++i)
        r.c[shift + i] = subm(r.c[shift + i], mulm(factor, g.c[i], r.p), r.p);
    r.c.pop_back();
    r = modp_trim(std::move(r));
  }
  return r;
}

ModPPoly modp_gcd(ModPPoly a, ModPPoly b) {
  if (a.p != b.p) throw PreconditionError("mod-p arithmetic with mixed moduli");
  while (!b.is_zero()) {
    ModPPoly r = modp_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    std::uint32_t inv = invm(a.c.back(), a.p);
    for (auto& ci : a.c) ci = mulm(ci, inv, a.p);
  }
  return a;
}

ModPPoly modp_pow_x(std::uint64_t e, const ModPPoly& g) {
  ModPPoly base;
  base.p = g.p;
  base.c = {0, 1};
  base = modp_mod(base, g);
  ModPPoly result;
  result.p = g.p;
  result.c = {1};
  result = modp_mod(result, g);
  while (e) {
    if (e & 1) result = modp_mod(modp_mul(result, base), g);
    base = modp_mod(modp_mul(base, base), g);
    e >>= 1;
  }
  return result;
}

namespace {

ModPPoly modp_pow_mod(ModPPoly a, std::uint64_t e, const ModPPoly& g) {
  ModPPoly result;
  result.p = g.p;
  result.c = {1};
  result = modp_mod(result, g);
  a = modp_mod(a, g);
  while (e) {
    if (e & 1) result = modp_mod(modp_mul(result, a), g);
    a = modp_mod(modp_mul(a, a), g);
    e >>= 1;
  }
  return result;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool modp_irreducible(const ModPPoly& g) {
  if (g.is_zero() || g.degree() < 1)
    throw PreconditionError("irreducibility test needs degree >= 1");
  const unsigned n = unsigned(g.degree());
  if (n == 1) return true;

  // frob[k] = x^(p^k) mod g via iterated Frobenius.
  std::vector<ModPPoly> frob(n + 1);
  frob[0].p = g.p;
  frob[0].c = {0, 1};
  frob[0] = modp_mod(frob[0], g);
  for (unsigned k = 1; k <= n; ++k)
    frob[k] = modp_pow_mod(frob[k - 1], g.p, g);

  ModPPoly x;
  x.p = g.p;
  x.c = {0, 1};
  x = modp_mod(x, g);

  auto minus_x = [&](const ModPPoly& a) {
    ModPPoly d = a;
    if (d.c.size() < 2) d.c.resize(2, 0);
    d.c[1] = subm(d.c[1], 1, d.p);
    return modp_trim(std::move(d));
  };

  // x^(p^n) must equal x mod g.
  ModPPoly top = minus_x(frob[n]);
  if (!top.is_zero()) return false;
  for (unsigned q : prime_divisors(n)) {
    ModPPoly d = minus_x(frob[n / q]);
    ModPPoly gg = modp_gcd(g, d);
    if (gg.is_zero() || gg.degree() != 0) return false;
  }
  return true;
}

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d : {2u, 3u, 5u, 7u}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> primes_above(std::uint32_t lower, std::size_t count) {
  std::vector<std::uint32_t> out;
  std::uint32_t n = lower;
  while (out.size() < count) {
    ++n;
    if (is_prime_u32(n)) out.push_back(n);
  }
  return out;
}

}  // namespace orthoforms
