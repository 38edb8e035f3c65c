#pragma once

#include <cstdint>
#include <vector>

#include "orthoforms/polynomial.hpp"

namespace orthoforms {

/// Univariate polynomial over the field with p elements (p an odd or even
/// prime below 2^16 in practice; any prime below 2^31 works). Coefficient
/// c[i] multiplies x^i; the leading coefficient is nonzero and the zero
/// polynomial has an empty vector.
struct ModPPoly {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> c;

  bool is_zero() const { return c.empty(); }
  /// Degree; precondition: not the zero polynomial.
  std::size_t degree() const;
};

ModPPoly modp_trim(ModPPoly g);

/// Coefficient-wise reduction of a univariate polynomial (all exponents
/// outside `var` must be zero). Rational coefficients are mapped through
/// modular inverses; a denominator divisible by p is an error. Leading
/// terms may vanish mod p (degree drop is the caller's concern).
ModPPoly modp_reduce(const Polynomial& f, std::size_t var, std::uint32_t p);

ModPPoly modp_mul(const ModPPoly& a, const ModPPoly& b);
ModPPoly modp_mod(const ModPPoly& a, const ModPPoly& g);
ModPPoly modp_gcd(ModPPoly a, ModPPoly b);
/// x^e modulo g by square and multiply.
ModPPoly modp_pow_x(std::uint64_t e, const ModPPoly& g);

/// Deterministic irreducibility test over F_p: g of degree n >= 1 is
/// irreducible iff x^(p^n) = x mod g and gcd(g, x^(p^(n/q)) - x) = 1 for
/// every prime q dividing n. Frobenius powers are taken by iterated
/// exponentiation.
bool modp_irreducible(const ModPPoly& g);

bool is_prime_u32(std::uint32_t n);

/// The first `count` primes strictly above `lower`.
std::vector<std::uint32_t> primes_above(std::uint32_t lower, std::size_t count);

}  // namespace orthoforms
