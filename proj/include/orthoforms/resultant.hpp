#pragma once

#include "orthoforms/poly_matrix.hpp"

namespace orthoforms {

/// Sylvester matrix of f and g regarded as univariate in `var` with declared
/// formal degrees m and n (coefficients in the remaining variables). The
/// first n rows carry f's coefficient vector (leading first, zero-padded to
/// the declared degree), the next m rows carry g's. DegreeError when the
/// actual degree in var exceeds the declared one.
PolyMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g,
                            std::size_t var, unsigned m, unsigned n);

/// bareiss determinant of the Sylvester matrix; 1 when m + n == 0.
Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var,
                     unsigned m, unsigned n);

/// Discriminant of a binary form of joint (x,w)-degree n, normalized as
///   Disc(f) = (-1)^(n(n-1)/2) * Res(f|w=1, d/dx f|w=1) / c_n
/// with c_n the coefficient of x^n. Preconditions: every term has
/// x-exponent + w-exponent = n, and c_n is not identically zero.
/// Symbolic coefficients are routed through a cached generic-coefficient
/// discriminant and substituted; constant coefficients go straight through
/// the Sylvester determinant. Both give identical values.
Polynomial binary_discriminant(const Polynomial& f, std::size_t x_var,
                               std::size_t w_var, unsigned n);

/// Independent discriminant route: Res(df/dx, df/dw) over the binary-form
/// convention. Proportional to binary_discriminant by the constant
/// partials_discriminant_ratio(n).
Polynomial discriminant_via_partials(const Polynomial& f, std::size_t x_var,
                                     std::size_t w_var, unsigned n);

/// Discriminant of the generic degree-n binary form sum a_i x^i w^(n-i),
/// as a polynomial in a_0..a_n (unit weights). Cached per degree.
const Polynomial& generic_binary_discriminant(unsigned n);

/// The nonzero rational with
///   discriminant_via_partials = ratio * binary_discriminant
/// on every degree-n binary form; computed once on the generic form.
Rat partials_discriminant_ratio(unsigned n);

}  // namespace orthoforms
