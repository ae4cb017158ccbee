#pragma once

// Special functions and exact combinatorics at arbitrary precision.

#include <gmpxx.h>

#include "lilab/bigfloat.hpp"

namespace lilab {

using BigInt = mpz_class;
using BigRational = mpq_class;  // canonicalised by GMP: reduced, positive denominator

BigInt binomial(unsigned long a, unsigned long b);
BigInt factorial(unsigned long n);

BigFloat to_bigfloat(const BigInt& z, mpfr_prec_t prec);
BigFloat to_bigfloat(const BigRational& q, mpfr_prec_t prec);

// B_{2k} for k >= 1, cached per thread and precision.
const BigFloat& bernoulli_2k(long k, mpfr_prec_t prec);

// Principal branch of log Gamma(s). Pole error at non-positive integers.
ComplexValueWithError log_gamma(const BigComplex& s, const PrecisionContext& ctx);

// psi(s) = Gamma'(s)/Gamma(s). Pole error at non-positive integers.
ComplexValueWithError digamma(const BigComplex& s, const PrecisionContext& ctx);

// Largest truncation point zeta_em accepts before giving up.
inline constexpr long kZetaMaxTerms = 4'000'000;

// zeta(s) by Euler-Maclaurin summation with the standard remainder bound.
ComplexValueWithError zeta_em(const BigComplex& s, const PrecisionContext& ctx);

// zeta'(s) by term-wise differentiation of the same Euler-Maclaurin formula.
ComplexValueWithError zeta_derivative(const BigComplex& s, const PrecisionContext& ctx);

// zeta'(s)/zeta(s). Near-zero error when |zeta(s)| does not exceed its bound.
ComplexValueWithError zeta_log_deriv(const BigComplex& s, const PrecisionContext& ctx);

// d/ds log Xi(s) for Xi(s) = s(s-1) Gamma(s/2) pi^(-s/2) zeta(s):
//   1/s + 1/(s-1) + psi(s/2)/2 - log(pi)/2 + zeta'(s)/zeta(s).
ComplexValueWithError xi_log_deriv(const BigComplex& s, const PrecisionContext& ctx);

// Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t.
ValueWithError hardy_z(const BigFloat& t, const PrecisionContext& ctx);
// Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
ValueWithError riemann_siegel_theta(const BigFloat& t, const PrecisionContext& ctx);

}  // namespace lilab
