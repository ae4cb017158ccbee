#pragma once

// Li coefficients lambda_n = sum_rho [1 - (1 - 1/rho)^n] by three routes:
//   zero_sum  direct sum over the table pairs plus a smooth tail,
//   binomial  lambda_n = -n sum_j ((-1)^j / j) C(n+j-1, 2j-1) Z(j),
//   cauchy    Taylor coefficients of (1-z)^-2 (Xi'/Xi)(1/(1-z)) on |z| = r.

#include <vector>

#include "lilab/bigfloat.hpp"
#include "lilab/numerics.hpp"
#include "lilab/reduce.hpp"
#include "lilab/secondary_zeta.hpp"
#include "lilab/zeros.hpp"

namespace lilab {

enum class LambdaMethod { zero_sum, binomial, cauchy };
const char* to_string(LambdaMethod m);

struct LambdaValue {
  long n = 0;
  ValueWithError value;
  LambdaMethod method = LambdaMethod::zero_sum;
  long bits_used = 0;
};

// ceil(n/2) + 96.
long precision_for(long n);

// Coefficient of Z(j) in lambda_n, j = 1..n.
BigRational binomial_coefficient(long n, long j);

// When the smooth tail exceeds this fraction of lambda_n the whole tail is
// added to abs_error.
inline constexpr double kTailUnreliableFraction = 0.5;

LambdaValue lambda_zero_sum(long n, const ZeroTable& table, const TailModel& tail, const PrecisionContext& ctx,
                            Parallelism par = Parallelism::openmp);
// lambda_n for n = n_from..n_to from one pass over the table.
std::vector<LambdaValue> lambda_zero_sum_range(long n_from, long n_to, const ZeroTable& table, const TailModel& tail,
                                               const PrecisionContext& ctx, Parallelism par = Parallelism::openmp);

// Smooth tail of the zero sum above T, sum_j c_{n,j} times the tail part of
// Z(j); `bound` receives an error allowance for the truncated j series.
BigFloat lambda_tail(long n, const BigFloat& T, int K, mpfr_prec_t prec, BigFloat* bound = nullptr);

// zvals[j-1] = Z(j), j = 1..n at least.
LambdaValue lambda_binomial(long n, const std::vector<ValueWithError>& zvals, const PrecisionContext& ctx);

struct CauchyOptions {
  double radius = 0.9;
  long nodes = 512;   // Q; the estimate uses 2Q nodes and Q for the aliasing check
  long max_n = 32;
};

// (1/Q) sum_q f_q (r w^q)^-k for samples f_q = f(r w^q), w = exp(2 pi i / Q).
BigComplex trapezoid_coefficient(const std::vector<BigComplex>& samples, long k, const BigFloat& radius);

LambdaValue lambda_cauchy(long n, const CauchyOptions& opts, const PrecisionContext& ctx,
                          Parallelism par = Parallelism::openmp);
std::vector<LambdaValue> lambda_cauchy_range(long n_from, long n_to, const CauchyOptions& opts,
                                             const PrecisionContext& ctx, Parallelism par = Parallelism::openmp);

struct ResidueCertificate {
  long n = 0;
  std::vector<BigRational> binomial_side;  // index j - 1
  std::vector<BigRational> residue_side;
  bool equal = false;
};

// Compares, in exact rationals, -2n (-1)^j (n+j-1)! / ((n-j)! (2j)!) with
// -n ((-1)^j / j) C(n+j-1, 2j-1) for j = 1..n.
ResidueCertificate residue_identity_check(long n);

}  // namespace lilab
