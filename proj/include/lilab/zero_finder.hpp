#pragma once

// Zeros of Hardy's Z(t) on the critical line: Riemann-Siegel evaluation in
// long double, Gram-point / Rosser-block bookkeeping so that no zero is
// skipped, and MPFR refinement of individual ordinates.

#include <cstddef>
#include <vector>

#include "lilab/bigfloat.hpp"
#include "lilab/reduce.hpp"

namespace lilab {

// theta(t) by its asymptotic expansion (t >= 10).
long double rs_theta(long double t);
// Z(t) by the Riemann-Siegel formula with corrections C0..C4 (t >= 10).
long double rs_hardy_z(long double t);

// Correction coefficient C_j(p), j = 0..4, 0 <= p < 1.
long double rs_correction(int j, long double p);

// Gram point g_n: theta(g_n) = n pi, n >= -1.
long double gram_point(long n);

// Ordinates of the first `count` zeros in ascending order. Throws
// non_convergence if a Rosser block cannot be resolved.
std::vector<long double> rs_zeros(std::size_t count, Parallelism par = Parallelism::openmp);

// Refines an approximate ordinate with the MPFR Z(t) (secant steps on a
// bracket of half-width `radius`) until the step is below 2^-(bits - 8).
BigFloat refine_zero(long double approx, long double radius, const PrecisionContext& ctx);

}  // namespace lilab
