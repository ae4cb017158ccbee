#pragma once

// Secondary zeta function Z(sigma) = sum_k x_k^-sigma over the zero table,
// completed above a cutoff T by the smooth zero density
//   N'(t) = alpha log t + beta,  alpha = 1/2pi,  beta = -log(2pi)/2pi.

#include <vector>

#include "lilab/bigfloat.hpp"
#include "lilab/reduce.hpp"
#include "lilab/zeros.hpp"

namespace lilab {

struct PolarData {
  BigFloat R_minus2;
  BigFloat R_minus1;
};

struct TailModel {
  BigFloat cutoff;             // zero: midway between the last two ordinates
  int expansion_order = 8;     // K
  double window_lo = 0.6;      // averaging window [window_lo T, window_hi T]
  double window_hi = 1.0;
  int window_cutoffs = 32;

  // Cutoff for `table`; Error(precondition) if it is not below the last ordinate.
  BigFloat resolve_cutoff(const ZeroTable& table, mpfr_prec_t prec) const;
  void validate() const;
};

// Number of table entries with tau <= T.
std::size_t zeros_below(const ZeroTable& table, const BigFloat& T);

// Closed-form tail sum_{m<K} binom(-sigma, m) 4^-m I(2 sigma + 2m) with
//   I(p) = int_T^oo t^-p (alpha log t + beta) dt
//        = T^(1-p)/(p-1) (alpha log T + beta + alpha/(p-1)).
// `next_term` receives |term m = K|. Pole error at sigma = 1/2 - m.
BigComplex tail_integral(const BigComplex& sigma, const BigFloat& T, int K, mpfr_prec_t prec,
                         BigFloat* next_term = nullptr);

// Z(sigma) for complex sigma, Re sigma > 1/2 (or any sigma off the poles when
// `continuation` is set). Synthetic tables are summed directly with no tail.
ComplexValueWithError z_eval(const BigComplex& sigma, const ZeroTable& table, const TailModel& tail,
                             const PrecisionContext& ctx, bool continuation = false,
                             Parallelism par = Parallelism::openmp);

// Z(j) at a positive integer j.
ValueWithError z_integer(long j, const ZeroTable& table, const TailModel& tail, const PrecisionContext& ctx,
                         Parallelism par = Parallelism::openmp);

// Z(1) .. Z(jmax) from one pass over the table; element j-1 holds Z(j).
std::vector<ValueWithError> z_integers(long jmax, const ZeroTable& table, const TailModel& tail,
                                       const PrecisionContext& ctx, Parallelism par = Parallelism::openmp);

// Continued value for real sigma in (-1/4, 1/2), averaged over the cutoffs of
// the tail's window, each placed midway between consecutive ordinates.
ValueWithError z_continued(const BigFloat& sigma, const ZeroTable& table, const TailModel& tail,
                           const PrecisionContext& ctx, Parallelism par = Parallelism::openmp);

// Laurent coefficients of the tail at sigma = 1/2, from the m = 0 term with
// T kept symbolic until the log T contributions cancel.
PolarData polar_coefficients(const TailModel& tail, const PrecisionContext& ctx);

}  // namespace lilab
