#pragma once

// Large-n forms of lambda_n and the saddle points behind them.
//   RH true:   lambda_n ~ 2 pi n [2 R_-2 log n - 2 R_-2 (1 - gamma) + R_-1]
//              (Riemann: n/2 (log n - log 2pi - 1 + gamma)), optionally + 7/4.
//   RH false:  lambda_n ~ sum_{arg tau > 0} ((tau + i/2)/(tau - i/2))^n + c.c.

#include <vector>

#include "lilab/bigfloat.hpp"
#include "lilab/reduce.hpp"
#include "lilab/secondary_zeta.hpp"
#include "lilab/zeros.hpp"

namespace lilab {

enum class PredictorKind { rh_true_general, rh_true_riemann, rh_false };
const char* to_string(PredictorKind k);

struct Predictor {
  PredictorKind kind = PredictorKind::rh_true_riemann;
  PolarData polar;                  // rh_true_general
  std::vector<BigComplex> off_axis; // rh_false
  bool include_delta = false;       // + 2 Z(0) = 7/4

  void validate() const;
  BigFloat evaluate(long n, const PrecisionContext& ctx) const;
};

// 2Z(0) = 7/4.
BigFloat delta_term(mpfr_prec_t prec);

BigFloat predict_rh_true_general(long n, const PolarData& polar, const PrecisionContext& ctx,
                                 bool include_delta = false);
BigFloat predict_riemann(long n, const PrecisionContext& ctx, bool include_delta = false);

struct RhFalsePrediction {
  BigFloat value;                     // real: each term plus its conjugate
  std::vector<BigFloat> growth_rates; // log |(tau + i/2)/(tau - i/2)| per tau
  std::vector<BigFloat> onsets;       // 1/|Im(1/tau)| per tau
  BigFloat n_onset;                   // smallest onset
};

// Every tau needs Im tau > 0. Purely imaginary tau are their own conjugate
// partner and enter once.
RhFalsePrediction predict_rh_false(long n, const std::vector<BigComplex>& off_axis, const PrecisionContext& ctx);

struct SaddleReal {
  long n = 0;
  BigFloat sigma;
  BigFloat deviation;  // (sigma - 1/2) log n
  BigFloat log_modulus;
};

// Minimiser over (1/2 + margin, 1 - margin) of
//   log pi - log sin(pi s) - log Gamma(2s + 1) + (2s - 1) log n + log Z(s)
// by golden section. Error(no_interior_minimum) when it sits on the bracket.
SaddleReal saddle_real(long n, const ZeroTable& table, const TailModel& tail, const PrecisionContext& ctx,
                       double tolerance = 1e-8, double margin = 1e-3);

struct SaddleComplex {
  BigComplex sigma;      // n i / (2 tau)
  bool eligible = false; // n |Im(1/tau)| > 1
  bool in_domain = false;// Re sigma > 1/2
};

SaddleComplex saddle_complex(long n, const BigComplex& tau, const PrecisionContext& ctx);

// Real ordinate whose factor (t + i/2)/(t - i/2) has the same argument as
// that of tau: the on-axis counterpart of an off-axis zero.
BigFloat on_axis_twin(const BigComplex& tau, mpfr_prec_t prec);

struct GrowthFit {
  BigFloat rate;             // log of the largest root modulus, per unit n
  BigFloat phase;            // its argument, per unit n
  std::vector<BigComplex> roots;  // per stride
  long stride = 1;
  std::size_t samples = 0;
  int order = 0;
  BigFloat residual;         // relative least-squares residual
};

// Linear-prediction fit of v[i] (i = 0.. at unit spacing in n) sampled every
// `stride` entries, with `order` exponentials: least-squares recurrence
// coefficients, then the roots of its characteristic polynomial.
GrowthFit fit_growth_rate(const std::vector<BigFloat>& v, int order, long stride, mpfr_prec_t prec);
// Smallest order up to max_order whose residual is at rounding level, else
// the order with the least residual.
GrowthFit fit_growth_rate_auto(const std::vector<BigFloat>& v, int max_order, long stride, mpfr_prec_t prec);

}  // namespace lilab
