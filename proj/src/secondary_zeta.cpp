#include "lilab/secondary_zeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lilab/errors.hpp"

namespace lilab {

namespace {

BigFloat alpha_of(mpfr_prec_t prec) { return BigFloat(1, prec) / (BigFloat::pi(prec) * 2); }

BigFloat beta_of(mpfr_prec_t prec) {
  const BigFloat two_pi = BigFloat::pi(prec) * 2;
  return -log(two_pi) / two_pi;
}

struct ComplexAcc {
  BigComplex sum;
  BigFloat abs_sum;
  BigFloat propagation;  // sum of |d term / d tau| dtau
};

bool is_pole(const BigComplex& sigma, int K) {
  if (!sigma.im.is_zero()) return false;
  for (int m = 0; m < K; ++m)
    if (sigma.re == BigFloat(0.5 - m, 64)) return true;
  return false;
}

// Direct finite sum over a synthetic table, conjugate partners included.
ComplexValueWithError synthetic_sum(const BigComplex& sigma, const ZeroTable& table, mpfr_prec_t wp) {
  BigComplex sum(wp);
  BigFloat abs_sum(wp);
  for (const ZeroPair& p : table.pairs()) {
    const BigComplex x = p.x(wp);
    BigComplex term = exp(-(BigComplex(sigma, wp) * log(x)));
    abs_sum += abs(term);
    if (p.with_conjugate) {
      BigComplex partner = exp(-(BigComplex(sigma, wp) * log(conj(x))));
      abs_sum += abs(partner);
      term += partner;
    }
    sum += term;
  }
  const long ops = 16 + static_cast<long>(2 * table.size());
  return {sum, rounding_bound(abs_sum, wp, ops), ErrorKind::rigorous};
}

}  // namespace

std::size_t zeros_below(const ZeroTable& table, const BigFloat& T) {
  const auto& pairs = table.pairs();
  auto it = std::upper_bound(pairs.begin(), pairs.end(), T,
                             [](const BigFloat& t, const ZeroPair& p) { return t < p.tau.re; });
  return static_cast<std::size_t>(it - pairs.begin());
}

void TailModel::validate() const {
  if (expansion_order < 1) throw Error(ErrorCode::precondition, "tail expansion order K must be >= 1");
  if (window_cutoffs < 1) throw Error(ErrorCode::precondition, "averaging needs at least one cutoff");
  if (!(window_lo > 0 && window_lo <= window_hi && window_hi <= 1))
    throw Error(ErrorCode::precondition, "averaging window must satisfy 0 < lo <= hi <= 1");
}

BigFloat TailModel::resolve_cutoff(const ZeroTable& table, mpfr_prec_t prec) const {
  if (table.empty()) throw Error(ErrorCode::precondition, "empty zero table");
  const BigFloat last(table.pairs().back().tau.re, prec);
  if (cutoff.is_zero()) {
    if (table.size() < 2) throw Error(ErrorCode::precondition, "default cutoff needs two ordinates");
    return (BigFloat(table[table.size() - 2].tau.re, prec) + last) / 2;
  }
  if (cutoff.sign() <= 0) throw Error(ErrorCode::precondition, "tail cutoff must be positive");
  if (!(cutoff < last))
    throw Error(ErrorCode::precondition,
                "tail cutoff " + cutoff.to_string(12) + " is not below the last ordinate " + last.to_string(12));
  return BigFloat(cutoff, prec);
}

BigComplex tail_integral(const BigComplex& sigma, const BigFloat& T, int K, mpfr_prec_t prec, BigFloat* next_term) {
  const BigFloat alpha = alpha_of(prec), beta = beta_of(prec);
  const BigFloat logT = log(BigFloat(T, prec));
  const BigFloat A = alpha * logT + beta;
  const BigComplex s(sigma, prec);
  BigComplex binom(1.0, 0.0, prec);  // binom(-sigma, m)
  BigFloat quarter_pow(1, prec);     // 4^-m
  BigComplex total(prec);
  for (int m = 0; m <= K; ++m) {
    if (m > 0) {
      binom = binom * (-(s) - (m - 1)) / m;
      quarter_pow /= 4;
    }
    const BigComplex q = s * 2 + (2 * m - 1);
    if (q.re.is_zero() && q.im.is_zero()) {
      if (m < K) throw Error(ErrorCode::pole, "Z(sigma) has a pole at sigma = " + sigma.re.to_string(6));
      if (next_term) *next_term = BigFloat(prec);
      break;
    }
    const BigComplex inv_q = inverse(q);
    const BigComplex Tpow = exp(-(q * logT));
    const BigComplex I = Tpow * inv_q * (inv_q * alpha + A);
    const BigComplex term = binom * I * quarter_pow;
    if (m < K)
      total += term;
    else if (next_term)
      *next_term = abs(term);
  }
  return total;
}

ComplexValueWithError z_eval(const BigComplex& sigma, const ZeroTable& table, const TailModel& tail,
                             const PrecisionContext& ctx, bool continuation, Parallelism par) {
  ctx.validate();
  tail.validate();
  const mpfr_prec_t wp = ctx.working_bits();
  if (is_pole(sigma, continuation ? tail.expansion_order : 1))
    throw Error(ErrorCode::pole, "Z(sigma) has a pole at sigma = " + sigma.re.to_string(6));
  if (!continuation && !(sigma.re > BigFloat(0.5, 64)))
    throw Error(ErrorCode::precondition, "z_eval needs Re sigma > 1/2 (use continuation)");
  if (table.kind() == TableKind::synthetic) return synthetic_sum(sigma, table, wp);

  const BigFloat T = tail.resolve_cutoff(table, wp);
  const std::size_t count = zeros_below(table, T);
  const BigComplex s(sigma, wp);
  const BigFloat s_abs = abs(s);
  const std::vector<BigFloat> dtau = table.ordinate_errors(wp);

  auto fold = [&](std::size_t lo, std::size_t hi, ComplexAcc& acc) {
    for (std::size_t k = lo; k < hi; ++k) {
      const BigFloat tau(table[k].tau.re, wp);
      const BigFloat x = sqr(tau) + BigFloat(0.25, wp);
      const BigFloat lx = log(x);
      const BigComplex term = exp(-(s * lx));
      const BigFloat mag = abs(term);
      acc.sum += term;
      acc.abs_sum += mag;
      acc.propagation += s_abs * mag * tau * 2 / x * dtau[k];
    }
  };
  ComplexAcc acc = reduce_blocks<ComplexAcc>(
      count, kReduceBlock, ctx.reduction_order, par,
      [wp] { return ComplexAcc{BigComplex(wp), BigFloat(wp), BigFloat(wp)}; }, fold,
      [](ComplexAcc& into, const ComplexAcc& from) {
        into.sum += from.sum;
        into.abs_sum += from.abs_sum;
        into.propagation += from.propagation;
      });

  BigFloat next_term(wp);
  const BigComplex tail_value = tail_integral(s, T, tail.expansion_order, wp, &next_term);

  BigFloat omitted(wp);
  if (count < table.size()) {
    const BigFloat tau(table[count].tau.re, wp);
    omitted = exp(-(s.re * log(sqr(tau) + BigFloat(0.25, wp))));
  }
  const long ops = static_cast<long>(count) + 64 + static_cast<long>(std::ceil(s_abs.to_double() * 30));
  BigFloat err = omitted * 2 + next_term + acc.propagation +
                 rounding_bound(acc.abs_sum + abs(tail_value), wp, ops);
  return {acc.sum + tail_value, err, ErrorKind::heuristic};
}

namespace {

ValueWithError finish_integer(long j, const BigFloat& sum, const BigFloat& propagation, std::size_t count,
                              const BigFloat& T, const ZeroTable& table, const TailModel& tail, mpfr_prec_t wp) {
  BigFloat next_term(wp);
  const BigFloat tail_value = tail_integral(BigComplex(BigFloat(j, wp)), T, tail.expansion_order, wp, &next_term).re;
  BigFloat omitted(wp);
  if (count < table.size()) {
    const BigFloat tau(table[count].tau.re, wp);
    omitted = pow(sqr(tau) + BigFloat(0.25, wp), -j);
  }
  const long ops = static_cast<long>(count) + 64 + 2 * j;
  BigFloat value = sum + tail_value;
  BigFloat err = omitted * 2 + next_term + propagation +
                 rounding_bound(value, wp, ops);
  return {value, err, ErrorKind::heuristic};
}

}  // namespace

std::vector<ValueWithError> z_integers(long jmax, const ZeroTable& table, const TailModel& tail,
                                       const PrecisionContext& ctx, Parallelism par) {
  ctx.validate();
  tail.validate();
  if (jmax < 1) throw Error(ErrorCode::precondition, "Z(j) needs j >= 1");
  const mpfr_prec_t wp = ctx.working_bits();
  const auto J = static_cast<std::size_t>(jmax);
  std::vector<ValueWithError> out;
  out.reserve(J);
  if (table.kind() == TableKind::synthetic) {
    for (long j = 1; j <= jmax; ++j) {
      ComplexValueWithError z = synthetic_sum(BigComplex(BigFloat(j, wp)), table, wp);
      out.push_back(z.real());
    }
    return out;
  }

  const BigFloat T = tail.resolve_cutoff(table, wp);
  const std::size_t count = zeros_below(table, T);
  const std::vector<BigFloat> dtau = table.ordinate_errors(wp);
  // Accumulator layout: [0, J) sums of x^-j, [J, 2J) sums of j x^-j 2 tau / x.
  using Acc = std::vector<BigFloat>;
  Acc acc = reduce_blocks<Acc>(
      count, kReduceBlock, ctx.reduction_order, par, [wp, J] { return Acc(2 * J, BigFloat(wp)); },
      [&](std::size_t lo, std::size_t hi, Acc& a) {
        BigFloat y(wp), p(wp), d(wp);
        for (std::size_t k = lo; k < hi; ++k) {
          const BigFloat tau(table[k].tau.re, wp);
          y = BigFloat(1, wp) / (sqr(tau) + BigFloat(0.25, wp));
          d = tau * y * 2 * dtau[k];
          p = y;
          for (std::size_t j = 0; j < J; ++j) {
            a[j] += p;
            a[J + j] += p * d * static_cast<long>(j + 1);
            p *= y;
          }
        }
      },
      merge_vectors);

  for (long j = 1; j <= jmax; ++j) {
    const auto i = static_cast<std::size_t>(j - 1);
    out.push_back(finish_integer(j, acc[i], acc[J + i], count, T, table, tail, wp));
  }
  return out;
}

ValueWithError z_integer(long j, const ZeroTable& table, const TailModel& tail, const PrecisionContext& ctx,
                         Parallelism par) {
  ctx.validate();
  tail.validate();
  if (j < 1) throw Error(ErrorCode::precondition, "Z(j) needs j >= 1");
  const mpfr_prec_t wp = ctx.working_bits();
  if (table.kind() == TableKind::synthetic) return synthetic_sum(BigComplex(BigFloat(j, wp)), table, wp).real();

  const BigFloat T = tail.resolve_cutoff(table, wp);
  const std::size_t count = zeros_below(table, T);
  const std::vector<BigFloat> dtau = table.ordinate_errors(wp);
  using Acc = std::pair<BigFloat, BigFloat>;
  Acc acc = reduce_blocks<Acc>(
      count, kReduceBlock, ctx.reduction_order, par, [wp] { return Acc{BigFloat(wp), BigFloat(wp)}; },
      [&](std::size_t lo, std::size_t hi, Acc& a) {
        for (std::size_t k = lo; k < hi; ++k) {
          const BigFloat tau(table[k].tau.re, wp);
          const BigFloat x = sqr(tau) + BigFloat(0.25, wp);
          const BigFloat term = pow(x, -j);
          a.first += term;
          a.second += term * tau * 2 * j / x * dtau[k];
        }
      },
      [](Acc& into, const Acc& from) {
        into.first += from.first;
        into.second += from.second;
      });
  return finish_integer(j, acc.first, acc.second, count, T, table, tail, wp);
}

ValueWithError z_continued(const BigFloat& sigma, const ZeroTable& table, const TailModel& tail,
                           const PrecisionContext& ctx, Parallelism par) {
  ctx.validate();
  tail.validate();
  if (!(sigma > BigFloat(-0.25, 64) && sigma < BigFloat(0.5, 64)))
    throw Error(ErrorCode::out_of_strip, "continuation is implemented for -1/4 < sigma < 1/2, got " + sigma.to_string(8));
  const mpfr_prec_t wp = ctx.working_bits();
  if (table.kind() == TableKind::synthetic) return synthetic_sum(BigComplex(BigFloat(sigma, wp)), table, wp).real();

  const BigFloat T = tail.resolve_cutoff(table, wp);
  const std::size_t count = zeros_below(table, T);
  const BigFloat s(sigma, wp);
  const std::vector<BigFloat> dtau = table.ordinate_errors(wp);

  std::vector<BigFloat> terms(count, BigFloat(wp)), prop(count, BigFloat(wp));
  const long n = static_cast<long>(count);
  auto term_at = [&](long k) {
    const auto i = static_cast<std::size_t>(k);
    const BigFloat tau(table[i].tau.re, wp);
    const BigFloat x = sqr(tau) + BigFloat(0.25, wp);
    terms[i] = exp(-(s * log(x)));
    prop[i] = abs(s) * terms[i] * tau * 2 / x * dtau[i];
  };
  if (par == Parallelism::openmp) {
#pragma omp parallel for schedule(dynamic, 512)
    for (long k = 0; k < n; ++k) term_at(k);
  } else {
    for (long k = 0; k < n; ++k) term_at(k);
  }
  std::vector<BigFloat> prefix(count + 1, BigFloat(wp));
  BigFloat abs_sum(wp), propagation(wp);
  for (std::size_t k = 0; k < count; ++k) {
    prefix[k + 1] = prefix[k] + terms[k];
    abs_sum += abs(terms[k]);
    propagation += prop[k];
  }

  const int W = tail.window_cutoffs;
  std::vector<BigFloat> values;
  values.reserve(static_cast<std::size_t>(W));
  BigFloat worst_next(wp);
  for (int i = 0; i < W; ++i) {
    const double frac = W == 1 ? tail.window_hi
                               : tail.window_lo + (tail.window_hi - tail.window_lo) * i / (W - 1);
    const BigFloat c = T * BigFloat(frac, wp);
    const std::size_t k = zeros_below(table, c);
    if (k == 0 || k >= table.size())
      throw Error(ErrorCode::precondition, "averaging window leaves the table at t = " + c.to_string(10));
    const BigFloat cut = (BigFloat(table[k - 1].tau.re, wp) + BigFloat(table[k].tau.re, wp)) / 2;
    BigFloat next(wp);
    const BigFloat tail_value = tail_integral(BigComplex(s), cut, tail.expansion_order, wp, &next).re;
    values.push_back(prefix[std::min(k, count)] + tail_value);
    worst_next = max(worst_next, next);
  }
  BigFloat mean(wp);
  for (const auto& v : values) mean += v;
  mean /= static_cast<long>(W);
  BigFloat spread(wp);
  if (W > 1) {
    for (const auto& v : values) spread += sqr(v - mean);
    spread = sqrt(spread / static_cast<long>(W - 1) / static_cast<long>(W));
  }
  const long ops = static_cast<long>(count) + 64;
  BigFloat err = spread + worst_next + propagation + rounding_bound(abs_sum, wp, ops);
  return {mean, err, ErrorKind::heuristic};
}

PolarData polar_coefficients(const TailModel& tail, const PrecisionContext& ctx) {
  ctx.validate();
  const mpfr_prec_t wp = ctx.working_bits();
  const BigFloat T = tail.cutoff.is_zero() ? BigFloat(1000, wp) : BigFloat(tail.cutoff, wp);
  if (T.sign() <= 0) throw Error(ErrorCode::precondition, "tail cutoff must be positive");
  const BigFloat alpha = alpha_of(wp), beta = beta_of(wp);
  const BigFloat logT = log(T);
  // m = 0 term at sigma = 1/2 + e:  T^(-2e)/(2e) (alpha log T + beta + alpha/(2e)),
  // T^(-2e) = 1 - 2e log T + O(e^2).
  const BigFloat A = alpha * logT + beta;
  BigFloat r2 = alpha / 4;
  BigFloat r1 = A / 2 - alpha * logT / 2;
  return {BigFloat(r2, static_cast<mpfr_prec_t>(ctx.bits)), BigFloat(r1, static_cast<mpfr_prec_t>(ctx.bits))};
}

}  // namespace lilab
