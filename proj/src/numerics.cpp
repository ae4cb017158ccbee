#include "lilab/numerics.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "lilab/errors.hpp"

namespace lilab {

BigInt binomial(unsigned long a, unsigned long b) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigFloat to_bigfloat(const BigInt& z, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_z(r.get(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat to_bigfloat(const BigRational& q, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

const BigFloat& bernoulli_2k(long k, mpfr_prec_t prec) {
  thread_local std::map<mpfr_prec_t, std::vector<BigFloat>> cache;
  auto& table = cache[prec];
  if (table.empty()) table.emplace_back(prec);  // index 0 unused
  while (static_cast<long>(table.size()) <= k) {
    const long j = static_cast<long>(table.size());
    // B_{2j} = (-1)^{j+1} 2 (2j)! zeta(2j) / (2 pi)^{2j}
    const mpfr_prec_t wp = prec + 32;
    BigFloat z(wp), f(wp);
    mpfr_zeta_ui(z.get(), static_cast<unsigned long>(2 * j), MPFR_RNDN);
    mpfr_fac_ui(f.get(), static_cast<unsigned long>(2 * j), MPFR_RNDN);
    BigFloat twopi = BigFloat::pi(wp) * 2;
    BigFloat b = 2 * z * f / pow(twopi, 2 * j);
    if (j % 2 == 0) b = -b;
    table.emplace_back(b, prec);
  }
  return table[static_cast<std::size_t>(k)];
}

namespace {

bool is_nonpositive_integer(const BigComplex& s) {
  if (!s.im.is_zero() || s.re.sign() > 0) return false;
  return mpfr_integer_p(s.re.get()) != 0;
}

// Shift needed so that Re(s + m) >= target.
long shift_count(const BigComplex& s, double target) {
  double re = s.re.to_double();
  return re >= target ? 0 : static_cast<long>(std::ceil(target - re));
}

}  // namespace

ComplexValueWithError log_gamma(const BigComplex& s_in, const PrecisionContext& ctx) {
  ctx.validate();
  if (is_nonpositive_integer(s_in)) throw Error(ErrorCode::pole, "log_gamma at a non-positive integer");
  const mpfr_prec_t wp = ctx.working_bits();
  BigComplex s(s_in, wp);

  double target = 0.25 * static_cast<double>(wp) + 8.0;
  for (int attempt = 0; attempt < 6; ++attempt, target *= 2) {
    const long m = shift_count(s, target);
    BigComplex z = s + m;

    // log Gamma(s) = log Gamma(z) - sum_{k<m} log(s+k); the product is formed
    // once and the branch fixed from a double-precision sum of arguments.
    BigComplex correction(wp);
    if (m > 0) {
      BigComplex prod(1.0, 0.0, wp);
      double arg_sum = 0.0;
      for (long k = 0; k < m; ++k) {
        BigComplex f = s + k;
        arg_sum += std::atan2(f.im.to_double(), f.re.to_double());
        prod *= f;
      }
      correction = log(prod);
      const double two_pi = 2.0 * M_PI;
      const double turns = std::round((arg_sum - correction.im.to_double()) / two_pi);
      correction.im += BigFloat::pi(wp) * static_cast<long>(2 * turns);
    }

    BigComplex logz = log(z);
    BigComplex result = (z - BigFloat(0.5, wp)) * logz - z;
    result.re += log(BigFloat::pi(wp) * 2) / 2;

    BigComplex zinv = inverse(z);
    BigComplex zinv2 = sqr(zinv);
    BigComplex zpow = zinv;  // z^{-(2k-1)}
    const BigFloat eps = BigFloat::two_pow(-wp, wp);
    const BigFloat scale = max(BigFloat(1, wp), abs(result));
    // Remainder bound factor for |arg z| < pi: 1 / cos(arg z / 2)^{2K+2}.
    const BigFloat half_cos = cos(arg(z) / 2);
    BigFloat prev(wp);
    bool converged = false;
    BigFloat bound(wp);
    for (long k = 1; k < 4 * wp; ++k) {
      BigComplex term = zpow * (bernoulli_2k(k, wp) / ((2 * k) * (2 * k - 1)));
      BigFloat mag = abs(term);
      if (k > 2 && mag > prev) break;  // asymptotic series turned; shift further
      BigFloat tail_bound = mag / pow(half_cos, 2 * k);
      if (tail_bound < eps * scale) {
        bound = tail_bound;
        converged = true;
        break;
      }
      result += term;
      prev = mag;
      zpow *= zinv2;
    }
    if (!converged) continue;

    result -= correction;
    BigFloat err = bound + rounding_bound(scale, wp, 16 + 2 * m);
    return {BigComplex(result, wp), err, ErrorKind::rigorous};
  }
  throw Error(ErrorCode::non_convergence, "log_gamma Stirling series did not converge");
}

ComplexValueWithError digamma(const BigComplex& s_in, const PrecisionContext& ctx) {
  ctx.validate();
  if (is_nonpositive_integer(s_in)) throw Error(ErrorCode::pole, "digamma at a non-positive integer");
  const mpfr_prec_t wp = ctx.working_bits();
  BigComplex s(s_in, wp);

  double target = 0.25 * static_cast<double>(wp) + 8.0;
  for (int attempt = 0; attempt < 6; ++attempt, target *= 2) {
    const long m = shift_count(s, target);
    BigComplex z = s + m;
    BigComplex correction(wp);
    for (long k = 0; k < m; ++k) correction += inverse(s + k);

    BigComplex zinv = inverse(z);
    BigComplex result = log(z) - zinv / 2;
    BigComplex zinv2 = sqr(zinv);
    BigComplex zpow = zinv2;
    const BigFloat eps = BigFloat::two_pow(-wp, wp);
    const BigFloat scale = max(BigFloat(1, wp), abs(result));
    const BigFloat half_cos = cos(arg(z) / 2);
    BigFloat prev(wp), bound(wp);
    bool converged = false;
    for (long k = 1; k < 4 * wp; ++k) {
      BigComplex term = zpow * (bernoulli_2k(k, wp) / (2 * k));
      BigFloat mag = abs(term);
      if (k > 2 && mag > prev) break;
      BigFloat tail_bound = mag / pow(half_cos, 2 * k + 2);
      if (tail_bound < eps * scale) {
        bound = tail_bound;
        converged = true;
        break;
      }
      result -= term;
      prev = mag;
      zpow *= zinv2;
    }
    if (!converged) continue;
    result -= correction;
    BigFloat err = bound + rounding_bound(max(scale, abs(correction)), wp, 16 + 2 * m);
    return {BigComplex(result, wp), err, ErrorKind::rigorous};
  }
  throw Error(ErrorCode::non_convergence, "digamma asymptotic series did not converge");
}

namespace {

struct ZetaParts {
  BigComplex value;
  BigFloat error;
  BigComplex derivative;
  BigFloat derivative_error;
};

// Euler-Maclaurin:
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//           + sum_{k=1}^{M} B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1} + R_M,
//   |R_M| <= |T_{M+1}| |s+2M+1| / (Re s + 2M + 1).
ZetaParts zeta_em_impl(const BigComplex& s_in, const PrecisionContext& ctx, bool with_derivative) {
  ctx.validate();
  const mpfr_prec_t wp = ctx.working_bits();
  BigComplex s(s_in, wp);
  if (s.im.is_zero() && mpfr_cmp_ui(s.re.get(), 1) == 0) throw Error(ErrorCode::pole, "zeta pole at s = 1");

  const double t = std::fabs(s.im.to_double());
  const double sigma = s.re.to_double();
  long n_terms = std::max<long>({static_cast<long>(std::ceil(0.35 * static_cast<double>(ctx.bits))),
                                 static_cast<long>(std::ceil(t / 2.0)), 2});
  // With Re s very negative the corrections need N beyond |s| as well.
  if (sigma < 0) n_terms = std::max<long>(n_terms, static_cast<long>(std::ceil(-sigma)) + 2);

  const BigFloat eps = BigFloat::two_pow(-static_cast<long>(wp), wp);

  for (;;) {
    if (n_terms > kZetaMaxTerms)
      throw Error(ErrorCode::precision_infeasible, "Euler-Maclaurin truncation exceeds the cost ceiling");

    BigComplex sum(wp), dsum(wp);
    BigFloat magnitude_sum(wp);
    BigFloat logn(wp), mod(wp), ang(wp), sn(wp), cs(wp);
    BigFloat tmp(wp);
    for (long n = 1; n < n_terms; ++n) {
      // n^-s = exp(-sigma log n) (cos(t log n) - i sin(t log n))
      mpfr_log_ui(logn.get(), static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_mul(mod.get(), s.re.get(), logn.get(), MPFR_RNDN);
      mpfr_neg(mod.get(), mod.get(), MPFR_RNDN);
      mpfr_exp(mod.get(), mod.get(), MPFR_RNDN);
      mpfr_mul(ang.get(), s.im.get(), logn.get(), MPFR_RNDN);
      mpfr_sin_cos(sn.get(), cs.get(), ang.get(), MPFR_RNDN);
      mpfr_mul(cs.get(), cs.get(), mod.get(), MPFR_RNDN);
      mpfr_mul(sn.get(), sn.get(), mod.get(), MPFR_RNDN);
      mpfr_add(sum.re.get(), sum.re.get(), cs.get(), MPFR_RNDN);
      mpfr_sub(sum.im.get(), sum.im.get(), sn.get(), MPFR_RNDN);
      mpfr_add(magnitude_sum.get(), magnitude_sum.get(), mod.get(), MPFR_RNDN);
      if (with_derivative) {
        mpfr_mul(tmp.get(), cs.get(), logn.get(), MPFR_RNDN);
        mpfr_sub(dsum.re.get(), dsum.re.get(), tmp.get(), MPFR_RNDN);
        mpfr_mul(tmp.get(), sn.get(), logn.get(), MPFR_RNDN);
        mpfr_add(dsum.im.get(), dsum.im.get(), tmp.get(), MPFR_RNDN);
      }
    }

    const BigFloat big_n(n_terms, wp);
    const BigFloat log_n = log(big_n);
    const BigComplex n_pow_minus_s = exp(-(s * log_n));  // N^-s
    const BigComplex s_minus_1 = s - 1L;
    BigComplex head = n_pow_minus_s * big_n / s_minus_1;  // N^{1-s}/(s-1)
    BigComplex half = n_pow_minus_s / 2L;
    sum += head;
    sum += half;
    if (with_derivative) {
      dsum -= head * log_n + head / s_minus_1;
      dsum -= half * log_n;
    }

    // Correction terms.
    const BigFloat n_inv2 = 1L / sqr(big_n);
    BigComplex npow = n_pow_minus_s / big_n;  // N^{-s-1}
    BigComplex poly = s;                       // s(s+1)...(s+2k-2)
    BigComplex dpoly(1.0, 0.0, wp);
    BigFloat fact(2, wp);  // (2k)!
    const BigFloat sigma_big = s.re;
    bool converged = false;
    bool diverging = false;
    BigFloat bound(wp), dbound(wp), prev(wp);
    const long k_max = std::max<long>(static_cast<long>(std::ceil(ctx.bits / 8.0)), 8) * 8;
    for (long k = 1; k <= k_max; ++k) {
      BigFloat coef = bernoulli_2k(k, wp) / fact;
      BigComplex term = poly * npow * coef;
      BigFloat mag = abs(term);
      // Remainder bound using this term as the first omitted one.
      BigFloat denom = sigma_big + (2 * k - 1);
      BigComplex dterm = with_derivative ? (dpoly - poly * log_n) * npow * coef : BigComplex(wp);
      if (denom.sign() > 0) {
        BigFloat rb = mag * abs(s + (2 * k - 1)) / denom;
        if (rb <= eps * max(abs(sum), BigFloat(1, wp))) {
          bound = rb;
          dbound = 2 * abs(dterm) * abs(s + (2 * k - 1)) / denom;
          converged = true;
          break;
        }
        if (k > 3 && mag > prev) {
          diverging = true;
          break;
        }
      }
      if (with_derivative) dsum += dterm;
      sum += term;
      prev = mag;
      // advance to k+1
      BigComplex a = s + (2 * k - 1);
      BigComplex b = s + (2 * k);
      if (with_derivative) dpoly = dpoly * a * b + poly * (a + b);
      poly = poly * a * b;
      npow *= n_inv2;
      fact *= (2 * k + 1) * (2 * k + 2);
    }
    if (!converged || diverging) {
      n_terms = n_terms * 2;
      continue;
    }

    BigFloat round_err = rounding_bound(magnitude_sum + abs(sum), wp, 8);
    ZetaParts parts{sum, bound + round_err, dsum, BigFloat(wp)};
    if (with_derivative)
      parts.derivative_error = dbound + rounding_bound((magnitude_sum + abs(dsum)) * log_n, wp, 8) + bound;
    return parts;
  }
}

}  // namespace

ComplexValueWithError zeta_em(const BigComplex& s, const PrecisionContext& ctx) {
  ZetaParts p = zeta_em_impl(s, ctx, false);
  return {std::move(p.value), std::move(p.error), ErrorKind::rigorous};
}

ComplexValueWithError zeta_derivative(const BigComplex& s, const PrecisionContext& ctx) {
  ZetaParts p = zeta_em_impl(s, ctx, true);
  return {std::move(p.derivative), std::move(p.derivative_error), ErrorKind::heuristic};
}

ComplexValueWithError zeta_log_deriv(const BigComplex& s, const PrecisionContext& ctx) {
  ZetaParts p = zeta_em_impl(s, ctx, true);
  if (abs(p.value) <= p.error) throw Error(ErrorCode::near_zero, "|zeta(s)| is below its error bound");
  ComplexValueWithError z{std::move(p.value), std::move(p.error), ErrorKind::rigorous};
  ComplexValueWithError dz{std::move(p.derivative), std::move(p.derivative_error), ErrorKind::heuristic};
  return dz / z;
}

ComplexValueWithError xi_log_deriv(const BigComplex& s_in, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  BigComplex s(s_in, wp);
  if (s.im.is_zero() && (s.re.is_zero() || mpfr_cmp_ui(s.re.get(), 1) == 0))
    throw Error(ErrorCode::pole, "log-derivative of Xi is taken at s = 0 or s = 1");
  ComplexValueWithError zl = zeta_log_deriv(s, ctx);
  ComplexValueWithError psi = digamma(s / 2L, ctx);
  BigComplex v = inverse(s) + inverse(s - 1L) + psi.value / 2L + zl.value;
  v.re -= log(BigFloat::pi(wp)) / 2;
  BigFloat err = psi.abs_error / 2 + zl.abs_error + rounding_bound(abs(v) + abs(inverse(s - 1L)), wp, 8);
  return {std::move(v), std::move(err), combine(zl.kind, psi.kind)};
}

ValueWithError riemann_siegel_theta(const BigFloat& t, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  BigComplex arg_point(BigFloat(0.25, wp), t / 2);
  ComplexValueWithError lg = log_gamma(arg_point, ctx);
  BigFloat theta = lg.value.im - t * log(BigFloat::pi(wp)) / 2;
  return {theta, lg.abs_error + rounding_bound(theta, wp, 4), lg.kind};
}

ValueWithError hardy_z(const BigFloat& t, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  ValueWithError theta = riemann_siegel_theta(t, ctx);
  ComplexValueWithError z = zeta_em(BigComplex(BigFloat(0.5, wp), BigFloat(t, wp)), ctx);
  BigComplex rotated = expi(theta.value) * z.value;
  BigFloat err = z.abs_error + abs(z.value) * theta.abs_error + rounding_bound(abs(z.value), wp, 8);
  return {rotated.re, err, combine(theta.kind, z.kind)};
}

}  // namespace lilab
