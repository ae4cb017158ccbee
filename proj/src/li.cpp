#include "lilab/li.hpp"

#include <cmath>
#include <string>

#include "lilab/errors.hpp"

namespace lilab {

const char* to_string(LambdaMethod m) {
  switch (m) {
    case LambdaMethod::zero_sum: return "zero_sum";
    case LambdaMethod::binomial: return "binomial";
    case LambdaMethod::cauchy: return "cauchy";
  }
  return "?";
}

long precision_for(long n) { return (n + 1) / 2 + 96; }

BigRational binomial_coefficient(long n, long j) {
  if (n < 1 || j < 1 || j > n) throw Error(ErrorCode::precondition, "coefficient needs 1 <= j <= n");
  BigInt c = binomial(static_cast<unsigned long>(n + j - 1), static_cast<unsigned long>(2 * j - 1)) * n;
  if (j % 2 == 1) c = -c;  // (-1)^j
  BigRational q(-c, BigInt(j));
  q.canonicalize();
  return q;
}

ResidueCertificate residue_identity_check(long n) {
  if (n < 1) throw Error(ErrorCode::precondition, "residue identity needs n >= 1");
  ResidueCertificate cert;
  cert.n = n;
  cert.equal = true;
  for (long j = 1; j <= n; ++j) {
    const auto u = [](long v) { return static_cast<unsigned long>(v); };
    BigRational r(factorial(u(n + j - 1)) * (2 * n), factorial(u(n - j)) * factorial(u(2 * j)));
    r.canonicalize();
    if (j % 2 == 1) r = -r;  // -2n (-1)^j
    r = -r;
    cert.residue_side.push_back(r);
    cert.binomial_side.push_back(binomial_coefficient(n, j));
    if (cert.residue_side.back() != cert.binomial_side.back()) cert.equal = false;
  }
  return cert;
}

namespace {

// Tail parts of Z(j) and their K-th expansion terms, filled on demand.
struct TailCache {
  BigFloat T;
  int K;
  mpfr_prec_t prec;
  std::vector<BigFloat> value, next;

  void fill(long j) {
    while (static_cast<long>(value.size()) < j) {
      const long jj = static_cast<long>(value.size()) + 1;
      BigFloat nx(prec);
      value.push_back(tail_integral(BigComplex(BigFloat(jj, prec)), T, K, prec, &nx).re);
      next.push_back(nx);
    }
  }
};

BigFloat lambda_tail_cached(long n, TailCache& cache, BigFloat* bound) {
  const mpfr_prec_t prec = cache.prec;
  BigFloat sum(prec), err(prec);
  BigFloat c = BigFloat(n, prec) * n;  // c_{n,1} = n^2
  for (long j = 1; j <= n; ++j) {
    if (j > 1) {
      // c_{n,j} / c_{n,j-1} = -((j-1)/j) (n+j-1)(n-j+1) / ((2j-2)(2j-1))
      c = -c * (j - 1) / j * (n + j - 1) * (n - j + 1) / (2 * j - 2) / (2 * j - 1);
    }
    cache.fill(j);
    const auto i = static_cast<std::size_t>(j - 1);
    const BigFloat term = c * cache.value[i];
    sum += term;
    err += abs(c) * cache.next[i];
    if (j > 2 && abs(term) < ldexp(abs(sum), -static_cast<long>(prec))) {
      err += abs(term);
      break;
    }
  }
  if (bound) *bound = err;
  return sum;
}

}  // namespace

BigFloat lambda_tail(long n, const BigFloat& T, int K, mpfr_prec_t prec, BigFloat* bound) {
  TailCache cache{BigFloat(T, prec), K, prec, {}, {}};
  return lambda_tail_cached(n, cache, bound);
}

namespace {

struct RealPairKernel {
  // Adds 2 s_m = 4 sin^2(m theta), m = 1..N, of a real ordinate into acc[m-1].
  static void add(const BigFloat& x, long N, std::vector<BigFloat>& acc, mpfr_prec_t wp) {
    BigFloat d = BigFloat(1, wp) / x / 2;  // 1 - cos(2 theta) = 1/(2x)
    BigFloat s = d, prev(wp), t(wp), u(wp);
    for (long m = 1; m <= N; ++m) {
      mpfr_add(acc[static_cast<std::size_t>(m - 1)].get(), acc[static_cast<std::size_t>(m - 1)].get(), s.get(),
               MPFR_RNDN);
      mpfr_ui_sub(t.get(), 1, s.get(), MPFR_RNDN);
      mpfr_mul(t.get(), t.get(), d.get(), MPFR_RNDN);
      mpfr_mul_2ui(t.get(), t.get(), 1, MPFR_RNDN);
      mpfr_mul_2ui(u.get(), s.get(), 1, MPFR_RNDN);
      mpfr_sub(u.get(), u.get(), prev.get(), MPFR_RNDN);
      mpfr_add(u.get(), u.get(), t.get(), MPFR_RNDN);
      mpfr_swap(prev.get(), s.get());
      mpfr_swap(s.get(), u.get());
    }
  }
};

long bit_length(long v) {
  long b = 0;
  while (v > 0) {
    ++b;
    v >>= 1;
  }
  return b;
}

std::vector<LambdaValue> synthetic_range(long n_from, long n_to, const ZeroTable& table, mpfr_prec_t wp,
                                         long bits_used) {
  const auto N = static_cast<std::size_t>(n_to);
  std::vector<BigFloat> sum(N, BigFloat(wp)), mag(N, BigFloat(wp));
  std::vector<BigFloat> real_acc(N, BigFloat(wp));
  for (const ZeroPair& p : table.pairs()) {
    if (p.on_axis()) {
      const BigFloat tau(p.tau.re, wp);
      RealPairKernel::add(sqr(tau) + BigFloat(0.25, wp), n_to, real_acc, wp);
      continue;
    }
    const BigComplex tau(p.tau, wp);
    const BigComplex x = x_of(tau);
    if (x.re.is_zero() && x.im.is_zero()) throw Error(ErrorCode::degenerate_zero, "pair with x = 0");
    const BigComplex half_i(BigFloat(wp), BigFloat(0.5, wp));
    const BigComplex w = (tau + half_i) / (tau - half_i);
    const BigComplex w_inv = inverse(w);
    BigComplex wn = w, wi = w_inv;
    const int copies = p.with_conjugate ? 2 : 1;
    for (std::size_t m = 0; m < N; ++m) {
      // 2 - w^m - w^-m, plus the conjugate pair when present.
      BigFloat c = BigFloat(2, wp) - wn.re - wi.re;
      if (copies == 2) c *= 2;
      sum[m] += c;
      mag[m] += (abs(wn) + abs(wi) + 2) * copies;
      wn *= w;
      wi *= w_inv;
    }
  }
  std::vector<LambdaValue> out;
  for (long n = n_from; n <= n_to; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    BigFloat value = sum[i] + real_acc[i] * 2;
    BigFloat err = rounding_bound(mag[i] + real_acc[i] * 2, wp, 16 + 4 * n * n);
    out.push_back({n, {value, err, ErrorKind::rigorous}, LambdaMethod::zero_sum, bits_used});
  }
  return out;
}

}  // namespace

std::vector<LambdaValue> lambda_zero_sum_range(long n_from, long n_to, const ZeroTable& table, const TailModel& tail,
                                               const PrecisionContext& ctx, Parallelism par) {
  ctx.validate();
  tail.validate();
  if (n_from < 1 || n_to < n_from) throw Error(ErrorCode::precondition, "lambda range needs 1 <= from <= to");
  if (table.empty()) throw Error(ErrorCode::precondition, "empty zero table");
  const mpfr_prec_t wp = ctx.working_bits() + 2 * bit_length(n_to);
  if (table.kind() == TableKind::synthetic) return synthetic_range(n_from, n_to, table, wp, ctx.bits);

  const BigFloat T = tail.resolve_cutoff(table, wp);
  const std::size_t count = zeros_below(table, T);
  const std::vector<BigFloat> dtau = table.ordinate_errors(wp);
  const auto N = static_cast<std::size_t>(n_to);

  // acc[m-1] = sum of s_m; acc[N] = sum of 2 dtau / x (propagation per unit n).
  using Acc = std::vector<BigFloat>;
  Acc acc = reduce_blocks<Acc>(
      count, kReduceBlock, ctx.reduction_order, par, [wp, N] { return Acc(N + 1, BigFloat(wp)); },
      [&](std::size_t lo, std::size_t hi, Acc& a) {
        for (std::size_t k = lo; k < hi; ++k) {
          const BigFloat tau(table[k].tau.re, wp);
          const BigFloat x = sqr(tau) + BigFloat(0.25, wp);
          RealPairKernel::add(x, n_to, a, wp);
          a[N] += dtau[k] * 2 / x;
        }
      },
      merge_vectors);

  BigFloat theta_omit(wp);
  if (count < table.size()) theta_omit = atan(BigFloat(1, wp) / (BigFloat(table[count].tau.re, wp) * 2));

  TailCache cache{T, tail.expansion_order, wp, {}, {}};
  std::vector<LambdaValue> out;
  for (long n = n_from; n <= n_to; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    BigFloat bound(wp);
    const BigFloat tail_value = lambda_tail_cached(n, cache, &bound);
    const BigFloat zero_part = acc[i] * 2;
    BigFloat value = zero_part + tail_value;
    BigFloat omitted = sqr(sin(theta_omit * n)) * 4;
    BigFloat err = omitted * 2 + bound + acc[N] * n +
                   rounding_bound(value, wp, static_cast<long>(count) + 64 + n * n);
    if (abs(tail_value) > value * kTailUnreliableFraction) err += abs(tail_value);
    out.push_back({n, {value, err, ErrorKind::heuristic}, LambdaMethod::zero_sum, ctx.bits});
  }
  return out;
}

LambdaValue lambda_zero_sum(long n, const ZeroTable& table, const TailModel& tail, const PrecisionContext& ctx,
                            Parallelism par) {
  return lambda_zero_sum_range(n, n, table, tail, ctx, par).front();
}

LambdaValue lambda_binomial(long n, const std::vector<ValueWithError>& zvals, const PrecisionContext& ctx) {
  ctx.validate();
  if (n < 1) throw Error(ErrorCode::precondition, "lambda_n needs n >= 1");
  if (zvals.size() < static_cast<std::size_t>(n))
    throw Error(ErrorCode::precondition, "need Z(1).." + std::string("Z(") + std::to_string(n) + ")");
  if (ctx.bits < precision_for(n))
    throw Error(ErrorCode::insufficient_precision, "lambda_" + std::to_string(n) + " by the binomial sum needs " +
                                                       std::to_string(precision_for(n)) + " bits, have " +
                                                       std::to_string(ctx.bits));
  const mpfr_prec_t wp = ctx.working_bits();
  BigFloat sum(wp), abs_sum(wp), err(wp);
  ErrorKind kind = ErrorKind::rigorous;
  for (long j = 1; j <= n; ++j) {
    const ValueWithError& z = zvals[static_cast<std::size_t>(j - 1)];
    const BigFloat c = to_bigfloat(binomial_coefficient(n, j), wp);
    const BigFloat term = c * z.value;
    sum += term;
    abs_sum += abs(term);
    err += abs(c) * z.abs_error;
    kind = combine(kind, z.kind);
  }
  if (!sum.is_zero()) {
    const double cancellation = std::log2(abs_sum.to_double()) - std::log2(abs(sum).to_double());
    if (cancellation > static_cast<double>(ctx.bits - ctx.guard_bits))
      throw Error(ErrorCode::insufficient_precision,
                  "binomial sum for n = " + std::to_string(n) + " cancels " + std::to_string(long(cancellation)) +
                      " bits");
  }
  err += rounding_bound(abs_sum, wp, n + 8);
  return {n, {sum, err, kind}, LambdaMethod::binomial, ctx.bits};
}

namespace {

// Samples f(r w^q), q = 0..M-1 with w = exp(2 pi i / M), using f(conj z) = conj f(z).
struct CauchySamples {
  std::vector<BigComplex> values;
  std::vector<BigFloat> errors;
  ErrorKind kind = ErrorKind::rigorous;
};

CauchySamples cauchy_samples(long M, const BigFloat& r, const PrecisionContext& ctx, Parallelism par) {
  const mpfr_prec_t wp = ctx.working_bits();
  CauchySamples out;
  out.values.assign(static_cast<std::size_t>(M), BigComplex(wp));
  out.errors.assign(static_cast<std::size_t>(M), BigFloat(wp));
  std::vector<ErrorKind> kinds(static_cast<std::size_t>(M / 2 + 1), ErrorKind::rigorous);
  std::vector<std::string> failures(static_cast<std::size_t>(M / 2 + 1));
  const BigFloat two_pi = BigFloat::pi(wp) * 2;
  auto sample = [&](long q) {
    const auto i = static_cast<std::size_t>(q);
    try {
      const BigComplex z = expi(two_pi * q / M) * r;
      const BigComplex one(1.0, 0.0, wp);
      const BigComplex u = one - z;
      const BigComplex s = inverse(u);
      const ComplexValueWithError g = xi_log_deriv(s, ctx);
      const BigComplex scale = inverse(sqr(u));
      out.values[i] = g.value * scale;
      out.errors[i] = g.abs_error * abs(scale);
      kinds[i] = g.kind;
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  };
  const long half = M / 2;
  if (par == Parallelism::openmp) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long q = 0; q <= half; ++q) sample(q);
  } else {
    for (long q = 0; q <= half; ++q) sample(q);
  }
  for (long q = 0; q <= half; ++q) {
    const auto i = static_cast<std::size_t>(q);
    if (!failures[i].empty())
      throw Error(ErrorCode::domain, "Cauchy node " + std::to_string(q) + " is unusable: " + failures[i]);
    out.kind = combine(out.kind, kinds[i]);
  }
  for (long q = half + 1; q < M; ++q) {
    out.values[static_cast<std::size_t>(q)] = conj(out.values[static_cast<std::size_t>(M - q)]);
    out.errors[static_cast<std::size_t>(q)] = out.errors[static_cast<std::size_t>(M - q)];
  }
  return out;
}

// (1/m) sum_{q<m} f_{q stride} (r w_M^{q stride})^-k with m = M / stride.
BigComplex strided_coefficient(const std::vector<BigComplex>& f, long stride, long k, const BigFloat& r,
                               const std::vector<BigComplex>& roots) {
  const long M = static_cast<long>(f.size());
  const long m = M / stride;
  const mpfr_prec_t wp = f.front().precision();
  BigComplex acc(wp);
  for (long q = 0; q < m; ++q) {
    const long idx = ((M - (q * stride * k) % M) % M);
    acc += f[static_cast<std::size_t>(q * stride)] * roots[static_cast<std::size_t>(idx)];
  }
  return acc * pow(r, -k) / m;
}

std::vector<BigComplex> unit_roots(long M, mpfr_prec_t wp) {
  std::vector<BigComplex> roots;
  roots.reserve(static_cast<std::size_t>(M));
  const BigFloat two_pi = BigFloat::pi(wp) * 2;
  for (long q = 0; q < M; ++q) roots.push_back(expi(two_pi * q / M));
  return roots;
}

bool is_power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

BigComplex trapezoid_coefficient(const std::vector<BigComplex>& samples, long k, const BigFloat& radius) {
  if (samples.empty()) throw Error(ErrorCode::precondition, "no samples");
  const auto roots = unit_roots(static_cast<long>(samples.size()), samples.front().precision());
  return strided_coefficient(samples, 1, k, BigFloat(radius, samples.front().precision()), roots);
}

std::vector<LambdaValue> lambda_cauchy_range(long n_from, long n_to, const CauchyOptions& opts,
                                             const PrecisionContext& ctx, Parallelism par) {
  ctx.validate();
  if (n_from < 1 || n_to < n_from || n_to > opts.max_n)
    throw Error(ErrorCode::precondition,
                "Cauchy extraction supports 1 <= n <= " + std::to_string(opts.max_n));
  if (!is_power_of_two(opts.nodes) || opts.nodes <= 4 * n_to)
    throw Error(ErrorCode::precondition, "node count must be a power of two above 4n");
  if (!(opts.radius > 0 && opts.radius < 1)) throw Error(ErrorCode::precondition, "radius must lie in (0, 1)");

  const mpfr_prec_t wp = ctx.working_bits();
  const BigFloat r(opts.radius, wp);
  const long M = 2 * opts.nodes;
  const CauchySamples s = cauchy_samples(M, r, ctx, par);
  const auto roots = unit_roots(M, wp);
  BigFloat max_node_err(wp);
  for (const auto& e : s.errors) max_node_err = max(max_node_err, e);

  std::vector<LambdaValue> out;
  for (long n = n_from; n <= n_to; ++n) {
    const long k = n - 1;
    const BigComplex fine = strided_coefficient(s.values, 1, k, r, roots);
    const BigComplex mid = strided_coefficient(s.values, 2, k, r, roots);
    const BigComplex coarse = strided_coefficient(s.values, 4, k, r, roots);
    const BigFloat d_fine = abs(fine - mid), d_coarse = abs(mid - coarse);
    const BigFloat noise = max_node_err * pow(r, -k) + rounding_bound(abs(fine) + max_node_err, wp, M);
    if (d_fine > noise && d_fine > d_coarse)
      throw Error(ErrorCode::non_convergence,
                  "Cauchy estimate for n = " + std::to_string(n) + " does not improve from Q to 2Q nodes");
    BigFloat err = d_fine + noise + abs(fine.im);
    out.push_back({n, {fine.re, err, s.kind}, LambdaMethod::cauchy, ctx.bits});
  }
  return out;
}

LambdaValue lambda_cauchy(long n, const CauchyOptions& opts, const PrecisionContext& ctx, Parallelism par) {
  return lambda_cauchy_range(n, n, opts, ctx, par).front();
}

}  // namespace lilab
