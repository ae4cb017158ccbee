#include "lilab/cumulants.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include "lilab/errors.hpp"
#include "lilab/numerics.hpp"
#include "lilab/sieve.hpp"

namespace lilab {

const char* to_string(Provenance p) { return p == Provenance::computed ? "computed" : "ingested"; }
const char* to_string(CumulantRoute r) { return r == CumulantRoute::series ? "series" : "prime_sum"; }

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr mpfr_prec_t kBoundPrec = 64;

// Estimated log2 of the R-th Euler-Maclaurin correction for (log x)^M / x at N = 2^p.
double correction_log2(long R, long M, int p) {
  const double L = p * kLn2;
  const double base = (2.0 * R + M / L) / (2 * M_PI * M_E * std::ldexp(1.0, p));
  return 2.0 * R * std::log2(base) + M * std::log2(std::max(L, 1.0));
}

struct Plan {
  int p = 10;
  long R = 1;
};

Plan choose_plan(long M, long bits) {
  Plan best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (int p = 8; p <= 24; ++p) {
    long R = 1;
    while (R <= 600 && correction_log2(R, M, p) > -static_cast<double>(bits + 16)) ++R;
    if (R > 600) continue;
    const double cost = std::ldexp(1.0, p) * (M + 1) + 0.12 * R * R * (M + 1);
    if (cost < best_cost) {
      best_cost = cost;
      best = {p, R};
    }
  }
  if (!std::isfinite(best_cost))
    throw Error(ErrorCode::precision_infeasible, "no Euler-Maclaurin plan reaches " + std::to_string(bits) + " bits");
  return best;
}

}  // namespace

StieltjesTable stieltjes_constants(long M, const PrecisionContext& ctx, Parallelism par) {
  ctx.validate();
  if (M < 0) throw Error(ErrorCode::precondition, "Stieltjes order must be >= 0");
  if (M > kStieltjesMaxOrder)
    throw Error(ErrorCode::precision_infeasible,
                "Stieltjes order " + std::to_string(M) + " exceeds " + std::to_string(kStieltjesMaxOrder));
  const long target_bits = ctx.working_bits();
  const Plan plan = choose_plan(M, target_bits);
  const long N = 1L << plan.p;
  const long R = plan.R + plan.R / 2 + 8;
  const double L_est = plan.p * kLn2;
  const long extra = static_cast<long>(std::ceil((M + 1) * std::log2(std::max(L_est, 1.0)))) + 16;
  const mpfr_prec_t wp = target_bits + extra;

  // sum_{k<N} (log k)^m / k, m = 0..M.
  const auto width = static_cast<std::size_t>(M + 1);
  using Acc = std::vector<BigFloat>;
  const Acc sums = reduce_blocks<Acc>(
      static_cast<std::size_t>(N - 1), kReduceBlock, ctx.reduction_order, par,
      [wp, width] { return Acc(width, BigFloat(wp)); },
      [&](std::size_t lo, std::size_t hi, Acc& a) {
        BigFloat lk(wp), p(wp);
        for (std::size_t i = lo; i < hi; ++i) {
          const unsigned long k = i + 1;
          mpfr_log_ui(lk.get(), k, MPFR_RNDN);
          mpfr_ui_div(p.get(), 1, BigFloat(static_cast<long>(k), wp).get(), MPFR_RNDN);
          for (std::size_t m = 0; m < width; ++m) {
            mpfr_add(a[m].get(), a[m].get(), p.get(), MPFR_RNDN);
            mpfr_mul(p.get(), p.get(), lk.get(), MPFR_RNDN);
          }
        }
      },
      merge_vectors);

  // prod_{k=1}^{r} (D - k) = sum_i a[r][i] D^i, r = 0..2R.
  std::vector<std::vector<BigFloat>> a(static_cast<std::size_t>(2 * R + 1));
  a[0] = {BigFloat(1, wp)};
  for (long r = 0; r < 2 * R; ++r) {
    const auto& prev = a[static_cast<std::size_t>(r)];
    std::vector<BigFloat> next(prev.size() + 1, BigFloat(wp));
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i + 1] += prev[i];
      next[i] -= prev[i] * (r + 1);
    }
    a[static_cast<std::size_t>(r + 1)] = std::move(next);
  }
  std::vector<std::vector<BigFloat>> a_lo(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (const BigFloat& x : a[r]) a_lo[r].push_back(abs(BigFloat(x, kBoundPrec)));
  // B_{2r} / (2r)!
  std::vector<BigFloat> bern(static_cast<std::size_t>(R + 1), BigFloat(wp));
  {
    BigFloat fact(1, wp);
    for (long r = 1; r <= R; ++r) {
      fact *= (2 * r - 1) * (2 * r);
      bern[static_cast<std::size_t>(r)] = bernoulli_2k(r, wp) / fact;
    }
  }

  const long term_slack = 24 + 2 * static_cast<long>(std::bit_width(static_cast<unsigned long>(2 * R + M)));
  const BigFloat Nf(N, wp);
  const BigFloat L = log(Nf);
  const BigFloat two_pi_sq = sqr(BigFloat::pi(wp) * 2);
  StieltjesTable out;
  out.gammas.assign(width, BigFloat(wp));
  out.errors.assign(width, BigFloat(wp));
  std::vector<long> used(width, 0);

  auto one = [&](long m) {
    const auto mi = static_cast<std::size_t>(m);
    // u[i] = (m)_i L^(m-i), i = 0..m.
    std::vector<BigFloat> u(mi + 1, BigFloat(wp));
    u[mi] = BigFloat(1, wp);
    for (long i = m; i > 0; --i) u[static_cast<std::size_t>(i - 1)] = u[static_cast<std::size_t>(i)] * L;
    BigFloat falling(1, wp);
    for (long i = 1; i <= m; ++i) {
      falling *= (m - i + 1);
      u[static_cast<std::size_t>(i)] *= falling;
    }
    std::vector<BigFloat> u_lo;
    u_lo.reserve(mi + 1);
    for (const BigFloat& x : u) u_lo.emplace_back(x, kBoundPrec);
    const BigFloat big = u[0] * L / (m + 1);  // L^(m+1)/(m+1)
    BigFloat gamma = sums[mi] - big + u[0] / Nf / 2;
    const BigFloat target = ldexp(BigFloat(1, wp), -(ctx.bits + 4));
    BigFloat bound = BigFloat(std::numeric_limits<double>::infinity(), 64);
    BigFloat Npow(1, wp);           // N^-2r
    BigFloat twopi_pow(1, wp);      // (2 pi)^-2r
    long r = 1;
    for (; r <= R; ++r) {
      Npow /= Nf * Nf;
      twopi_pow /= two_pi_sq;
      const auto& ar = a[static_cast<std::size_t>(2 * r - 1)];
      const auto& ar_lo = a_lo[static_cast<std::size_t>(2 * r - 1)];
      const long top = std::min(2 * r - 1, m);
      BigFloat peak(kBoundPrec);
      for (long i = 0; i <= top; ++i)
        peak = max(peak, ar_lo[static_cast<std::size_t>(i)] * u_lo[static_cast<std::size_t>(i)]);
      peak *= abs(BigFloat(bern[static_cast<std::size_t>(r)], kBoundPrec)) * BigFloat(Npow, kBoundPrec);
      const mpfr_prec_t pr = std::clamp<long>(peak.exponent2() + ctx.working_bits() + term_slack, 64, wp);
      BigFloat deriv(pr), t(pr);
      for (long i = 0; i <= top; ++i) {
        mpfr_mul(t.get(), ar[static_cast<std::size_t>(i)].get(), u[static_cast<std::size_t>(i)].get(), MPFR_RNDN);
        mpfr_add(deriv.get(), deriv.get(), t.get(), MPFR_RNDN);
      }
      gamma -= bern[static_cast<std::size_t>(r)] * BigFloat(deriv, wp) * Npow;

      // Remainder after r corrections: 2 zeta(2r) (2 pi)^-2r int_N^oo |f^(2r)|, zeta(2r) <= 2,
      // with int_N^oo x^(-1-a) L^e dx <= N^-a L^e / (a (1 - e/(aL))) for e < aL.
      if (correction_log2(r, m, plan.p) > -static_cast<double>(ctx.bits - 32)) continue;
      const auto& ae = a_lo[static_cast<std::size_t>(2 * r)];
      const long A = 2 * r;
      const double LA = L.to_double() * A;
      BigFloat integral(kBoundPrec);
      bool finite = true;
      for (long i = 0; i <= std::min(A, m); ++i) {
        const double ratio = static_cast<double>(m - i) / LA;
        if (ratio >= 0.5) {
          finite = false;
          break;
        }
        integral += ae[static_cast<std::size_t>(i)] * u_lo[static_cast<std::size_t>(i)] * (1.0 / ((1.0 - ratio) * A));
      }
      if (finite) {
        bound = integral * BigFloat(Npow, kBoundPrec) * BigFloat(twopi_pow, kBoundPrec) * 4.04;
        if (bound < target * max(BigFloat(1, wp), abs(gamma))) break;
      }
    }
    const BigFloat rounding = rounding_bound(abs(sums[mi]) + big, wp, N + 8 * R + 16) +
                              ldexp(BigFloat(1, kBoundPrec), -ctx.working_bits());
    out.gammas[mi] = gamma;
    out.errors[mi] = bound + rounding;
    used[mi] = std::min(r, R);
  };
  const long nm = M + 1;
  if (par == Parallelism::openmp) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long m = 0; m < nm; ++m) one(m);
  } else {
    for (long m = 0; m < nm; ++m) one(m);
  }
  out.digits = static_cast<int>(std::floor(static_cast<double>(ctx.bits) * 0.30102999566));
  out.provenance = Provenance::computed;
  out.summation_length = N;
  out.correction_terms = *std::max_element(used.begin(), used.end());
  return out;
}

StieltjesTable load_stieltjes(const std::filesystem::path& path, mpfr_prec_t prec) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::not_found, path.string() + " not found");
  StieltjesTable t;
  t.provenance = Provenance::ingested;
  t.digits = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const std::string text = line.substr(b, line.find_last_not_of(" \t\r") - b + 1);
    const auto dot = text.find('.');
    const int frac = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
    const auto bits = std::max<mpfr_prec_t>(prec, static_cast<mpfr_prec_t>(text.size() * 3.33) + 16);
    BigFloat v;
    try {
      v = BigFloat::parse(text, bits);
    } catch (const Error&) {
      throw Error(ErrorCode::parse, path.string() + ":" + std::to_string(line_no) + ": malformed value '" + text + "'");
    }
    t.gammas.push_back(v);
    t.errors.push_back(pow(BigFloat(10, prec), -static_cast<long>(frac)));
    t.digits = t.digits < 0 ? frac : std::min(t.digits, frac);
  }
  if (t.gammas.empty()) throw Error(ErrorCode::parse, path.string() + ": no values");
  const BigFloat euler = BigFloat::euler_gamma(prec);
  if (abs(t.gammas[0] - euler) > t.errors[0])
    throw Error(ErrorCode::parse, path.string() + ": first value is not Euler's constant to " +
                                      std::to_string(t.digits) + " digits");
  return t;
}

std::vector<CumulantValue> cumulant_series_range(long n_max, const StieltjesTable& table, const PrecisionContext& ctx) {
  ctx.validate();
  if (n_max < 1) throw Error(ErrorCode::precondition, "cumulant order must be >= 1");
  if (table.max_order() < n_max)
    throw Error(ErrorCode::table_too_short, "Stieltjes table holds gamma_0..gamma_" +
                                                std::to_string(table.max_order()) + ", need gamma_" +
                                                std::to_string(n_max));
  const mpfr_prec_t wp = ctx.working_bits();
  const auto K = static_cast<std::size_t>(n_max);
  // s zeta(1+s) = 1 + sum_k a_k s^k, a_k = (-1)^(k-1) gamma_{k-1} / (k-1)!.
  std::vector<BigFloat> a(K + 1, BigFloat(wp)), ea(K + 1, BigFloat(wp));
  BigFloat fact(1, wp);
  for (std::size_t k = 1; k <= K; ++k) {
    if (k > 1) fact *= static_cast<long>(k - 1);
    a[k] = BigFloat(table.gammas[k - 1], wp) / fact;
    if (k % 2 == 0) a[k] = -a[k];
    ea[k] = BigFloat(table.errors[k - 1], wp) / fact;
  }
  // log(1 + A) = sum_k l_k s^k with k l_k = k a_k - sum_{i<k} i l_i a_{k-i}.
  std::vector<BigFloat> l(K + 1, BigFloat(wp)), el(K + 1, BigFloat(wp));
  const ErrorKind kind = table.provenance == Provenance::computed ? ErrorKind::rigorous : ErrorKind::heuristic;
  std::vector<CumulantValue> out;
  BigFloat kfact(1, wp);
  for (std::size_t k = 1; k <= K; ++k) {
    const long kl = static_cast<long>(k);
    BigFloat acc = a[k] * kl, err = ea[k] * kl, mag = abs(acc);
    for (std::size_t i = 1; i < k; ++i) {
      const long il = static_cast<long>(i);
      const BigFloat t = l[i] * a[k - i] * il;
      acc -= t;
      mag += abs(t);
      err += (el[i] * abs(a[k - i]) + abs(l[i]) * ea[k - i] + el[i] * ea[k - i]) * il;
    }
    l[k] = acc / kl;
    el[k] = err / kl + rounding_bound(mag / kl, wp, kl + 4);
    kfact *= kl;
    BigFloat g = l[k] * kfact;
    if (k % 2 == 0) g = -g;
    out.push_back({kl, {g, el[k] * kfact, kind}, CumulantRoute::series});
  }
  return out;
}

CumulantValue cumulant_series(long n, const StieltjesTable& table, const PrecisionContext& ctx) {
  return cumulant_series_range(n, table, ctx).back();
}

ValueWithError eta_from_cumulant(const CumulantValue& g) {
  const mpfr_prec_t prec = g.g.value.precision();
  BigFloat fact(1, prec);
  for (long i = 2; i < g.n; ++i) fact *= i;
  BigFloat eta = g.g.value / fact;
  if (g.n % 2 == 1) eta = -eta;
  return {eta, g.g.abs_error / fact + rounding_bound(eta, prec, g.n + 2), g.g.kind};
}

CumulantValue cumulant_prime_sum(long n, std::uint64_t M, Parallelism par) {
  if (n < 1) throw Error(ErrorCode::precondition, "cumulant order must be >= 1");
  if (M < 100) throw Error(ErrorCode::precondition, "sieve bound must be >= 100");
  auto value_at = [&](std::uint64_t bound) {
    const MangoldtSums s = mangoldt_sums(bound, static_cast<int>(n - 1), par);
    const long double logM = std::log(static_cast<long double>(bound));
    return -(s.sums[static_cast<std::size_t>(n - 1)] - std::pow(logM, static_cast<long double>(n)) / n);
  };
  const long double full = value_at(M);
  const long double half = value_at(M / 2);
  BigFloat v(64), e(64);
  mpfr_set_ld(v.get(), full, MPFR_RNDN);
  mpfr_set_ld(e.get(), std::fabs(full - half), MPFR_RNDN);
  return {n, {v, e, ErrorKind::heuristic}, CumulantRoute::prime_sum};
}

long s_n_precision(long n) { return 4 * n + 96; }

ValueWithError s_n(long n, const StieltjesTable& table, const PrecisionContext& ctx) {
  ctx.validate();
  if (n < 1) throw Error(ErrorCode::precondition, "S_n needs n >= 1");
  if (ctx.bits < s_n_precision(n))
    throw Error(ErrorCode::insufficient_precision, "S_" + std::to_string(n) + " needs " +
                                                       std::to_string(s_n_precision(n)) + " bits, have " +
                                                       std::to_string(ctx.bits));
  const std::vector<CumulantValue> g = cumulant_series_range(n, table, ctx);
  const mpfr_prec_t wp = ctx.working_bits();
  BigFloat sum(wp), abs_sum(wp), err(wp);
  ErrorKind kind = ErrorKind::rigorous;
  for (long j = 1; j <= n; ++j) {
    BigRational c(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j)),
                  factorial(static_cast<unsigned long>(j - 1)));
    c.canonicalize();
    if (j % 2 == 0) c = -c;
    const BigFloat cf = to_bigfloat(c, wp);
    const CumulantValue& gj = g[static_cast<std::size_t>(j - 1)];
    const BigFloat t = cf * gj.g.value;
    sum += t;
    abs_sum += abs(t);
    err += abs(cf) * gj.g.abs_error;
    kind = combine(kind, gj.g.kind);
  }
  err += rounding_bound(abs_sum, wp, n + 8);
  return {sum, err, kind};
}

}  // namespace lilab
