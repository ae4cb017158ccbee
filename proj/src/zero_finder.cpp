#include "lilab/zero_finder.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lilab/errors.hpp"
#include "lilab/numerics.hpp"

namespace lilab {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr int kPsiDegree = 120;
constexpr int kCorrections = 5;

// Taylor coefficients in u = p - 1/2 of
//   Psi(u) = -cos(2 pi u^2 - 5 pi / 8) / cos(2 pi u)
// by series division at high precision.
std::vector<BigFloat> psi_series(mpfr_prec_t prec) {
  const int D = kPsiDegree;
  const BigFloat pi = BigFloat::pi(prec);
  const BigFloat two_pi = pi * 2;
  const BigFloat c = cos(pi * 5 / 8), s = sin(pi * 5 / 8);

  std::vector<BigFloat> num(D + 1, BigFloat(prec)), den(D + 1, BigFloat(prec));
  BigFloat term(1, prec);  // (2 pi)^m / m!
  for (int m = 0; 2 * m <= D; ++m) {
    if (m > 0) term = term * two_pi / m;
    const int sign = (m / 2) % 2 == 0 ? 1 : -1;
    // cos(2 pi u^2) and sin(2 pi u^2) contribute u^{2m}; cos(2 pi u) contributes u^m.
    if (m % 2 == 0)
      num[2 * m] -= c * term * sign;
    else
      num[2 * m] -= s * term * sign;
  }
  term = BigFloat(1, prec);
  for (int m = 0; m <= D; ++m) {
    if (m > 0) term = term * two_pi / m;
    if (m % 2 == 0) den[m] = (m / 2) % 2 == 0 ? term : -term;
  }
  std::vector<BigFloat> out(D + 1, BigFloat(prec));
  for (int k = 0; k <= D; ++k) {
    BigFloat acc = num[k];
    for (int j = 1; j <= k; ++j) acc -= den[j] * out[k - j];
    out[k] = acc / den[0];
  }
  return out;
}

// C_j as polynomials in u, coefficient index = power of u.
struct CorrectionTable {
  std::array<std::vector<long double>, kCorrections> poly;

  CorrectionTable() {
    const mpfr_prec_t prec = 512;
    const std::vector<BigFloat> psi = psi_series(prec);
    const BigFloat pi = BigFloat::pi(prec);
    const int D = kPsiDegree;

    // d-th derivative of Psi as a coefficient vector.
    auto deriv = [&](int d) {
      std::vector<BigFloat> out(D + 1 - d, BigFloat(prec));
      for (int k = d; k <= D; ++k) {
        BigFloat f(1, prec);
        for (int i = 0; i < d; ++i) f *= static_cast<long>(k - i);
        out[k - d] = psi[k] * f;
      }
      return out;
    };
    struct Part {
      int d;
      double scale;  // coefficient numerator
      double divisor;
      int pi_power;
    };
    const std::array<std::vector<Part>, kCorrections> parts = {{
        {{0, 1, 1, 0}},
        {{3, -1, 96, 2}},
        {{2, 1, 64, 2}, {6, 1, 18432, 4}},
        {{1, -1, 64, 2}, {5, -1, 3840, 4}, {9, -1, 5308416, 6}},
        {{0, 1, 128, 2}, {4, 19, 24576, 4}, {8, 11, 5898240, 6}, {12, 1, 2038431744.0, 8}},
    }};
    for (int j = 0; j < kCorrections; ++j) {
      std::vector<BigFloat> acc(D + 1, BigFloat(prec));
      for (const Part& part : parts[j]) {
        const std::vector<BigFloat> dp = deriv(part.d);
        const BigFloat factor = BigFloat(part.scale, prec) / (BigFloat(part.divisor, prec) * pow(pi, part.pi_power));
        for (std::size_t k = 0; k < dp.size(); ++k) acc[k] += dp[k] * factor;
      }
      std::size_t used = acc.size();
      while (used > 1 && std::fabs(acc[used - 1].to_double()) < 1e-40) --used;
      poly[j].resize(used);
      for (std::size_t k = 0; k < used; ++k) poly[j][k] = mpfr_get_ld(acc[k].get(), MPFR_RNDN);
    }
  }
};

const CorrectionTable& corrections() {
  static const CorrectionTable table;
  return table;
}

long double horner(const std::vector<long double>& c, long double u) {
  long double r = 0.0L;
  for (std::size_t k = c.size(); k-- > 0;) r = r * u + c[k];
  return r;
}

}  // namespace

long double rs_correction(int j, long double p) {
  if (j < 0 || j >= kCorrections) throw Error(ErrorCode::domain, "Riemann-Siegel correction index out of range");
  return horner(corrections().poly[static_cast<std::size_t>(j)], p - 0.5L);
}

long double rs_theta(long double t) {
  const long double r = 1.0L / t, r2 = r * r;
  return t / 2 * std::log(t / (2 * kPi)) - t / 2 - kPi / 8 +
         r * (1.0L / 48 + r2 * (7.0L / 5760 + r2 * (31.0L / 80640 + r2 * 127.0L / 430080)));
}

long double rs_hardy_z(long double t) {
  const long double a = std::sqrt(t / (2 * kPi));
  const auto N = static_cast<long>(std::floor(a));
  const long double p = a - static_cast<long double>(N);
  const long double th = rs_theta(t);
  long double sum = 0.0L;
  for (long n = 1; n <= N; ++n) {
    const long double ln = std::log(static_cast<long double>(n));
    sum += std::cos(th - t * ln) / std::sqrt(static_cast<long double>(n));
  }
  const CorrectionTable& c = corrections();
  const long double u = p - 0.5L, inv_a = 1.0L / a;
  long double rem = 0.0L, w = 1.0L;
  for (int j = 0; j < kCorrections; ++j) {
    rem += horner(c.poly[static_cast<std::size_t>(j)], u) * w;
    w *= inv_a;
  }
  rem /= std::sqrt(a);
  if ((N - 1) % 2 != 0) rem = -rem;
  return 2 * sum + rem;
}

long double gram_point(long n) {
  const long double target = static_cast<long double>(n) * kPi;
  long double t = 10.0L + 2 * kPi * static_cast<long double>(std::max(n + 1, 0L)) /
                              std::max(1.0L, std::log(static_cast<long double>(n + 2)));
  for (int it = 0; it < 100; ++it) {
    const long double f = rs_theta(t) - target;
    const long double step = f / (0.5L * std::log(t / (2 * kPi)));
    t = std::max(t - step, 7.0L);
    if (std::fabs(step) <= 1e-17L * t) break;
  }
  return t;
}

namespace {

struct Sample {
  long double t;
  long double z;
};

int sign_of(long double z) { return z > 0 ? 1 : (z < 0 ? -1 : 0); }

std::size_t sign_changes(const std::vector<Sample>& pts) {
  std::size_t c = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (sign_of(pts[i - 1].z) * sign_of(pts[i].z) < 0) ++c;
  return c;
}

// Illinois variant of regula falsi on a sign-change bracket.
long double illinois(Sample lo, Sample hi) {
  int side = 0;
  for (int it = 0; it < 200; ++it) {
    const long double width = hi.t - lo.t;
    if (width <= 4e-18L * hi.t) break;
    long double t = (lo.t * hi.z - hi.t * lo.z) / (hi.z - lo.z);
    if (!(t > lo.t && t < hi.t)) t = lo.t + width / 2;
    const long double z = rs_hardy_z(t);
    if (z == 0) return t;
    if (sign_of(z) == sign_of(lo.z)) {
      lo = {t, z};
      if (side == -1) hi.z /= 2;
      side = -1;
    } else {
      hi = {t, z};
      if (side == 1) lo.z /= 2;
      side = 1;
    }
  }
  return (lo.t * hi.z - hi.t * lo.z) / (hi.z - lo.z);
}

}  // namespace

std::vector<long double> rs_zeros(std::size_t count, Parallelism par) {
  if (count == 0) return {};
  // Gram points g_{-1} .. g_{count + margin}; the margin leaves room for the
  // final Rosser block to close.
  const std::size_t margin = 64;
  const std::size_t gram_count = count + margin + 2;
  std::vector<Sample> gram(gram_count);
  const long ng = static_cast<long>(gram_count);
  if (par == Parallelism::openmp) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < ng; ++i) {
      const long double g = gram_point(i - 1);
      gram[static_cast<std::size_t>(i)] = {g, rs_hardy_z(g)};
    }
  } else {
    for (long i = 0; i < ng; ++i) {
      const long double g = gram_point(i - 1);
      gram[static_cast<std::size_t>(i)] = {g, rs_hardy_z(g)};
    }
  }
  // Gram index n = i - 1; good when (-1)^n Z(g_n) > 0.
  auto good = [&](std::size_t i) {
    const long n = static_cast<long>(i) - 1;
    return (n % 2 == 0 ? 1 : -1) * sign_of(gram[i].z) > 0;
  };
  if (!good(0)) throw Error(ErrorCode::non_convergence, "g_{-1} is not a good Gram point");

  std::vector<std::pair<Sample, Sample>> brackets;
  brackets.reserve(count + margin);
  std::size_t a = 0;
  while (brackets.size() < count) {
    std::size_t b = a + 1;
    while (b < gram_count && !good(b)) ++b;
    if (b >= gram_count)
      throw Error(ErrorCode::non_convergence, "Rosser block beyond the Gram points computed");
    const std::size_t expected = b - a;
    std::vector<Sample> pts(gram.begin() + static_cast<long>(a), gram.begin() + static_cast<long>(b) + 1);
    for (int round = 0; sign_changes(pts) < expected; ++round) {
      if (round >= 14)
        throw Error(ErrorCode::non_convergence, "Rosser block at t = " + std::to_string(double(pts.front().t)) +
                                                    " has " + std::to_string(sign_changes(pts)) + " of " +
                                                    std::to_string(expected) + " sign changes");
      std::vector<Sample> finer;
      finer.reserve(2 * pts.size());
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        finer.push_back(pts[i]);
        const long double m = (pts[i].t + pts[i + 1].t) / 2;
        finer.push_back({m, rs_hardy_z(m)});
      }
      finer.push_back(pts.back());
      pts.swap(finer);
    }
    if (sign_changes(pts) != expected)
      throw Error(ErrorCode::non_convergence, "Rosser block at t = " + std::to_string(double(pts.front().t)) +
                                                  " has more sign changes than Gram intervals");
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (sign_of(pts[i - 1].z) * sign_of(pts[i].z) < 0) brackets.emplace_back(pts[i - 1], pts[i]);
    a = b;
  }
  brackets.resize(count);

  std::vector<long double> zeros(count);
  const long nb = static_cast<long>(count);
  if (par == Parallelism::openmp) {
#pragma omp parallel for schedule(dynamic, 256)
    for (long k = 0; k < nb; ++k)
      zeros[static_cast<std::size_t>(k)] =
          illinois(brackets[static_cast<std::size_t>(k)].first, brackets[static_cast<std::size_t>(k)].second);
  } else {
    for (long k = 0; k < nb; ++k)
      zeros[static_cast<std::size_t>(k)] =
          illinois(brackets[static_cast<std::size_t>(k)].first, brackets[static_cast<std::size_t>(k)].second);
  }
  return zeros;
}

BigFloat refine_zero(long double approx, long double radius, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  auto at = [&](const BigFloat& t) { return hardy_z(t, ctx); };
  BigFloat lo(wp), hi(wp);
  mpfr_set_ld(lo.get(), approx - radius, MPFR_RNDN);
  mpfr_set_ld(hi.get(), approx + radius, MPFR_RNDN);
  ValueWithError zlo = at(lo), zhi = at(hi);
  if (zlo.value.sign() * zhi.value.sign() >= 0)
    throw Error(ErrorCode::non_convergence, "no sign change of Z around t = " + std::to_string(double(approx)));
  const BigFloat tol = ldexp(BigFloat(1, wp), -(ctx.bits - 8)) * hi;
  int side = 0;
  BigFloat flo = zlo.value, fhi = zhi.value, prev = lo;
  for (int it = 0; it < 200; ++it) {
    BigFloat t = (lo * fhi - hi * flo) / (fhi - flo);
    if (!(t > lo && t < hi)) t = (lo + hi) / 2;
    const ValueWithError z = at(t);
    if (abs(z.value) <= z.abs_error || abs(t - prev) <= tol || hi - lo <= tol) return t;
    prev = t;
    if (z.value.sign() == flo.sign()) {
      lo = t;
      flo = z.value;
      if (side == -1) fhi /= 2;
      side = -1;
    } else {
      hi = t;
      fhi = z.value;
      if (side == 1) flo /= 2;
      side = 1;
    }
  }
  throw Error(ErrorCode::non_convergence, "zero refinement did not converge near t = " + std::to_string(double(approx)));
}

}  // namespace lilab
