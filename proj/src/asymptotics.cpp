#include "lilab/asymptotics.hpp"

#include <cmath>
#include <string>

#include "lilab/errors.hpp"

namespace lilab {

const char* to_string(PredictorKind k) {
  switch (k) {
    case PredictorKind::rh_true_general: return "rh_true_general";
    case PredictorKind::rh_true_riemann: return "rh_true_riemann";
    case PredictorKind::rh_false: return "rh_false";
  }
  return "?";
}

namespace {

void require_n(long n) {
  if (n < 1) throw Error(ErrorCode::precondition, "n must be >= 1, got " + std::to_string(n));
}

void require_upper(const BigComplex& tau) {
  if (!(tau.im.sign() > 0))
    throw Error(ErrorCode::precondition,
                "off-axis tau needs Im tau > 0, got " + tau.re.to_string(10) + " + " + tau.im.to_string(10) + "i");
}

}  // namespace

BigFloat delta_term(mpfr_prec_t prec) { return BigFloat(7, prec) / 4; }

BigFloat predict_rh_true_general(long n, const PolarData& polar, const PrecisionContext& ctx, bool include_delta) {
  require_n(n);
  const mpfr_prec_t wp = ctx.working_bits();
  const BigFloat R2(polar.R_minus2, wp), R1(polar.R_minus1, wp);
  const BigFloat logn = log(BigFloat(n, wp));
  const BigFloat one_minus_gamma = 1 - BigFloat::euler_gamma(wp);
  BigFloat v = BigFloat::pi(wp) * 2 * n * (R2 * 2 * logn - R2 * 2 * one_minus_gamma + R1);
  if (include_delta) v += delta_term(wp);
  return v;
}

BigFloat predict_riemann(long n, const PrecisionContext& ctx, bool include_delta) {
  require_n(n);
  const mpfr_prec_t wp = ctx.working_bits();
  const BigFloat two_pi = BigFloat::pi(wp) * 2;
  BigFloat v = BigFloat(n, wp) / 2 * (log(BigFloat(n, wp)) - log(two_pi) - 1 + BigFloat::euler_gamma(wp));
  if (include_delta) v += delta_term(wp);
  return v;
}

RhFalsePrediction predict_rh_false(long n, const std::vector<BigComplex>& off_axis, const PrecisionContext& ctx) {
  if (n < 0) throw Error(ErrorCode::precondition, "n must be >= 0");
  if (off_axis.empty()) throw Error(ErrorCode::precondition, "no off-axis tau given");
  const mpfr_prec_t wp = ctx.working_bits();
  const BigComplex half_i(BigFloat(wp), BigFloat(0.5, wp));
  RhFalsePrediction out;
  out.value = BigFloat(wp);
  for (const BigComplex& t : off_axis) {
    require_upper(t);
    const BigComplex tau(t, wp);
    const BigComplex w = (tau + half_i) / (tau - half_i);
    const BigComplex wn = pow(w, n);
    out.value += tau.re.is_zero() ? wn.re : wn.re * 2;
    out.growth_rates.push_back(log(abs(w)));
    out.onsets.push_back(1 / abs(inverse(tau).im));
  }
  out.n_onset = out.onsets.front();
  for (const BigFloat& o : out.onsets) out.n_onset = min(out.n_onset, o);
  return out;
}

void Predictor::validate() const {
  if (kind != PredictorKind::rh_false) return;
  if (off_axis.empty()) throw Error(ErrorCode::precondition, "rh_false predictor needs an off-axis tau");
  for (const BigComplex& t : off_axis) require_upper(t);
}

BigFloat Predictor::evaluate(long n, const PrecisionContext& ctx) const {
  validate();
  switch (kind) {
    case PredictorKind::rh_true_general: return predict_rh_true_general(n, polar, ctx, include_delta);
    case PredictorKind::rh_true_riemann: return predict_riemann(n, ctx, include_delta);
    case PredictorKind::rh_false: {
      BigFloat v = predict_rh_false(n, off_axis, ctx).value;
      if (include_delta) v += delta_term(ctx.working_bits());
      return v;
    }
  }
  return BigFloat(ctx.working_bits());
}

SaddleReal saddle_real(long n, const ZeroTable& table, const TailModel& tail, const PrecisionContext& ctx,
                       double tolerance, double margin) {
  if (n < 10) throw Error(ErrorCode::precondition, "saddle_real needs n >= 10");
  if (!(tolerance > 0) || !(margin > 0) || margin >= 0.25)
    throw Error(ErrorCode::precondition, "bad saddle search tolerance or margin");
  const mpfr_prec_t wp = ctx.working_bits();
  const BigFloat pi = BigFloat::pi(wp);
  const BigFloat logn = log(BigFloat(n, wp));
  auto objective = [&](const BigFloat& s) {
    BigFloat sn(wp), lg(wp);
    mpfr_sin(sn.get(), (pi * s).get(), MPFR_RNDN);
    mpfr_lngamma(lg.get(), (s * 2 + 1).get(), MPFR_RNDN);
    const ComplexValueWithError z = z_eval(BigComplex(s), table, tail, ctx);
    if (!(z.value.re > 0))
      throw Error(ErrorCode::domain, "Z(" + s.to_string(8) + ") is not positive");
    return log(pi) - log(sn) - lg + (s * 2 - 1) * logn + log(z.value.re);
  };

  const BigFloat lo0(0.5 + margin, wp), hi0(1.0 - margin, wp);
  const BigFloat ratio = (sqrt(BigFloat(5, wp)) - 1) / 2;
  BigFloat a = lo0, b = hi0;
  BigFloat c = b - (b - a) * ratio, d = a + (b - a) * ratio;
  BigFloat fc = objective(c), fd = objective(d);
  while (b - a > tolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * ratio;
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * ratio;
      fd = objective(d);
    }
  }
  SaddleReal out;
  out.n = n;
  out.sigma = fc <= fd ? c : d;
  out.log_modulus = fc <= fd ? fc : fd;
  out.deviation = (out.sigma - BigFloat(0.5, wp)) * logn;
  if (out.sigma - lo0 <= tolerance * 2 || hi0 - out.sigma <= tolerance * 2)
    throw Error(ErrorCode::no_interior_minimum,
                "minimum at the bracket edge sigma = " + out.sigma.to_string(10) + " for n = " + std::to_string(n));
  return out;
}

SaddleComplex saddle_complex(long n, const BigComplex& tau, const PrecisionContext& ctx) {
  if (tau.re.is_zero() && tau.im.is_zero()) throw Error(ErrorCode::domain, "tau = 0");
  const mpfr_prec_t wp = ctx.working_bits();
  const BigComplex t(tau, wp);
  const BigComplex inv = inverse(t);
  SaddleComplex out;
  // n i / (2 tau) = (n/2) i conj(tau)/|tau|^2
  out.sigma = BigComplex(-inv.im * n / 2, inv.re * n / 2);
  out.eligible = abs(inv.im) * n > 1;
  out.in_domain = out.sigma.re > 0.5;
  return out;
}

BigFloat on_axis_twin(const BigComplex& tau, mpfr_prec_t prec) {
  require_upper(tau);
  const BigComplex t(tau, prec);
  const BigComplex half_i(BigFloat(prec), BigFloat(0.5, prec));
  const BigFloat half_phi = arg((t + half_i) / (t - half_i)) / 2;
  return cos(half_phi) / sin(half_phi) / 2;
}

namespace {

// Solves A x = b in place by Gaussian elimination with partial pivoting.
std::vector<BigFloat> solve(std::vector<std::vector<BigFloat>> A, std::vector<BigFloat> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
    if (A[piv][c].is_zero()) throw Error(ErrorCode::non_convergence, "singular linear-prediction system");
    std::swap(A[c], A[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const BigFloat f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<BigFloat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    BigFloat s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= A[i][k] * x[k];
    x[i] = s / A[i][i];
  }
  return x;
}

// Roots of z^p - sum_k c[k] z^k (Durand-Kerner).
std::vector<BigComplex> roots_of(const std::vector<BigFloat>& c, mpfr_prec_t prec) {
  const std::size_t p = c.size();
  auto eval = [&](const BigComplex& z) {
    BigComplex acc(BigFloat(1, prec), BigFloat(prec));
    for (std::size_t k = p; k-- > 0;) acc = acc * z - BigComplex(c[k]);
    return acc;
  };
  std::vector<BigComplex> z(p);
  const BigComplex seed(BigFloat(0.4, prec), BigFloat(0.9, prec));
  z[0] = seed;
  for (std::size_t i = 1; i < p; ++i) z[i] = z[i - 1] * seed;
  const BigFloat tol = ldexp(BigFloat(1, prec), -static_cast<long>(prec) / 2);
  for (int it = 0; it < 2000; ++it) {
    BigFloat worst(prec);
    for (std::size_t i = 0; i < p; ++i) {
      BigComplex den(BigFloat(1, prec), BigFloat(prec));
      for (std::size_t j = 0; j < p; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      const BigComplex step = eval(z[i]) / den;
      z[i] -= step;
      worst = max(worst, abs(step));
    }
    if (worst < tol) return z;
  }
  throw Error(ErrorCode::non_convergence, "characteristic roots did not converge");
}

}  // namespace

GrowthFit fit_growth_rate(const std::vector<BigFloat>& v, int order, long stride, mpfr_prec_t prec) {
  if (order < 1 || stride < 1) throw Error(ErrorCode::precondition, "fit needs order >= 1 and stride >= 1");
  std::vector<BigFloat> s;
  for (std::size_t i = 0; i < v.size(); i += static_cast<std::size_t>(stride)) s.emplace_back(v[i], prec);
  const auto p = static_cast<std::size_t>(order);
  if (s.size() < 2 * p + 1)
    throw Error(ErrorCode::precondition, "fit needs at least " + std::to_string(2 * p + 1) + " samples");
  // s[i + p] = sum_k c_k s[i + k], normal equations.
  std::vector<std::vector<BigFloat>> A(p, std::vector<BigFloat>(p, BigFloat(prec)));
  std::vector<BigFloat> b(p, BigFloat(prec));
  for (std::size_t i = 0; i + p < s.size(); ++i) {
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) A[r][c] += s[i + r] * s[i + c];
      b[r] += s[i + r] * s[i + p];
    }
  }
  const std::vector<BigFloat> coef = solve(A, b);
  BigFloat res(prec), norm(prec);
  for (std::size_t i = 0; i + p < s.size(); ++i) {
    BigFloat e = s[i + p];
    for (std::size_t k = 0; k < p; ++k) e -= coef[k] * s[i + k];
    res += sqr(e);
    norm += sqr(s[i + p]);
  }
  GrowthFit out;
  out.order = order;
  out.residual = norm.is_zero() ? BigFloat(prec) : sqrt(res / norm);
  out.roots = roots_of(coef, prec);
  out.stride = stride;
  out.samples = s.size();
  const BigComplex* top = &out.roots[0];
  for (const BigComplex& r : out.roots)
    if (abs(r) > abs(*top) || (abs(r) == abs(*top) && r.im > top->im)) top = &r;
  out.rate = log(abs(*top)) / stride;
  out.phase = abs(arg(*top)) / stride;
  return out;
}

GrowthFit fit_growth_rate_auto(const std::vector<BigFloat>& v, int max_order, long stride, mpfr_prec_t prec) {
  const BigFloat exact = ldexp(BigFloat(1, prec), -static_cast<long>(prec) / 2);
  GrowthFit best;
  bool have = false;
  for (int p = 1; p <= max_order; ++p) {
    GrowthFit f;
    try {
      f = fit_growth_rate(v, p, stride, prec);
    } catch (const Error&) {
      continue;
    }
    if (f.residual <= exact) return f;
    if (!have || f.residual < best.residual) {
      best = std::move(f);
      have = true;
    }
  }
  if (!have) throw Error(ErrorCode::non_convergence, "no linear-prediction order fits");
  return best;
}

}  // namespace lilab
