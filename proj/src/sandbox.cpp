#include "lilab/sandbox.hpp"

#include <algorithm>

#include "lilab/errors.hpp"

namespace lilab {

std::vector<BigComplex> ordinates_of(const ZeroTable& t) {
  std::vector<BigComplex> v;
  v.reserve(t.size());
  for (const auto& p : t.pairs()) v.push_back(p.tau);
  return v;
}

SandboxRun run_sandbox(const std::vector<BigComplex>& base_taus, const BigComplex& tau_star, long n_max,
                       const PrecisionContext& ctx, Parallelism par) {
  if (n_max < 1) throw Error(ErrorCode::precondition, "sandbox needs n_max >= 1");
  const mpfr_prec_t wp = ctx.working_bits();
  const ZeroTable base = synthetic_table(base_taus);
  const ZeroTable table = inject_off_axis(base, tau_star);

  SandboxRun r;
  r.tau = table.pairs().back().tau;
  r.pairs = table.size();

  std::optional<ZeroTable> twin;
  const BigFloat t_r = on_axis_twin(r.tau, wp);
  if (t_r.is_finite()) {
    std::vector<BigComplex> tw = base_taus;
    tw.emplace_back(t_r);
    if (table.pairs().back().with_conjugate) tw.emplace_back(t_r);
    twin = synthetic_table(tw);
  }

  const TailModel tail;
  const auto lam = lambda_zero_sum_range(1, n_max, table, tail, ctx, par);
  std::vector<LambdaValue> lam0, lamt;
  if (!base.empty()) lam0 = lambda_zero_sum_range(1, n_max, base, tail, ctx, par);
  if (twin) lamt = lambda_zero_sum_range(1, n_max, *twin, tail, ctx, par);

  for (long n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    const BigFloat& l = lam[i].value.value;
    r.lambda.push_back(l);
    r.excess.push_back(lam0.empty() ? l : l - lam0[i].value.value);
    std::optional<BigFloat> off;
    if (twin) off = l - lamt[i].value.value;
    if (!r.first_negative && l.sign() < 0) r.first_negative = n;
    if (!r.onset && off && abs(*off) > 1) r.onset = n;
    r.offaxis.push_back(std::move(off));
  }

  r.theory = predict_rh_false(0, {r.tau}, ctx);
  const long window = std::min<long>(n_max, std::max<long>(n_max / 4, 16));
  r.fit_from = n_max - window + 1;
  const std::vector<BigFloat> top(r.excess.end() - window, r.excess.end());
  try {
    r.fit = fit_growth_rate_auto(top, 5, std::max<long>(1, window / 64), ctx.bits);
  } catch (const Error&) {
    r.fit.reset();
  }
  return r;
}

}  // namespace lilab
