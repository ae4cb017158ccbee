// li_lab: Li coefficients, secondary zeta values, asymptotic comparisons and
// Stieltjes cumulants from the command line.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lilab/asymptotics.hpp"
#include "lilab/cumulants.hpp"
#include "lilab/errors.hpp"
#include "lilab/li.hpp"
#include "lilab/run_config.hpp"
#include "lilab/sandbox.hpp"
#include "lilab/secondary_zeta.hpp"
#include "lilab/zeros.hpp"
#include "output.hpp"

using namespace lilab;
using li_lab::emit;
using li_lab::fmt;
using li_lab::Table;

namespace {

constexpr int kExitDeviation = 1;
constexpr int kExitInput = 2;
constexpr int kExitUsage = 64;

struct UsageError {
  std::string message;
};

Parallelism parallelism(const RunConfig& c) { return c.serial ? Parallelism::serial : Parallelism::openmp; }

PrecisionContext context(const RunConfig& c) {
  PrecisionContext ctx;
  ctx.bits = c.effective_bits;
  ctx.validate();
  return ctx;
}

std::string resolve_zeros(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LI_LAB_ZEROS"); env && *env) return env;
  return LILAB_DEFAULT_ZEROS;
}

TailModel tail_model(const RunConfig& c) {
  TailModel t;
  if (!c.tail_T.empty()) t.cutoff = BigFloat::parse(c.tail_T, 128);
  t.expansion_order = c.tail_K;
  t.window_lo = c.window_lo;
  t.window_hi = c.window_hi;
  t.window_cutoffs = c.window_cutoffs;
  t.validate();
  return t;
}

// "a", "a+bi", "a-bi", "bi", "i", "-i".
BigComplex parse_complex(std::string text, mpfr_prec_t prec) {
  text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
  if (text.empty()) throw UsageError{"empty complex number"};
  auto real = [&](const std::string& s) {
    try {
      return BigFloat::parse(s, prec);
    } catch (const Error&) {
      throw UsageError{"malformed number '" + s + "'"};
    }
  };
  if (text.back() != 'i') return BigComplex(real(text));
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? BigFloat(prec) : real(re), real(im)};
}

void check_range(const RunConfig& c) {
  if (c.from < 1 || c.to < c.from || c.step < 1)
    throw UsageError{"empty or invalid n range [" + std::to_string(c.from) + ", " + std::to_string(c.to) + "] step " +
                     std::to_string(c.step)};
}

bool selected(const RunConfig& c, long n) { return (n - c.from) % c.step == 0; }

void finish(const Table& t, const RunConfig& c, const std::string& title) {
  emit(t, c, std::cout);
  if (c.plot && !t.plot_columns.empty()) {
    const std::string prefix = c.plot_prefix.empty() ? "li_lab_" + title : c.plot_prefix;
    li_lab::write_plot(t, prefix, title);
    std::cerr << "plot: " << prefix << ".gp\n";
  }
}

// zeros validate ------------------------------------------------------------

int cmd_zeros_validate(RunConfig& c) {
  const ZeroTable table = load_zeros(c.zeros_path);
  double worst = 0, worst_allowed = 0;
  const std::vector<double> t = table.ordinates();
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double dev = std::abs(static_cast<double>(k + 1) - smooth_count(t[k]));
    if (dev > worst) {
      worst = dev;
      worst_allowed = density_band(t[k]);
    }
  }
  Table out;
  out.columns = {"status", "count", "T", "digits", "checksum_sha256", "max_count_deviation", "band_at_max"};
  out.rows.push_back({"OK", std::to_string(table.size()), fmt(table.height(), 15),
                      std::to_string(table.source().digits), table.source().checksum_sha256, std::to_string(worst),
                      std::to_string(worst_allowed)});
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", table.height().to_double());
  std::cerr << "OK, " << table.size() << " zeros, T≈" << buf << "\n";
  finish(out, c, "zeros");
  return 0;
}

// z eval --------------------------------------------------------------------

int cmd_z_eval(RunConfig& c) {
  if (c.sigma.empty()) throw UsageError{"z eval needs --sigma"};
  const PrecisionContext ctx = context(c);
  const ZeroTable table = load_zeros(c.zeros_path);
  const TailModel tail = tail_model(c);
  const BigComplex sigma = parse_complex(c.sigma, ctx.working_bits());
  const int d = c.output_digits();
  Table out;
  out.columns = {"sigma_re", "sigma_im", "value_re", "value_im", "abs_error", "kind", "route"};
  if (sigma.is_real() && sigma.re < 0.5 && sigma.re > -0.25) {
    const ValueWithError v = z_continued(sigma.re, table, tail, ctx, parallelism(c));
    out.rows.push_back({fmt(sigma.re, d), "0", fmt(v.value, d), "0", fmt(v.abs_error, 6), to_string(v.kind),
                        "cutoff_average"});
  } else {
    const bool cont = !(sigma.re > 0.5);
    const ComplexValueWithError v = z_eval(sigma, table, tail, ctx, cont, parallelism(c));
    out.rows.push_back({fmt(sigma.re, d), fmt(sigma.im, d), fmt(v.value.re, d), fmt(v.value.im, d),
                        fmt(v.abs_error, 6), to_string(v.kind), cont ? "continued" : "direct"});
  }
  finish(out, c, "z");
  return 0;
}

// lambda --------------------------------------------------------------------

int cmd_lambda(RunConfig& c) {
  check_range(c);
  if (c.method.empty()) c.method = "zero-sum";
  const std::vector<std::string> known = {"zero-sum", "binomial", "cauchy", "all"};
  if (std::find(known.begin(), known.end(), c.method) == known.end())
    throw UsageError{"unknown method '" + c.method + "'"};
  const bool want_zs = c.method == "zero-sum" || c.method == "all";
  const bool want_bin = c.method == "binomial" || c.method == "all";
  const bool want_cau = c.method == "cauchy" || c.method == "all";
  if (want_bin) c.effective_bits = std::max(c.effective_bits, precision_for(c.to));
  const PrecisionContext ctx = context(c);
  const CauchyOptions copts;
  const Parallelism par = parallelism(c);

  std::optional<ZeroTable> table;
  if (want_zs || want_bin) table = load_zeros(c.zeros_path);
  const TailModel tail = tail_model(c);

  std::vector<LambdaValue> zs, bin, cau;
  if (want_zs) zs = lambda_zero_sum_range(c.from, c.to, *table, tail, ctx, par);
  if (want_bin) {
    const std::vector<ValueWithError> z = z_integers(c.to, *table, tail, ctx, par);
    for (long n = c.from; n <= c.to; ++n) bin.push_back(lambda_binomial(n, z, ctx));
  }
  const long cau_to = c.method == "all" ? std::min(c.to, copts.max_n) : c.to;
  if (want_cau && c.from <= cau_to) cau = lambda_cauchy_range(c.from, cau_to, copts, ctx, par);

  const int d = c.output_digits();
  Table out;
  out.columns = {"n", "method", "value", "abs_error", "kind"};
  auto add = [&](const std::vector<LambdaValue>& vs) {
    for (const auto& v : vs)
      if (selected(c, v.n))
        out.rows.push_back({std::to_string(v.n), to_string(v.method), fmt(v.value.value, d),
                            fmt(v.value.abs_error, 6), to_string(v.value.kind)});
  };
  add(zs);
  add(bin);
  add(cau);

  int exit_code = 0;
  long checked = 0, violations = 0;
  auto compare = [&](const std::vector<LambdaValue>& a, const std::vector<LambdaValue>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      if (!selected(c, a[i].n)) continue;
      const BigFloat diff = a[i].value.value - b[i].value.value;
      const BigFloat tol = a[i].value.abs_error + b[i].value.abs_error;
      const bool ok = abs(diff) <= tol;
      ++checked;
      if (!ok) ++violations;
      out.rows.push_back({std::to_string(a[i].n), std::string(to_string(a[i].method)) + "-" + to_string(b[i].method),
                          fmt(diff, d), fmt(tol, 6), ok ? "within" : "exceeds"});
    }
  };
  if (c.method == "all") {
    compare(zs, bin);
    compare(cau, bin);
    compare(zs, cau);
    out.summary.push_back({"pairwise_checks", std::to_string(checked)});
    out.summary.push_back({"exceeding_combined_error", std::to_string(violations)});
    if (c.to > copts.max_n) out.summary.push_back({"cauchy_limit", std::to_string(copts.max_n)});
    if (violations > 0) exit_code = kExitDeviation;
  }
  out.plot_columns = {"value"};
  finish(out, c, "lambda");
  return exit_code;
}

// compare -------------------------------------------------------------------

int cmd_compare(RunConfig& c) {
  check_range(c);
  const PrecisionContext ctx = context(c);
  const ZeroTable table = load_zeros(c.zeros_path);
  const TailModel tail = tail_model(c);
  const std::vector<LambdaValue> lam = lambda_zero_sum_range(c.from, c.to, table, tail, ctx, parallelism(c));
  const int d = c.output_digits();
  const mpfr_prec_t wp = ctx.working_bits();
  Table out;
  out.columns = {"n", "lambda", "abs_error", "predictor", "difference", "relative_difference"};
  std::vector<std::pair<long, BigFloat>> dev;  // lambda - predictor without the 7/4 term
  BigFloat worst_rel(wp);
  for (const auto& v : lam) {
    if (!selected(c, v.n)) continue;
    const BigFloat p = predict_riemann(v.n, ctx, c.delta);
    const BigFloat diff = v.value.value - p;
    const BigFloat rel = diff / v.value.value;
    worst_rel = max(worst_rel, abs(rel));
    out.rows.push_back({std::to_string(v.n), fmt(v.value.value, d), fmt(v.value.abs_error, 6), fmt(p, d),
                        fmt(diff, d), fmt(rel, 10)});
    dev.emplace_back(v.n, v.value.value - predict_riemann(v.n, ctx, false));
  }
  out.summary.push_back({"max_relative_difference", fmt(worst_rel, 10)});
  if (dev.size() >= 8 && c.to >= 100) {
    const std::size_t half = dev.size() / 2;
    BigFloat without(wp);
    for (std::size_t i = half; i < dev.size(); ++i) without += dev[i].second;
    without /= static_cast<long>(dev.size() - half);
    const BigFloat with = without - delta_term(wp);
    out.summary.push_back({"mean_window", std::to_string(dev[half].first) + ".." + std::to_string(dev.back().first)});
    out.summary.push_back({"mean_signed_deviation_without_delta", fmt(without, 12)});
    out.summary.push_back({"mean_signed_deviation_with_delta", fmt(with, 12)});
    out.summary.push_back({"delta_improves_mean", abs(with) < abs(without) ? "yes" : "no"});
  } else {
    out.summary.push_back({"mean_signed_deviation", "range too small"});
  }
  out.plot_columns = {"lambda", "predictor"};
  finish(out, c, "compare");
  return 0;
}

// sandbox -------------------------------------------------------------------

int cmd_sandbox(RunConfig& c) {
  if (c.tau_star.empty()) throw UsageError{"sandbox needs --tau-star"};
  if (c.from < 1) c.from = 1;
  check_range(c);
  const PrecisionContext ctx = context(c);
  const BigComplex tau = parse_complex(c.tau_star, ctx.working_bits());
  if (c.base.empty()) c.base = c.zeros_path;
  std::vector<BigComplex> base_taus;
  if (c.base != "none") base_taus = ordinates_of(load_zeros(c.base));
  const SandboxRun r = run_sandbox(base_taus, tau, c.to, ctx, parallelism(c));

  const int d = c.output_digits();
  Table out;
  out.columns = {"n", "lambda", "rh_true_predictor", "rh_false_predictor", "deviation", "excess", "offaxis_deviation"};
  for (long n = c.from; n <= c.to; ++n) {
    if (!selected(c, n)) continue;
    const auto i = static_cast<std::size_t>(n - 1);
    const BigFloat& l = r.lambda[i];
    const BigFloat pr = predict_riemann(n, ctx);
    const BigFloat pf = predict_rh_false(n, {r.tau}, ctx).value;
    out.rows.push_back({std::to_string(n), fmt(l, d), fmt(pr, d), fmt(pf, d), fmt(abs(l - pr), d),
                        fmt(r.excess[i], d), r.offaxis[i] ? fmt(*r.offaxis[i], d) : "n/a"});
  }

  const BigFloat& rate = r.theory.growth_rates[0];
  out.summary.push_back(
      {"tau_star", r.tau.re.to_string(12) + (r.tau.im.sign() < 0 ? "" : "+") + r.tau.im.to_string(12) + "i"});
  out.summary.push_back({"pairs", std::to_string(r.pairs)});
  out.summary.push_back({"theoretical_rate", fmt(rate, 12)});
  if (r.fit) {
    out.summary.push_back({"fit_window", std::to_string(r.fit_from) + ".." + std::to_string(c.to)});
    out.summary.push_back({"fit_order", std::to_string(r.fit->order)});
    out.summary.push_back({"fitted_rate", fmt(r.fit->rate, 12)});
    out.summary.push_back({"rate_relative_error", fmt(abs(r.fit->rate - rate) / rate, 6)});
  } else {
    out.summary.push_back({"fitted_rate", "unavailable"});
  }
  out.summary.push_back({"first_negative_n", r.first_negative ? std::to_string(*r.first_negative) : "none"});
  out.summary.push_back({"n_onset_predicted", fmt(r.theory.n_onset, 10)});
  out.summary.push_back({"onset_measured", r.onset ? std::to_string(*r.onset) : "none"});
  out.plot_columns = {"lambda", "excess", "offaxis_deviation"};
  finish(out, c, "sandbox");
  return 0;
}

// cumulants / sn ------------------------------------------------------------

StieltjesTable stieltjes_for(const RunConfig& c, const PrecisionContext& ctx) {
  if (!c.stieltjes_path.empty()) return load_stieltjes(c.stieltjes_path, ctx.working_bits());
  return stieltjes_constants(c.to, ctx, parallelism(c));
}

int cmd_cumulants(RunConfig& c) {
  check_range(c);
  c.effective_bits = std::max(c.effective_bits, s_n_precision(c.to));
  const PrecisionContext ctx = context(c);
  const StieltjesTable st = stieltjes_for(c, ctx);
  const std::vector<CumulantValue> g = cumulant_series_range(c.to, st, ctx);
  const int d = c.output_digits();
  Table out;
  out.columns = {"n", "g_series", "g_series_error", "g_prime_sum", "g_prime_sum_error", "eta", "S_n", "S_n_error",
                 "S_n_over_n"};
  for (long n = c.from; n <= c.to; ++n) {
    if (!selected(c, n)) continue;
    const CumulantValue& gv = g[static_cast<std::size_t>(n - 1)];
    std::string gp = "", gpe = "";
    if (c.prime_sum > 0) {
      const CumulantValue p = cumulant_prime_sum(n, c.prime_sum, parallelism(c));
      gp = fmt(p.g.value, 15);
      gpe = fmt(p.g.abs_error, 6);
    }
    const ValueWithError s = s_n(n, st, ctx);
    out.rows.push_back({std::to_string(n), fmt(gv.g.value, d), fmt(gv.g.abs_error, 6), gp, gpe,
                        fmt(eta_from_cumulant(gv).value, d), fmt(s.value, d), fmt(s.abs_error, 6),
                        fmt(s.value / n, d)});
  }
  out.summary.push_back({"stieltjes_provenance", to_string(st.provenance)});
  out.summary.push_back({"stieltjes_digits", std::to_string(st.digits)});
  if (st.provenance == Provenance::computed) {
    out.summary.push_back({"summation_length", std::to_string(st.summation_length)});
    out.summary.push_back({"correction_terms", std::to_string(st.correction_terms)});
  }
  out.plot_columns = {"S_n_over_n"};
  finish(out, c, "cumulants");
  return 0;
}

int cmd_sn(RunConfig& c) {
  check_range(c);
  c.effective_bits = std::max(c.effective_bits, s_n_precision(c.to));
  const PrecisionContext ctx = context(c);
  const StieltjesTable st = stieltjes_for(c, ctx);
  const int d = c.output_digits();
  Table out;
  out.columns = {"n", "S_n", "abs_error", "S_n_over_n"};
  std::optional<BigFloat> first, last;
  for (long n = c.from; n <= c.to; ++n) {
    if (!selected(c, n)) continue;
    const ValueWithError s = s_n(n, st, ctx);
    const BigFloat ratio = s.value / n;
    if (!first) first = abs(ratio);
    last = abs(ratio);
    out.rows.push_back({std::to_string(n), fmt(s.value, d), fmt(s.abs_error, 6), fmt(ratio, d)});
  }
  if (first && last) {
    out.summary.push_back({"abs_S_over_n_first", fmt(*first, 10)});
    out.summary.push_back({"abs_S_over_n_last", fmt(*last, 10)});
    out.summary.push_back({"trend", *last < *first ? "decreasing" : "not decreasing"});
  }
  out.plot_columns = {"S_n_over_n"};
  finish(out, c, "sn");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"li_lab: Li coefficients and the secondary zeta function"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  std::string format = "csv";
  app.add_option("--bits", c.bits, "precision in bits")->check(CLI::Range(64L, 1L << 20));
  app.add_option("--zeros", c.zeros_path, "zeros file (default: $LI_LAB_ZEROS, then the bundled table)");
  app.add_option("--tail-T", c.tail_T, "tail cutoff T");
  app.add_option("--tail-K", c.tail_K, "tail expansion order")->check(CLI::Range(1, 64));
  app.add_option("--window-lo", c.window_lo, "cutoff window start, fraction of T");
  app.add_option("--window-hi", c.window_hi, "cutoff window end, fraction of T");
  app.add_option("--window-cutoffs", c.window_cutoffs, "cutoffs averaged");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--plot", c.plot, "write a gnuplot data file and script");
  app.add_option("--plot-prefix", c.plot_prefix, "plot file prefix");
  app.add_flag("--serial", c.serial, "single-threaded kernels");

  auto* zeros = app.add_subcommand("zeros", "zero tables");
  zeros->require_subcommand(1);
  zeros->fallthrough();
  std::string validate_path;
  auto* validate = zeros->add_subcommand("validate", "load and validate a zeros file");
  validate->add_option("path", validate_path, "zeros file");

  auto* z = app.add_subcommand("z", "secondary zeta");
  z->require_subcommand(1);
  z->fallthrough();
  auto* zeval = z->add_subcommand("eval", "Z(sigma)");
  zeval->add_option("--sigma", c.sigma, "sigma, real or a+bi")->required();

  auto add_range = [&](CLI::App* s, bool from_required) {
    auto* f = s->add_option("--from", c.from, "first n");
    if (from_required) f->required();
    s->add_option("--to", c.to, "last n")->required();
    s->add_option("--step", c.step, "stride in n");
  };
  auto* lambda = app.add_subcommand("lambda", "Li coefficients");
  add_range(lambda, false);
  lambda->add_option("--method", c.method, "zero-sum, binomial, cauchy or all");

  auto* compare = app.add_subcommand("compare", "lambda_n against the RH-true asymptotic form");
  add_range(compare, false);
  compare->add_flag("--delta", c.delta, "add the 7/4 term");

  auto* sandbox = app.add_subcommand("sandbox", "inject an off-axis zero");
  sandbox->add_option("--tau-star", c.tau_star, "off-axis tau, e.g. 50+2i")->required();
  sandbox->add_option("--base", c.base, "base zeros file or 'none' (default: --zeros)");
  add_range(sandbox, false);

  auto* cumulants = app.add_subcommand("cumulants", "Stieltjes cumulants g_n");
  add_range(cumulants, false);
  cumulants->add_option("--prime-sum", c.prime_sum, "also evaluate the prime sum up to M");
  cumulants->add_option("--stieltjes", c.stieltjes_path, "precomputed Stieltjes constants file");

  auto* sn = app.add_subcommand("sn", "S_n");
  add_range(sn, false);
  sn->add_option("--stieltjes", c.stieltjes_path, "precomputed Stieltjes constants file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  c.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  c.effective_bits = c.bits;
  try {
    if (*validate) {
      c.command = "zeros validate";
      c.zeros_path = resolve_zeros(validate_path.empty() ? c.zeros_path : validate_path);
      return cmd_zeros_validate(c);
    }
    c.zeros_path = resolve_zeros(c.zeros_path);
    if (*zeval) return c.command = "z eval", cmd_z_eval(c);
    if (*lambda) return c.command = "lambda", cmd_lambda(c);
    if (*compare) return c.command = "compare", cmd_compare(c);
    if (*sandbox) return c.command = "sandbox", cmd_sandbox(c);
    if (*cumulants) return c.command = "cumulants", cmd_cumulants(c);
    if (*sn) return c.command = "sn", cmd_sn(c);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}
