// Acceptance run: one PASS/FAIL line per criterion on stdout.
//   acceptance --zeros-100k PATH [--zeros-100 PATH] [--expect-fail N]...
// Exit 0 when every failing criterion was listed with --expect-fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lilab/asymptotics.hpp"
#include "lilab/cumulants.hpp"
#include "lilab/errors.hpp"
#include "lilab/li.hpp"
#include "lilab/numerics.hpp"
#include "lilab/sandbox.hpp"
#include "lilab/secondary_zeta.hpp"
#include "lilab/zeros.hpp"

using namespace lilab;

namespace {

enum class Outcome { pass, fail, warn };

struct Result {
  Outcome outcome = Outcome::fail;
  std::string detail;
};

PrecisionContext bits(long b) {
  PrecisionContext c;
  c.bits = b;
  return c;
}

std::string sci(const BigFloat& v, int digits = 3) { return v.to_string(digits); }
std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Tables {
  std::string path_100k;
  std::string path_100;
  const ZeroTable& big() {
    if (big_.empty()) big_ = load_zeros(path_100k);
    return big_;
  }
  const ZeroTable& small() {
    if (small_.empty()) small_ = load_zeros(path_100);
    return small_;
  }

 private:
  ZeroTable big_, small_;
};

// 1 --------------------------------------------------------------------------
Result cross_method(Tables& tb) {
  const ZeroTable& t = tb.big();
  if (t.size() < 100000) return {Outcome::fail, "table has " + std::to_string(t.size()) + " zeros"};
  const auto ctx = bits(precision_for(100));
  const TailModel tail;
  const auto a = lambda_zero_sum_range(1, 100, t, tail, ctx);
  const auto z = z_integers(100, t, tail, ctx);
  double worst_ratio = 0, worst_rel = 0;
  long bad = 0;
  for (long n = 1; n <= 100; ++n) {
    const auto& va = a[n - 1].value;
    const auto vb = lambda_binomial(n, z, ctx).value;
    const BigFloat diff = abs(va.value - vb.value);
    const BigFloat comb = va.abs_error + vb.abs_error;
    worst_ratio = std::max(worst_ratio, (diff / comb).to_double());
    if (diff > comb) ++bad;
    if (n <= 40) {
      const double rel = (diff / abs(vb.value)).to_double();
      worst_rel = std::max(worst_rel, rel);
      if (rel > 1e-4) ++bad;
    }
  }
  return {bad == 0 ? Outcome::pass : Outcome::fail,
          "n=1..100, |A-B|/(errA+errB) max " + sci(worst_ratio) + ", relative max (n<=40) " + sci(worst_rel)};
}

// 2 --------------------------------------------------------------------------
Result zero_free(Tables& tb) {
  const auto ctx = bits(160);
  const auto c = lambda_cauchy_range(1, 16, CauchyOptions{}, ctx);
  const auto bctx = bits(std::max<long>(precision_for(16), 160));
  const auto z = z_integers(16, tb.big(), TailModel{}, bctx);
  double worst = 0;
  for (long n = 1; n <= 16; ++n) {
    const auto b = lambda_binomial(n, z, bctx).value;
    worst = std::max(worst, (abs(c[n - 1].value.value - b.value) / abs(b.value)).to_double());
  }
  return {worst <= 1e-6 ? Outcome::pass : Outcome::fail, "n=1..16, relative max " + sci(worst)};
}

// 3 --------------------------------------------------------------------------
Result residues(Tables&) {
  long coefficients = 0;
  for (long n = 1; n <= 50; ++n) {
    const auto c = residue_identity_check(n);
    if (!c.equal || c.binomial_side != c.residue_side) return {Outcome::fail, "mismatch at n=" + std::to_string(n)};
    coefficients += static_cast<long>(c.binomial_side.size());
  }
  return {Outcome::pass, "n=1..50, " + std::to_string(coefficients) + " coefficients equal as rationals"};
}

// 4 --------------------------------------------------------------------------
Result rh_true(Tables& tb) {
  const auto ctx = bits(128);
  const auto lam = lambda_zero_sum_range(500, 2000, tb.big(), TailModel{}, ctx);
  auto at = [&](long n) -> const BigFloat& { return lam[static_cast<std::size_t>(n - 500)].value.value; };
  bool ok = true;
  std::ostringstream os;
  os << "relative deviation";
  for (long n : {500L, 1000L, 2000L}) {
    const BigFloat rel = abs(at(n) - predict_riemann(n, ctx)) / at(n);
    os << " n=" << n << ": " << sci(rel);
    if (rel > 0.05) ok = false;
  }
  BigFloat without(0, 128), with(0, 128);
  for (long n = 1000; n <= 2000; ++n) {
    without += at(n) - predict_riemann(n, ctx);
    with += at(n) - predict_riemann(n, ctx, true);
  }
  without /= 1001L;
  with /= 1001L;
  if (!(abs(with) < abs(without))) ok = false;
  os << "; mean signed deviation on [1000,2000] " << sci(without) << " without 7/4, " << sci(with) << " with";
  return {ok ? Outcome::pass : Outcome::fail, os.str()};
}

// 5 --------------------------------------------------------------------------
Result polar(Tables& tb) {
  const auto ctx = bits(256);
  const mpfr_prec_t wp = ctx.working_bits();
  const BigFloat pi = BigFloat::pi(wp);
  TailModel a, b;
  a.cutoff = BigFloat(100, wp);
  b.cutoff = BigFloat(70000, wp);
  const PolarData pa = polar_coefficients(a, ctx), pb = polar_coefficients(b, ctx);
  const BigFloat r2 = 1 / (pi * 8), r1 = -log(pi * 2) / (pi * 4);
  const BigFloat tol = BigFloat::two_pow(-ctx.bits, wp);
  bool ok = abs(pa.R_minus2 - r2) <= tol * r2 && abs(pa.R_minus1 - r1) <= tol * abs(r1) && pa.R_minus2 == pb.R_minus2 &&
            pa.R_minus1 == pb.R_minus1;
  const auto z0 = z_continued(BigFloat(0, wp), tb.big(), TailModel{}, bits(128));
  ok = ok && z0.value >= 0.775 && z0.value <= 0.975;
  return {ok ? Outcome::pass : Outcome::fail, "R_-2 = " + sci(pa.R_minus2, 12) + ", R_-1 = " + sci(pa.R_minus1, 12) +
                                                  " (T=100 and T=70000 identical), Z(0) = " + sci(z0.value, 5) +
                                                  " +- " + sci(z0.abs_error, 2)};
}

// 6 --------------------------------------------------------------------------
Result rh_false(Tables& tb) {
  const auto ctx = bits(128);
  const mpfr_prec_t wp = ctx.working_bits();
  const BigComplex tau(50.0, 2.0, wp);
  const SandboxRun r = run_sandbox(ordinates_of(tb.small()), tau, 4000, ctx);
  const BigFloat target = log(abs(BigComplex(50.0, 2.5, wp)) / abs(BigComplex(50.0, 1.5, wp)));
  std::ostringstream os;
  bool rate_ok = false, neg_ok = r.first_negative.has_value(), onset_ok = false;
  os << r.pairs << " pairs; ";
  if (r.fit) {
    const BigFloat rel = abs(r.fit->rate - target) / target;
    rate_ok = rel <= 0.05;
    os << "rate " << sci(r.fit->rate, 6) << " vs " << sci(target, 6) << " (rel " << sci(rel) << ") "
       << (rate_ok ? "ok" : "off") << "; ";
  } else {
    os << "rate fit unavailable; ";
  }
  os << "negative lambda_n for n<=4000: "
     << (neg_ok ? "at n=" + std::to_string(*r.first_negative) : std::string("none")) << "; ";
  const double predicted = r.theory.n_onset.to_double();
  if (r.onset) {
    const double m = static_cast<double>(*r.onset);
    onset_ok = m >= predicted / 2 && m <= predicted * 2;
    os << "onset " << *r.onset << " vs " << sci(predicted) << (onset_ok ? " ok" : " off");
  } else {
    os << "no onset";
  }
  return {rate_ok && neg_ok && onset_ok ? Outcome::pass : Outcome::fail, os.str()};
}

// 7 --------------------------------------------------------------------------
Result cumulants(Tables&) {
  const auto ctx = bits(128);
  const BigFloat g = BigFloat::euler_gamma(256);
  const auto st = stieltjes_constants(4, ctx);
  const BigFloat e1 = abs(cumulant_series(1, st, ctx).g.value - g);
  const auto t0 = std::chrono::steady_clock::now();
  const auto p = cumulant_prime_sum(1, 100'000'000);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const BigFloat e2 = abs(p.g.value - g);
  const bool ok = e1 <= 1e-20 && e2 <= 0.05 && secs < 120;
  return {ok ? Outcome::pass : Outcome::fail, "series |g_1 - gamma| = " + sci(e1) + ", prime sum (M=1e8, " +
                                                  sci(secs) + " s) |g_1 - gamma| = " + sci(e2)};
}

// 8 --------------------------------------------------------------------------
struct Sample {
  std::string name;
  BigFloat diff, err;
};

Result doubling(Tables& tb) {
  std::mt19937_64 rng(20240601);
  auto uni = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
  auto pick = [&](long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng); };
  const ZeroTable& t = tb.small();
  const TailModel tail;

  auto complex_pair = [](const ComplexValueWithError& lo, const ComplexValueWithError& hi) {
    return std::make_pair(abs(lo.value - hi.value), lo.abs_error);
  };
  using Check = std::function<Sample()>;
  std::vector<Check> kinds = {
      [&] {
        const BigComplex s(uni(-3, 5), uni(1, 60), 256);
        auto [d, e] = complex_pair(log_gamma(s, bits(128)), log_gamma(s, bits(256)));
        return Sample{"log_gamma", d, e};
      },
      [&] {
        const BigComplex s(uni(-3, 5), uni(1, 60), 256);
        auto [d, e] = complex_pair(digamma(s, bits(128)), digamma(s, bits(256)));
        return Sample{"digamma", d, e};
      },
      [&] {
        const BigComplex s(uni(-2, 4), uni(1, 60), 256);
        auto [d, e] = complex_pair(zeta_em(s, bits(128)), zeta_em(s, bits(256)));
        return Sample{"zeta", d, e};
      },
      [&] {
        const BigComplex s(uni(1.2, 4), uni(0, 30), 256);
        auto [d, e] = complex_pair(zeta_log_deriv(s, bits(128)), zeta_log_deriv(s, bits(256)));
        return Sample{"zeta_log_deriv", d, e};
      },
      [&] {
        const BigComplex s(uni(1.2, 4), uni(0, 30), 256);
        auto [d, e] = complex_pair(xi_log_deriv(s, bits(128)), xi_log_deriv(s, bits(256)));
        return Sample{"xi_log_deriv", d, e};
      },
      [&] {
        const BigFloat x(uni(20, 200), 256);
        const auto lo = hardy_z(x, bits(128)), hi = hardy_z(x, bits(256));
        return Sample{"hardy_z", abs(lo.value - hi.value), lo.abs_error};
      },
      [&] {
        const BigComplex s(uni(0.6, 3), uni(0, 30), 256);
        auto [d, e] = complex_pair(z_eval(s, t, tail, bits(128)), z_eval(s, t, tail, bits(256)));
        return Sample{"z_eval", d, e};
      },
      [&] {
        const long j = pick(1, 30);
        const auto lo = z_integer(j, t, tail, bits(128)), hi = z_integer(j, t, tail, bits(256));
        return Sample{"z_integer", abs(lo.value - hi.value), lo.abs_error};
      },
      [&] {
        const long n = pick(1, 500);
        const auto lo = lambda_zero_sum(n, t, tail, bits(128)), hi = lambda_zero_sum(n, t, tail, bits(256));
        return Sample{"lambda_zero_sum", abs(lo.value.value - hi.value.value), lo.value.abs_error};
      },
      [&] {
        const long n = pick(1, 60);
        const auto c1 = bits(precision_for(n)), c2 = c1.doubled();
        const auto lo = lambda_binomial(n, z_integers(n, t, tail, c1), c1);
        const auto hi = lambda_binomial(n, z_integers(n, t, tail, c2), c2);
        return Sample{"lambda_binomial", abs(lo.value.value - hi.value.value), lo.value.abs_error};
      },
      [&] {
        const long n = pick(1, 16);
        const auto lo = lambda_cauchy(n, CauchyOptions{}, bits(128)), hi = lambda_cauchy(n, CauchyOptions{}, bits(256));
        return Sample{"lambda_cauchy", abs(lo.value.value - hi.value.value), lo.value.abs_error};
      },
      [&] {
        const long m = pick(0, 60);
        const auto lo = stieltjes_constants(m, bits(128)), hi = stieltjes_constants(m, bits(256));
        return Sample{"stieltjes", abs(lo.gammas[m] - hi.gammas[m]), lo.errors[m]};
      },
      [&] {
        const long n = pick(1, 40);
        const auto c1 = bits(128), c2 = c1.doubled();
        const auto lo = cumulant_series(n, stieltjes_constants(n, c1), c1);
        const auto hi = cumulant_series(n, stieltjes_constants(n, c2), c2);
        return Sample{"cumulant", abs(lo.g.value - hi.g.value), lo.g.abs_error};
      },
      [&] {
        const long n = pick(1, 60);
        const auto c1 = bits(s_n_precision(n)), c2 = c1.doubled();
        const auto lo = s_n(n, stieltjes_constants(n, c1), c1);
        const auto hi = s_n(n, stieltjes_constants(n, c2), c2);
        return Sample{"s_n", abs(lo.value - hi.value), lo.abs_error};
      },
  };

  long passed = 0;
  std::ostringstream os, bad;
  std::set<std::string> used;
  for (int i = 0; i < 20; ++i) {
    const auto k = static_cast<std::size_t>(pick(0, static_cast<long>(kinds.size()) - 1));
    const Sample s = kinds[k]();
    used.insert(s.name);
    if (s.diff <= s.err) {
      ++passed;
    } else {
      bad << " " << s.name << "(" << sci(s.diff) << " > " << sci(s.err) << ")";
    }
  }
  os << passed << "/20 within abs_error across " << used.size() << " functions";
  if (passed < 20) os << ";" << bad.str();
  return {passed == 20 ? Outcome::pass : Outcome::fail, os.str()};
}

// 9 --------------------------------------------------------------------------
Result sn_trend(Tables&) {
  const auto ctx = bits(s_n_precision(500));
  const auto st = stieltjes_constants(500, ctx);
  const BigFloat a = abs(s_n(50, st, ctx).value) / 50;
  const BigFloat b = abs(s_n(500, st, ctx).value) / 500;
  return {b < a ? Outcome::pass : Outcome::warn, "|S_50|/50 = " + sci(a, 6) + ", |S_500|/500 = " + sci(b, 6)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  Tables tb;
  std::vector<int> expect_fail;
  std::vector<int> only;
  tb.path_100 = LILAB_DATA_DIR "/zeros_100.txt";
  app.add_option("--zeros-100k", tb.path_100k, "table with at least 100000 ordinates")->required();
  app.add_option("--zeros-100", tb.path_100, "table of the first 100 ordinates");
  app.add_option("--expect-fail", expect_fail, "criteria known to fail; they do not change the exit code");
  app.add_option("--only", only, "run only these criteria");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Result(Tables&)>>> criteria = {
      {"cross-method equivalence", cross_method},
      {"zero-free cross-check", zero_free},
      {"residue identity", residues},
      {"RH-true asymptotics", rh_true},
      {"polar data", polar},
      {"RH-false dichotomy", rh_false},
      {"cumulants", cumulants},
      {"precision doubling", doubling},
      {"S_n trend (exploratory)", sn_trend},
  };

  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].second(tb);
    } catch (const std::exception& e) {
      r = {Outcome::fail, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool expected = std::find(expect_fail.begin(), expect_fail.end(), id) != expect_fail.end();
    const char* tag = r.outcome == Outcome::pass ? "PASS" : r.outcome == Outcome::warn ? "WARN" : "FAIL";
    std::printf("[%s] %d %s: %s (%.1f s)%s\n", tag, id, criteria[i].first.c_str(), r.detail.c_str(), secs,
                r.outcome == Outcome::fail && expected ? " [expected]" : "");
    std::fflush(stdout);
    if (r.outcome == Outcome::fail && !expected) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
