#include <cmath>
#include <vector>

#include "lilab/asymptotics.hpp"
#include "lilab/errors.hpp"
#include "lilab/run_config.hpp"
#include "support.hpp"

using namespace lilab;
using lilab_test::close;
using lilab_test::data_file;
using lilab_test::num;

namespace {

PrecisionContext bits(long b) {
  PrecisionContext c;
  c.bits = b;
  return c;
}

const ZeroTable& table100() {
  static const ZeroTable t = load_zeros(data_file("zeros_100.txt"));
  return t;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return ErrorCode::parse;
}

}  // namespace

TEST_CASE("Riemann predictor") {
  const auto ctx = bits(128);
  const mpfr_prec_t p = 256;
  for (long n : {1L, 10L, 100L, 5000L}) {
    const BigFloat ln = log(BigFloat(n, p));
    const BigFloat expected =
        BigFloat(n, p) / 2 * (ln - log(BigFloat::pi(p) * 2) - 1 + BigFloat::euler_gamma(p));
    CHECK(close(predict_riemann(n, ctx), expected, num("1e-30")));
    CHECK(close(predict_riemann(n, ctx, true) - predict_riemann(n, ctx), "1.75", 1e-35));
  }
  CHECK(close(predict_riemann(100, ctx), "117.2254392", 1e-7));
  CHECK(close(delta_term(128), "1.75", 0));
}

TEST_CASE("general form with the Riemann polar data") {
  const auto ctx = bits(160);
  const PolarData polar = polar_coefficients(TailModel{}, ctx);
  for (long n : {1L, 7L, 1000L}) CHECK(close(predict_rh_true_general(n, polar, ctx), predict_riemann(n, ctx), num("1e-35")));
  // R_-1 = 0: (gamma - 1)/2 at n = 1 when R_-2 = 1/(8 pi)
  const PolarData no_r1{polar.R_minus2, BigFloat(0, 256)};
  CHECK(close(predict_rh_true_general(1, no_r1, ctx), (BigFloat::euler_gamma(256) - 1) / 2, num("1e-35")));
}

TEST_CASE("predictor object") {
  const auto ctx = bits(128);
  Predictor p;
  CHECK(close(p.evaluate(50, ctx), predict_riemann(50, ctx), num("1e-35")));
  p.kind = PredictorKind::rh_false;
  CHECK_THROWS_AS(p.validate(), Error);
  p.off_axis = {BigComplex(0.0, 1.0, 128)};
  CHECK_NOTHROW(p.validate());
  CHECK(close(p.evaluate(4, ctx), "81", 1e-30));
  CHECK(std::string(to_string(PredictorKind::rh_false)) == "rh_false");
}

TEST_CASE("RH false: tau = i gives powers of three") {
  const auto ctx = bits(128);
  const auto r = predict_rh_false(5, {BigComplex(0.0, 1.0, 128)}, ctx);
  CHECK(close(r.value, "243", 1e-30));
  CHECK(close(r.growth_rates[0], log(BigFloat(3, 256)), num("1e-35")));
  CHECK(close(r.n_onset, "1", 1e-35));
  CHECK(close(predict_rh_false(0, {BigComplex(0.0, 1.0, 128)}, ctx).value, "1", 1e-35));
}

TEST_CASE("RH false: a quadruple far up") {
  const auto ctx = bits(128);
  const BigComplex tau(50.0, 2.0, 128);
  const auto r = predict_rh_false(1000, {tau}, ctx);
  // log|w| ~ Im tau / |tau|^2 for large tau
  CHECK(std::fabs(r.growth_rates[0].to_double() / (2.0 / 2504.0) - 1) < 1e-4);
  CHECK(close(r.n_onset, "1252", 1e-30));
  // w^n + conj: twice the real part
  const BigComplex w = (tau + BigComplex(0.0, 0.5, 128)) / (tau - BigComplex(0.0, 0.5, 128));
  CHECK(close(r.value, pow(w, 1000L).re * 2, num("1e-25")));
  CHECK(code_of([&] { predict_rh_false(3, {BigComplex(50.0, 0.0, 128)}, ctx); }) == ErrorCode::precondition);
}

TEST_CASE("complex saddle eligibility") {
  const auto ctx = bits(128);
  const BigComplex tau(50.0, 2.0, 128);
  const auto early = saddle_complex(1000, tau, ctx);
  CHECK_FALSE(early.eligible);
  CHECK_FALSE(early.in_domain);
  const auto late = saddle_complex(2000, tau, ctx);
  CHECK(late.eligible);
  CHECK(late.in_domain);
  CHECK(close(late.sigma.re, num("4000") * 2 / 10016, num("1e-30")));
  CHECK(code_of([&] { saddle_complex(10, BigComplex(0.0, 0.0, 128), ctx); }) == ErrorCode::domain);
}

TEST_CASE("on-axis twin") {
  const BigComplex half(0.0, 0.5, 128);
  const BigComplex tau(50.0, 2.0, 128);
  const BigFloat t = on_axis_twin(tau, 128);
  const BigComplex twin(t, BigFloat(128));
  CHECK(close(arg((twin + half) / (twin - half)), arg((tau + half) / (tau - half)), num("1e-30")));
  CHECK(t > 40);
  CHECK(t < 60);
  CHECK(close(on_axis_twin(BigComplex(50.0, 1e-12, 128), 128), "50", 1e-9));
  CHECK(code_of([] { on_axis_twin(BigComplex(50.0, 0.0, 128), 128); }) == ErrorCode::precondition);
  CHECK_FALSE(on_axis_twin(BigComplex(0.0, 1.0, 128), 128).is_finite());
}

TEST_CASE("real saddle") {
  const auto ctx = bits(96);
  double prev = 1.0;
  for (long n : {100L, 1000L, 10000L}) {
    const auto s = saddle_real(n, table100(), TailModel{}, ctx);
    CHECK(s.sigma > 0.5);
    CHECK(s.sigma < 1.0);
    CHECK(s.sigma.to_double() < prev);
    prev = s.sigma.to_double();
    CHECK(s.deviation > 0.5);
    CHECK(s.deviation < 2.0);
    CHECK(close(s.deviation, (s.sigma - 0.5) * log(BigFloat(n, 128)), num("1e-20")));
  }
  CHECK(code_of([&] { saddle_real(5, table100(), TailModel{}, ctx); }) == ErrorCode::precondition);
}

TEST_CASE("growth fit recovers a known exponential") {
  const mpfr_prec_t p = 256;
  std::vector<BigFloat> v;
  for (int i = 0; i < 400; ++i) {
    const BigFloat a = pow(BigFloat(101, p) / 100, static_cast<long>(i)) * cos(BigFloat(i, p) / 10) * 2;
    const BigFloat b = pow(BigFloat(9, p) / 10, static_cast<long>(i)) / 2;
    v.push_back(a + b);
  }
  const auto f = fit_growth_rate(v, 3, 4, p);
  CHECK(close(f.rate, log(BigFloat(101, p) / 100), num("1e-30")));
  CHECK(close(abs(f.phase), "0.1", 1e-30));
  const auto g = fit_growth_rate_auto(v, 6, 4, p);
  CHECK(g.order == 3);
  CHECK(close(g.rate, f.rate, num("1e-30")));
  CHECK(g.samples == 100);
}

TEST_CASE("run configuration round trip") {
  RunConfig c;
  c.command = "sandbox";
  c.bits = 192;
  c.effective_bits = 256;
  c.tau_star = "50+2i";
  c.base = "none";
  c.format = OutputFormat::json;
  c.prime_sum = 123456789;
  c.window_lo = 0.55;
  CHECK(RunConfig::from_json(c.to_json()) == c);
  CHECK(c.output_digits() == 77);
  RunConfig d;
  d.effective_bits = 64;
  CHECK(d.output_digits() == 20);
  CHECK(code_of([] { RunConfig::from_json("{not json"); }) == ErrorCode::parse);
}
