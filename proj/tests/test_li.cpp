#include <vector>

#include "lilab/errors.hpp"
#include "lilab/li.hpp"
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

ZeroTable unit_pair() { return synthetic_table({BigComplex(sqrt(BigFloat(3, 256)) / 2, BigFloat(256))}); }

std::vector<ValueWithError> ones(long n) {
  std::vector<ValueWithError> v;
  for (long j = 0; j < n; ++j) v.push_back({BigFloat(1, 256), BigFloat(256), ErrorKind::rigorous});
  return v;
}

const char* const kLambda[] = {
    "0.02309570896612103381431024790649529162193", "0.09234573522804667038572848619206788677413",
    "0.2076389205543248037914920466178032069826",  "0.3687904794922416385905114896377560722622",
    "0.5755427144611774524311064054928638335675",  "0.8275660122823792974250028220204999813683",
    "1.12446011757095949058282010801697564046",    "1.46575567714706063265551454197774878792",
};

}  // namespace

TEST_CASE("period six on the unit pair") {
  const auto ctx = bits(128);
  const ZeroTable t = unit_pair();
  const long expected[] = {1, 3, 4, 3, 1, 0, 1, 3, 4, 3, 1, 0};
  for (long n = 1; n <= 12; ++n) {
    const auto v = lambda_zero_sum(n, t, TailModel{}, ctx);
    CHECK(abs(v.value.value - expected[n - 1]) < 1e-35);
  }
  for (long n = 1; n <= 6; ++n) {
    const auto b = lambda_binomial(n, ones(n), ctx);
    CHECK(abs(b.value.value - expected[n - 1]) < 1e-35);
  }
}

TEST_CASE("binomial coefficients of Z(j)") {
  CHECK(binomial_coefficient(1, 1) == 1);
  CHECK(binomial_coefficient(2, 1) == 4);
  CHECK(binomial_coefficient(2, 2) == -1);
  CHECK(binomial_coefficient(3, 1) == 9);
  CHECK(binomial_coefficient(3, 2) == -6);
  CHECK(binomial_coefficient(3, 3) == 1);
}

TEST_CASE("binomial route against explicit combinations") {
  const auto ctx = bits(128);
  const auto z = z_integers(3, table100(), TailModel{}, ctx);
  CHECK(lambda_binomial(1, z, ctx).value.value == z[0].value);
  const auto l2 = lambda_binomial(2, z, ctx).value;
  CHECK(abs(l2.value - (z[0].value * 4 - z[1].value)) < 1e-35);
}

TEST_CASE("residue identity") {
  for (long n : {1L, 2L, 5L, 17L, 50L}) {
    const auto c = residue_identity_check(n);
    CHECK(c.equal);
    REQUIRE(c.binomial_side.size() == static_cast<std::size_t>(n));
    CHECK(c.binomial_side == c.residue_side);
  }
  CHECK(residue_identity_check(5).residue_side[1] == -50);
  CHECK(residue_identity_check(1).binomial_side[0] == 1);
}

TEST_CASE("zero sum and binomial agree and bracket the true values") {
  const auto ctx = bits(128);
  const auto a = lambda_zero_sum_range(1, 8, table100(), TailModel{}, ctx);
  const auto z = z_integers(8, table100(), TailModel{}, ctx.with_bits(precision_for(8)));
  for (long n = 1; n <= 8; ++n) {
    const auto& va = a[n - 1].value;
    const auto vb = lambda_binomial(n, z, ctx.with_bits(precision_for(8))).value;
    CHECK(va.kind == ErrorKind::heuristic);
    CHECK(abs(va.value - vb.value) <= va.abs_error + vb.abs_error);
    CHECK(abs(va.value - num(kLambda[n - 1])) <= va.abs_error);
    CHECK(va.value.sign() > 0);
  }
}

TEST_CASE("single n and range agree") {
  const auto ctx = bits(128);
  const auto r = lambda_zero_sum_range(10, 14, table100(), TailModel{}, ctx);
  for (long n = 10; n <= 14; ++n) {
    const auto v = lambda_zero_sum(n, table100(), TailModel{}, ctx);
    CHECK(abs(v.value.value - r[n - 10].value.value) < 1e-35);
  }
}

TEST_CASE("positivity on the tabulated table") {
  const auto ctx = bits(128);
  for (const auto& v : lambda_zero_sum_range(1, 300, table100(), TailModel{}, ctx)) CHECK(v.value.value.sign() > 0);
}

TEST_CASE("ten zeros against one hundred through the binomial route") {
  const auto ctx = bits(precision_for(10));
  const auto z10 = z_integers(10, table100().truncated(10), TailModel{}, ctx);
  const auto z100 = z_integers(10, table100(), TailModel{}, ctx);
  for (long n = 1; n <= 10; ++n) {
    const auto a = lambda_binomial(n, z10, ctx).value;
    const auto b = lambda_binomial(n, z100, ctx).value;
    CHECK(abs(a.value - b.value) <= a.abs_error);
  }
}

TEST_CASE("Cauchy coefficients against the oracle") {
  const auto ctx = bits(160);
  const auto v = lambda_cauchy_range(1, 8, CauchyOptions{}, ctx);
  REQUIRE(v.size() == 8);
  for (long n = 1; n <= 8; ++n) {
    const auto& c = v[n - 1].value;
    CHECK(v[n - 1].method == LambdaMethod::cauchy);
    CHECK(abs(c.value - num(kLambda[n - 1])) <= c.abs_error);
    CHECK(c.abs_error < 1e-18);
    CHECK(abs(c.value - num(kLambda[n - 1])) < 1e-38);
  }
  const auto one = lambda_cauchy(2, CauchyOptions{}, ctx);
  CHECK(abs(one.value.value - v[1].value.value) <= one.value.abs_error);
}

TEST_CASE("Cauchy and binomial agree") {
  const auto ctx = bits(precision_for(16));
  const auto z = z_integers(16, table100(), TailModel{}, ctx);
  const auto c = lambda_cauchy_range(1, 16, CauchyOptions{}, ctx);
  for (long n = 1; n <= 16; ++n) {
    const auto b = lambda_binomial(n, z, ctx).value;
    CHECK(abs(b.value - c[n - 1].value.value) <= b.abs_error + c[n - 1].value.abs_error);
  }
}

TEST_CASE("trapezoid rule returns the sample mean at order zero") {
  std::vector<BigComplex> s;
  for (int q = 0; q < 16; ++q) s.emplace_back(static_cast<double>(q), 0.5 * q, 128);
  const BigComplex m = trapezoid_coefficient(s, 0, BigFloat(0.9, 128));
  CHECK(close(m.re, "7.5", 1e-30));
  CHECK(close(m.im, "3.75", 1e-30));
}

TEST_CASE("preconditions") {
  const auto ctx = bits(128);
  CHECK_THROWS_AS(lambda_zero_sum(0, table100(), TailModel{}, ctx), Error);
  CHECK_THROWS_AS(lambda_cauchy(33, CauchyOptions{}, ctx), Error);
  const auto z = z_integers(400, table100(), TailModel{}, ctx);
  try {
    lambda_binomial(400, z, ctx);
    FAIL("no precision error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::insufficient_precision);
  }
  CHECK(precision_for(1) == 97);
  CHECK(precision_for(400) == 296);
}
