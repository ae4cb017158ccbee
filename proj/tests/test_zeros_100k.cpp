#include "lilab/li.hpp"
#include "lilab/secondary_zeta.hpp"
#include "lilab/zeros.hpp"
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

const ZeroTable& big() {
  static const ZeroTable t = load_zeros(LILAB_ZEROS_100K);
  return t;
}

}  // namespace

TEST_CASE("generated table") {
  const ZeroTable& t = big();
  REQUIRE(t.size() == 100000);
  CHECK(t.source().digits == 11);
  CHECK(t[0].fraction_digits == 20);
  CHECK(t[999].fraction_digits == 20);
  CHECK(t[1000].fraction_digits == 11);
  CHECK(close(t[0].tau.re, "14.13472514173469379045", 1e-19));
  // zetazero(100000)
  CHECK(close(t.height(), "74920.8274989941867938492", 1e-10));
}

TEST_CASE("agrees with the bundled table") {
  const ZeroTable s = load_zeros(data_file("zeros_100.txt"));
  for (std::size_t k = 0; k < s.size(); ++k) CHECK(abs(big()[k].tau.re - s[k].tau.re) < 1e-19);
}

TEST_CASE("Z(1) on the large table") {
  const auto ctx = bits(128);
  const auto z = z_eval(BigComplex(1.0, 0.0, 128), big(), TailModel{}, ctx);
  const BigFloat l1 = num("0.02309570896612103381431024790649529162193");
  CHECK(abs(z.value.re - l1) <= z.abs_error);
  CHECK(z.abs_error < 1e-8);
  const auto a = lambda_zero_sum(1, big(), TailModel{}, ctx);
  CHECK(abs(a.value.value - l1) <= a.value.abs_error);
}

TEST_CASE("ten zeros against the large table") {
  const auto ctx = bits(precision_for(10));
  const auto z10 = z_integers(10, big().truncated(10), TailModel{}, ctx);
  const auto zb = z_integers(10, big(), TailModel{}, ctx);
  CHECK(abs(z10[0].value - zb[0].value) <= z10[0].abs_error);
  for (long n = 1; n <= 10; ++n) {
    const auto a = lambda_binomial(n, z10, ctx).value;
    const auto b = lambda_binomial(n, zb, ctx).value;
    CHECK(abs(a.value - b.value) <= a.abs_error);
  }
}

TEST_CASE("doubling the cutoff on the large table") {
  const auto ctx = bits(128);
  TailModel half;
  half.cutoff = big().height() / 2;
  const BigComplex s(2.0, 0.0, 128);
  const auto a = z_eval(s, big(), TailModel{}, ctx);
  const auto b = z_eval(s, big(), half, ctx);
  CHECK(a.value.re.sign() > 0);
  CHECK(abs(a.value - b.value) <= a.abs_error + b.abs_error);
}
