#include <map>
#include <fstream>

#include "lilab/cumulants.hpp"
#include "lilab/errors.hpp"
#include "lilab/numerics.hpp"
#include "support.hpp"

using namespace lilab;
using lilab_test::close;
using lilab_test::num;

namespace {

PrecisionContext bits(long b) {
  PrecisionContext c;
  c.bits = b;
  return c;
}

const StieltjesTable& table(long M, long b) {
  static std::map<std::pair<long, long>, StieltjesTable> cache;
  auto it = cache.find({M, b});
  if (it == cache.end()) it = cache.emplace(std::make_pair(M, b), stieltjes_constants(M, bits(b))).first;
  return it->second;
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

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = std::string(LILAB_TEST_TMP) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("Stieltjes constants against the oracle") {
  const auto& t = table(20, 128);
  REQUIRE(t.max_order() == 20);
  CHECK(t.provenance == Provenance::computed);
  CHECK(t.digits == 38);
  CHECK(close(t.gammas[0], "0.577215664901532860606512090082", 1e-29));
  CHECK(close(t.gammas[1], "-0.0728158454836767248605863758749", 1e-30));
  CHECK(close(t.gammas[2], "-0.00969036319287231848453038603521", 1e-31));
  CHECK(close(t.gammas[10], "0.000205332814909064794683722289237", 1e-32));
  CHECK(close(t.gammas[20], "0.000466343561511559449400594824433550525113", 1e-38));
  for (long m = 0; m <= 20; ++m) CHECK(t.errors[m] < 1e-37);
}

TEST_CASE("gamma_0 is minus digamma(1)") {
  const auto ctx = bits(128);
  CHECK(close(table(20, 128).gammas[0], -digamma(BigComplex(1.0, 0.0, 256), ctx).value.re, num("1e-37")));
}

TEST_CASE("gamma_1 from the Laurent expansion of zeta") {
  const auto ctx = bits(256);
  const BigFloat h = BigFloat::two_pow(-40, 320);
  auto regular = [&](const BigFloat& e) { return zeta_em(BigComplex(e + 1, BigFloat(320)), ctx).value.re - 1 / e; };
  const BigFloat slope = (regular(h) - regular(-h)) / (h * 2);
  CHECK(close(-slope, table(20, 128).gammas[1], num("1e-20")));
}

TEST_CASE("large order") {
  const auto& t = table(200, 128);
  CHECK(close(t.gammas[200] / num("-6.97464971947882286862433306943e+55"), "1", 1e-28));
  CHECK(t.summation_length > 0);
  CHECK(t.correction_terms > 0);
}

TEST_CASE("precision doubling") {
  const auto& lo = table(40, 128);
  const auto& hi = table(40, 256);
  for (long m = 0; m <= 40; ++m) CHECK(abs(lo.gammas[m] - hi.gammas[m]) <= lo.errors[m]);
}

TEST_CASE("serial and parallel tables are identical") {
  const auto a = stieltjes_constants(30, bits(128), Parallelism::serial);
  const auto b = stieltjes_constants(30, bits(128), Parallelism::openmp);
  for (long m = 0; m <= 30; ++m) CHECK(a.gammas[m] == b.gammas[m]);
}

TEST_CASE("low cumulants") {
  const auto ctx = bits(128);
  const auto g = cumulant_series_range(5, table(20, 128), ctx);
  REQUIRE(g.size() == 5);
  CHECK(close(g[0].g.value, BigFloat::euler_gamma(256), num("1e-36")));
  CHECK(close(g[1].g.value, "0.18754623284036522", 1e-16));
  CHECK(close(g[2].g.value, "0.1033772640663857876040164461672083268908", 1e-36));
  CHECK(close(g[4].g.value, "0.1085874693238890897899067863799595861589", 1e-36));
  CHECK(g[0].g.kind == ErrorKind::rigorous);
  CHECK(g[0].route == CumulantRoute::series);
  const auto single = cumulant_series(3, table(20, 128), ctx);
  CHECK(single.g.value == g[2].g.value);
  // g_2 = 2 gamma_1 + gamma_0^2
  const auto& t = table(20, 128);
  CHECK(close(g[1].g.value, t.gammas[1] * 2 + sqr(t.gammas[0]), num("1e-36")));
}

TEST_CASE("eta from cumulants") {
  const auto ctx = bits(128);
  const auto g = cumulant_series_range(4, table(20, 128), ctx);
  CHECK(eta_from_cumulant(g[0]).value == -g[0].g.value);
  CHECK(close(eta_from_cumulant(g[1]).value, g[1].g.value, num("1e-40")));
  CHECK(close(eta_from_cumulant(g[3]).value, g[3].g.value / 6, num("1e-40")));
}

TEST_CASE("table too short") {
  const auto ctx = bits(128);
  CHECK(code_of([&] { cumulant_series_range(21, table(20, 128), ctx); }) == ErrorCode::table_too_short);
  CHECK(code_of([&] { cumulant_series(25, table(20, 128), ctx); }) == ErrorCode::table_too_short);
}

TEST_CASE("prime sums") {
  const auto g1 = cumulant_prime_sum(1, 10'000'000);
  CHECK(g1.route == CumulantRoute::prime_sum);
  CHECK(g1.g.kind == ErrorKind::heuristic);
  CHECK(abs(g1.g.value - BigFloat::euler_gamma(128)) <= g1.g.abs_error);
  CHECK(g1.g.abs_error < 1e-3);
  const auto g2 = cumulant_prime_sum(2, 10'000'000);
  CHECK(abs(g2.g.value - num("0.18754623284036522")) <= g2.g.abs_error);
  CHECK(code_of([] { cumulant_prime_sum(0, 1000); }) == ErrorCode::precondition);
  CHECK(code_of([] { cumulant_prime_sum(1, 50); }) == ErrorCode::precondition);
}

TEST_CASE("S_n") {
  const auto& t = table(60, s_n_precision(50));
  const auto ctx = bits(s_n_precision(50));
  CHECK(close(s_n(1, t, ctx).value, BigFloat::euler_gamma(256), num("1e-40")));
  CHECK(close(s_n(2, t, ctx).value, "0.966885096962700", 1e-14));
  const auto s50 = s_n(50, t, ctx);
  CHECK(close(s50.value, "1.497889685560490338408285", 1e-23));
  CHECK(s50.abs_error < 1e-20);
  CHECK(s_n_precision(50) == 296);
  CHECK(code_of([&] { s_n(50, table(60, 128), bits(128)); }) == ErrorCode::insufficient_precision);
}

TEST_CASE("S_100 under precision doubling") {
  const long b = s_n_precision(100);
  const auto lo = s_n(100, table(100, b), bits(b));
  const auto hi = s_n(100, table(100, 2 * b), bits(2 * b));
  CHECK(abs(lo.value - hi.value) <= lo.abs_error);
}

TEST_CASE("ingested tables") {
  const std::string good = temp_file("stieltjes_ok.txt",
                                     "# three constants\n"
                                     "0.577215664901532860606512090082\n"
                                     "-0.0728158454836767248605863758749\n"
                                     "-0.00969036319287231848453038603521\n");
  const StieltjesTable t = load_stieltjes(good, 128);
  CHECK(t.provenance == Provenance::ingested);
  CHECK(t.max_order() == 2);
  CHECK(close(t.gammas[1], table(20, 128).gammas[1], num("1e-30")));
  const auto g = cumulant_series_range(2, t, bits(128));
  CHECK(g[1].g.kind == ErrorKind::heuristic);
  CHECK(close(g[1].g.value, "0.18754623284036522", 1e-16));

  const std::string bad = temp_file("stieltjes_bad.txt", "0.5772159000\n-0.0728158454\n");
  CHECK(code_of([&] { load_stieltjes(bad, 128); }) == ErrorCode::parse);
  CHECK(code_of([] { load_stieltjes("/nonexistent/stieltjes.txt", 128); }) == ErrorCode::not_found);
}
