#include <cmath>

#include "lilab/numerics.hpp"
#include "lilab/zero_finder.hpp"
#include "lilab/zeros.hpp"
#include "support.hpp"

using namespace lilab;
using lilab_test::close;
using lilab_test::data_file;

TEST_CASE("Riemann-Siegel theta and Z in long double") {
  CHECK(std::fabs(rs_theta(100.0L) - 87.97216523178721962548L) < 1e-14L);
  CHECK(std::fabs(rs_hardy_z(100.0L) - 2.692697056664463474995L) < 1e-6L);
}

TEST_CASE("Gram points") {
  for (long n : {-1L, 0L, 10L, 1000L})
    CHECK(std::fabs(rs_theta(gram_point(n)) - static_cast<long double>(n) * 3.14159265358979323846L) < 1e-12L);
  CHECK(std::fabs(gram_point(0) - 17.8455995404L) < 1e-6L);
}

TEST_CASE("Riemann-Siegel zeros agree with the table") {
  const ZeroTable t = load_zeros(data_file("zeros_100.txt"));
  const auto z = rs_zeros(100);
  REQUIRE(z.size() == 100);
  for (std::size_t k = 0; k < z.size(); ++k) CHECK(std::fabs(z[k] - t[k].tau.re.to_double()) < 1e-5);
}

TEST_CASE("serial and parallel zero lists agree") {
  const auto a = rs_zeros(2000, Parallelism::serial);
  const auto b = rs_zeros(2000, Parallelism::openmp);
  CHECK(a == b);
}

TEST_CASE("refinement reaches the first zero") {
  PrecisionContext ctx;
  ctx.bits = 160;
  const BigFloat r = refine_zero(14.1347L, 0.01L, ctx);
  CHECK(close(r, "14.13472514173469379045725198356247027078", 1e-37));
  CHECK(std::fabs(hardy_z(r, ctx).value.to_double()) < 1e-40);
}
