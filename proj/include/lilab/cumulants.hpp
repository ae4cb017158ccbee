#pragma once

// Stieltjes constants gamma_m, the cumulants
//   g_n = (-1)^(n-1) d^n/ds^n log(s zeta(1+s)) at s = 0
//       = -[sum_{m<=M} Lambda(m) (log m)^(n-1)/m - (log M)^n/n]   (M -> oo),
// and S_n = sum_j ((-1)^(j-1)/(j-1)!) C(n,j) g_j.

#include <cstdint>
#include <filesystem>
#include <vector>

#include "lilab/bigfloat.hpp"
#include "lilab/reduce.hpp"

namespace lilab {

inline constexpr long kStieltjesMaxOrder = 1000;

enum class Provenance { computed, ingested };
enum class CumulantRoute { series, prime_sum };
const char* to_string(Provenance p);
const char* to_string(CumulantRoute r);

struct StieltjesTable {
  std::vector<BigFloat> gammas;  // gamma_0 .. gamma_M
  std::vector<BigFloat> errors;  // absolute error of each entry
  int digits = 0;
  Provenance provenance = Provenance::computed;
  long summation_length = 0;     // N of the Euler-Maclaurin sum (computed tables)
  long correction_terms = 0;     // largest Bernoulli index used

  long max_order() const { return static_cast<long>(gammas.size()) - 1; }
};

struct CumulantValue {
  long n = 0;
  ValueWithError g;
  CumulantRoute route = CumulantRoute::series;
};

// gamma_0..gamma_M by Euler-Maclaurin summation of (log k)^m / k with the
// standard remainder bound.
StieltjesTable stieltjes_constants(long M, const PrecisionContext& ctx, Parallelism par = Parallelism::openmp);

// One decimal per line, '#' comments; gamma_0 must match Euler's constant to
// the file's digit count.
StieltjesTable load_stieltjes(const std::filesystem::path& path, mpfr_prec_t prec);

CumulantValue cumulant_series(long n, const StieltjesTable& table, const PrecisionContext& ctx);
std::vector<CumulantValue> cumulant_series_range(long n_max, const StieltjesTable& table, const PrecisionContext& ctx);

// eta_{n-1} = (-1)^n g_n / (n-1)!.
ValueWithError eta_from_cumulant(const CumulantValue& g);

CumulantValue cumulant_prime_sum(long n, std::uint64_t M, Parallelism par = Parallelism::openmp);

// 4n + 96.
long s_n_precision(long n);
ValueWithError s_n(long n, const StieltjesTable& table, const PrecisionContext& ctx);

}  // namespace lilab
