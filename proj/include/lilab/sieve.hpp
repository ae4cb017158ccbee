#pragma once

// Segmented sieve for von Mangoldt weighted sums
//   S_e(M) = sum_{m <= M} Lambda(m) (log m)^e / m,   e = 0..max_exponent.

#include <cstdint>
#include <vector>

#include "lilab/bigfloat.hpp"
#include "lilab/reduce.hpp"

namespace lilab {

inline constexpr std::uint64_t kSieveMaxBound = 100'000'000'000ULL;
inline constexpr std::uint64_t kSieveSegment = 1ULL << 18;

struct MangoldtSums {
  std::uint64_t bound = 0;
  std::vector<long double> sums;  // indexed by exponent e
};

// Segmented sieve; segments are independent and merged in fixed-tree order,
// so serial and OpenMP runs give identical sums.
MangoldtSums mangoldt_sums(std::uint64_t bound, int max_exponent, Parallelism par = Parallelism::openmp);

// Plain full-array Eratosthenes; reference for tests and the benchmark.
MangoldtSums mangoldt_sums_reference(std::uint64_t bound, int max_exponent);

// Primes up to `limit` by a simple sieve.
std::vector<std::uint32_t> small_primes(std::uint32_t limit);

}  // namespace lilab
