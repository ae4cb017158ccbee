#include "lilab/sieve.hpp"

#include <cmath>
#include <string>

#include "lilab/errors.hpp"

namespace lilab {

std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

namespace {

void check_bound(std::uint64_t bound, int max_exponent) {
  if (bound > kSieveMaxBound)
    throw Error(ErrorCode::sieve_capacity, "sieve bound " + std::to_string(bound) + " exceeds capacity");
  if (max_exponent < 0) throw Error(ErrorCode::precondition, "negative exponent");
}

// Adds Lambda(m) (log m)^e / m for a prime power m = p^k (log m = k log p).
inline void add_term(std::vector<long double>& acc, long double log_p, long double log_m, long double m) {
  long double w = log_p / m;
  for (auto& a : acc) {
    a += w;
    w *= log_m;
  }
}

// Proper prime powers p^k, k >= 2, are few (O(sqrt M)); they are handled
// apart from the prime sieve.
void add_prime_powers(const std::vector<std::uint32_t>& primes, std::uint64_t bound, std::vector<long double>& acc) {
  for (std::uint32_t p : primes) {
    const long double log_p = std::log(static_cast<long double>(p));
    std::uint64_t m = static_cast<std::uint64_t>(p) * p;
    if (m > bound) break;
    for (int k = 2; m <= bound; ++k) {
      add_term(acc, log_p, k * log_p, static_cast<long double>(m));
      if (m > bound / p) break;
      m *= p;
    }
  }
}

}  // namespace

MangoldtSums mangoldt_sums(std::uint64_t bound, int max_exponent, Parallelism par) {
  check_bound(bound, max_exponent);
  const std::size_t width = static_cast<std::size_t>(max_exponent) + 1;
  MangoldtSums out{bound, std::vector<long double>(width, 0.0L)};
  if (bound < 2) return out;

  const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<long double>(bound))) + 1;
  const std::vector<std::uint32_t> primes = small_primes(root);
  const std::uint64_t segments = (bound - 1 + kSieveSegment - 1) / kSieveSegment;  // covers [2, bound]

  using Acc = std::vector<long double>;
  // Each "item" of the blocked reduction is one sieve segment.
  std::vector<long double> total = reduce_blocks<Acc>(
      static_cast<std::size_t>(segments), 1, ReductionOrder::fixed_tree, par, [width] { return Acc(width, 0.0L); },
      [&](std::size_t lo_seg, std::size_t hi_seg, Acc& acc) {
        std::vector<unsigned char> composite(kSieveSegment);
        for (std::size_t seg = lo_seg; seg < hi_seg; ++seg) {
          const std::uint64_t lo = 2 + seg * kSieveSegment;
          const std::uint64_t hi = std::min<std::uint64_t>(lo + kSieveSegment - 1, bound);
          std::fill(composite.begin(), composite.end(), 0);
          for (std::uint32_t p : primes) {
            const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
            if (pp > hi) break;
            std::uint64_t start = std::max<std::uint64_t>(pp, (lo + p - 1) / p * p);
            for (std::uint64_t q = start; q <= hi; q += p) composite[q - lo] = 1;
          }
          for (std::uint64_t m = lo; m <= hi; ++m) {
            if (composite[m - lo]) continue;
            const long double log_m = std::log(static_cast<long double>(m));
            add_term(acc, log_m, log_m, static_cast<long double>(m));
          }
        }
      },
      [](Acc& into, const Acc& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });

  add_prime_powers(primes, bound, total);
  out.sums = std::move(total);
  return out;
}

MangoldtSums mangoldt_sums_reference(std::uint64_t bound, int max_exponent) {
  check_bound(bound, max_exponent);
  const std::size_t width = static_cast<std::size_t>(max_exponent) + 1;
  MangoldtSums out{bound, std::vector<long double>(width, 0.0L)};
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
    const long double log_p = std::log(static_cast<long double>(p));
    std::uint64_t m = p;
    for (int k = 1;; ++k) {
      add_term(out.sums, log_p, k * log_p, static_cast<long double>(m));
      if (m > bound / p) break;
      m *= p;
    }
  }
  return out;
}

}  // namespace lilab
