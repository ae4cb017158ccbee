#pragma once

// Deterministic blocked reductions.
//
// Items [0, count) are cut into blocks of `block` consecutive items. Each
// block is folded left to right into its own accumulator and the block
// accumulators are then merged pairwise with a fixed bracketing
// ((b0 b1)(b2 b3))... The bracketing depends only on `count`, so the result is
// bit-identical whether blocks run on one thread or many.

#include <cstddef>
#include <utility>
#include <vector>

#include "lilab/bigfloat.hpp"

namespace lilab {

inline constexpr std::size_t kReduceBlock = 512;

enum class Parallelism { serial, openmp };

// make()                       -> Acc        fresh accumulator
// fold(begin, end, Acc&)                     accumulate items [begin, end)
// merge(Acc& into, const Acc& from)          into += from
template <class Acc, class Make, class Fold, class Merge>
Acc reduce_blocks(std::size_t count, std::size_t block, ReductionOrder order, Parallelism par, Make&& make,
                  Fold&& fold, Merge&& merge) {
  if (order == ReductionOrder::sequential || count <= block) {
    Acc acc = make();
    if (count > 0) fold(std::size_t{0}, count, acc);
    return acc;
  }
  const std::size_t blocks = (count + block - 1) / block;
  std::vector<Acc> partial;
  partial.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) partial.push_back(make());

  const long nb = static_cast<long>(blocks);
  if (par == Parallelism::openmp) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long b = 0; b < nb; ++b) {
      const std::size_t lo = static_cast<std::size_t>(b) * block;
      const std::size_t hi = lo + block < count ? lo + block : count;
      fold(lo, hi, partial[static_cast<std::size_t>(b)]);
    }
  } else {
    for (long b = 0; b < nb; ++b) {
      const std::size_t lo = static_cast<std::size_t>(b) * block;
      const std::size_t hi = lo + block < count ? lo + block : count;
      fold(lo, hi, partial[static_cast<std::size_t>(b)]);
    }
  }

  for (std::size_t stride = 1; stride < blocks; stride *= 2)
    for (std::size_t i = 0; i + stride < blocks; i += 2 * stride) merge(partial[i], partial[i + stride]);
  return std::move(partial[0]);
}

// Sum of term(i) for i in [0, count) at precision `prec`.
template <class Term>
BigFloat reduce_sum(std::size_t count, mpfr_prec_t prec, ReductionOrder order, Parallelism par, Term&& term) {
  return reduce_blocks<BigFloat>(
      count, kReduceBlock, order, par, [prec] { return BigFloat(prec); },
      [&term](std::size_t lo, std::size_t hi, BigFloat& acc) {
        for (std::size_t i = lo; i < hi; ++i) acc += term(i);
      },
      [](BigFloat& into, const BigFloat& from) { into += from; });
}

// Element-wise sum of equal-length vectors produced per block.
inline void merge_vectors(std::vector<BigFloat>& into, const std::vector<BigFloat>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) mpfr_add(into[i].get(), into[i].get(), from[i].get(), MPFR_RNDN);
}

}  // namespace lilab
