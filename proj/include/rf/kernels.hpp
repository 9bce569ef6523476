#pragma once

// Riemann-sum kernels. Each sum comes in two flavours:
//
//   *_serial    the reference: one left-to-right compensated pass.
//   *_parallel  OpenMP over fixed-size blocks; each block is summed like the
//               reference and the block partials are combined in block order.
//
// The block layout does not depend on the thread count, so the parallel
// result is bit-identical across runs and team sizes, and equal to the serial
// one whenever the sum fits in a single block.

#include <cstddef>

#include "rf/partitions.hpp"

namespace rf::kernels {

inline constexpr std::size_t kBlockCells = 4096;

/// h * sum_{k<n} f(tag_k) over the uniform grid a + k h, h = (b - a) / n.
double uniform_sum_serial(const RealFn& f, double a, double b, std::size_t n,
                          const TagRule& rule);
double uniform_sum_parallel(const RealFn& f, double a, double b, std::size_t n,
                            const TagRule& rule);

/// S(f, P) for an explicit partition.
double partition_sum_serial(const RealFn& f, const TaggedPartition& partition);
double partition_sum_parallel(const RealFn& f, const TaggedPartition& partition);

}  // namespace rf::kernels
