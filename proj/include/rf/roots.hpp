#pragma once

#include <cstddef>

namespace rf {

/// x^{1/2^j} - 1 for x > 0, by j square roots taken in the form
///   d <- d / (sqrt(1 + d) + 1),
/// which never subtracts nearly equal numbers: the relative error grows by at
/// most a few long-double ulps per step no matter how small d becomes.
long double root_minus_one_pow2(long double x, unsigned j);

/// Upper bound on the relative rounding error of root_minus_one_pow2 after j
/// steps.
long double root_minus_one_pow2_error(unsigned j);

/// x^{1/n} - 1 for any n >= 1. Powers of two take the square-root path;
/// other n use Newton's method on (1 + d)^n = x started from the Bernoulli
/// bound d <= (x - 1)/n.
long double root_minus_one(long double x, std::size_t n);

/// log2(n) when n is a power of two, otherwise -1.
int exact_log2(std::size_t n) noexcept;

/// base^k by repeated squaring.
long double ipow(long double base, std::size_t k) noexcept;

}  // namespace rf
