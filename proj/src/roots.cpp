#include "rf/roots.hpp"

#include <cfloat>
#include <cmath>

#include "rf/errors.hpp"

namespace rf {

long double root_minus_one_pow2(long double x, unsigned j) {
  if (!(x > 0.0L)) throw DomainError("root of a non-positive number");
  long double d = x - 1.0L;
  for (unsigned i = 0; i < j; ++i) d /= std::sqrt(1.0L + d) + 1.0L;
  return d;
}

long double root_minus_one_pow2_error(unsigned j) {
  // Per step: rounding of 1 + d, the square root, the + 1 and the division,
  // each at most half an ulp, with the first three damped by the ~2 in the
  // denominator. Four half-ulps per step is a safe ceiling.
  return 4.0L * static_cast<long double>(j) * (LDBL_EPSILON / 2);
}

int exact_log2(std::size_t n) noexcept {
  if (n == 0 || (n & (n - 1)) != 0) return -1;
  int j = 0;
  while ((std::size_t{1} << j) != n) ++j;
  return j;
}

long double ipow(long double base, std::size_t k) noexcept {
  long double result = 1.0L;
  while (k != 0) {
    if (k & 1u) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

long double root_minus_one(long double x, std::size_t n) {
  if (!(x > 0.0L)) throw DomainError("root of a non-positive number");
  if (n == 0) throw InvalidArgument("root order must be positive");
  if (const int j = exact_log2(n); j >= 0) return root_minus_one_pow2(x, static_cast<unsigned>(j));
  if (x == 1.0L) return 0.0L;

  // h(d) = (1 + d)^n - x is increasing and convex on d > -1, and
  // Bernoulli gives h((x - 1)/n) >= 0, so Newton from there descends
  // monotonically onto the root.
  const long double nn = static_cast<long double>(n);
  long double d = (x - 1.0L) / nn;
  if (x < 1.0L) {
    // (x - 1)/n undershoots when x < 1; start from the right of the root
    // instead: d = 0 has h(0) = 1 - x > 0.
    d = 0.0L;
  } else {
    // Halve while still right of the root; Newton on a convex function is
    // slow from far away.
    while (ipow(1.0L + d / 2, n) >= x) d /= 2;
  }
  for (int iter = 0; iter < 200; ++iter) {
    const long double base = 1.0L + d;
    const long double pn1 = ipow(base, n - 1);
    const long double hval = pn1 * base - x;
    const long double slope = nn * pn1;
    const long double next = d - hval / slope;
    if (!(next < d)) break;
    d = next;
  }
  return d;
}

}  // namespace rf
