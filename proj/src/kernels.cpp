#include "rf/kernels.hpp"

#include <cmath>
#include <exception>
#include <vector>

#include "rf/errors.hpp"
#include "rf/kahan.hpp"

namespace rf::kernels {

namespace {

// Tag of cell k on the uniform grid. Built-in rules place the tag at a fixed
// fraction of the cell so the point is formed directly, without first forming
// the two cell endpoints.
inline double uniform_tag(const TagRule& rule, double a, double h, std::size_t k) {
  if (rule.kind() == TagRule::Kind::Custom) {
    const double lo = a + static_cast<double>(k) * h;
    const double hi = a + static_cast<double>(k + 1) * h;
    return rule.tag(lo, hi);
  }
  return a + (static_cast<double>(k) + rule.offset()) * h;
}

inline double checked(const RealFn& f, double x) {
  const double fx = f(x);
  if (!std::isfinite(fx)) throw EvaluationError("non-finite integrand value", x);
  return fx;
}

// Sums cells [first, last) of a cell sequence in order; `term(k)` yields the
// k-th contribution.
template <typename Term>
double block_sum(std::size_t first, std::size_t last, Term&& term) {
  KahanAccumulator<double> acc;
  for (std::size_t k = first; k < last; ++k) acc += term(k);
  return acc.value();
}

// Blocked parallel reduction. Exceptions are caught per block and the one from
// the lowest block is rethrown, so the reported failure does not depend on the
// schedule.
template <typename Term>
double blocked_sum(std::size_t cells, Term&& term) {
  const std::size_t blocks = (cells + kBlockCells - 1) / kBlockCells;
  std::vector<double> partial(blocks, 0.0);
  std::vector<std::exception_ptr> failure(blocks);

  const auto nblocks = static_cast<long long>(blocks);
#pragma omp parallel for schedule(static) if (blocks > 1)
  for (long long ib = 0; ib < nblocks; ++ib) {
    const auto b = static_cast<std::size_t>(ib);
    const std::size_t first = b * kBlockCells;
    const std::size_t last = std::min(cells, first + kBlockCells);
    try {
      partial[b] = block_sum(first, last, term);
    } catch (...) {
      failure[b] = std::current_exception();
    }
  }

  for (const auto& e : failure)
    if (e) std::rethrow_exception(e);

  KahanAccumulator<double> acc;
  for (double p : partial) acc += p;
  return acc.value();
}

void check_uniform(double a, double b, std::size_t n) {
  if (n == 0) throw InvalidArgument("uniform sum needs n >= 1");
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("uniform sum needs finite limits");
}

}  // namespace

double uniform_sum_serial(const RealFn& f, double a, double b, std::size_t n,
                          const TagRule& rule) {
  check_uniform(a, b, n);
  const double h = (b - a) / static_cast<double>(n);
  return h * block_sum(0, n, [&](std::size_t k) { return checked(f, uniform_tag(rule, a, h, k)); });
}

double uniform_sum_parallel(const RealFn& f, double a, double b, std::size_t n,
                            const TagRule& rule) {
  check_uniform(a, b, n);
  const double h = (b - a) / static_cast<double>(n);
  return h * blocked_sum(n, [&](std::size_t k) { return checked(f, uniform_tag(rule, a, h, k)); });
}

double partition_sum_serial(const RealFn& f, const TaggedPartition& partition) {
  return riemann_sum(f, partition);
}

double partition_sum_parallel(const RealFn& f, const TaggedPartition& partition) {
  const auto pts = partition.points();
  const auto tags = partition.tags();
  return blocked_sum(tags.size(), [&](std::size_t k) {
    return checked(f, tags[k]) * (pts[k + 1] - pts[k]);
  });
}

}  // namespace rf::kernels
