#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rf/partitions.hpp"

namespace rf {

struct IntegratorOptions {
  std::size_t n0 = 8;
  std::size_t max_n = std::size_t{1} << 22;
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t n_final = 0;
  std::size_t evaluations = 0;
  bool converged = false;
  std::vector<std::pair<std::size_t, double>> trace;
};

/// Riemann integral of f between a and b as the limit of uniform tagged sums.
///
/// The cell count doubles from `opts.n0` until two successive sums differ by
/// at most `tol`. Reaching `opts.max_n` is not an error: the result comes back
/// with `converged == false`. The same happens early when `tol` is below four
/// ulps of the running value, which no amount of refinement can certify.
/// Orientation follows the usual conventions: a
/// zero-width interval integrates to exactly 0 and swapping the limits negates
/// the result.
IntegrationResult integrate(const RealFn& f, double a, double b, double tol,
                            const TagRule& rule = TagRule::midpoint(),
                            const IntegratorOptions& opts = {});

enum class SingularEnd { Lower, Upper };

/// Improper integral with a singularity at one endpoint, as the limit of
/// proper integrals whose singular end is pulled in by (b - a) 2^{-j},
/// j = 2, 3, .... One Aitken delta-squared pass is applied to the sequence of
/// proper integrals and iteration stops once two accelerated values agree
/// within `tol`. Throws DivergenceError when the proper integrals grow
/// monotonically past 1/tol.
IntegrationResult integrate_improper(const RealFn& f, double a, double b, SingularEnd end,
                                     double tol, const IntegratorOptions& opts = {});

/// F(x) = integral of f from a to x at every grid point. Each cell between
/// consecutive grid points is integrated once and the results prefix-summed.
std::vector<double> cumulative(const RealFn& f, double a, const std::vector<double>& grid,
                               double tol, const IntegratorOptions& opts = {});

struct ConvergenceRow {
  std::size_t n = 0;
  double value = 0.0;
  double diff = std::numeric_limits<double>::quiet_NaN();
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  /// Mean observed order over the last three ratios; +inf when every diff is
  /// zero (the sums are exact).
  double estimated_order = std::numeric_limits<double>::quiet_NaN();
};

/// Riemann sums at each n of `n_list` (increasing). With `exact` the diff
/// column is |value - exact|; otherwise it is the successive difference and
/// the first row carries NaN.
ConvergenceReport convergence_report(const RealFn& f, double a, double b, const TagRule& rule,
                                     const std::vector<std::size_t>& n_list,
                                     std::optional<double> exact = std::nullopt);

/// Powers of two from `from` to `to` inclusive.
std::vector<std::size_t> doubling_list(std::size_t from, std::size_t to);

/// CSV: header `n,value,diff`, one row per n, trailing
/// `# estimated_order=<v>`. Numbers use 17 significant digits.
std::string to_csv(const ConvergenceReport& report);

}  // namespace rf
