#include "rf/integrator.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <exception>
#include <sstream>
#include <string>

#include "rf/errors.hpp"
#include "rf/kahan.hpp"
#include "rf/kernels.hpp"
#include "rf/report_io.hpp"

namespace rf {

namespace {

constexpr double kResolutionUlps = 4;

void check_tol(double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
}

void check_options(const IntegratorOptions& opts) {
  if (opts.n0 == 0) throw InvalidArgument("initial cell count must be positive");
  if (opts.max_n < opts.n0) throw InvalidArgument("cell cap is below the initial cell count");
}

void negate(IntegrationResult& r) {
  r.value = -r.value;
  for (auto& row : r.trace) row.second = -row.second;
}

}  // namespace

IntegrationResult integrate(const RealFn& f, double a, double b, double tol, const TagRule& rule,
                            const IntegratorOptions& opts) {
  check_tol(tol);
  check_options(opts);
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("integration limits must be finite");

  IntegrationResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  if (a > b) {
    result = integrate(f, b, a, tol, rule, opts);
    negate(result);
    return result;
  }

  result.error_estimate = std::numeric_limits<double>::infinity();
  for (std::size_t n = opts.n0;; n *= 2) {
    const double value = kernels::uniform_sum_parallel(f, a, b, n, rule);
    result.evaluations += n;
    result.n_final = n;
    if (!result.trace.empty()) {
      result.error_estimate = std::abs(value - result.trace.back().second);
      if (result.error_estimate <= tol) result.converged = true;
    }
    result.trace.emplace_back(n, value);
    result.value = value;
    if (result.converged || n > opts.max_n / 2) break;
    // Successive sums cannot be told apart more finely than a few ulps of the
    // value; refining further would only burn evaluations.
    if (result.trace.size() > 1 && tol < kResolutionUlps * DBL_EPSILON * std::abs(value)) break;
  }
  return result;
}

IntegrationResult integrate_improper(const RealFn& f, double a, double b, SingularEnd end,
                                     double tol, const IntegratorOptions& opts) {
  check_tol(tol);
  check_options(opts);
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("integration limits must be finite");

  IntegrationResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  if (a > b) {
    result = integrate_improper(f, b, a, end == SingularEnd::Lower ? SingularEnd::Upper : SingularEnd::Lower,
                                tol, opts);
    negate(result);
    return result;
  }

  const double width = b - a;
  const double piece_tol = tol / 32;
  constexpr int kFirst = 2;
  constexpr int kLast = 60;
  constexpr int kGrowthRun = 5;

  // Regular-side cut for offset delta.
  auto cut = [&](double delta) { return end == SingularEnd::Upper ? b - delta : a + delta; };
  auto piece = [&](double from_delta, double to_delta) {
    // Integral over the slab between the two cuts, oriented toward the
    // singular end.
    const double lo = end == SingularEnd::Upper ? cut(from_delta) : cut(to_delta);
    const double hi = end == SingularEnd::Upper ? cut(to_delta) : cut(from_delta);
    IntegrationResult r = integrate(f, lo, hi, piece_tol, TagRule::midpoint(), opts);
    result.evaluations += r.evaluations;
    result.n_final = r.n_final;
    return r;
  };

  // Proper integrals s_j over [a, b] minus the slab of width (b - a) 2^{-j}.
  std::vector<double> raw;
  std::vector<double> accelerated;
  bool pieces_converged = true;
  double delta = std::ldexp(width, -kFirst);
  {
    const double lo = end == SingularEnd::Upper ? a : cut(delta);
    const double hi = end == SingularEnd::Upper ? cut(delta) : b;
    IntegrationResult r = integrate(f, lo, hi, piece_tol, TagRule::midpoint(), opts);
    result.evaluations += r.evaluations;
    result.n_final = r.n_final;
    pieces_converged = pieces_converged && r.converged;
    raw.push_back(r.value);
  }

  result.error_estimate = std::numeric_limits<double>::infinity();
  for (int j = kFirst + 1; j <= kLast; ++j) {
    const double next_delta = std::ldexp(width, -j);
    if (cut(next_delta) == cut(delta)) break;  // no representable progress left
    const IntegrationResult r = piece(delta, next_delta);
    pieces_converged = pieces_converged && r.converged;
    raw.push_back(raw.back() + r.value);
    delta = next_delta;

    const std::size_t m = raw.size();
    if (m < 3) continue;
    const double d1 = raw[m - 2] - raw[m - 3];
    const double d2 = raw[m - 1] - raw[m - 2];

    // Divergence: past 1/tol and still growing monotonically.
    if (std::abs(raw.back()) > 1.0 / tol && m > kGrowthRun + 1) {
      bool growing = true;
      for (std::size_t i = m - kGrowthRun; i < m && growing; ++i) {
        const double cur = raw[i] - raw[i - 1];
        const double prev = raw[i - 1] - raw[i - 2];
        growing = cur != 0.0 && std::signbit(cur) == std::signbit(prev) &&
                  std::abs(cur) >= std::abs(prev);
      }
      if (growing) {
        std::ostringstream msg;
        msg << "improper integral diverges: partial integrals reached " << io::format_g(raw.back(), 9)
            << " and keep growing as the endpoint is approached";
        throw DivergenceError(msg.str());
      }
    }

    const double denom = d2 - d1;
    const double aitken = denom != 0.0 ? raw.back() - d2 * d2 / denom : raw.back();
    accelerated.push_back(aitken);
    result.value = aitken;
    result.trace.emplace_back(static_cast<std::size_t>(j), aitken);

    if (accelerated.size() >= 2) {
      result.error_estimate = std::abs(accelerated.back() - accelerated[accelerated.size() - 2]);
      const bool contracting = std::abs(d2) < std::abs(d1);
      if ((contracting && result.error_estimate <= tol) || std::abs(d2) <= tol / 4) {
        result.converged = pieces_converged;
        return result;
      }
    }
  }
  if (accelerated.empty()) result.value = raw.back();
  return result;
}

std::vector<double> cumulative(const RealFn& f, double a, const std::vector<double>& grid, double tol,
                               const IntegratorOptions& opts) {
  check_tol(tol);
  if (grid.empty()) return {};
  if (grid.front() < a) throw InvalidArgument("cumulative grid must start at or after the lower limit");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] < grid[i - 1]) throw InvalidArgument("cumulative grid must be sorted");

  const std::size_t cells = grid.size();
  const double cell_tol = tol / static_cast<double>(cells);
  std::vector<double> piece(cells, 0.0);
  std::vector<std::exception_ptr> failure(cells);

  const auto ncells = static_cast<long long>(cells);
#pragma omp parallel for schedule(dynamic)
  for (long long ic = 0; ic < ncells; ++ic) {
    const auto i = static_cast<std::size_t>(ic);
    const double lo = i == 0 ? a : grid[i - 1];
    try {
      piece[i] = integrate(f, lo, grid[i], cell_tol, TagRule::midpoint(), opts).value;
    } catch (...) {
      failure[i] = std::current_exception();
    }
  }
  for (const auto& e : failure)
    if (e) std::rethrow_exception(e);

  std::vector<double> out(cells);
  KahanAccumulator<double> acc;
  for (std::size_t i = 0; i < cells; ++i) {
    acc += piece[i];
    out[i] = acc.value();
  }
  return out;
}

ConvergenceReport convergence_report(const RealFn& f, double a, double b, const TagRule& rule,
                                     const std::vector<std::size_t>& n_list, std::optional<double> exact) {
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] == 0) throw InvalidArgument("cell counts must be positive");
    if (i > 0 && n_list[i] <= n_list[i - 1]) throw InvalidArgument("cell counts must be increasing");
  }

  ConvergenceReport report;
  for (std::size_t n : n_list) {
    ConvergenceRow row;
    row.n = n;
    if (a < b)
      row.value = kernels::uniform_sum_parallel(f, a, b, n, rule);
    else if (a > b)
      row.value = -kernels::uniform_sum_parallel(f, b, a, n, rule);
    if (exact)
      row.diff = std::abs(row.value - *exact);
    else if (!report.rows.empty())
      row.diff = std::abs(row.value - report.rows.back().value);
    report.rows.push_back(row);
  }

  std::vector<double> orders;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& prev = report.rows[i - 1];
    const auto& cur = report.rows[i];
    if (std::isnan(prev.diff) || std::isnan(cur.diff)) continue;
    const double span = std::log2(static_cast<double>(cur.n) / static_cast<double>(prev.n));
    if (cur.diff == 0.0)
      orders.push_back(std::numeric_limits<double>::infinity());
    else
      orders.push_back(std::log2(prev.diff / cur.diff) / span);
  }
  if (!orders.empty()) {
    const std::size_t take = std::min<std::size_t>(3, orders.size());
    double sum = 0.0;
    for (std::size_t i = orders.size() - take; i < orders.size(); ++i) sum += orders[i];
    report.estimated_order = sum / static_cast<double>(take);
  }
  return report;
}

std::vector<std::size_t> doubling_list(std::size_t from, std::size_t to) {
  if (from == 0) throw InvalidArgument("doubling list must start at a positive count");
  std::vector<std::size_t> out;
  for (std::size_t n = from; n <= to; n *= 2) {
    out.push_back(n);
    if (n > to / 2) break;
  }
  return out;
}

std::string to_csv(const ConvergenceReport& report) {
  std::string out = "n,value,diff\n";
  for (const auto& row : report.rows) {
    out += std::to_string(row.n);
    out += ',';
    out += io::format_g(row.value);
    out += ',';
    out += io::format_g(row.diff);
    out += '\n';
  }
  out += "# estimated_order=" + io::format_g(report.estimated_order) + "\n";
  return out;
}

}  // namespace rf
