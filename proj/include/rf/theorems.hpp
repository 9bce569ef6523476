#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rf/integrator.hpp"
#include "rf/partitions.hpp"

namespace rf {

struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string anchor;
};

/// pass is abs_diff <= tol; a NaN on either side fails.
CheckReport make_report(std::string name, double lhs, double rhs, double tol,
                        std::string anchor);

/// Change of variables: integral of f(G(t)) g(t) over [a, b] against the
/// integral of f over [G(a), G(b)]. G must satisfy G(x) - G(a) = integral of g
/// from a to x; that is spot-checked at five Chebyshev points and a mismatch
/// larger than tol throws HypothesisViolation.
CheckReport check_u_sub(const RealFn& f, const RealFn& G, const RealFn& g, double a, double b,
                        double tol, std::string name = "u_substitution",
                        const IntegratorOptions& opts = {});

/// Integration by parts: integral of p v plus integral of u q against
/// u(b)v(b) - u(a)v(a), with (u, p) and (v, q) spot-checked like check_u_sub.
CheckReport check_parts(const RealFn& u, const RealFn& p, const RealFn& v, const RealFn& q,
                        double a, double b, double tol, std::string name = "parts",
                        const IntegratorOptions& opts = {});

/// Differentiates F(x) = integral of f from a to x by central differences of
/// step h at grid_n points spread over [a + h, b - h]. abs_diff is the largest
/// deviation from f; lhs and rhs are the two sides at that point.
CheckReport ftc_forward_check(const RealFn& f, double a, double b, int grid_n, double h,
                              double tol, std::string name = "ftc_forward",
                              const IntegratorOptions& opts = {});

/// integral of dG over [a, b] against G(b) - G(a).
CheckReport ftc_reverse_check(const RealFn& G, const RealFn& dG, double a, double b, double tol,
                              std::string name = "ftc_reverse",
                              const IntegratorOptions& opts = {});

/// Range (max - min) of F(x) - G(x) + G(a) over grid_n + 1 uniform points of
/// [a, b], where F is the cumulative integral of dG. Should be ~0.
double constant_criterion_range(const RealFn& G, const RealFn& dG, double a, double b,
                                int grid_n, double tol,
                                const IntegratorOptions& opts = {});

/// Largest |central difference of F - dF| over `points`, step
/// h(x) = h_scale * max(1, |x|).
double max_derivative_deviation(const RealFn& F, const RealFn& dF,
                                const std::vector<double>& points, double h_scale);

/// Step used by every finite-difference check unless told otherwise.
inline constexpr double kDefaultStepScale = 1.0 / 8192.0;

/// One report per row of the standard derivative table (14 rows), each over
/// 16 interior points of a row-specific interval.
std::vector<CheckReport> derivative_table_check(double tol);

CheckReport check_product_rule(const RealFn& u, const RealFn& du, const RealFn& v,
                               const RealFn& dv, double lo, double hi, double tol,
                               std::string name = "product_rule");

/// d/dx F(G(x)) = f(G(x)) g(x).
CheckReport check_chain_rule(const RealFn& F, const RealFn& f, const RealFn& G, const RealFn& g,
                             double lo, double hi, double tol, std::string name = "chain_rule");

/// Product rule on sin * exp and chain rule on sin(t^2).
std::vector<CheckReport> product_chain_check(double tol);

struct CatalogEntry {
  std::string name;
  RealFn integrand;
  std::function<double(double, double)> closed_form;
  Interval domain;
  std::optional<SingularEnd> improper_end;
  std::string anchor;
};

/// Every integral identity the suite knows, each on a fixed test interval.
std::vector<CatalogEntry> catalog();

struct SuiteOptions {
  /// Worker threads; 0 means the OpenMP default.
  int jobs = 0;
  std::uint64_t seed = 42;
  IntegratorOptions integrator{};
};

/// Integrates each catalog entry and compares with its closed form. Entries
/// run concurrently; the result is sorted by name.
std::vector<CheckReport> run_catalog(double tol, const SuiteOptions& opts = {});

/// The change-of-variables and integration-by-parts showcases.
std::vector<CheckReport> substitution_showcases(double tol, const SuiteOptions& opts = {});

/// Catalog, derivative table, product/chain rules, substitution showcases,
/// both FTC directions and the seeded log functional-equation sample; only
/// names containing `filter` are kept. Sorted by name.
std::vector<CheckReport> verification_suite(double tol, const std::string& filter = "",
                                            const SuiteOptions& opts = {});

/// CSV: `name,lhs,rhs,abs_diff,tol,pass,anchor`.
std::string to_csv(const std::vector<CheckReport>& reports);

}  // namespace rf
