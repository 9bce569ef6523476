#include "rf/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "parallel_tasks.hpp"
#include "rf/report_io.hpp"
#include "rf/elementary.hpp"
#include "rf/errors.hpp"

namespace rf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Finite-difference checks cannot beat their own h^2 truncation, so the suite
// never asks them for less than this.
constexpr double kFiniteDifferenceFloor = 1e-5;

double integral(const RealFn& f, double a, double b, double tol, const IntegratorOptions& opts) {
  return integrate(f, a, b, tol, TagRule::midpoint(), opts).value;
}

// Five Chebyshev points of [a, b] (in either order).
std::vector<double> chebyshev5(double a, double b) {
  const double mid = (a + b) / 2;
  const double half = (b - a) / 2;
  std::vector<double> xs;
  for (int k = 0; k < 5; ++k) xs.push_back(mid + half * std::cos((2 * k + 1) * std::numbers::pi / 10));
  return xs;
}

// Hypothesis G(x) - G(a) = integral of g from a to x, at five points.
void spot_check(const RealFn& G, const RealFn& g, double a, double b, double tol,
                const char* what, const IntegratorOptions& opts) {
  const double Ga = G(a);
  for (double x : chebyshev5(a, b)) {
    const double dev = std::abs(G(x) - Ga - integral(g, a, x, tol / 4, opts));
    if (!(dev <= tol))
      throw HypothesisViolation(std::string(what) + " is not an antiderivative of its partner at x=" +
                                    io::format_g(x, 6) + " (off by " + io::format_g(dev, 6) + ")",
                                x);
  }
}

struct WorstPoint {
  double x = kNaN;
  double fd = kNaN;
  double exact = kNaN;
  double dev = 0.0;
};

WorstPoint worst_derivative(const RealFn& F, const RealFn& dF, const std::vector<double>& xs,
                            double h_scale) {
  WorstPoint w;
  for (double x : xs) {
    const double h = h_scale * std::max(1.0, std::abs(x));
    const double fd = (F(x + h) - F(x - h)) / (2 * h);
    const double exact = dF(x);
    const double dev = std::abs(fd - exact);
    if (!(dev <= w.dev)) w = {x, fd, exact, dev};
  }
  return w;
}

std::vector<double> midpoints(double lo, double hi, int count) {
  std::vector<double> xs;
  for (int i = 0; i < count; ++i) xs.push_back(lo + (hi - lo) * (i + 0.5) / count);
  return xs;
}

CheckReport derivative_report(std::string name, const RealFn& F, const RealFn& dF, double lo,
                              double hi, double tol, std::string anchor) {
  const WorstPoint w = worst_derivative(F, dF, midpoints(lo, hi, 16), kDefaultStepScale);
  return make_report(std::move(name), w.fd, w.exact, tol, std::move(anchor));
}

double ln(double x) { return log_construct(x).value; }

const std::string kUsubAnchor =
    "integral of f(G(t)) g(t) over [a b] = integral of f over [G(a) G(b)]";
const std::string kPartsAnchor = "integral of p v + integral of u q = u(b)v(b) - u(a)v(a)";
const std::string kForwardAnchor = "F(x) = integral of f from a to x has F' = f";
const std::string kReverseAnchor = "integral of G' over [a b] = G(b) - G(a)";
const std::string kProductAnchor = "d/dx (u v) = u' v + u v'";
const std::string kChainAnchor = "d/dx F(G(x)) = f(G(x)) g(x)";
const std::string kLogAnchor = "log(xy) = log x + log y";

}  // namespace

CheckReport make_report(std::string name, double lhs, double rhs, double tol,
                        std::string anchor) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_diff = std::abs(lhs - rhs);
  r.tol = tol;
  r.pass = r.abs_diff <= tol;
  r.anchor = std::move(anchor);
  return r;
}

CheckReport check_u_sub(const RealFn& f, const RealFn& G, const RealFn& g, double a, double b,
                        double tol, std::string name, const IntegratorOptions& opts) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  spot_check(G, g, a, b, tol, "G", opts);
  const double lhs = integral([&](double t) { return f(G(t)) * g(t); }, a, b, tol / 4, opts);
  const double rhs = integral(f, G(a), G(b), tol / 4, opts);
  return make_report(std::move(name), lhs, rhs, tol, kUsubAnchor);
}

CheckReport check_parts(const RealFn& u, const RealFn& p, const RealFn& v, const RealFn& q,
                        double a, double b, double tol, std::string name,
                        const IntegratorOptions& opts) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  spot_check(u, p, a, b, tol, "u", opts);
  spot_check(v, q, a, b, tol, "v", opts);
  const double lhs = integral([&](double t) { return p(t) * v(t); }, a, b, tol / 4, opts) +
                     integral([&](double t) { return u(t) * q(t); }, a, b, tol / 4, opts);
  const double rhs = u(b) * v(b) - u(a) * v(a);
  return make_report(std::move(name), lhs, rhs, tol, kPartsAnchor);
}

CheckReport ftc_forward_check(const RealFn& f, double a, double b, int grid_n, double h,
                              double tol, std::string name, const IntegratorOptions& opts) {
  if (!(h > 0.0) || grid_n < 1 || !(b - a > 2 * h))
    throw InvalidArgument("ftc_forward_check needs h > 0, grid_n >= 1 and b - a > 2h");
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  std::vector<double> xs;
  for (int i = 0; i < grid_n; ++i)
    xs.push_back(grid_n == 1 ? (a + b) / 2 : a + h + (b - a - 2 * h) * i / (grid_n - 1));
  std::vector<double> probes;
  for (double x : xs) {
    probes.push_back(x - h);
    probes.push_back(x + h);
  }
  std::sort(probes.begin(), probes.end());
  // The quotient amplifies quadrature error by 1/h; keep it to tol/4.
  const std::vector<double> F = cumulative(f, a, probes, tol * h / 4, opts);
  const auto at = [&](double x) {
    return F[std::lower_bound(probes.begin(), probes.end(), x) - probes.begin()];
  };
  WorstPoint w;
  for (double x : xs) {
    const double fd = (at(x + h) - at(x - h)) / (2 * h);
    const double exact = f(x);
    const double dev = std::abs(fd - exact);
    if (!(dev <= w.dev)) w = {x, fd, exact, dev};
  }
  return make_report(std::move(name), w.fd, w.exact, tol, kForwardAnchor);
}

CheckReport ftc_reverse_check(const RealFn& G, const RealFn& dG, double a, double b, double tol,
                              std::string name, const IntegratorOptions& opts) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  return make_report(std::move(name), integral(dG, a, b, tol / 2, opts), G(b) - G(a), tol,
                     kReverseAnchor);
}

double constant_criterion_range(const RealFn& G, const RealFn& dG, double a, double b,
                                int grid_n, double tol, const IntegratorOptions& opts) {
  if (grid_n < 1) throw InvalidArgument("grid_n must be positive");
  std::vector<double> grid;
  for (int i = 1; i <= grid_n; ++i) grid.push_back(i == grid_n ? b : a + (b - a) * i / grid_n);
  const std::vector<double> F = cumulative(dG, a, grid, tol, opts);
  const double Ga = G(a);
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double H = F[i] - G(grid[i]) + Ga;
    lo = std::min(lo, H);
    hi = std::max(hi, H);
  }
  return hi - lo;
}

double max_derivative_deviation(const RealFn& F, const RealFn& dF,
                                const std::vector<double>& points, double h_scale) {
  if (!(h_scale > 0.0)) throw InvalidArgument("step scale must be positive");
  return worst_derivative(F, dF, points, h_scale).dev;
}

namespace {

struct DerivativeRow {
  std::string name;
  RealFn F;
  RealFn dF;
  double lo;
  double hi;
  std::string anchor;
};

// The standard derivative table, each row on its own sample interval.
std::vector<DerivativeRow> derivative_rows() {
  using IK = InverseKind;
  using HK = Hyperbolic;
  const double log3 = ln(3.0);
  return {
      {"deriv_exp", [](double x) { return exp_construct(x); },
       [](double x) { return exp_construct(x); }, -2, 2, "d/dx exp x = exp x"},
      {"deriv_log", ln, [](double x) { return 1 / x; }, 0.5, 4, "d/dx log x = 1/x"},
      {"deriv_power", [](double x) { return pow_construct(x, 2.5); },
       [](double x) { return 2.5 * pow_construct(x, 1.5); }, 0.5, 3, "d/dx x^a = a x^(a-1)"},
      {"deriv_exp_base", [](double x) { return pow_construct(3.0, x); },
       [log3](double x) { return log3 * pow_construct(3.0, x); }, -2, 2,
       "d/dx b^x = log(b) b^x"},
      {"deriv_sin", [](double x) { return std::sin(x); }, [](double x) { return std::cos(x); },
       -3, 3, "d/dx sin x = cos x"},
      {"deriv_cos", [](double x) { return std::cos(x); }, [](double x) { return -std::sin(x); },
       -3, 3, "d/dx cos x = -sin x"},
      {"deriv_tan", [](double x) { return std::tan(x); },
       [](double x) { return 1 / (std::cos(x) * std::cos(x)); }, -1, 1, "d/dx tan x = sec^2 x"},
      {"deriv_cot", [](double x) { return 1 / std::tan(x); },
       [](double x) { return -1 / (std::sin(x) * std::sin(x)); }, 0.5, 2.6,
       "d/dx cot x = -csc^2 x"},
      {"deriv_arctan", [](double x) { return inverse_fn(IK::Arctan, x); },
       [](double x) { return 1 / (1 + x * x); }, -3, 3, "d/dx arctan x = 1/(1+x^2)"},
      {"deriv_arcsin", [](double x) { return inverse_fn(IK::Arcsin, x); },
       [](double x) { return 1 / std::sqrt(1 - x * x); }, -0.9, 0.9,
       "d/dx arcsin x = 1/sqrt(1-x^2)"},
      {"deriv_sinh", [](double x) { return hyperbolic(HK::Sinh, x); },
       [](double x) { return hyperbolic(HK::Cosh, x); }, -2, 2, "d/dx sinh x = cosh x"},
      {"deriv_cosh", [](double x) { return hyperbolic(HK::Cosh, x); },
       [](double x) { return hyperbolic(HK::Sinh, x); }, -2, 2, "d/dx cosh x = sinh x"},
      {"deriv_tanh", [](double x) { return hyperbolic(HK::Tanh, x); },
       [](double x) { return hyperbolic(HK::Sech2, x); }, -2, 2, "d/dx tanh x = sech^2 x"},
      {"deriv_arsinh", [](double x) { return inverse_fn(IK::Arsinh, x); },
       [](double x) { return 1 / std::sqrt(1 + x * x); }, -3, 3,
       "d/dx arsinh x = 1/sqrt(1+x^2)"},
  };
}

std::vector<detail::NamedTask> derivative_tasks(double tol) {
  std::vector<detail::NamedTask> tasks;
  for (auto& row : derivative_rows()) {
    detail::NamedTask t{row.name, row.anchor, tol, {}};
    t.run = [row = std::move(row), tol] {
      return derivative_report(row.name, row.F, row.dF, row.lo, row.hi, tol, row.anchor);
    };
    tasks.push_back(std::move(t));
  }
  return tasks;
}

std::vector<detail::NamedTask> product_chain_tasks(double tol) {
  const RealFn sin = [](double x) { return std::sin(x); };
  const RealFn cos = [](double x) { return std::cos(x); };
  const RealFn expc = [](double x) { return exp_construct(x); };
  return {
      {"product_rule_sin_exp", kProductAnchor, tol,
       [=] {
         return check_product_rule(sin, cos, expc, expc, -1.5, 1.5, tol, "product_rule_sin_exp");
       }},
      {"chain_rule_sin_sq", kChainAnchor, tol,
       [=] {
         return check_chain_rule(
             sin, cos, [](double t) { return t * t; }, [](double t) { return 2 * t; }, 0.2, 1.6,
             tol, "chain_rule_sin_sq");
       }},
  };
}

std::vector<detail::NamedTask> showcase_tasks(double tol, const IntegratorOptions& io) {
  using std::numbers::e;
  using std::numbers::pi;
  const RealFn one = [](double) { return 1.0; };
  const RealFn id = [](double t) { return t; };
  return {
      {"usub_tan_sec2", kUsubAnchor, tol,
       [=] {
         return check_u_sub(
             [](double u) { return 1 / (1 + u * u); }, [](double t) { return std::tan(t); },
             [](double t) { return 1 / (std::cos(t) * std::cos(t)); }, 0, pi / 4, tol,
             "usub_tan_sec2", io);
       }},
      {"usub_identity", kUsubAnchor, tol,
       [=] {
         return check_u_sub([](double u) { return std::cos(u); }, id, one, 0, 1, tol,
                            "usub_identity", io);
       }},
      {"usub_half_recip", kUsubAnchor, tol,
       [=] {
         return check_u_sub(
             [](double u) { return 1 / (2 * u); }, [](double t) { return 1 + t * t; },
             [](double t) { return 2 * t; }, 0, 1, tol, "usub_half_recip", io);
       }},
      {"parts_log_t", kPartsAnchor, tol,
       [=] {
         return check_parts(ln, [](double t) { return 1 / t; }, id, one, 1, e, tol,
                            "parts_log_t", io);
       }},
      {"parts_t_t", kPartsAnchor, tol,
       [=] { return check_parts(id, one, id, one, 0, 1, tol, "parts_t_t", io); }},
      {"parts_atan_t", kPartsAnchor, tol,
       [=] {
         return check_parts(
             [](double t) { return inverse_fn(InverseKind::Arctan, t); },
             [](double t) { return 1 / (1 + t * t); }, id, one, 0, 1, tol, "parts_atan_t", io);
       }},
  };
}

CheckReport log_functional_equation(double tol, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> expo(-8.0, 8.0);
  CheckReport worst = make_report("log_functional_equation", 0, 0, tol, kLogAnchor);
  for (int i = 0; i < 200; ++i) {
    const double x = std::exp2(expo(rng));
    const double y = std::exp2(expo(rng));
    CheckReport r = make_report("log_functional_equation", ln(x * y), ln(x) + ln(y), tol, kLogAnchor);
    if (!(r.abs_diff <= worst.abs_diff)) worst = r;
  }
  return worst;
}

std::vector<detail::NamedTask> ftc_tasks(double quad_tol, double fd_tol,
                                          const IntegratorOptions& io) {
  const double h = kDefaultStepScale;
  const RealFn expc = [](double t) { return exp_construct(t); };
  return {
      {"ftc_forward_cos", kForwardAnchor, fd_tol,
       [=] {
         return ftc_forward_check([](double t) { return std::cos(t); }, 0, 3, 32, h, fd_tol,
                                  "ftc_forward_cos", io);
       }},
      {"ftc_forward_recip", kForwardAnchor, fd_tol,
       [=] {
         return ftc_forward_check([](double t) { return 1 / t; }, 1, 4, 32, h, fd_tol,
                                  "ftc_forward_recip", io);
       }},
      {"ftc_forward_exp", kForwardAnchor, fd_tol,
       [=] { return ftc_forward_check(expc, 0, 1, 16, h, fd_tol, "ftc_forward_exp", io); }},
      {"ftc_reverse_square", kReverseAnchor, quad_tol,
       [=] {
         return ftc_reverse_check([](double t) { return t * t; }, [](double t) { return 2 * t; },
                                  0, 1, quad_tol, "ftc_reverse_square", io);
       }},
      {"ftc_reverse_sin", kReverseAnchor, quad_tol,
       [=] {
         return ftc_reverse_check([](double t) { return std::sin(t); },
                                  [](double t) { return std::cos(t); }, 0, std::numbers::pi / 2,
                                  quad_tol, "ftc_reverse_sin", io);
       }},
      {"ftc_reverse_exp", kReverseAnchor, quad_tol,
       [=] { return ftc_reverse_check(expc, expc, 0, 1, quad_tol, "ftc_reverse_exp", io); }},
  };
}

}  // namespace

std::vector<CheckReport> derivative_table_check(double tol) {
  std::vector<CheckReport> out;
  for (const auto& t : derivative_tasks(tol)) out.push_back(t.run());
  return out;
}

CheckReport check_product_rule(const RealFn& u, const RealFn& du, const RealFn& v,
                               const RealFn& dv, double lo, double hi, double tol,
                               std::string name) {
  return derivative_report(
      std::move(name), [&](double x) { return u(x) * v(x); },
      [&](double x) { return du(x) * v(x) + u(x) * dv(x); }, lo, hi, tol, kProductAnchor);
}

CheckReport check_chain_rule(const RealFn& F, const RealFn& f, const RealFn& G, const RealFn& g,
                             double lo, double hi, double tol, std::string name) {
  return derivative_report(
      std::move(name), [&](double x) { return F(G(x)); },
      [&](double x) { return f(G(x)) * g(x); }, lo, hi, tol, kChainAnchor);
}

std::vector<CheckReport> product_chain_check(double tol) {
  std::vector<CheckReport> out;
  for (const auto& t : product_chain_tasks(tol)) out.push_back(t.run());
  return out;
}

std::vector<CheckReport> substitution_showcases(double tol, const SuiteOptions& opts) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  return detail::run_tasks(showcase_tasks(tol, opts.integrator), opts.jobs);
}

std::vector<CheckReport> verification_suite(double tol, const std::string& filter,
                                            const SuiteOptions& opts) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  const double fd_tol = std::max(tol, kFiniteDifferenceFloor);
  std::vector<detail::NamedTask> all = detail::catalog_tasks(tol, opts);
  const auto append = [&all](std::vector<detail::NamedTask> more) {
    for (auto& t : more) all.push_back(std::move(t));
  };
  append(showcase_tasks(tol, opts.integrator));
  append(derivative_tasks(fd_tol));
  append(product_chain_tasks(fd_tol));
  append(ftc_tasks(tol, fd_tol, opts.integrator));
  append({{"log_functional_equation", kLogAnchor, tol,
           [tol, seed = opts.seed] { return log_functional_equation(tol, seed); }}});

  std::vector<detail::NamedTask> kept;
  for (auto& t : all)
    if (t.name.find(filter) != std::string::npos) kept.push_back(std::move(t));
  return detail::run_tasks(kept, opts.jobs);
}

std::string to_csv(const std::vector<CheckReport>& reports) {
  std::string out = "name,lhs,rhs,abs_diff,tol,pass,anchor\n";
  for (const auto& r : reports) {
    out += io::csv_field(r.name) + ',' + io::format_g(r.lhs) + ',' + io::format_g(r.rhs) + ',' +
           io::format_g(r.abs_diff) + ',' + io::format_g(r.tol) + ',' +
           (r.pass ? "true" : "false") + ',' + io::csv_field(r.anchor) + '\n';
  }
  return out;
}

}  // namespace rf
