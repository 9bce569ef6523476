#include <cmath>
#include <numbers>

#include "parallel_tasks.hpp"
#include "rf/elementary.hpp"
#include "rf/errors.hpp"
#include "rf/theorems.hpp"

namespace rf {

namespace {

double ln(double x) { return log_construct(x).value; }
double expc(double x) { return exp_construct(x); }
double hyp(Hyperbolic k, double x) { return hyperbolic(k, x); }
double inv(InverseKind k, double y) { return inverse_fn(k, y); }

// Closed form from an antiderivative: G(b) - G(a).
std::function<double(double, double)> by_antiderivative(std::function<double(double)> G) {
  return [G = std::move(G)](double a, double b) { return G(b) - G(a); };
}

CatalogEntry entry(std::string name, RealFn integrand, std::function<double(double)> antider,
                   Interval domain, std::string anchor,
                   std::optional<SingularEnd> end = std::nullopt) {
  return {std::move(name), std::move(integrand), by_antiderivative(std::move(antider)), domain,
          end, std::move(anchor)};
}

CatalogEntry real_power(std::string name, double a, Interval domain) {
  return entry(
      std::move(name), [a](double t) { return std::pow(t, a); },
      [a](double x) { return pow_construct(x, a + 1) / (a + 1); }, domain,
      "integral of t^a = (q^(a+1) - p^(a+1))/(a+1)");
}

}  // namespace

std::vector<CatalogEntry> catalog() {
  using std::numbers::pi;
  std::vector<CatalogEntry> c;

  c.push_back(entry(
      "log", [](double t) { return 1.0 / t; }, ln, {1.0, 5.0},
      "log x = integral of 1/t from 1 to x"));
  c.push_back(entry(
      "exp", [](double t) { return std::exp(t); }, expc, {-1.0, 2.0},
      "integral of e^t from p to q = e^q - e^p"));
  c.push_back(entry(
      "exp_base", [](double t) { return std::exp2(t); },
      [](double x) { return pow_construct(2.0, x) / ln(2.0); }, {0.0, 3.0},
      "integral of b^t = (b^q - b^p)/log b"));
  c.push_back(entry(
      "power_n", [](double t) { return t * t * t; },
      [](double x) { return x * x * x * x / 4; }, {0.0, 2.0},
      "integral of t^n from 0 to x = x^(n+1)/(n+1)"));
  c.push_back(entry(
      "cos", [](double t) { return std::cos(t); }, [](double x) { return std::sin(x); },
      {0.0, 2.0}, "integral of cos from 0 to x = sin x"));
  c.push_back(entry(
      "sin", [](double t) { return std::sin(t); }, [](double x) { return -std::cos(x); },
      {0.0, 2.0}, "integral of sin from 0 to x = 1 - cos x"));

  c.push_back(real_power("real_power_half", 0.5, {1.0, 4.0}));
  c.push_back(real_power("real_power_neg_half", -0.5, {1.0, 9.0}));
  c.push_back(real_power("real_power_pi", pi, {0.5, 2.0}));

  c.push_back(entry(
      "arctan", [](double t) { return 1.0 / (1.0 + t * t); },
      [](double x) { return inv(InverseKind::Arctan, x); }, {0.0, 2.0},
      "integral of 1/(1+t^2) from 0 to y = arctan y"));
  c.push_back(entry(
      "arcsin", [](double t) { return 1.0 / std::sqrt(1.0 - t * t); },
      [](double x) { return inv(InverseKind::Arcsin, x); }, {0.0, 0.5},
      "integral of 1/sqrt(1-t^2) from 0 to y = arcsin y"));
  c.push_back(entry(
      "arcsin_improper", [](double t) { return 1.0 / std::sqrt((1.0 - t) * (1.0 + t)); },
      [](double x) { return inv(InverseKind::Arcsin, x); }, {0.0, 1.0},
      "integral of 1/sqrt(1-t^2) from 0 to 1 = pi/2", SingularEnd::Upper));

  c.push_back(entry(
      "tan", [](double t) { return std::tan(t); },
      [](double x) { return -ln(std::abs(std::cos(x))); }, {0.2, 1.2},
      "integral of tan = -log|cos t| + C"));
  c.push_back(entry(
      "cot", [](double t) { return 1.0 / std::tan(t); },
      [](double x) { return ln(std::abs(std::sin(x))); }, {0.3, 1.2},
      "integral of cot = log|sin t| + C"));
  c.push_back(entry(
      "sec", [](double t) { return 1.0 / std::cos(t); },
      [](double x) { return ln(std::abs(1.0 / std::cos(x) + std::tan(x))); }, {0.0, 1.0},
      "integral of sec from 0 to x = log|sec x + tan x|"));
  c.push_back(entry(
      "csc", [](double t) { return 1.0 / std::sin(t); },
      // G(t) = -(csc t + cot t) has G' = csc(t) G(t), so -log|G| is an antiderivative.
      [](double x) { return -ln(std::abs(-(1.0 / std::sin(x) + 1.0 / std::tan(x)))); },
      {0.5, 1.5}, "integral of csc = log|G(a)| - log|G(b)| with G = -(csc + cot)"));
  c.push_back(entry(
      "sec2", [](double t) { return 1.0 / (std::cos(t) * std::cos(t)); },
      [](double x) { return std::tan(x); }, {0.0, 1.0},
      "integral of sec^2 from 0 to x = tan x"));
  c.push_back(entry(
      "csc2", [](double t) { return 1.0 / (std::sin(t) * std::sin(t)); },
      [](double x) { return -1.0 / std::tan(x); }, {0.5, 1.5},
      "integral of csc^2 from a to b = cot a - cot b"));
  c.push_back(entry(
      "sectan", [](double t) { return std::tan(t) / std::cos(t); },
      [](double x) { return 1.0 / std::cos(x); }, {0.0, 1.0},
      "integral of sec t tan t from 0 to x = sec x - 1"));

  c.push_back(entry(
      "cosh", [](double t) { return std::cosh(t); },
      [](double x) { return hyp(Hyperbolic::Sinh, x); }, {0.0, 2.0},
      "integral of cosh from 0 to x = sinh x"));
  c.push_back(entry(
      "sinh", [](double t) { return std::sinh(t); },
      [](double x) { return hyp(Hyperbolic::Cosh, x); }, {0.0, 2.0},
      "integral of sinh from 0 to x = cosh x - 1"));
  c.push_back(entry(
      "sech2", [](double t) { return 1.0 / (std::cosh(t) * std::cosh(t)); },
      [](double x) { return hyp(Hyperbolic::Tanh, x); }, {0.0, 2.0},
      "integral of sech^2 from 0 to x = tanh x"));
  c.push_back(entry(
      "csch2", [](double t) { return 1.0 / (std::sinh(t) * std::sinh(t)); },
      [](double x) { return -hyp(Hyperbolic::Coth, x); }, {0.5, 2.0},
      "integral of csch^2 from a to b = coth a - coth b"));
  c.push_back(entry(
      "arsinh", [](double t) { return 1.0 / std::sqrt(1.0 + t * t); },
      [](double x) { return inv(InverseKind::Arsinh, x); }, {0.0, 2.0},
      "integral of 1/sqrt(1+t^2) from 0 to y = arsinh y"));
  c.push_back(entry(
      "arcosh", [](double t) { return 1.0 / std::sqrt((t - 1.0) * (t + 1.0)); },
      [](double x) { return inv(InverseKind::Arcosh, x); }, {1.0, 2.0},
      "integral of 1/sqrt(t^2-1) from 1 to y = arcosh y", SingularEnd::Lower));
  c.push_back(entry(
      "artanh", [](double t) { return 1.0 / (1.0 - t * t); },
      [](double x) { return inv(InverseKind::Artanh, x); }, {0.0, 0.5},
      "integral of 1/(1-t^2) from 0 to y = artanh y"));

  c.push_back(entry(
      "int_log", [](double t) { return std::log(t); },
      [](double x) { return x * ln(x) - x; }, {1.0, 3.0},
      "integral of log from 1 to x = x log x - x + 1"));
  c.push_back(entry(
      "int_arctan", [](double t) { return std::atan(t); },
      [](double x) { return x * inv(InverseKind::Arctan, x) - 0.5 * ln(1.0 + x * x); },
      {0.0, 1.0}, "integral of arctan from 0 to x = x arctan x - log(1+x^2)/2"));

  return c;
}

namespace detail {

std::vector<NamedTask> catalog_tasks(double tol, const SuiteOptions& opts) {
  std::vector<NamedTask> tasks;
  for (auto& e : catalog()) {
    NamedTask t{e.name, e.anchor, tol, {}};
    t.run = [e = std::move(e), tol, opts] {
      const double a = e.domain.a;
      const double b = e.domain.b;
      const IntegrationResult r =
          e.improper_end
              ? integrate_improper(e.integrand, a, b, *e.improper_end, tol / 4, opts.integrator)
              : integrate(e.integrand, a, b, tol / 4, TagRule::midpoint(), opts.integrator);
      return make_report(e.name, r.value, e.closed_form(a, b), tol, e.anchor);
    };
    tasks.push_back(std::move(t));
  }
  return tasks;
}

}  // namespace detail

std::vector<CheckReport> run_catalog(double tol, const SuiteOptions& opts) {
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  return detail::run_tasks(detail::catalog_tasks(tol, opts), opts.jobs);
}

}  // namespace rf
