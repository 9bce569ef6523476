#include "rf/direct_eval.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rf/elementary.hpp"
#include "rf/errors.hpp"
#include "rf/kahan.hpp"
#include "rf/roots.hpp"

namespace rf {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
const double kNearOne = std::ldexp(1.0, -26);

void check_cells(std::size_t n) {
  if (n == 0) throw InvalidArgument("need at least one cell");
}

double node(double a, double b, std::size_t k, std::size_t n) {
  if (k == n) return b;
  return a + (b - a) * (static_cast<double>(k) / static_cast<double>(n));
}

}  // namespace

SandwichPair log_limit_bounds(double x, std::size_t n) {
  if (!(x > 1.0) || !std::isfinite(x))
    throw InvalidArgument("log_limit_bounds needs finite x > 1 (use log(1/x) = -log(x) below 1)");
  check_cells(n);
  const long double d = root_minus_one(x, n);
  const long double upper = static_cast<long double>(n) * d;
  return {static_cast<double>(upper / (1.0L + d)), static_cast<double>(upper)};
}

namespace {

void check_geometric(double b, double p, double q, std::size_t n) {
  if (!(b > 0.0)) throw DomainError("exp_geometric_sum needs b > 0");
  if (b == 1.0) throw InvalidArgument("b = 1 gives a constant integrand; use integrate");
  if (!(p < q)) throw InvalidArgument("exp_geometric_sum needs p < q");
  check_cells(n);
}

long double geometric_direct(long double first, long double ratio, std::size_t n) {
  KahanAccumulator<long double> acc;
  long double term = first;
  for (std::size_t k = 0; k < n; ++k) {
    acc += term;
    term *= ratio;
  }
  return acc.value();
}

}  // namespace

double exp_geometric_sum(double b, double p, double q, std::size_t n) {
  check_geometric(b, p, q, n);
  const double delta = (q - p) / static_cast<double>(n);
  const long double first = pow_construct(b, p);
  const long double ratio = pow_construct(b, delta);
  return static_cast<double>(delta * geometric_direct(first, ratio, n));
}

double exp_geometric_closed_form(double b, double p, double q, std::size_t n) {
  check_geometric(b, p, q, n);
  const double delta = (q - p) / static_cast<double>(n);
  const long double ratio = pow_construct(b, delta);
  if (std::abs(ratio - 1.0L) <= kNearOne)
    return static_cast<double>(delta * geometric_direct(pow_construct(b, p), ratio, n));
  const long double bq = pow_construct(b, q);
  const long double bp = pow_construct(b, p);
  return static_cast<double>((bq - bp) * delta / (ratio - 1.0L));
}

PowerSum power_sum(unsigned n_exp, std::uint64_t N) {
  PowerSum total = 0;
  for (std::uint64_t k = 0; k < N; ++k) {
    PowerSum term = 1;
    for (unsigned e = 0; e < n_exp; ++e)
      if (__builtin_mul_overflow(term, static_cast<PowerSum>(k), &term))
        throw EvaluationError("power sum overflows 128 bits", static_cast<double>(k));
    if (__builtin_add_overflow(total, term, &total))
      throw EvaluationError("power sum overflows 128 bits", static_cast<double>(k));
  }
  return total;
}

double faulhaber_left_sum(unsigned n_exp, double x, std::uint64_t N) {
  if (N == 0) throw InvalidArgument("need at least one cell");
  if (n_exp > 20) throw InvalidArgument("exponent above 20 is refused (overflow guard)");
  // (x/N) sum (k x / N)^n = x^{n+1} / N^{n+1} * sum k^n
  const long double sum = static_cast<long double>(power_sum(n_exp, N));
  const long double scale = ipow(static_cast<long double>(N), n_exp + 1);
  return static_cast<double>(ipow(static_cast<long double>(x), n_exp + 1) * (sum / scale));
}

Complex demoivre_pow(double theta, unsigned n) {
  const Complex z(std::cos(theta), std::sin(theta));
  Complex w(1.0, 0.0);
  for (unsigned k = 0; k < n; ++k) w *= z;
  return w;
}

Complex demoivre_riemann_sum(double x, std::size_t n) {
  check_cells(n);
  if (x == 0.0) return {0.0, 0.0};
  const double h = x / static_cast<double>(n);
  const std::complex<long double> z(std::cos(h), std::sin(h));
  std::complex<long double> w(1.0L, 0.0L);
  KahanAccumulator<std::complex<long double>> acc;
  for (std::size_t k = 0; k < n; ++k) {
    acc += w;
    w *= z;
  }
  const std::complex<long double> s = static_cast<long double>(h) * acc.value();
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

Complex demoivre_closed_form(double x, std::size_t n) {
  check_cells(n);
  if (x == 0.0) return {0.0, 0.0};
  const double h = x / static_cast<double>(n);
  const Complex z(std::cos(h), std::sin(h));
  if (std::abs(z - 1.0) <= kNearOne) return demoivre_riemann_sum(x, n);
  const Complex zn(std::cos(x), std::sin(x));
  return h * (zn - 1.0) / (z - 1.0);
}

TelescopeForms telescope_sec2(double x, std::size_t n) {
  check_cells(n);
  if (!(std::abs(x) < kHalfPi)) throw DomainError("telescope_sec2 needs |x| < pi/2");
  if (x == 0.0) return {};
  // tan A - tan B = sin(A - B) / (cos A cos B)
  KahanAccumulator<double> tele;
  KahanAccumulator<double> riem;
  double lo = 0.0;
  double cos_lo = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double hi = node(0.0, x, k + 1, n);
    const double cos_hi = std::cos(hi);
    tele += std::sin(hi - lo) / (cos_lo * cos_hi);
    riem += 1.0 / (cos_lo * cos_lo);
    lo = hi;
    cos_lo = cos_hi;
  }
  return {tele.value(), x / static_cast<double>(n) * riem.value()};
}

TelescopeForms telescope_csc2(double a, double b, std::size_t n) {
  check_cells(n);
  if (!(0.0 < a && a < b && b < std::numbers::pi))
    throw DomainError("telescope_csc2 needs 0 < a < b < pi");
  // cot B - cot A = sin(A - B) / (sin A sin B), summed as cot t_k - cot t_{k+1}
  KahanAccumulator<double> tele;
  KahanAccumulator<double> riem;
  double lo = a;
  double sin_lo = std::sin(a);
  for (std::size_t k = 0; k < n; ++k) {
    const double hi = node(a, b, k + 1, n);
    const double sin_hi = std::sin(hi);
    tele += std::sin(hi - lo) / (sin_lo * sin_hi);
    riem += 1.0 / (sin_lo * sin_lo);
    lo = hi;
    sin_lo = sin_hi;
  }
  return {tele.value(), (b - a) / static_cast<double>(n) * riem.value()};
}

TelescopeForms sectan_telescope(double x, std::size_t n) {
  check_cells(n);
  if (!(std::abs(x) < kHalfPi)) throw DomainError("sectan_telescope needs |x| < pi/2");
  if (x == 0.0) return {};
  // sec A - sec B = (cos B - cos A) / (cos A cos B), with the cosine
  // difference as 2 sin((A + B)/2) sin((A - B)/2) to keep it accurate.
  KahanAccumulator<double> tele;
  KahanAccumulator<double> riem;
  double lo = 0.0;
  double cos_lo = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double hi = node(0.0, x, k + 1, n);
    const double cos_hi = std::cos(hi);
    const double cos_diff = 2.0 * std::sin((hi + lo) / 2) * std::sin((hi - lo) / 2);
    tele += cos_diff / (cos_lo * cos_hi);
    riem += std::tan(lo) / cos_lo;
    lo = hi;
    cos_lo = cos_hi;
  }
  return {tele.value(), x / static_cast<double>(n) * riem.value()};
}

}  // namespace rf
