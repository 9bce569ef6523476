#include "rf/elementary.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rf/errors.hpp"
#include "rf/roots.hpp"

namespace rf {

namespace {

constexpr long double kUnit = LDBL_EPSILON / 2;  // unit roundoff of long double
constexpr unsigned kMaxHalvings = 62;

struct LdApprox {
  long double value = 0.0L;
  long double bound = 0.0L;
};

// Enclosure of log m for m in [1, 2] from the lower/upper sums of 1/t on the
// geometric partition of [1, m] with n = 2^j cells. `budget` is error already
// spent elsewhere (range reduction) that counts against eps.
LdApprox sandwich(long double m, long double eps, long double budget) {
  if (m == 1.0L) return {};
  const long double excess = m - 1.0L;
  long double d = excess;
  for (unsigned j = 1;; ++j) {
    d /= std::sqrt(1.0L + d) + 1.0L;  // d = m^{1/2^j} - 1
    const long double n = std::ldexp(1.0L, static_cast<int>(j));
    const long double upper = n * d;
    const long double lower = upper / (1.0L + d);
    const long double bernoulli_gap = excess * excess / (n * (1.0L + d));
    const long double rounding = upper * (root_minus_one_pow2_error(j) + 5 * kUnit);
    if (bernoulli_gap + rounding + budget <= eps || j == kMaxHalvings) {
      const long double half_gap = (upper - lower) / 2 * (1.0L + kUnit);
      return {(upper + lower) / 2, half_gap + rounding};
    }
  }
}

const LdApprox& log2_enclosure() {
  static const LdApprox l2 = sandwich(2.0L, 0.0L, 0.0L);
  return l2;
}

// log z for z > 0: z = 2^k m, m in [1, 2).
LdApprox log_ld(long double z, long double eps) {
  int e = 0;
  const long double f = std::frexp(z, &e);  // z = f 2^e, f in [1/2, 1)
  const long double m = 2 * f;
  const int k = e - 1;
  if (k == 0) return sandwich(m, eps, 0.0L);

  const LdApprox& l2 = log2_enclosure();
  const long double kk = static_cast<long double>(k);
  const long double shift = kk * l2.value;
  const long double reduction = std::abs(kk) * l2.bound + kUnit * std::abs(shift);
  const LdApprox s = sandwich(m, eps, reduction);
  const long double value = shift + s.value;
  return {value, s.bound + reduction + kUnit * std::abs(value)};
}

// Bisection for log z = y on [lo, hi] (log increasing, log lo <= y <= log hi).
long double bisect_log(long double y, long double lo, long double hi, long double eps) {
  for (int iter = 0; iter < 400; ++iter) {
    const long double mid = lo + (hi - lo) / 2;
    if (hi - lo <= eps * std::max(1.0L, mid) || mid == lo || mid == hi) break;
    // Deciding the side of the root only needs log to within the relative
    // width still to be removed.
    const long double log_eps = std::min(1e-3L, eps * std::max(1.0L, mid) / (4 * mid));
    if (log_ld(mid, log_eps).value < y)
      lo = mid;
    else
      hi = mid;
  }
  return lo + (hi - lo) / 2;
}

long double exp_ld(long double y, long double eps) {
  if (y == 0.0L) return 1.0L;
  const long double l2 = log2_enclosure().value;
  // Bracket [2^k, 2^{k+1}] with k log 2 <= y < (k + 1) log 2.
  long double k = std::floor(y / l2);
  if (k >= 1024) return std::numeric_limits<long double>::infinity();
  if (k < -1100) return 0.0L;
  while (k * l2 > y) k -= 1;
  while ((k + 1) * l2 <= y) k += 1;
  const int ik = static_cast<int>(k);
  long double lo = std::ldexp(1.0L, ik);
  long double hi = std::ldexp(1.0L, ik + 1);

  // Newton on log z = y (z <- z (1 + y - log z)) from the bracket's low end
  // shrinks the bracket far faster than halving. Every log evaluation also
  // tightens [lo, hi], so the bisection fallback starts from what was learned.
  const auto log_eps = [eps](long double z) {
    return std::min(1e-3L, eps * std::max(1.0L, z) / (8 * z));
  };
  long double z = lo * (1.0L + (y - k * l2));
  for (int iter = 0; iter < 12; ++iter) {
    const long double L = log_ld(z, log_eps(z)).value;
    if (L < y)
      lo = std::max(lo, z);
    else
      hi = std::min(hi, z);
    long double next = z * (1.0L + (y - L));
    if (!(next > lo && next < hi)) next = lo + (hi - lo) / 2;
    const bool settled = std::abs(next - z) <= eps * std::max(1.0L, z) / 8;
    z = next;
    if (settled) break;
  }
  // Accept z once log changes sign across [z - w, z + w] with 2w = eps max(1, z).
  const long double w = eps * std::max(1.0L, z) / 2 * (1.0L - 8 * kUnit);
  const long double below = z - w;
  const long double above = z + w;
  if (log_ld(below, log_eps(z)).value < y &&
      !(log_ld(above, log_eps(z)).value < y))
    return z;
  return bisect_log(y, lo, hi, eps);
}

void check_eps(double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
}

double round_up(long double v) {
  double d = static_cast<double>(v);
  if (static_cast<long double>(d) < v) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return d;
}

}  // namespace
ApproxValue log_construct(double x, double eps) {
  check_eps(eps);
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log needs a finite positive argument, got " + std::to_string(x));
  const LdApprox r = log_ld(x, eps);
  const double value = static_cast<double>(r.value);
  const long double conversion = std::abs(static_cast<long double>(value) - r.value);
  return {value, round_up(r.bound + conversion)};
}

double exp_construct(double y, double eps) {
  check_eps(eps);
  if (std::isnan(y)) throw DomainError("exp of NaN");
  return static_cast<double>(exp_ld(y, eps));
}

double e_const(double eps) {
  check_eps(eps);
  // log 2 < 1 < log 3 makes [2, 3] a valid bracket.
  const ApproxValue log2 = log_construct(2.0, 1e-12);
  const ApproxValue log3 = log_construct(3.0, 1e-12);
  if (!(log2.value + log2.bound < 1.0 && log3.value - log3.bound > 1.0))
    throw DomainError("log 2 < 1 < log 3 failed; [2, 3] does not bracket e");
  return static_cast<double>(bisect_log(1.0L, 2.0L, 3.0L, eps));
}

double pow_construct(double b, double x, double eps) {
  check_eps(eps);
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("pow needs a finite positive base, got " + std::to_string(b));
  if (std::isnan(x)) throw DomainError("pow with NaN exponent");
  if (x == 0.0 || b == 1.0) return 1.0;
  const long double ax = std::max(1.0L, std::abs(static_cast<long double>(x)));
  const LdApprox lb = log_ld(b, eps / (2 * ax));
  return static_cast<double>(exp_ld(static_cast<long double>(x) * lb.value, eps / 2));
}

double hyperbolic(Hyperbolic kind, double x) {
  if (std::isnan(x)) throw DomainError("hyperbolic function of NaN");
  if (x == 0.0 && (kind == Hyperbolic::Csch2 || kind == Hyperbolic::Coth))
    throw DomainError("csch^2 and coth have a pole at 0");

  const double sign = std::signbit(x) ? -1.0 : 1.0;
  const double e = exp_construct(std::abs(x));  // e^{|x|}
  const double inv = 1.0 / e;                   // e^{-|x|}
  const double sinh_abs = (e - inv) / 2;
  const double cosh = (e + inv) / 2;
  switch (kind) {
    case Hyperbolic::Sinh: return sign * sinh_abs;
    case Hyperbolic::Cosh: return cosh;
    case Hyperbolic::Tanh: return sign * (1 - inv * inv) / (1 + inv * inv);
    case Hyperbolic::Sech2: return 1 / (cosh * cosh);
    case Hyperbolic::Csch2: return 1 / (sinh_abs * sinh_abs);
    case Hyperbolic::Coth: return sign * (1 + inv * inv) / (1 - inv * inv);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

namespace {

template <typename Forward>
double bisect_increasing(Forward&& forward, double target, double lo, double hi, double eps) {
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (hi - lo <= eps * std::max(1.0, std::abs(mid)) || mid == lo || mid == hi) break;
    if (forward(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return lo + (hi - lo) / 2;
}

// Smallest power of two r >= 1 with forward(r) >= target (capped).
template <typename Forward>
double expand_bracket(Forward&& forward, double target, double cap) {
  double r = 1.0;
  while (r < cap && forward(r) < target) r *= 2;
  return r;
}

}  // namespace

double inverse_fn(InverseKind kind, double y, double eps) {
  check_eps(eps);
  if (std::isnan(y)) throw DomainError("inverse function of NaN");
  constexpr double half_pi = std::numbers::pi / 2;
  const double sign = std::signbit(y) ? -1.0 : 1.0;
  const double ay = std::abs(y);
  if (ay == 0.0 && kind != InverseKind::Arcosh) return y;  // odd maps fix 0

  switch (kind) {
    case InverseKind::Arcsin: {
      if (ay > 1.0) throw DomainError("arcsin needs |y| <= 1, got " + std::to_string(y));
      auto fwd = [](double t) { return std::sin(t); };
      if (ay >= fwd(half_pi)) return sign * half_pi;
      return sign * bisect_increasing(fwd, ay, 0.0, half_pi, eps);
    }
    case InverseKind::Arctan: {
      auto fwd = [](double t) { return std::tan(t); };
      if (ay >= fwd(half_pi)) return sign * half_pi;
      return sign * bisect_increasing(fwd, ay, 0.0, half_pi, eps);
    }
    case InverseKind::Arsinh: {
      auto fwd = [](double t) { return hyperbolic(Hyperbolic::Sinh, t); };
      const double hi = expand_bracket(fwd, ay, 1024.0);
      return sign * bisect_increasing(fwd, ay, 0.0, hi, eps);
    }
    case InverseKind::Arcosh: {
      if (y < 1.0) throw DomainError("arcosh needs y >= 1, got " + std::to_string(y));
      auto fwd = [](double t) { return hyperbolic(Hyperbolic::Cosh, t); };
      const double hi = expand_bracket(fwd, y, 1024.0);
      return bisect_increasing(fwd, y, 0.0, hi, eps);
    }
    case InverseKind::Artanh: {
      if (ay >= 1.0) throw DomainError("artanh needs |y| < 1, got " + std::to_string(y));
      auto fwd = [](double t) { return hyperbolic(Hyperbolic::Tanh, t); };
      const double hi = expand_bracket(fwd, ay, 64.0);
      return sign * bisect_increasing(fwd, ay, 0.0, hi, eps);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace rf
