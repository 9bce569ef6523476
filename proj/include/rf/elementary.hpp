#pragma once

// Constructive elementary functions. log comes from its integral definition
// through the geometric-partition sandwich, exp is its monotone inverse, and
// everything else is built on those two. No platform log/exp is used; sine,
// cosine and tangent are taken as primitives.

namespace rf {

/// A value together with a certified absolute error: the true value lies in
/// [value - bound, value + bound].
struct ApproxValue {
  double value = 0.0;
  double bound = 0.0;
};

inline constexpr double kDefaultEps = 1e-15;

/// Natural log of x > 0 with a certified bound.
///
/// x is reduced to 2^k m with m in [1, 2), and log m is enclosed by
///   n (m^{1/n} - 1) / m^{1/n} <= log m <= n (m^{1/n} - 1),   n = 2^j,
/// doubling n until the gap (m - 1)^2 / (n m^{1/n}) plus the reduction error
/// is below eps. The midpoint of the enclosure is returned; `bound` covers
/// the half-gap, all rounding, and k times the bound on log 2. If eps is below
/// what the arithmetic can certify the best enclosure is returned with its
/// honest (larger) bound.
///
/// Throws DomainError for x <= 0 and InvalidArgument for eps <= 0.
ApproxValue log_construct(double x, double eps = kDefaultEps);

/// Inverse of log_construct: bracket by powers of two, then bisect until the
/// bracket is narrower than eps * max(1, |z|).
double exp_construct(double y, double eps = kDefaultEps);

/// e, as the root of log z = 1 inside [2, 3].
double e_const(double eps = kDefaultEps);

/// b^x = exp(x log b) for b > 0. Throws DomainError for b <= 0.
double pow_construct(double b, double x, double eps = kDefaultEps);

enum class Hyperbolic { Sinh, Cosh, Tanh, Sech2, Csch2, Coth };

/// Hyperbolic functions from exp_construct. Csch2 and Coth throw DomainError
/// at 0.
double hyperbolic(Hyperbolic kind, double x);

enum class InverseKind { Arcsin, Arctan, Arsinh, Arcosh, Artanh };

/// Principal-branch inverse by bisection on the monotone forward map (sin and
/// tan from the platform, the hyperbolics from `hyperbolic`). Stops when the
/// bracket is narrower than eps * max(1, |x|). Throws DomainError outside the
/// principal domain.
double inverse_fn(InverseKind kind, double y, double eps = kDefaultEps);

}  // namespace rf
