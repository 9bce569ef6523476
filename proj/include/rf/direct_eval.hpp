#pragma once

// Special-purpose Riemann-sum evaluators: each one computes a specific sum
// whose limit is a classical integral, alongside the algebraic closed form
// that sum collapses to.

#include <complex>
#include <cstddef>
#include <cstdint>

namespace rf {

using Complex = std::complex<double>;

struct SandwichPair {
  double lower = 0.0;
  double upper = 0.0;

  double gap() const noexcept { return upper - lower; }
};

/// Lower and upper sums of 1/t on the geometric partition of [1, x]:
/// (n (x^{1/n} - 1) / x^{1/n}, n (x^{1/n} - 1)). Requires x > 1.
SandwichPair log_limit_bounds(double x, std::size_t n);

/// Left Riemann sum of b^t over the uniform n-cell partition of [p, q],
/// summed term by term with b^{k delta} advanced by one multiplication per
/// cell. Requires b > 0, b != 1, p < q.
double exp_geometric_sum(double b, double p, double q, std::size_t n);

/// The same sum in closed form, (b^q - b^p) delta / (b^delta - 1). Falls back
/// to the direct sum when b^delta is within 2^-26 of 1.
double exp_geometric_closed_form(double b, double p, double q, std::size_t n);

__extension__ using PowerSum = unsigned __int128;

/// sum_{k=0}^{N-1} k^n_exp, exactly. Throws EvaluationError if the result
/// does not fit in 128 bits.
PowerSum power_sum(unsigned n_exp, std::uint64_t N);

/// Left Riemann sum of t^n_exp on [0, x] with N uniform cells, via the exact
/// power sum. Requires N >= 1 and n_exp <= 20.
double faulhaber_left_sum(unsigned n_exp, double x, std::uint64_t N);

/// (cos theta + i sin theta)^n by n complex multiplications.
Complex demoivre_pow(double theta, unsigned n);

/// (x/n) sum_{k<n} z^k with z = cos(x/n) + i sin(x/n): the left Riemann sum
/// of cos + i sin on [0, x]. Its limit is sin x + i (1 - cos x).
Complex demoivre_riemann_sum(double x, std::size_t n);

/// (x/n) (z^n - 1)/(z - 1); the direct sum when |z - 1| <= 2^-26.
Complex demoivre_closed_form(double x, std::size_t n);

/// Two readings of one partition: `telescoped` is the sum whose terms are
/// exact increments of the antiderivative (so it equals the integral up to
/// rounding for every n), `riemann` is the plain left Riemann sum of the
/// integrand.
struct TelescopeForms {
  double telescoped = 0.0;
  double riemann = 0.0;
};

/// Integrand sec^2 on [0, x], |x| < pi/2. Telescoped form equals tan x.
TelescopeForms telescope_sec2(double x, std::size_t n);

/// Integrand csc^2 on [a, b], 0 < a < b < pi. Telescoped form equals
/// cot a - cot b.
TelescopeForms telescope_csc2(double a, double b, std::size_t n);

/// Integrand sec tan on [0, x], |x| < pi/2. Telescoped form equals sec x - 1.
TelescopeForms sectan_telescope(double x, std::size_t n);

}  // namespace rf
