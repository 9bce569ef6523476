#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "rf/elementary.hpp"
#include "rf/errors.hpp"

using rf::Hyperbolic;
using rf::InverseKind;

// Platform log/exp appear here only as oracles.

TEST_CASE("log of 1 is exactly 0 with zero bound") {
  const auto r = rf::log_construct(1.0, 1e-3);
  CHECK(r.value == 0.0);
  CHECK(r.bound == 0.0);
}

TEST_CASE("log 2 to 1e-12") {
  const auto r = rf::log_construct(2.0, 1e-12);
  CHECK(r.bound <= 1e-12);
  CHECK(std::abs(r.value - std::numbers::ln2) <= r.bound);
  CHECK(std::abs(r.value - 0.693147180559945) <= 1e-12);
}

TEST_CASE("log rejects bad arguments") {
  CHECK_THROWS_AS(rf::log_construct(0.0), rf::DomainError);
  CHECK_THROWS_AS(rf::log_construct(-1.0), rf::DomainError);
  CHECK_THROWS_AS(rf::log_construct(2.0, 0.0), rf::InvalidArgument);
  CHECK_THROWS_AS(rf::log_construct(2.0, -1.0), rf::InvalidArgument);
}

TEST_CASE("property: certified bound covers the oracle") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> expo(-40, 40);
  for (double eps : {1e-6, 1e-12, 1e-15}) {
    for (int i = 0; i < 300; ++i) {
      const double x = std::exp2(expo(rng));
      const auto r = rf::log_construct(x, eps);
      // The oracle is itself rounded to nearest, so allow its half ulp.
      const double oracle = std::log(x);
      const double half_ulp = (std::nextafter(std::abs(oracle), INFINITY) - std::abs(oracle)) / 2;
      CHECK(std::abs(r.value - oracle) <= r.bound + half_ulp);
      if (eps >= 1e-12) CHECK(r.bound <= eps);
    }
  }
}

TEST_CASE("property: log(1/x) = -log(x) within 2 eps") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.01, 100);
  const double eps = 1e-13;
  for (int i = 0; i < 200; ++i) {
    const double x = std::exp2(std::round(std::log2(u(rng))));  // 1/x exact
    CHECK(std::abs(rf::log_construct(1 / x, eps).value + rf::log_construct(x, eps).value) <= 2 * eps);
    const double y = u(rng);
    const double inv = 1 / y;
    // 1/y is rounded; allow for that on top of 2 eps.
    CHECK(std::abs(rf::log_construct(inv, eps).value + rf::log_construct(y, eps).value) <=
          2 * eps + std::abs(std::log(inv * y)) + 1e-16);
  }
}

TEST_CASE("property: functional equation on 200 random pairs") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> expo(-8, 8);
  const double eps = 1e-13;
  for (int i = 0; i < 200; ++i) {
    const double x = std::exp2(expo(rng));
    const double y = std::exp2(expo(rng));
    const double xy = x * y;
    const double rounding = std::abs(std::log(xy) - std::log(x) - std::log(y));
    CHECK(std::abs(rf::log_construct(xy, eps).value - rf::log_construct(x, eps).value -
                   rf::log_construct(y, eps).value) <= 3 * eps + rounding);
  }
}

TEST_CASE("property: log strictly increasing on a random increasing grid") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(1e-3, 1e3);
  std::vector<double> xs(500);
  for (auto& x : xs) x = u(rng);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (std::size_t i = 1; i < xs.size(); ++i) {
    // Neighbours closer than the accuracy cannot be ordered; skip them.
    if (xs[i] / xs[i - 1] - 1 < 1e-12) continue;
    CHECK(rf::log_construct(xs[i], 1e-15).value > rf::log_construct(xs[i - 1], 1e-15).value);
  }
}

TEST_CASE("exp examples") {
  CHECK(rf::exp_construct(0.0) == 1.0);
  CHECK(std::abs(rf::exp_construct(1.0, 1e-10) - std::numbers::e) <= 1e-10 * std::numbers::e);
  const double l5 = rf::log_construct(5.0).value;
  CHECK(std::abs(rf::exp_construct(l5) - 5) <= 1e-13);
  CHECK_THROWS_AS(rf::exp_construct(1.0, 0.0), rf::InvalidArgument);
}

TEST_CASE("exp tracks the oracle across magnitudes, including overflow and underflow") {
  for (double y : {-700.0, -30.0, -1.0, -1e-8, 1e-8, 0.5, 3.0, 42.0, 700.0}) {
    const double z = rf::exp_construct(y, 1e-14);
    CHECK(std::abs(z - std::exp(y)) <= 2e-14 * std::max(1.0, std::exp(y)));
  }
  CHECK(std::isinf(rf::exp_construct(800.0)));
  CHECK(rf::exp_construct(-800.0) == 0.0);
}

TEST_CASE("property: (exp(h) - 1)/h - 1 is O(h)") {
  double worst = 0;
  for (int j = 5; j <= 20; ++j) {
    const double h = std::ldexp(1.0, -j);
    const double c = std::abs((rf::exp_construct(h) - 1) / h - 1) / h;
    worst = std::max(worst, c);
  }
  CHECK(worst <= 0.6);  // the limit of the ratio is 1/2
}

TEST_CASE("property: sin(theta)/theta -> 1 with the geometric bound") {
  for (int j = 1; j <= 30; ++j) {
    const double th = std::ldexp(1.0, -j);
    CHECK(std::abs(std::sin(th) / th - 1) <= th * th / 6 + 1e-12);
  }
}

TEST_CASE("e as the root of log z = 1") {
  CHECK(std::abs(rf::e_const(1e-10) - std::numbers::e) <= 1e-10 * 3);
  const double eps = 1e-13;
  CHECK(std::abs(rf::log_construct(rf::e_const(eps)).value - 1) <= 2 * eps);
  CHECK(std::abs(rf::e_const(1e-3) - rf::e_const(1e-10)) <= 1e-3);
}

TEST_CASE("pow examples") {
  CHECK(std::abs(rf::pow_construct(4, 0.5, 1e-10) - 2) <= 1e-10 * 2);
  CHECK(rf::pow_construct(7.5, 0) == 1.0);
  CHECK(std::abs(rf::pow_construct(2, 10, 1e-8) - 1024) <= 1e-8 * 1024);
  CHECK_THROWS_AS(rf::pow_construct(0, 2), rf::DomainError);
  CHECK_THROWS_AS(rf::pow_construct(-2, 0.5), rf::DomainError);
}

TEST_CASE("property: pow against the oracle") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> base(0.05, 20), ex(-6, 6);
  for (int i = 0; i < 200; ++i) {
    const double b = base(rng), x = ex(rng);
    const double want = std::pow(b, x);
    CHECK(std::abs(rf::pow_construct(b, x, 1e-13) - want) <= 4e-13 * std::max(1.0, want));
  }
}

TEST_CASE("hyperbolic examples and identities") {
  CHECK(rf::hyperbolic(Hyperbolic::Cosh, 0) == 1.0);
  CHECK(rf::hyperbolic(Hyperbolic::Sinh, 0) == 0.0);
  CHECK_THROWS_AS(rf::hyperbolic(Hyperbolic::Coth, 0), rf::DomainError);
  CHECK_THROWS_AS(rf::hyperbolic(Hyperbolic::Csch2, 0), rf::DomainError);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    const double c = rf::hyperbolic(Hyperbolic::Cosh, x);
    const double s = rf::hyperbolic(Hyperbolic::Sinh, x);
    CHECK(std::abs(c * c - s * s - 1) <= 1e-9 * c * c);
    const double t = rf::hyperbolic(Hyperbolic::Tanh, x);
    CHECK(t > -1);
    CHECK(t < 1);
    CHECK(std::abs(t - std::tanh(x)) <= 1e-14);
    CHECK(std::abs(rf::hyperbolic(Hyperbolic::Sech2, x) - 1 / (std::cosh(x) * std::cosh(x))) <= 1e-14);
    CHECK(std::abs(rf::hyperbolic(Hyperbolic::Coth, x) * t - 1) <= 1e-14);
    CHECK(std::abs(rf::hyperbolic(Hyperbolic::Csch2, x) * s * s - 1) <= 1e-13);
  }
}

TEST_CASE("inverse function examples") {
  CHECK(std::abs(rf::inverse_fn(InverseKind::Arctan, 1, 1e-12) - std::numbers::pi / 4) <= 1e-12);
  CHECK(std::abs(rf::inverse_fn(InverseKind::Arcsin, 1, 1e-8) - std::numbers::pi / 2) <= 1e-8);
  CHECK(rf::inverse_fn(InverseKind::Artanh, 0) == 0.0);
  CHECK(rf::inverse_fn(InverseKind::Arcosh, 1) <= 1e-7);
}

TEST_CASE("inverse functions reject points outside the principal domain") {
  CHECK_THROWS_AS(rf::inverse_fn(InverseKind::Arcsin, 1.5), rf::DomainError);
  CHECK_THROWS_AS(rf::inverse_fn(InverseKind::Arcosh, 0.5), rf::DomainError);
  CHECK_THROWS_AS(rf::inverse_fn(InverseKind::Artanh, 1), rf::DomainError);
  CHECK_THROWS_AS(rf::inverse_fn(InverseKind::Artanh, -1.5), rf::DomainError);
}

TEST_CASE("property: inverse functions against the oracles") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1, 1);
  const double eps = 1e-13;
  for (int i = 0; i < 100; ++i) {
    const double y = u(rng);
    CHECK(std::abs(rf::inverse_fn(InverseKind::Arcsin, y, eps) - std::asin(y)) <= 2 * eps);
    CHECK(std::abs(rf::inverse_fn(InverseKind::Arctan, 20 * y, eps) - std::atan(20 * y)) <= 2 * eps);
    CHECK(std::abs(rf::inverse_fn(InverseKind::Arsinh, 50 * y, eps) - std::asinh(50 * y)) <= 1e-12);
    CHECK(std::abs(rf::inverse_fn(InverseKind::Arcosh, 1 + 30 * std::abs(y), eps) -
                   std::acosh(1 + 30 * std::abs(y))) <= 1e-7);
    CHECK(std::abs(rf::inverse_fn(InverseKind::Artanh, 0.999 * y, eps) - std::atanh(0.999 * y)) <= 1e-12);
  }
}

TEST_CASE("concurrent first use of the cached log 2 is safe") {
  std::vector<std::thread> pool;
  std::vector<double> out(8);
  for (int i = 0; i < 8; ++i)
    pool.emplace_back([&out, i] { out[i] = rf::log_construct(3.0 + i).value; });
  for (auto& t : pool) t.join();
  for (int i = 0; i < 8; ++i) CHECK(std::abs(out[i] - std::log(3.0 + i)) <= 1e-14);
}
