// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "expr_gen.hpp"
#include "rf/direct_eval.hpp"
#include "rf/elementary.hpp"
#include "rf/errors.hpp"
#include "rf/expr.hpp"
#include "rf/integrator.hpp"
#include "rf/theorems.hpp"

namespace {

using std::numbers::pi;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Verdict catalog_completeness() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const auto reports = rf::run_catalog(1e-6);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(reports.size() >= 24, "only " + std::to_string(reports.size()) + " entries");
  for (const auto& r : reports) v.require(r.pass, r.name + " diff " + num(r.abs_diff));
  v.require(secs <= 120, "took " + num(secs) + " s");
  if (v.pass) v.detail = std::to_string(reports.size()) + " entries in " + num(secs) + " s";
  return v;
}

Verdict log_sandwich() {
  Verdict v;
  for (double x : {1.5, 2.0, std::numbers::e, 10.0}) {
    for (int j = 0; j <= 20; ++j) {
      const std::size_t n = std::size_t{1} << j;
      const auto s = rf::log_limit_bounds(x, n);
      v.require(s.gap() <= (x - 1) * (x - 1) / static_cast<double>(n),
                "gap at x=" + num(x) + " n=2^" + std::to_string(j));
      v.require(s.lower <= std::log(x) && std::log(x) <= s.upper, "oracle outside sandwich at x=" + num(x));
    }
    const auto c = rf::log_construct(x, 1e-12);
    v.require(c.bound <= 1e-12, "bound " + num(c.bound));
    v.require(std::abs(c.value - std::log(x)) <= c.bound + 2 * std::numeric_limits<double>::epsilon() * std::log(x),
              "log_construct off at x=" + num(x));
  }
  return v;
}

Verdict functional_equation() {
  Verdict v;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> expo(-8, 8);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    const double x = std::exp2(expo(rng));
    const double y = std::exp2(expo(rng));
    const double d = rf::log_construct(x * y).value - rf::log_construct(x).value - rf::log_construct(y).value;
    worst = std::max(worst, std::abs(d));
  }
  v.require(worst <= 3e-12, "worst " + num(worst));
  if (v.pass) v.detail = "worst " + num(worst);
  return v;
}

// Successive-error ratios e(n)/e(2n) for n = 2^10 .. 2^17.
std::vector<double> ratios(const std::function<double(std::size_t)>& err) {
  std::vector<double> out;
  double prev = err(std::size_t{1} << 10);
  for (int j = 11; j <= 18; ++j) {
    const double cur = err(std::size_t{1} << j);
    out.push_back(prev / cur);
    prev = cur;
  }
  return out;
}

Verdict geometric_series() {
  Verdict v;
  const double e = std::numbers::e;
  const double targets[][2] = {{e, e - 1}, {2, 1 / std::numbers::ln2}};
  for (const auto& [b, exact] : targets) {
    for (double r : ratios([&](std::size_t n) { return std::abs(rf::exp_geometric_sum(b, 0, 1, n) - exact); }))
      v.require(r >= 1.8 && r <= 2.2, "b=" + num(b) + " ratio " + num(r));
  }
  return v;
}

Verdict de_moivre() {
  Verdict v;
  for (double x : {pi / 4, pi / 2, pi, 2.0}) {
    const auto s = rf::demoivre_riemann_sum(x, std::size_t{1} << 18);
    v.require(std::abs(s.real() - std::sin(x)) <= 1e-4 && std::abs(s.imag() - (1 - std::cos(x))) <= 1e-4,
              "sum at x=" + num(x));
  }
  for (double theta : {0.1, 1.0, 2.5}) {
    for (unsigned n = 0; n <= 1000; ++n) {
      const auto z = rf::demoivre_pow(theta, n);
      const double a = static_cast<double>(n) * theta;
      if (std::abs(z.real() - std::cos(a)) > 1e-10 || std::abs(z.imag() - std::sin(a)) > 1e-10) {
        v.require(false, "pow at theta=" + num(theta) + " n=" + std::to_string(n));
        return v;
      }
    }
  }
  return v;
}

Verdict telescoping() {
  Verdict v;
  for (double x : {0.3, 0.8, 1.2}) {
    for (std::size_t n = 1; n <= 1024; ++n) {
      if (std::abs(rf::telescope_sec2(x, n).telescoped - std::tan(x)) > 1e-12) {
        v.require(false, "telescoped at x=" + num(x) + " n=" + std::to_string(n));
        break;
      }
    }
    for (double r : ratios([&](std::size_t n) { return std::abs(rf::telescope_sec2(x, n).riemann - std::tan(x)); }))
      v.require(r >= 1.8 && r <= 2.2, "riemann ratio " + num(r) + " at x=" + num(x));
  }
  return v;
}

Verdict faulhaber() {
  Verdict v;
  v.require(rf::power_sum(2, 10) == 285, "power_sum(2,10)");
  for (unsigned n : {1u, 2u, 3u, 5u}) {
    for (double x : {1.0, 2.0}) {
      const double exact = std::pow(x, n + 1) / (n + 1);
      double lo = INFINITY, hi = 0;
      for (std::uint64_t N : {100u, 1000u, 10000u, 100000u}) {
        const double scaled = std::abs(rf::faulhaber_left_sum(n, x, N) - exact) * static_cast<double>(N);
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
      }
      // Leading error term of the left sum is x^{n+1} / (2N).
      const double c = std::pow(x, n + 1) / 2;
      v.require(hi <= 1.1 * c && lo >= 0.9 * c, "N*err in [" + num(lo) + ", " + num(hi) + "] for n=" +
                                                     std::to_string(n) + " x=" + num(x));
    }
  }
  return v;
}

Verdict substitution() {
  Verdict v;
  for (const auto& r : rf::substitution_showcases(1e-6)) v.require(r.pass, r.name + " diff " + num(r.abs_diff));
  const rf::RealFn f = [](double u) { return 1 / (1 + u * u); };
  const rf::RealFn bad_G = [](double t) { return std::tan(t) + 0.01 * t; };
  const rf::RealFn g = [](double t) { return 1 / (std::cos(t) * std::cos(t)); };
  bool rejected = false;
  try {
    rf::check_u_sub(f, bad_G, g, 0, pi / 4, 1e-6);
  } catch (const rf::HypothesisViolation&) {
    rejected = true;
  }
  v.require(rejected, "corrupted G accepted");
  return v;
}

Verdict ftc() {
  Verdict v;
  const double h = std::ldexp(1.0, -13);
  const rf::RealFn cos = [](double t) { return std::cos(t); };
  const rf::RealFn inv = [](double t) { return 1 / t; };
  const rf::RealFn expc = [](double t) { return rf::exp_construct(t); };
  v.require(rf::ftc_forward_check(cos, 0, 3, 32, h, 1e-5).abs_diff <= 1e-5, "forward cos");
  v.require(rf::ftc_forward_check(inv, 1, 4, 32, h, 1e-5).abs_diff <= 1e-5, "forward 1/t");
  v.require(rf::ftc_forward_check(expc, 0, 1, 16, h, 1e-5).abs_diff <= 1e-5, "forward exp");
  v.require(rf::ftc_reverse_check([](double t) { return t * t; }, [](double t) { return 2 * t; }, 0, 1, 1e-6).pass,
            "reverse t^2");
  v.require(rf::ftc_reverse_check([](double t) { return std::sin(t); }, cos, 0, pi / 2, 1e-6).pass, "reverse sin");
  v.require(rf::ftc_reverse_check(expc, expc, 0, 1, 1e-6).pass, "reverse exp");
  const double d1 = rf::ftc_forward_check(cos, 0, 3, 33, 1.0 / 16, 1e-9).abs_diff;
  const double d2 = rf::ftc_forward_check(cos, 0, 3, 33, 1.0 / 32, 1e-9).abs_diff;
  v.require(d1 / d2 >= 3.2 && d1 / d2 <= 4.8, "O(h^2) ratio " + num(d1 / d2));
  return v;
}

Verdict derivative_table() {
  Verdict v;
  const auto rows = rf::derivative_table_check(1e-5);
  v.require(rows.size() == 14, std::to_string(rows.size()) + " rows");
  for (const auto& r : rows) v.require(r.pass, r.name + " diff " + num(r.abs_diff));
  for (const auto& r : rf::product_chain_check(1e-5)) v.require(r.pass, r.name + " diff " + num(r.abs_diff));
  return v;
}

Verdict improper() {
  Verdict v;
  const auto r = rf::integrate_improper([](double t) { return 1 / std::sqrt(1 - t * t); }, 0, 1,
                                        rf::SingularEnd::Upper, 1e-6);
  v.require(std::abs(r.value - pi / 2) <= 1e-5, "arcsin integral " + num(r.value));
  bool divergent = false;
  try {
    rf::integrate_improper([](double t) { return 1 / (std::sin(t) * std::sin(t)); }, 0, 1, rf::SingularEnd::Lower,
                           1e-6);
  } catch (const rf::DivergenceError&) {
    divergent = true;
  }
  v.require(divergent, "csc^2 not flagged");
  return v;
}

Verdict parser() {
  Verdict v;
  using rf::expr::eval_expr;
  using rf::expr::parse;
  using rf::expr::to_string;
  v.require(eval_expr(parse("2+3*4"), 0) == 14, "2+3*4");
  v.require(eval_expr(parse("2^3^2"), 0) == 512, "2^3^2");
  v.require(eval_expr(parse("-2^2"), 0) == -4, "-2^2");
  v.require(eval_expr(parse("10-4-3"), 0) == 3, "10-4-3");
  v.require(eval_expr(parse("1/(1+t^2)"), 1) == 0.5, "1/(1+t^2)");
  v.require(to_string(parse("sin(t)^2 + cos(t)^2")) == "sin(t)^2 + cos(t)^2", "printer");
  v.require(to_string(parse("((1+t))*(t^(2^3))")) == "(1 + t)*t^2^3", "minimal parens");
  std::string message;
  try {
    parse("sec(");
  } catch (const rf::ParseError& e) {
    message = e.what();
  }
  v.require(message == "parse error at offset 4: expected expression", "error offset: " + message);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const auto e = rf::testing::random_expr(rng, 6);
    const auto text = to_string(e);
    if (!(parse(text) == e)) {
      v.require(false, "round trip: " + text);
      break;
    }
  }
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, Verdict (*)()> criteria[] = {
      {"catalog completeness", catalog_completeness},
      {"log sandwich", log_sandwich},
      {"log functional equation", functional_equation},
      {"geometric-series integral", geometric_series},
      {"de Moivre sum", de_moivre},
      {"telescoping", telescoping},
      {"Faulhaber", faulhaber},
      {"substitution theorems", substitution},
      {"fundamental theorem", ftc},
      {"derivative table", derivative_table},
      {"improper integrals", improper},
      {"parser", parser},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.require(false, std::string("threw: ") + e.what());
    }
    failed += v.pass ? 0 : 1;
    std::printf("%s %2d %s%s%s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.empty() ? "" : "  ",
                v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", index - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
