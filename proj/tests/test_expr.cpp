#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "expr_gen.hpp"
#include "rf/errors.hpp"
#include "rf/expr.hpp"

using rf::expr::eval_expr;
using rf::expr::parse;
using rf::expr::to_string;

namespace {

double at(const char* text, double t) { return eval_expr(parse(text), t); }

}  // namespace

TEST_CASE("grammar examples") {
  for (double t : {-2.0, -0.3, 0.0, 0.7, 3.0}) CHECK(at("sin(t)^2 + cos(t)^2", t) == doctest::Approx(1).epsilon(1e-15));
  CHECK(at("1/(1+t^2)", 1) == 0.5);
  CHECK(at("2^3^2", 0) == 512);
  CHECK(at("2+3*4", 0) == 14);
  CHECK(at("-2^2", 0) == -4);
  CHECK(at("2^-3", 0) == 0.125);
  CHECK(at("-t", 3) == -3);
  CHECK(at("e^t", 1) == doctest::Approx(std::numbers::e).epsilon(1e-14));
  CHECK(at("pi", 0) == std::numbers::pi);
  CHECK(at("10 - 4 - 3", 0) == 3);
  CHECK(at("12/3/2", 0) == 2);
  CHECK(at("sqrt(abs(-16))", 0) == 4);
  CHECK(at("1.5e2 + .5", 0) == 150.5);
  CHECK(at("log(e)", 0) == doctest::Approx(1).epsilon(1e-14));
  CHECK(at("exp(log(t))", 5) == doctest::Approx(5).epsilon(1e-13));
  CHECK(at("t^0.5", 2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(at("0^0.5", 0) == 0);
  CHECK(at("tanh(t)", 0.5) == doctest::Approx(std::tanh(0.5)).epsilon(1e-14));
  CHECK(at("sec(t)^2 - tan(t)^2", 0.4) == doctest::Approx(1).epsilon(1e-14));
}

TEST_CASE("parse errors carry the offset of the offending token") {
  const auto offset_of = [](const char* text) -> long {
    try {
      parse(text);
    } catch (const rf::ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("sec(") == 4);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("1 +") == 3);
  CHECK(offset_of("(t") == 2);
  CHECK(offset_of("t)") == 1);
  CHECK(offset_of("foo(t)") == 0);
  CHECK(offset_of("2 $ 3") == 2);
  CHECK(offset_of("sin t") == 4);
  try {
    parse("sec(");
  } catch (const rf::ParseError& e) {
    CHECK(std::string(e.what()) == "parse error at offset 4: expected expression");
  }
}

TEST_CASE("evaluation errors name the abscissa") {
  CHECK_THROWS_AS(at("log(t)", -1), rf::EvaluationError);
  CHECK_THROWS_AS(at("1/t", 0), rf::EvaluationError);
  CHECK_THROWS_AS(at("sqrt(t)", -4), rf::EvaluationError);
  CHECK_THROWS_AS(at("t^0.5", -4), rf::EvaluationError);
  try {
    at("log(t)", -1);
  } catch (const rf::EvaluationError& e) {
    CHECK(e.where() == -1);
  }
}

TEST_CASE("printer emits the fewest parentheses") {
  const auto canon = [](const char* text) { return to_string(parse(text)); };
  CHECK(canon("((t))") == "t");
  CHECK(canon("(1+t)*2") == "(1 + t)*2");
  CHECK(canon("1+(t*2)") == "1 + t*2");
  CHECK(canon("t-(1-t)") == "t - (1 - t)");
  CHECK(canon("(t-1)-t") == "t - 1 - t");
  CHECK(canon("(2^3)^2") == "(2^3)^2");
  CHECK(canon("2^(3^2)") == "2^3^2");
  CHECK(canon("-(t^2)") == "-t^2");
  CHECK(canon("(-t)^2") == "(-t)^2");
  CHECK(canon("sin(t)^2 + cos(t)^2") == "sin(t)^2 + cos(t)^2");
  CHECK(canon("2^-t") == "2^-t");
  CHECK(canon("t/(2*t)") == "t/(2*t)");
  CHECK(canon("1e-5 * 0.1") == "1e-05*0.1");
}

TEST_CASE("property: print then parse reproduces the tree") {
  std::mt19937_64 rng(42);
  int max_depth = 0;
  for (int i = 0; i < 500; ++i) {
    const auto e = rf::testing::random_expr(rng, 6);
    max_depth = std::max(max_depth, rf::testing::depth(e));
    const std::string text = to_string(e);
    INFO(text);
    const auto back = parse(text);
    CHECK(back == e);
    CHECK(to_string(back) == text);
  }
  CHECK(max_depth <= 6);
  CHECK(max_depth >= 4);
}

TEST_CASE("to_function agrees with eval_expr") {
  const auto e = parse("t*exp(-t)");
  const auto f = rf::expr::to_function(e);
  for (double t : {0.0, 0.5, 2.0}) CHECK(f(t) == eval_expr(e, t));
}
