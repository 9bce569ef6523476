#pragma once

// Seeded random expression trees for the print/parse round trip.

#include <random>

#include "rf/expr.hpp"

namespace rf::testing {

inline expr::Expr random_expr(std::mt19937_64& rng, int depth) {
  using expr::BinaryOp;
  using expr::Expr;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
  switch (pick(rng)) {
    case 0: {
      // Non-negative literals of assorted shapes; negatives come from Neg nodes.
      static const double kLiterals[] = {0, 1, 2, 0.5, 3.25, 1e-5, 12345.678, 2.5e10, 0.1};
      return Expr::constant(kLiterals[rng() % std::size(kLiterals)]);
    }
    case 1: return Expr::var();
    case 2: return Expr::neg(random_expr(rng, depth - 1));
    case 3: {
      const auto f = static_cast<expr::Func>(rng() % 15);
      return Expr::call(f, random_expr(rng, depth - 1));
    }
    default: {
      const auto op = static_cast<BinaryOp>(rng() % 5);
      return Expr::binary(op, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    }
  }
}

// Depth of a tree, counting leaves as 0.
inline int depth(const expr::Expr& e) {
  int d = 0;
  for (const auto& c : e.node().children) d = std::max(d, 1 + depth(c));
  return d;
}

}  // namespace rf::testing
