#include "rf/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rf/errors.hpp"
#include "rf/kahan.hpp"
#include "rf/roots.hpp"

namespace rf {

TagRule TagRule::custom(TagFn fn) {
  if (!fn) throw InvalidArgument("custom tag rule needs a tag function");
  TagRule rule(Kind::Custom);
  rule.fn_ = std::move(fn);
  return rule;
}

TagRule TagRule::from_name(std::string_view name) {
  if (name == "left") return left();
  if (name == "right") return right();
  if (name == "midpoint") return midpoint();
  throw InvalidArgument("unknown tag rule '" + std::string(name) +
                        "' (expected left, right or midpoint)");
}

std::string_view TagRule::name() const noexcept {
  switch (kind_) {
    case Kind::Left: return "left";
    case Kind::Right: return "right";
    case Kind::Midpoint: return "midpoint";
    case Kind::Custom: return "custom";
  }
  return "?";
}

double TagRule::offset() const noexcept {
  switch (kind_) {
    case Kind::Left: return 0.0;
    case Kind::Right: return 1.0;
    default: return 0.5;
  }
}

double TagRule::tag(double lo, double hi) const {
  switch (kind_) {
    case Kind::Left: return lo;
    case Kind::Right: return hi;
    case Kind::Midpoint: return lo + 0.5 * (hi - lo);
    case Kind::Custom: break;
  }
  const double xi = fn_(lo, hi);
  if (!(xi >= lo && xi <= hi)) {
    throw InvalidArgument("custom tag " + std::to_string(xi) + " outside its cell [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return xi;
}

TaggedPartition::TaggedPartition(std::vector<double> points, std::vector<double> tags)
    : points_(std::move(points)), tags_(std::move(tags)) {
  if (points_.size() < 2) throw InvalidArgument("a partition needs at least two points");
  if (tags_.size() + 1 != points_.size())
    throw InvalidArgument("a partition needs exactly one tag per cell");
  for (std::size_t k = 0; k + 1 < points_.size(); ++k) {
    if (!(points_[k] < points_[k + 1]))
      throw InvalidArgument("partition points must be strictly increasing (index " +
                            std::to_string(k) + ")");
    if (!(tags_[k] >= points_[k] && tags_[k] <= points_[k + 1]))
      throw InvalidArgument("tag " + std::to_string(k) + " lies outside its cell");
  }
}

TaggedPartition tag_points(std::vector<double> points, const TagRule& rule) {
  std::vector<double> tags;
  if (points.size() >= 2) {
    tags.reserve(points.size() - 1);
    for (std::size_t k = 0; k + 1 < points.size(); ++k) tags.push_back(rule.tag(points[k], points[k + 1]));
  }
  return TaggedPartition(std::move(points), std::move(tags));
}

namespace {

void check_size(std::size_t n, std::size_t max_points) {
  if (n == 0) throw InvalidArgument("partition needs n >= 1 cells");
  if (n >= max_points)
    throw InvalidArgument("partition of " + std::to_string(n) + " cells exceeds the cap of " +
                          std::to_string(max_points) + " points");
}

}  // namespace

TaggedPartition uniform_partition(Interval iv, std::size_t n, const TagRule& rule,
                                  std::size_t max_points) {
  check_size(n, max_points);
  if (!(iv.a < iv.b)) throw InvalidArgument("uniform_partition needs a < b");
  std::vector<double> points(n + 1);
  const double width = iv.b - iv.a;
  for (std::size_t k = 0; k <= n; ++k)
    points[k] = iv.a + width * (static_cast<double>(k) / static_cast<double>(n));
  points[n] = iv.b;
  return tag_points(std::move(points), rule);
}

TaggedPartition geometric_partition(double p, double q, std::size_t n, const TagRule& rule,
                                    std::size_t max_points) {
  check_size(n, max_points);
  if (!(p > 0.0) || !(p < q)) throw InvalidArgument("geometric_partition needs 0 < p < q");

  const long double ratio = static_cast<long double>(q) / p;
  std::vector<double> points(n + 1);
  points[0] = p;
  points[n] = q;

  if (const int j = exact_log2(n); j >= 0) {
    // ratio^{k/2^j} as a product of the square-root chain ratio^{2^-i} over the
    // set bits of k, so no point inherits error from its predecessors.
    std::vector<long double> chain(static_cast<std::size_t>(j) + 1);
    for (int i = 0; i <= j; ++i) chain[static_cast<std::size_t>(i)] = 1.0L + root_minus_one_pow2(ratio, static_cast<unsigned>(i));
    for (std::size_t k = 1; k < n; ++k) {
      long double factor = 1.0L;
      for (int bit = 0; bit < j; ++bit)
        if (k & (std::size_t{1} << bit)) factor *= chain[static_cast<std::size_t>(j - bit)];
      points[k] = static_cast<double>(p * factor);
    }
  } else {
    const long double step = 1.0L + root_minus_one(ratio, n);
    for (std::size_t k = 1; k < n; ++k) points[k] = static_cast<double>(p * ipow(step, k));
  }
  return tag_points(std::move(points), rule);
}

double mesh(const TaggedPartition& partition) noexcept {
  const auto pts = partition.points();
  double widest = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) widest = std::max(widest, pts[k + 1] - pts[k]);
  return widest;
}

double riemann_sum(const RealFn& f, const TaggedPartition& partition) {
  const auto pts = partition.points();
  const auto tags = partition.tags();
  KahanAccumulator<double> acc;
  for (std::size_t k = 0; k < tags.size(); ++k) {
    const double fx = f(tags[k]);
    if (!std::isfinite(fx)) throw EvaluationError("non-finite integrand value", tags[k]);
    acc += fx * (pts[k + 1] - pts[k]);
  }
  return acc.value();
}

}  // namespace rf
