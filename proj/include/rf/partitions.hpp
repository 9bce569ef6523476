#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace rf {

using RealFn = std::function<double(double)>;

/// Closed interval [a, b] with a <= b. Orientation (a > b) lives in the
/// integrator, never in stored intervals.
struct Interval {
  double a = 0.0;
  double b = 1.0;

  double width() const noexcept { return b - a; }
};

/// How a tag is chosen inside each cell [lo, hi]. A custom tag function must
/// return a point of its cell; this is checked wherever tags are produced.
class TagRule {
 public:
  enum class Kind { Left, Right, Midpoint, Custom };
  using TagFn = std::function<double(double lo, double hi)>;

  static TagRule left() { return TagRule(Kind::Left); }
  static TagRule right() { return TagRule(Kind::Right); }
  static TagRule midpoint() { return TagRule(Kind::Midpoint); }
  static TagRule custom(TagFn fn);

  /// Parses "left", "right" or "midpoint". Throws InvalidArgument otherwise.
  static TagRule from_name(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;

  /// Tag for the cell [lo, hi]; throws InvalidArgument if a custom tag leaves
  /// the cell.
  double tag(double lo, double hi) const;

  /// Fractional position of the tag for the built-in rules (0, 1, 1/2).
  /// Meaningless for Custom.
  double offset() const noexcept;

 private:
  explicit TagRule(Kind kind) : kind_(kind) {}

  Kind kind_;
  TagFn fn_;
};

/// Largest number of points a partition may hold.
inline constexpr std::size_t kDefaultMaxPoints = std::size_t{1} << 24;

/// Points t_0 < ... < t_n with one tag per cell. Immutable once built.
class TaggedPartition {
 public:
  /// Validates strict monotonicity and tag containment.
  TaggedPartition(std::vector<double> points, std::vector<double> tags);

  std::span<const double> points() const noexcept { return points_; }
  std::span<const double> tags() const noexcept { return tags_; }
  std::size_t cells() const noexcept { return tags_.size(); }
  Interval interval() const noexcept { return {points_.front(), points_.back()}; }

 private:
  std::vector<double> points_;
  std::vector<double> tags_;
};

/// Tags every cell of `points` with `rule`.
TaggedPartition tag_points(std::vector<double> points, const TagRule& rule);

/// t_k = a + k (b - a) / n.
TaggedPartition uniform_partition(Interval iv, std::size_t n, const TagRule& rule,
                                  std::size_t max_points = kDefaultMaxPoints);

/// t_k = p (q/p)^{k/n}; consecutive points share a constant ratio.
TaggedPartition geometric_partition(double p, double q, std::size_t n, const TagRule& rule,
                                    std::size_t max_points = kDefaultMaxPoints);

/// Widest cell.
double mesh(const TaggedPartition& partition) noexcept;

/// S(f, P) = sum f(xi_k) (t_{k+1} - t_k), accumulated left to right with
/// Kahan compensation. Throws EvaluationError carrying the tag if f is not
/// finite there.
double riemann_sum(const RealFn& f, const TaggedPartition& partition);

}  // namespace rf
