#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tflab/rational.hpp"

namespace tflab {

/// One endpoint of an interval. An absent value means unbounded on that
/// side, in which case `closed` is ignored.
struct SpanBound {
  std::optional<Rational> value;
  bool closed = false;

  bool operator==(const SpanBound&) const = default;
};

/// A nonempty rational interval; a single point is a degenerate closed
/// interval.
struct Span {
  SpanBound lo, hi;

  bool contains(const Rational& r) const;
  bool operator==(const Span&) const = default;
};

/// A subset of the rational line that a step function can be evaluated on:
/// a finite union of intervals and points, kept normalized (sorted,
/// disjoint, non-mergeable). Closed under complement, union and
/// intersection, with exact membership tests.
class SetDescriptor {
 public:
  SetDescriptor() = default;  // empty set

  static SetDescriptor empty();
  static SetDescriptor all();
  static SetDescriptor point(const Rational& r);
  static SetDescriptor points(const std::vector<Rational>& rs);
  /// Absent bounds are unbounded. An inverted or degenerate-open interval
  /// normalizes to the empty set.
  static SetDescriptor interval(std::optional<Rational> lo, bool lo_closed,
                                std::optional<Rational> hi, bool hi_closed);

  SetDescriptor complement() const;
  SetDescriptor unite(const SetDescriptor& other) const;
  SetDescriptor intersect(const SetDescriptor& other) const;

  bool contains(const Rational& r) const;
  bool is_empty() const { return spans_.empty(); }
  bool is_all() const;

  const std::vector<Span>& spans() const { return spans_; }
  std::string to_string() const;

  bool operator==(const SetDescriptor&) const = default;

 private:
  static SetDescriptor normalized(std::vector<Span> spans);

  std::vector<Span> spans_;
};

}  // namespace tflab
