#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geninv/error.hpp"
#include "geninv/rational.hpp"

namespace geninv {

/// Affine law v(x) = intercept + slope * x on an open interval.
struct Segment {
  Rational slope;
  Rational intercept;

  Rational at(const Rational& x) const { return intercept + slope * x; }
  bool is_constant() const { return sgn(slope) == 0; }
  bool nondecreasing() const { return sgn(slope) >= 0; }
  ExtReal limit_at_neg_inf() const;
  ExtReal limit_at_pos_inf() const;

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.slope == b.slope && a.intercept == b.intercept;
  }
};

/// A finite affine law, or a constant piece at -inf / +inf.
class ExtSegment {
 public:
  ExtSegment() = default;
  ExtSegment(Segment law) : law_(std::move(law)) {}  // NOLINT(google-explicit-constructor)

  static ExtSegment constant(const ExtReal& level);
  static ExtSegment identity() { return ExtSegment(Segment{1, 0}); }

  bool is_infinite() const { return !infinite_.is_finite(); }
  /// Precondition: !is_infinite().
  const Segment& law() const;

  ExtReal at(const Rational& x) const;
  bool is_constant() const { return is_infinite() || law_.is_constant(); }
  bool nondecreasing() const { return is_infinite() || law_.nondecreasing(); }
  ExtReal limit_at_neg_inf() const;
  ExtReal limit_at_pos_inf() const;

  friend bool operator==(const ExtSegment& a, const ExtSegment& b) {
    return a.infinite_ == b.infinite_ && a.law_ == b.law_;
  }

 private:
  ExtReal infinite_;  // finite (zero) marks an affine piece
  Segment law_{0, 0};
};

template <class Value>
struct BreakpointT {
  Rational x;
  Value value;

  friend bool operator==(const BreakpointT&, const BreakpointT&) = default;
};

/// Unchecked piecewise description as read from input.
template <class Value, class Piece>
struct RawPiecewise {
  std::vector<BreakpointT<Value>> breakpoints;
  std::vector<Piece> segments;
};

/// Nondecreasing piecewise-affine function on R with finitely many
/// breakpoints b_0 < ... < b_{n-1} and n + 1 segments; segment k governs the
/// open interval (b_{k-1}, b_k) with b_{-1} = -inf and b_n = +inf. The value
/// at a breakpoint is stored explicitly, so any of f(b-) <= f(b) <= f(b+) is
/// representable.
///
/// Values only exist in canonical form: removable breakpoints (identical laws
/// on both sides and a value matching them) are merged away. Structural
/// equality is therefore function equality.
template <class Value, class Piece>
class BasicPiecewise {
 public:
  using Breakpoint = BreakpointT<Value>;
  using Raw = RawPiecewise<Value, Piece>;

  /// Checks shape and monotonicity, then canonicalizes.
  static BasicPiecewise from_raw(Raw raw);

  const std::vector<Breakpoint>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<Piece>& segments() const noexcept { return segments_; }
  std::size_t breakpoint_count() const noexcept { return breakpoints_.size(); }

  /// Left / right end of segment k (infinite for the outer segments).
  ExtReal segment_lo(std::size_t k) const;
  ExtReal segment_hi(std::size_t k) const;
  /// Index of the segment whose open interval contains x. Precondition: x is
  /// not a breakpoint.
  std::size_t segment_index(const Rational& x) const;
  std::optional<std::size_t> breakpoint_index(const Rational& x) const;

  Value eval(const Rational& x) const;
  Value left_limit(const Rational& x) const;
  Value right_limit(const Rational& x) const;
  ExtReal limit_at_neg_inf() const { return segments_.front().limit_at_neg_inf(); }
  ExtReal limit_at_pos_inf() const { return segments_.back().limit_at_pos_inf(); }
  /// Evaluation on the extended line: f(-inf) and f(+inf) are the limits.
  ExtReal eval_ext(const ExtReal& x) const;

  /// Every breakpoint value replaced by the left (resp. right) limit.
  BasicPiecewise left_version() const;
  BasicPiecewise right_version() const;

  bool is_left_continuous() const;
  bool is_right_continuous() const;

  friend bool operator==(const BasicPiecewise&, const BasicPiecewise&) = default;

 private:
  BasicPiecewise(std::vector<Breakpoint> bps, std::vector<Piece> segs)
      : breakpoints_(std::move(bps)), segments_(std::move(segs)) {}

  void canonicalize();

  std::vector<Breakpoint> breakpoints_;
  std::vector<Piece> segments_;
};

using PiecewiseMonotone = BasicPiecewise<Rational, Segment>;
using ExtPiecewise = BasicPiecewise<ExtReal, ExtSegment>;
using RawFunction = PiecewiseMonotone::Raw;
using RawExtFunction = ExtPiecewise::Raw;

extern template class BasicPiecewise<Rational, Segment>;
extern template class BasicPiecewise<ExtReal, ExtSegment>;

/// Validates a raw description. Errors: MalformedShape, MonotonicityViolation.
PiecewiseMonotone validate(RawFunction raw);
ExtPiecewise validate(RawExtFunction raw);

ExtPiecewise to_ext(const PiecewiseMonotone& f);

/// Field-wise equality of canonical forms.
template <class V, class P>
bool canonical_equal(const BasicPiecewise<V, P>& f, const BasicPiecewise<V, P>& g) {
  return f == g;
}

/// A discontinuity x with y_minus = f(x-) < f(x+) = y_plus.
struct JumpRecord {
  Rational x;
  Rational y_minus;
  Rational y_plus;
  Rational value_at_x;

  friend bool operator==(const JumpRecord&, const JumpRecord&) = default;
};

/// Maximal interval of positive length on which f is constant at level y.
struct PlateauRecord {
  Rational y;
  ExtReal x_minus;
  ExtReal x_plus;
  bool left_closed = false;
  bool right_closed = false;

  bool bounded() const { return x_minus.is_finite() && x_plus.is_finite(); }
  friend bool operator==(const PlateauRecord&, const PlateauRecord&) = default;
};

std::vector<JumpRecord> discontinuities(const PiecewiseMonotone& f);
/// Sorted by y (equivalently by x).
std::vector<PlateauRecord> plateaus(const PiecewiseMonotone& f);

PiecewiseMonotone left_version(const PiecewiseMonotone& f);
PiecewiseMonotone right_version(const PiecewiseMonotone& f);

/// Interval of the extended line with explicit closure. Infinite endpoints
/// are always open.
struct Interval {
  ExtReal lo;
  ExtReal hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static Interval point(const Rational& x) { return {x, x, true, true}; }
  static Interval open(ExtReal lo, ExtReal hi) { return {std::move(lo), std::move(hi), false, false}; }
  static Interval whole_line() { return open(ExtReal::neg_inf(), ExtReal::pos_inf()); }

  bool empty() const;
  bool contains(const Rational& x) const;
  friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& interval);

/// Intersection of two intervals (possibly empty).
Interval intersect(const Interval& a, const Interval& b);

/// R minus the union of `removed`, which must be pairwise disjoint; the
/// result is sorted and contains no empty intervals.
std::vector<Interval> complement(std::vector<Interval> removed);

/// Some rational strictly inside (lo, hi); lo < hi required.
Rational interior_point(const ExtReal& lo, const ExtReal& hi);

struct EmptyPreimage {
  friend bool operator==(const EmptyPreimage&, const EmptyPreimage&) = default;
};
struct SingletonPreimage {
  Rational x;
  friend bool operator==(const SingletonPreimage&, const SingletonPreimage&) = default;
};
struct IntervalPreimage {
  Interval span;
  friend bool operator==(const IntervalPreimage&, const IntervalPreimage&) = default;
};
using Preimage = std::variant<EmptyPreimage, SingletonPreimage, IntervalPreimage>;

/// Exact classification of {x : f(x) = y}.
Preimage preimage_size(const PiecewiseMonotone& f, const Rational& y);

}  // namespace geninv
