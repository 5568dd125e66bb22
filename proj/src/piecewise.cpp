#include "geninv/piecewise.hpp"

#include <algorithm>
#include <functional>

namespace geninv {

ExtReal Segment::limit_at_neg_inf() const {
  if (sgn(slope) > 0) return ExtReal::neg_inf();
  return intercept;
}

ExtReal Segment::limit_at_pos_inf() const {
  if (sgn(slope) > 0) return ExtReal::pos_inf();
  return intercept;
}

ExtSegment ExtSegment::constant(const ExtReal& level) {
  if (level.is_finite()) return ExtSegment(Segment{0, level.value()});
  ExtSegment out;
  out.infinite_ = level;
  return out;
}

const Segment& ExtSegment::law() const {
  if (is_infinite()) throw std::logic_error("ExtSegment::law() on an infinite piece");
  return law_;
}

ExtReal ExtSegment::at(const Rational& x) const {
  if (is_infinite()) return infinite_;
  return law_.at(x);
}

ExtReal ExtSegment::limit_at_neg_inf() const {
  if (is_infinite()) return infinite_;
  return law_.limit_at_neg_inf();
}

ExtReal ExtSegment::limit_at_pos_inf() const {
  if (is_infinite()) return infinite_;
  return law_.limit_at_pos_inf();
}

template <class V, class P>
BasicPiecewise<V, P> BasicPiecewise<V, P>::from_raw(Raw raw) {
  auto& bps = raw.breakpoints;
  auto& segs = raw.segments;
  if (segs.size() != bps.size() + 1) {
    throw Error(Errc::MalformedShape, "expected " + std::to_string(bps.size() + 1) + " segments for " +
                                          std::to_string(bps.size()) + " breakpoints, got " +
                                          std::to_string(segs.size()));
  }
  for (std::size_t i = 1; i < bps.size(); ++i) {
    if (!(bps[i - 1].x < bps[i].x)) {
      throw Error(Errc::MalformedShape, "breakpoint " + std::to_string(i) + " at x=" + to_string(bps[i].x) +
                                            " is not greater than its predecessor");
    }
  }
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (!segs[k].nondecreasing()) {
      throw Error(Errc::MonotonicityViolation, "segment " + std::to_string(k) + " has negative slope");
    }
  }
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const auto& bp = bps[i];
    V left = segs[i].at(bp.x);
    V right = segs[i + 1].at(bp.x);
    if (!(left <= bp.value) || !(bp.value <= right)) {
      throw Error(Errc::MonotonicityViolation,
                  "breakpoint " + std::to_string(i) + " at x=" + to_string(bp.x) + ": value " + to_string(bp.value) +
                      " is outside [" + to_string(left) + ", " + to_string(right) + "]");
    }
  }
  BasicPiecewise out(std::move(bps), std::move(segs));
  out.canonicalize();
  return out;
}

template <class V, class P>
void BasicPiecewise<V, P>::canonicalize() {
  std::vector<Breakpoint> bps;
  std::vector<P> segs{segments_.front()};
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const auto& bp = breakpoints_[i];
    const auto& next = segments_[i + 1];
    if (segs.back() == next && bp.value == next.at(bp.x)) continue;
    bps.push_back(bp);
    segs.push_back(next);
  }
  breakpoints_ = std::move(bps);
  segments_ = std::move(segs);
}

template <class V, class P>
ExtReal BasicPiecewise<V, P>::segment_lo(std::size_t k) const {
  if (k == 0) return ExtReal::neg_inf();
  return breakpoints_[k - 1].x;
}

template <class V, class P>
ExtReal BasicPiecewise<V, P>::segment_hi(std::size_t k) const {
  if (k == breakpoints_.size()) return ExtReal::pos_inf();
  return breakpoints_[k].x;
}

template <class V, class P>
std::size_t BasicPiecewise<V, P>::segment_index(const Rational& x) const {
  auto it = std::ranges::lower_bound(breakpoints_, x, std::less<>{}, &Breakpoint::x);
  return static_cast<std::size_t>(it - breakpoints_.begin());
}

template <class V, class P>
std::optional<std::size_t> BasicPiecewise<V, P>::breakpoint_index(const Rational& x) const {
  auto it = std::ranges::lower_bound(breakpoints_, x, std::less<>{}, &Breakpoint::x);
  if (it != breakpoints_.end() && it->x == x) return static_cast<std::size_t>(it - breakpoints_.begin());
  return std::nullopt;
}

template <class V, class P>
V BasicPiecewise<V, P>::eval(const Rational& x) const {
  auto it = std::ranges::lower_bound(breakpoints_, x, std::less<>{}, &Breakpoint::x);
  if (it != breakpoints_.end() && it->x == x) return it->value;
  return segments_[static_cast<std::size_t>(it - breakpoints_.begin())].at(x);
}

template <class V, class P>
V BasicPiecewise<V, P>::left_limit(const Rational& x) const {
  auto it = std::ranges::lower_bound(breakpoints_, x, std::less<>{}, &Breakpoint::x);
  return segments_[static_cast<std::size_t>(it - breakpoints_.begin())].at(x);
}

template <class V, class P>
V BasicPiecewise<V, P>::right_limit(const Rational& x) const {
  auto it = std::ranges::upper_bound(breakpoints_, x, std::less<>{}, &Breakpoint::x);
  return segments_[static_cast<std::size_t>(it - breakpoints_.begin())].at(x);
}

template <class V, class P>
ExtReal BasicPiecewise<V, P>::eval_ext(const ExtReal& x) const {
  if (x.is_neg_inf()) return limit_at_neg_inf();
  if (x.is_pos_inf()) return limit_at_pos_inf();
  return eval(x.value());
}

template <class V, class P>
BasicPiecewise<V, P> BasicPiecewise<V, P>::left_version() const {
  auto bps = breakpoints_;
  for (std::size_t i = 0; i < bps.size(); ++i) bps[i].value = segments_[i].at(bps[i].x);
  BasicPiecewise out(std::move(bps), segments_);
  out.canonicalize();
  return out;
}

template <class V, class P>
BasicPiecewise<V, P> BasicPiecewise<V, P>::right_version() const {
  auto bps = breakpoints_;
  for (std::size_t i = 0; i < bps.size(); ++i) bps[i].value = segments_[i + 1].at(bps[i].x);
  BasicPiecewise out(std::move(bps), segments_);
  out.canonicalize();
  return out;
}

template <class V, class P>
bool BasicPiecewise<V, P>::is_left_continuous() const {
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i].value == segments_[i].at(breakpoints_[i].x))) return false;
  }
  return true;
}

template <class V, class P>
bool BasicPiecewise<V, P>::is_right_continuous() const {
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i].value == segments_[i + 1].at(breakpoints_[i].x))) return false;
  }
  return true;
}

template class BasicPiecewise<Rational, Segment>;
template class BasicPiecewise<ExtReal, ExtSegment>;

PiecewiseMonotone validate(RawFunction raw) { return PiecewiseMonotone::from_raw(std::move(raw)); }

ExtPiecewise validate(RawExtFunction raw) { return ExtPiecewise::from_raw(std::move(raw)); }

ExtPiecewise to_ext(const PiecewiseMonotone& f) {
  RawExtFunction raw;
  for (const auto& bp : f.breakpoints()) raw.breakpoints.push_back({bp.x, ExtReal(bp.value)});
  for (const auto& seg : f.segments()) raw.segments.emplace_back(seg);
  return validate(std::move(raw));
}

PiecewiseMonotone left_version(const PiecewiseMonotone& f) { return f.left_version(); }
PiecewiseMonotone right_version(const PiecewiseMonotone& f) { return f.right_version(); }

std::vector<JumpRecord> discontinuities(const PiecewiseMonotone& f) {
  std::vector<JumpRecord> out;
  const auto& bps = f.breakpoints();
  const auto& segs = f.segments();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    Rational left = segs[i].at(bps[i].x);
    Rational right = segs[i + 1].at(bps[i].x);
    if (left < right) out.push_back({bps[i].x, left, right, bps[i].value});
  }
  return out;
}

std::vector<PlateauRecord> plateaus(const PiecewiseMonotone& f) {
  // In canonical form two adjacent constant segments never share a level, so
  // each constant segment is exactly one maximal plateau.
  std::vector<PlateauRecord> out;
  const auto& bps = f.breakpoints();
  const auto& segs = f.segments();
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (!segs[k].is_constant()) continue;
    const Rational& level = segs[k].intercept;
    PlateauRecord rec{level, f.segment_lo(k), f.segment_hi(k)};
    rec.left_closed = k > 0 && bps[k - 1].value == level;
    rec.right_closed = k < bps.size() && bps[k].value == level;
    out.push_back(std::move(rec));
  }
  return out;
}

bool Interval::empty() const {
  if (lo < hi) return false;
  if (lo == hi) return !(lo.is_finite() && lo_closed && hi_closed);
  return true;
}

bool Interval::contains(const Rational& x) const {
  ExtReal ex(x);
  bool above = lo < ex || (lo_closed && lo == ex);
  bool below = ex < hi || (hi_closed && ex == hi);
  return above && below;
}

std::string to_string(const Interval& interval) {
  if (interval.lo == interval.hi && interval.lo.is_finite()) return "{" + to_string(interval.lo) + "}";
  return std::string(interval.lo_closed ? "[" : "(") + to_string(interval.lo) + ", " + to_string(interval.hi) +
         (interval.hi_closed ? "]" : ")");
}

Interval intersect(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo == b.lo) {
    out.lo = a.lo;
    out.lo_closed = a.lo_closed && b.lo_closed;
  } else {
    const Interval& tighter = a.lo < b.lo ? b : a;
    out.lo = tighter.lo;
    out.lo_closed = tighter.lo_closed;
  }
  if (a.hi == b.hi) {
    out.hi = a.hi;
    out.hi_closed = a.hi_closed && b.hi_closed;
  } else {
    const Interval& tighter = a.hi < b.hi ? a : b;
    out.hi = tighter.hi;
    out.hi_closed = tighter.hi_closed;
  }
  return out;
}

std::vector<Interval> complement(std::vector<Interval> removed) {
  std::erase_if(removed, [](const Interval& r) { return r.empty(); });
  std::ranges::sort(removed, [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  std::vector<Interval> out;
  ExtReal cursor = ExtReal::neg_inf();
  bool cursor_closed = false;
  for (const auto& r : removed) {
    Interval gap{cursor, r.lo, cursor_closed && cursor.is_finite(), !r.lo_closed && r.lo.is_finite()};
    if (!gap.empty()) out.push_back(gap);
    cursor = r.hi;
    cursor_closed = !r.hi_closed;
  }
  Interval tail{cursor, ExtReal::pos_inf(), cursor_closed && cursor.is_finite(), false};
  if (!tail.empty()) out.push_back(tail);
  return out;
}

Rational interior_point(const ExtReal& lo, const ExtReal& hi) {
  if (lo.is_finite() && hi.is_finite()) return Rational((lo.value() + hi.value()) / 2);
  if (lo.is_finite()) return Rational(lo.value() + 1);
  if (hi.is_finite()) return Rational(hi.value() - 1);
  return Rational(0);
}

Preimage preimage_size(const PiecewiseMonotone& f, const Rational& y) {
  for (const auto& p : plateaus(f)) {
    if (p.y == y) return IntervalPreimage{{p.x_minus, p.x_plus, p.left_closed, p.right_closed}};
  }
  // Off the plateaus f is strictly increasing near any solution, so at most
  // one point can hit y.
  const auto& bps = f.breakpoints();
  const auto& segs = f.segments();
  for (const auto& bp : bps) {
    if (bp.value == y) return SingletonPreimage{bp.x};
  }
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (segs[k].is_constant()) continue;
    Rational root = (y - segs[k].intercept) / segs[k].slope;
    if (f.segment_lo(k) < ExtReal(root) && ExtReal(root) < f.segment_hi(k)) return SingletonPreimage{root};
  }
  return EmptyPreimage{};
}

}  // namespace geninv
