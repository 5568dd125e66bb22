#include "geninv/inverse.hpp"

namespace geninv {

const char* to_string(Side side) noexcept { return side == Side::Plus ? "plus" : "minus"; }

namespace {

// Left-to-right scan of segment 0, breakpoint 0, segment 1, ... returning the
// infimum of the first piece that meets {x : f(x) > y} (strict) or
// {x : f(x) >= y}. Both sets are up-sets, so the first hit is the answer.
ExtReal scan_inf(const PiecewiseMonotone& f, const Rational& y, bool strict) {
  auto satisfies = [&](const Rational& v) { return strict ? v > y : v >= y; };
  const auto& bps = f.breakpoints();
  const auto& segs = f.segments();
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const Segment& seg = segs[k];
    ExtReal lo = f.segment_lo(k);
    if (seg.is_constant()) {
      if (satisfies(seg.intercept)) return lo;
    } else {
      Rational root = (y - seg.intercept) / seg.slope;
      if (ExtReal(root) < f.segment_hi(k)) return max(lo, ExtReal(root));
    }
    if (k < bps.size() && satisfies(bps[k].value)) return bps[k].x;
  }
  return ExtReal::pos_inf();
}

// Right-to-left mirror for sup{x : f(x) <= y} / sup{x : f(x) < y}.
ExtReal scan_sup(const PiecewiseMonotone& f, const Rational& y, bool strict) {
  auto satisfies = [&](const Rational& v) { return strict ? v < y : v <= y; };
  const auto& bps = f.breakpoints();
  const auto& segs = f.segments();
  for (std::size_t k = segs.size(); k-- > 0;) {
    const Segment& seg = segs[k];
    ExtReal hi = f.segment_hi(k);
    if (seg.is_constant()) {
      if (satisfies(seg.intercept)) return hi;
    } else {
      Rational root = (y - seg.intercept) / seg.slope;
      if (f.segment_lo(k) < ExtReal(root)) return min(hi, ExtReal(root));
    }
    if (k > 0 && satisfies(bps[k - 1].value)) return bps[k - 1].x;
  }
  return ExtReal::neg_inf();
}

// Open y-interval of the inverse together with its law there.
struct OpenPiece {
  ExtReal lo;
  ExtReal hi;
  ExtSegment law;
};

// Walks the completed graph of f (segments joined by vertical jump edges)
// from left to right. The resulting pieces tile the y-line up to finitely
// many points; T+ and T- share them and differ only at the shared endpoints.
std::vector<OpenPiece> inverse_pieces(const PiecewiseMonotone& f) {
  std::vector<OpenPiece> pieces;
  const auto& bps = f.breakpoints();
  const auto& segs = f.segments();

  ExtReal bottom = f.limit_at_neg_inf();
  if (bottom.is_finite()) pieces.push_back({ExtReal::neg_inf(), bottom, ExtSegment::constant(ExtReal::neg_inf())});

  for (std::size_t k = 0; k < segs.size(); ++k) {
    const Segment& seg = segs[k];
    if (!seg.is_constant()) {
      ExtReal lo = k == 0 ? ExtReal::neg_inf() : ExtReal(seg.at(bps[k - 1].x));
      ExtReal hi = k == bps.size() ? ExtReal::pos_inf() : ExtReal(seg.at(bps[k].x));
      Rational slope = 1 / seg.slope;
      Rational intercept = -seg.intercept / seg.slope;
      pieces.push_back({std::move(lo), std::move(hi), ExtSegment(Segment{slope, intercept})});
    }
    if (k < bps.size()) {
      Rational left = seg.at(bps[k].x);
      Rational right = segs[k + 1].at(bps[k].x);
      if (left < right) pieces.push_back({left, right, ExtSegment::constant(bps[k].x)});
    }
  }

  ExtReal top = f.limit_at_pos_inf();
  if (top.is_finite()) pieces.push_back({top, ExtReal::pos_inf(), ExtSegment::constant(ExtReal::pos_inf())});
  return pieces;
}

}  // namespace

ExtReal pointwise_inf_plus(const PiecewiseMonotone& f, const Rational& y) { return scan_inf(f, y, true); }
ExtReal pointwise_inf_minus(const PiecewiseMonotone& f, const Rational& y) { return scan_inf(f, y, false); }
ExtReal pointwise_sup_plus(const PiecewiseMonotone& f, const Rational& y) { return scan_sup(f, y, false); }
ExtReal pointwise_sup_minus(const PiecewiseMonotone& f, const Rational& y) { return scan_sup(f, y, true); }

ExtPiecewise invert(const PiecewiseMonotone& f, Side side) {
  std::vector<OpenPiece> pieces = inverse_pieces(f);
  RawExtFunction raw;
  raw.segments.push_back(pieces.front().law);
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    // Consecutive pieces meet at a finite level; plateaus of f land here.
    const Rational& y = pieces[i].hi.value();
    const OpenPiece& taken = side == Side::Plus ? pieces[i + 1] : pieces[i];
    raw.breakpoints.push_back({y, taken.law.at(y)});
    raw.segments.push_back(pieces[i + 1].law);
  }
  return validate(std::move(raw));
}

DownSet sublevel_set(const ExtPiecewise& g, const Rational& level) {
  const ExtReal bound(level);
  const auto& bps = g.breakpoints();
  const auto& segs = g.segments();
  for (std::size_t k = segs.size(); k-- > 0;) {
    const ExtSegment& seg = segs[k];
    ExtReal hi = g.segment_hi(k);
    if (seg.is_constant()) {
      if (seg.at(0) <= bound) return {false, hi, false};
    } else {
      const Segment& law = seg.law();
      Rational root = (level - law.intercept) / law.slope;
      if (g.segment_lo(k) < ExtReal(root)) {
        if (ExtReal(root) < hi) return {false, root, true};
        return {false, hi, false};
      }
    }
    if (k > 0 && bps[k - 1].value <= bound) return {false, bps[k - 1].x, true};
  }
  return {};
}

}  // namespace geninv
