#include "geninv/compose.hpp"

#include <algorithm>

namespace geninv {

const char* to_string(Continuity side) noexcept { return side == Continuity::Right ? "right" : "left"; }

ExtPiecewise compose_exact(const ExtPiecewise& outer, const ExtPiecewise& inner) {
  // Result breakpoints: those of the inner function plus every x at which an
  // increasing inner piece crosses an outer breakpoint. Between two cuts the
  // inner image stays inside one outer segment (or at one fixed level).
  std::vector<Rational> cuts;
  for (const auto& bp : inner.breakpoints()) cuts.push_back(bp.x);
  const auto& inner_segs = inner.segments();
  for (std::size_t k = 0; k < inner_segs.size(); ++k) {
    if (inner_segs[k].is_constant()) continue;
    const Segment& law = inner_segs[k].law();
    for (const auto& obp : outer.breakpoints()) {
      Rational root = (obp.x - law.intercept) / law.slope;
      if (inner.segment_lo(k) < ExtReal(root) && ExtReal(root) < inner.segment_hi(k)) cuts.push_back(root);
    }
  }
  std::ranges::sort(cuts);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  RawExtFunction raw;
  for (std::size_t j = 0; j <= cuts.size(); ++j) {
    ExtReal lo = j == 0 ? ExtReal::neg_inf() : ExtReal(cuts[j - 1]);
    ExtReal hi = j == cuts.size() ? ExtReal::pos_inf() : ExtReal(cuts[j]);
    Rational rep = interior_point(lo, hi);
    const ExtSegment& inner_seg = inner_segs[inner.segment_index(rep)];
    if (inner_seg.is_constant()) {
      raw.segments.push_back(ExtSegment::constant(outer.eval_ext(inner_seg.at(rep))));
    } else {
      const Segment& in = inner_seg.law();
      Rational image = in.at(rep);
      const ExtSegment& outer_seg = outer.segments()[outer.segment_index(image)];
      if (outer_seg.is_infinite()) {
        raw.segments.push_back(outer_seg);
      } else {
        const Segment& out = outer_seg.law();
        raw.segments.emplace_back(Segment{out.slope * in.slope, out.intercept + out.slope * in.intercept});
      }
    }
    if (j < cuts.size()) raw.breakpoints.push_back({cuts[j], outer.eval_ext(inner.eval(cuts[j]))});
  }
  return validate(std::move(raw));
}

ExtPiecewise compose_exact(const PiecewiseMonotone& outer, const ExtPiecewise& inner) {
  return compose_exact(to_ext(outer), inner);
}

ExtPiecewise compose_exact(const ExtPiecewise& outer, const PiecewiseMonotone& inner) {
  return compose_exact(outer, to_ext(inner));
}

namespace {

void check_piece(const ExtPiecewise& actual, const PredictedPiece& piece, std::vector<Mismatch>& out) {
  const Interval& where = piece.where;
  if (where.empty()) return;
  auto compare_at = [&](const Rational& p) {
    ExtReal want = piece.law.at(p);
    ExtReal got = actual.eval(p);
    if (want != got) out.push_back({p, std::move(want), std::move(got)});
  };
  if (where.lo == where.hi) {
    compare_at(where.lo.value());
    return;
  }
  if (where.lo_closed) compare_at(where.lo.value());
  if (where.hi_closed) compare_at(where.hi.value());

  std::vector<ExtReal> bounds{where.lo};
  for (const auto& bp : actual.breakpoints()) {
    if (where.lo < ExtReal(bp.x) && ExtReal(bp.x) < where.hi) {
      compare_at(bp.x);
      bounds.emplace_back(bp.x);
    }
  }
  bounds.push_back(where.hi);
  // On each open cell the actual function is a single affine law, so agreement
  // there is equality of laws.
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    Rational rep = interior_point(bounds[i], bounds[i + 1]);
    const ExtSegment& law = actual.segments()[actual.segment_index(rep)];
    if (!(law == piece.law)) out.push_back({rep, piece.law.at(rep), actual.eval(rep)});
  }
}

std::vector<PredictedPiece> identity_outside(const std::vector<Interval>& removed, const Interval& domain) {
  std::vector<PredictedPiece> out;
  for (const auto& gap : complement(removed)) {
    Interval cut = intersect(gap, domain);
    if (!cut.empty()) out.push_back({cut, ExtSegment::identity()});
  }
  return out;
}

Interval range_interior(const PiecewiseMonotone& f) {
  return Interval::open(f.limit_at_neg_inf(), f.limit_at_pos_inf());
}

std::string name_T_after_inv(Side side) { return side == Side::Plus ? "T(T+(y))" : "T(T-(y))"; }
std::string name_inv_after_T(Side side) { return side == Side::Plus ? "T+(T(x))" : "T-(T(x))"; }

}  // namespace

CompositionReport make_report(std::string composition, std::vector<PredictedPiece> predicted, ExtPiecewise actual) {
  std::erase_if(predicted, [](const PredictedPiece& p) { return p.where.empty(); });
  std::ranges::sort(predicted, [](const PredictedPiece& a, const PredictedPiece& b) { return a.where.lo < b.where.lo; });

  CompositionReport report{std::move(composition), std::move(predicted), {}, std::move(actual), {}, {}};
  for (const auto& piece : report.predicted) check_piece(report.actual, piece, report.mismatches);

  std::vector<Interval> covered;
  for (const auto& piece : report.predicted) covered.push_back(piece.where);
  report.excluded = complement(covered);
  for (const auto& gap : report.excluded) {
    for (const ExtReal* end : {&gap.lo, &gap.hi}) {
      if (!end->is_finite()) continue;
      const Rational& p = end->value();
      bool seen = std::ranges::any_of(report.edges, [&](const EdgeValue& e) { return e.point == p; });
      if (!seen) report.edges.push_back({p, report.actual.eval(p)});
    }
  }
  return report;
}

CompositionReport predict_T_after_inv(const PiecewiseMonotone& f, Side side) {
  std::vector<PredictedPiece> predicted;
  std::vector<Interval> bands;
  for (const auto& jump : discontinuities(f)) {
    predicted.push_back({Interval::open(jump.y_minus, jump.y_plus), ExtSegment::constant(jump.value_at_x)});
    bands.push_back({jump.y_minus, jump.y_plus, true, true});
  }
  auto rest = identity_outside(bands, range_interior(f));
  predicted.insert(predicted.end(), rest.begin(), rest.end());
  return make_report(name_T_after_inv(side), std::move(predicted), compose_exact(f, invert(f, side)));
}

CompositionReport predict_inv_after_T(const PiecewiseMonotone& f, Side side) {
  std::vector<PredictedPiece> predicted;
  std::vector<Interval> cores;
  for (const auto& p : plateaus(f)) {
    const ExtReal& level = side == Side::Plus ? p.x_plus : p.x_minus;
    predicted.push_back({Interval::open(p.x_minus, p.x_plus), ExtSegment::constant(level)});
    cores.push_back({p.x_minus, p.x_plus, p.x_minus.is_finite(), p.x_plus.is_finite()});
  }
  auto rest = identity_outside(cores, Interval::whole_line());
  predicted.insert(predicted.end(), rest.begin(), rest.end());
  return make_report(name_inv_after_T(side), std::move(predicted), compose_exact(invert(f, side), f));
}

std::pair<CompositionReport, CompositionReport> predict_one_sided(const PiecewiseMonotone& f, Continuity side) {
  const bool right = side == Continuity::Right;
  const auto& bps = f.breakpoints();
  for (std::size_t i = 0; i < bps.size(); ++i) {
    const Rational limit = right ? f.right_limit(bps[i].x) : f.left_limit(bps[i].x);
    if (bps[i].value != limit) {
      throw Error(Errc::NotOneSidedContinuous,
                  std::string(to_string(side)) + "-continuity fails at breakpoint x=" + to_string(bps[i].x));
    }
  }
  const Side inverse_side = right ? Side::Plus : Side::Minus;

  std::vector<PredictedPiece> outer_first;
  std::vector<Interval> bands;
  for (const auto& jump : discontinuities(f)) {
    Interval band{jump.y_minus, jump.y_plus, right, !right};
    outer_first.push_back({band, ExtSegment::constant(right ? jump.y_plus : jump.y_minus)});
    bands.push_back(band);
  }
  auto rest = identity_outside(bands, Interval::whole_line());
  outer_first.insert(outer_first.end(), rest.begin(), rest.end());
  const Interval range = range_interior(f);
  for (auto& piece : outer_first) piece.where = intersect(piece.where, range);

  std::vector<PredictedPiece> inner_first;
  std::vector<Interval> runs;
  for (const auto& p : plateaus(f)) {
    Interval run{p.x_minus, p.x_plus, right && p.x_minus.is_finite(), !right && p.x_plus.is_finite()};
    inner_first.push_back({run, ExtSegment::constant(right ? p.x_plus : p.x_minus)});
    runs.push_back(run);
  }
  rest = identity_outside(runs, Interval::whole_line());
  inner_first.insert(inner_first.end(), rest.begin(), rest.end());

  return {make_report(name_T_after_inv(inverse_side), std::move(outer_first), compose_exact(f, invert(f, inverse_side))),
          make_report(name_inv_after_T(inverse_side), std::move(inner_first), compose_exact(invert(f, inverse_side), f))};
}

std::optional<Rational> fig1_witness(const PiecewiseMonotone& f) {
  const ExtPiecewise plus = invert_plus(f);
  for (const auto& bp : f.breakpoints()) {
    const Rational& y = bp.value;
    ExtReal image = pointwise_inf_plus(f, y);
    if (image == ExtReal(bp.x) && plus.left_limit(y) < image) return bp.x;
  }
  return std::nullopt;
}

bool regression_fig1(const PiecewiseMonotone& f) { return fig1_witness(f).has_value(); }

}  // namespace geninv
