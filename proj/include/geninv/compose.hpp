#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geninv/inverse.hpp"
#include "geninv/piecewise.hpp"

namespace geninv {

/// outer ∘ inner. Where inner is ±inf the outer function contributes its
/// limit at ±inf, so the composition is total.
ExtPiecewise compose_exact(const ExtPiecewise& outer, const ExtPiecewise& inner);
ExtPiecewise compose_exact(const PiecewiseMonotone& outer, const ExtPiecewise& inner);
ExtPiecewise compose_exact(const ExtPiecewise& outer, const PiecewiseMonotone& inner);

struct PredictedPiece {
  Interval where;
  ExtSegment law;  // identity or a constant
};

struct Mismatch {
  Rational point;
  ExtReal predicted;
  ExtReal actual;
};

/// Actual value at a point the prediction deliberately leaves open.
struct EdgeValue {
  Rational point;
  ExtReal actual;
};

struct CompositionReport {
  std::string composition;  // e.g. "T(T+(y))"
  std::vector<PredictedPiece> predicted;
  std::vector<Interval> excluded;  // complement of the predicted regions
  ExtPiecewise actual;
  std::vector<Mismatch> mismatches;
  std::vector<EdgeValue> edges;

  bool ok() const { return mismatches.empty(); }
};

/// Checks `actual` against every predicted piece exactly and fills in
/// `excluded`, `edges` and `mismatches`.
CompositionReport make_report(std::string composition, std::vector<PredictedPiece> predicted, ExtPiecewise actual);

/// T(T±(y)): T(x_i) on each open jump band (y_i-, y_i+), y on the rest of
/// (T(-inf), T(+inf)) outside the closed bands.
CompositionReport predict_T_after_inv(const PiecewiseMonotone& f, Side side);

/// T±(T(x)): x_i+ (Plus) or x_i- (Minus) on each open plateau (x_i-, x_i+),
/// x outside the closed plateaus.
CompositionReport predict_inv_after_T(const PiecewiseMonotone& f, Side side);

enum class Continuity : std::uint8_t { Right, Left };
const char* to_string(Continuity side) noexcept;

/// Gap-free laws for a globally one-sided-continuous T: (T∘T+, T+∘T) for
/// Right with bands [y-, y+) and plateaus [x-, x+); (T∘T-, T-∘T) for Left
/// with (y-, y+] and (x-, x+]. Throws NotOneSidedContinuous.
std::pair<CompositionReport, CompositionReport> predict_one_sided(const PiecewiseMonotone& f, Continuity side);

/// A point x where T+(T(x)) = x although T+ jumps at T(x), i.e.
/// T+(T(x)) > T+(T(x)-).
std::optional<Rational> fig1_witness(const PiecewiseMonotone& f);
bool regression_fig1(const PiecewiseMonotone& f);

}  // namespace geninv
