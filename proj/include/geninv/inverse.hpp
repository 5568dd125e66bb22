#pragma once

#include "geninv/piecewise.hpp"

namespace geninv {

/// Which generalized inverse: T+(y) = inf{x : T(x) > y} (right-continuous)
/// or T-(y) = inf{x : T(x) >= y} (left-continuous).
enum class Side : std::uint8_t { Plus, Minus };

const char* to_string(Side side) noexcept;

// Pointwise definitions, one threshold crossing per piece, with
// inf(empty) = +inf, inf(R) = -inf and the dual conventions for sup.
ExtReal pointwise_inf_plus(const PiecewiseMonotone& f, const Rational& y);
ExtReal pointwise_inf_minus(const PiecewiseMonotone& f, const Rational& y);
/// sup{x : T(x) <= y}
ExtReal pointwise_sup_plus(const PiecewiseMonotone& f, const Rational& y);
/// sup{x : T(x) < y}
ExtReal pointwise_sup_minus(const PiecewiseMonotone& f, const Rational& y);

/// Closed-form generalized inverse. Increasing pieces invert to pieces of
/// reciprocal slope, every jump (x, y-, y+) becomes the constant x on
/// (y-, y+), every plateau collapses into a breakpoint, and levels outside
/// the range closure map to the -inf / +inf end pieces. Breakpoint values are
/// right limits for Plus and left limits for Minus.
ExtPiecewise invert(const PiecewiseMonotone& f, Side side);
inline ExtPiecewise invert_plus(const PiecewiseMonotone& f) { return invert(f, Side::Plus); }
inline ExtPiecewise invert_minus(const PiecewiseMonotone& f) { return invert(f, Side::Minus); }

/// {y : g(y) <= level} for nondecreasing g is a down-set; describes it by its
/// supremum and whether the supremum belongs to it.
struct DownSet {
  bool empty = true;
  ExtReal sup;
  bool attained = false;
};
DownSet sublevel_set(const ExtPiecewise& g, const Rational& level);

}  // namespace geninv
