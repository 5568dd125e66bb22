#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "geninv/inverse.hpp"
#include "geninv/piecewise.hpp"

namespace geninv {

/// A cumulative distribution function: right-continuous, F(-inf) = 0,
/// F(+inf) = 1, values in [0, 1].
class CdfSpec {
 public:
  const PiecewiseMonotone& function() const noexcept { return f_; }
  /// F-, computed once on construction.
  const ExtPiecewise& quantile() const noexcept { return quantile_; }

 private:
  friend CdfSpec validate_cdf(PiecewiseMonotone f);
  CdfSpec(PiecewiseMonotone f, ExtPiecewise quantile) : f_(std::move(f)), quantile_(std::move(quantile)) {}

  PiecewiseMonotone f_;
  ExtPiecewise quantile_;
};

/// Errors: NotRightContinuous (names the breakpoint), BadLimits, OutOfUnitRange.
CdfSpec validate_cdf(PiecewiseMonotone f);

/// Uniform draw number `index` of the stream `seed`: the dyadic rational
/// k / 2^64 with k the SplitMix64 output, 0 < k < 2^64. Draw i depends only
/// on (seed, i).
Rational uniform_draw(std::uint64_t seed, std::uint64_t index);

/// n exact samples F-(u_i). The Plus variant is available for experiments.
std::vector<Rational> sample(const CdfSpec& cdf, std::size_t n, std::uint64_t seed, Side side = Side::Minus);

/// Right-continuous empirical CDF. Throws EmptySample.
CdfSpec ecdf(std::span<const Rational> samples);

/// Exact sup_x |a(x) - b(x)|.
Rational ks_distance(const CdfSpec& a, const CdfSpec& b);

/// Exact check that {u in (0,1) : F-(u) <= lambda} = (0, F(lambda)] ∩ (0,1),
/// read off the closed-form quantile function; its Lebesgue measure is then
/// F(lambda).
bool pushforward_identity_holds(const CdfSpec& cdf, const Rational& lambda);

}  // namespace geninv
