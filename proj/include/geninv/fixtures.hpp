#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geninv/piecewise.hpp"

// Small hand-built functions covering each phenomenon once: a continuous
// bijection, a pure step, a plateau, a jump, and a plateau closed on the
// right followed by a jump.
namespace geninv::fixtures {

/// f(x) = x.
PiecewiseMonotone identity();
/// 0 for x < 0, 1 for x >= 0.
PiecewiseMonotone f2();
/// x for x < 0, 0 on [0, 1], x - 1 for x > 1.
PiecewiseMonotone f3();
/// x for x < 0, x + 1 for x >= 0.
PiecewiseMonotone f4();
/// x for x < 0, 0 on [0, 1], x for x > 1.
PiecewiseMonotone f5();

/// CDF of Bernoulli(1/2) on {0, 1}.
PiecewiseMonotone bernoulli_half_cdf();
/// Mixed CDF: x/4 on [0, 2), jump to 3/4 at 2, 3/4 + (x - 2)/4 on [2, 3], 1 after.
PiecewiseMonotone ramp_jump_cdf();

std::vector<std::pair<std::string, PiecewiseMonotone>> named_set();

}  // namespace geninv::fixtures
