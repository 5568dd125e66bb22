#include "geninv/fixtures.hpp"

namespace geninv::fixtures {

PiecewiseMonotone identity() { return validate(RawFunction{{}, {{1, 0}}}); }

PiecewiseMonotone f2() { return validate(RawFunction{{{0, 1}}, {{0, 0}, {0, 1}}}); }

PiecewiseMonotone f3() { return validate(RawFunction{{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}, {1, -1}}}); }

PiecewiseMonotone f4() { return validate(RawFunction{{{0, 1}}, {{1, 0}, {1, 1}}}); }

PiecewiseMonotone f5() { return validate(RawFunction{{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}, {1, 0}}}); }

PiecewiseMonotone bernoulli_half_cdf() {
  return validate(RawFunction{{{0, Rational(1, 2)}, {1, 1}}, {{0, 0}, {0, Rational(1, 2)}, {0, 1}}});
}

PiecewiseMonotone ramp_jump_cdf() {
  return validate(RawFunction{{{0, 0}, {2, Rational(3, 4)}, {3, 1}},
                              {{0, 0}, {Rational(1, 4), 0}, {Rational(1, 4), Rational(1, 4)}, {0, 1}}});
}

std::vector<std::pair<std::string, PiecewiseMonotone>> named_set() {
  return {{"identity", identity()}, {"F2", f2()}, {"F3", f3()}, {"F4", f4()}, {"F5", f5()}};
}

}  // namespace geninv::fixtures
