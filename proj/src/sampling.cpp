#include "geninv/sampling.hpp"

#include <algorithm>

namespace geninv {

CdfSpec validate_cdf(PiecewiseMonotone f) {
  for (const auto& bp : f.breakpoints()) {
    if (bp.value != f.right_limit(bp.x)) {
      throw Error(Errc::NotRightContinuous, "not right-continuous at x=" + to_string(bp.x));
    }
  }
  if (f.limit_at_neg_inf() != ExtReal(Rational(0)) || f.limit_at_pos_inf() != ExtReal(Rational(1))) {
    throw Error(Errc::BadLimits, "limits are " + to_string(f.limit_at_neg_inf()) + " and " +
                                     to_string(f.limit_at_pos_inf()) + ", expected 0 and 1");
  }
  for (const auto& bp : f.breakpoints()) {
    if (bp.value < 0 || bp.value > 1) {
      throw Error(Errc::OutOfUnitRange, "value " + to_string(bp.value) + " at x=" + to_string(bp.x));
    }
  }
  ExtPiecewise quantile = invert_minus(f);
  return CdfSpec(std::move(f), std::move(quantile));
}

Rational uniform_draw(std::uint64_t seed, std::uint64_t index) {
  static const mpz_class two_64 = mpz_class(1) << 64;
  std::uint64_t state = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  for (;;) {
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    if (z != 0) {
      mpz_class k;
      mpz_import(k.get_mpz_t(), 1, -1, sizeof z, 0, 0, &z);
      Rational u(k, two_64);
      u.canonicalize();
      return u;
    }
    // k = 0 would map to F-(0) = -inf; step the stream instead.
    state += 0x9E3779B97F4A7C15ULL;
  }
}

std::vector<Rational> sample(const CdfSpec& cdf, std::size_t n, std::uint64_t seed, Side side) {
  const ExtPiecewise quantile = side == Side::Minus ? cdf.quantile() : invert_plus(cdf.function());
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExtReal x = quantile.eval(uniform_draw(seed, i));
    out.push_back(x.value());
  }
  return out;
}

CdfSpec ecdf(std::span<const Rational> samples) {
  if (samples.empty()) throw Error(Errc::EmptySample, "ecdf needs at least one sample");
  std::vector<Rational> sorted(samples.begin(), samples.end());
  std::ranges::sort(sorted);
  const Rational n(static_cast<unsigned long>(sorted.size()));
  RawFunction raw;
  raw.segments.push_back({0, 0});
  std::size_t seen = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    seen = j;
    Rational level = Rational(static_cast<unsigned long>(seen)) / n;
    raw.breakpoints.push_back({sorted[i], level});
    raw.segments.push_back({0, level});
    i = j;
  }
  return validate_cdf(validate(std::move(raw)));
}

Rational ks_distance(const CdfSpec& a, const CdfSpec& b) {
  // Both functions are affine between consecutive points of the merged
  // breakpoint set and constant on the unbounded ends, so the supremum is
  // reached at a breakpoint or as a left limit there.
  std::vector<Rational> xs;
  for (const auto& bp : a.function().breakpoints()) xs.push_back(bp.x);
  for (const auto& bp : b.function().breakpoints()) xs.push_back(bp.x);
  Rational best = 0;
  for (const auto& x : xs) {
    Rational at = abs(a.function().eval(x) - b.function().eval(x));
    Rational before = abs(a.function().left_limit(x) - b.function().left_limit(x));
    best = std::max({best, at, before});
  }
  return best;
}

bool pushforward_identity_holds(const CdfSpec& cdf, const Rational& lambda) {
  const Rational mass = cdf.function().eval(lambda);
  const DownSet set = sublevel_set(cdf.quantile(), lambda);
  if (mass == 0) return set.empty || set.sup <= ExtReal(Rational(0));
  if (set.empty) return false;
  if (mass == 1) return set.sup >= ExtReal(Rational(1));
  return set.sup == ExtReal(mass) && set.attained;
}

}  // namespace geninv
