#include <algorithm>
#include <random>

#include "geninv/properties.hpp"
#include "rng.hpp"

namespace geninv {

void GeneratorConfig::check() const {
  const auto& mix = continuity_mix;
  if (mix.left < 0 || mix.right < 0 || mix.interior < 0 || mix.left + mix.right + mix.interior <= 0) {
    throw Error(Errc::InvalidConfig, "continuity weights must be nonnegative with at least one positive");
  }
  if (slope_pool.empty() || value_pool.empty()) throw Error(Errc::InvalidConfig, "pools must be nonempty");
  for (const auto& s : slope_pool) {
    if (sgn(s) <= 0) throw Error(Errc::InvalidConfig, "slope pool entries must be positive");
  }
  if (!(plateau_bias >= 0 && plateau_bias <= 1 && jump_bias >= 0 && jump_bias <= 1)) {
    throw Error(Errc::InvalidConfig, "biases must lie in [0, 1]");
  }
}

namespace {

// Positive spacings derived from the value pool.
std::vector<Rational> gap_pool(const GeneratorConfig& config) {
  std::vector<Rational> gaps;
  for (const auto& v : config.value_pool) {
    if (sgn(v) != 0) gaps.push_back(abs(v));
  }
  if (gaps.empty()) gaps.emplace_back(1);
  return gaps;
}

std::vector<Rational> breakpoint_xs(const GeneratorConfig& config, std::mt19937_64& rng, std::size_t n) {
  const auto gaps = gap_pool(config);
  std::vector<Rational> xs;
  if (n == 0) return xs;
  xs.push_back(detail::pick(rng, config.value_pool));
  while (xs.size() < n) xs.push_back(xs.back() + detail::pick(rng, gaps));
  return xs;
}

}  // namespace

PiecewiseMonotone generate(const GeneratorConfig& config, std::uint64_t index) {
  config.check();
  auto rng = detail::seeded_rng(config.seed, index, 0x67656e);
  const auto gaps = gap_pool(config);
  auto draw_slope = [&]() -> Rational {
    return detail::bernoulli(rng, config.plateau_bias) ? Rational(0) : detail::pick(rng, config.slope_pool);
  };

  const std::size_t n = detail::uniform_index(rng, config.max_breakpoints + 1);
  const auto xs = breakpoint_xs(config, rng, n);

  RawFunction raw;
  Rational slope = draw_slope();
  Rational level = detail::pick(rng, config.value_pool);
  if (n == 0) {
    raw.segments.push_back({slope, level});
    return validate(std::move(raw));
  }
  // `level` is the left limit at the first breakpoint.
  raw.segments.push_back({slope, level - slope * xs[0]});
  const auto& mix = config.continuity_mix;
  const double total = mix.left + mix.right + mix.interior;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational left = raw.segments.back().at(xs[i]);
    Rational right = left;
    if (detail::bernoulli(rng, config.jump_bias)) right += detail::pick(rng, gaps);
    const double u = detail::unit(rng) * total;
    Rational value;
    if (u < mix.left) {
      value = left;
    } else if (u < mix.left + mix.right) {
      value = right;
    } else {
      static const Rational fractions[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3)};
      value = left + (right - left) * fractions[detail::uniform_index(rng, 3)];
    }
    raw.breakpoints.push_back({xs[i], value});
    slope = draw_slope();
    raw.segments.push_back({slope, right - slope * xs[i]});
  }
  return validate(std::move(raw));
}

CdfSpec generate_cdf(const GeneratorConfig& config, std::uint64_t index) {
  config.check();
  auto rng = detail::seeded_rng(config.seed, index, 0x636466);
  const auto gaps = gap_pool(config);
  const std::size_t n = 1 + detail::uniform_index(rng, std::max<std::size_t>(config.max_breakpoints, 1));
  const auto xs = breakpoint_xs(config, rng, n);

  // Unnormalized masses: jumps[i] at xs[i], ramps[i] spread over (xs[i], xs[i+1]).
  std::vector<Rational> jumps(n), ramps(n > 0 ? n - 1 : 0);
  Rational total = 0;
  for (auto& j : jumps) {
    if (detail::bernoulli(rng, config.jump_bias)) j = detail::pick(rng, gaps);
    total += j;
  }
  for (auto& r : ramps) {
    if (!detail::bernoulli(rng, config.plateau_bias)) r = detail::pick(rng, gaps);
    total += r;
  }
  if (total == 0) {
    jumps[0] = 1;
    total = 1;
  }

  RawFunction raw;
  raw.segments.push_back({0, 0});
  Rational level = 0;
  for (std::size_t i = 0; i < n; ++i) {
    level += jumps[i] / total;
    raw.breakpoints.push_back({xs[i], level});
    if (i + 1 < n) {
      const Rational slope = ramps[i] / total / (xs[i + 1] - xs[i]);
      raw.segments.push_back({slope, level - slope * xs[i]});
      level += ramps[i] / total;
    } else {
      raw.segments.push_back({0, 1});
    }
  }
  return validate_cdf(validate(std::move(raw)));
}

}  // namespace geninv
