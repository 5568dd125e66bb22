#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geninv/piecewise.hpp"
#include "geninv/sampling.hpp"

namespace geninv {

/// Relative weights for the value stored at a breakpoint.
struct ContinuityMix {
  double left = 1.0;      // f(b) = f(b-)
  double right = 1.0;     // f(b) = f(b+)
  double interior = 1.0;  // strictly between the limits when there is a jump
};

struct GeneratorConfig {
  std::uint64_t seed = 42;
  std::size_t max_breakpoints = 6;
  std::vector<Rational> slope_pool{Rational(1, 3), Rational(1, 2), 1, 2, 3};
  std::vector<Rational> value_pool{-2, -1, Rational(-1, 2), 0, Rational(1, 2), 1, Rational(3, 2), 2};
  ContinuityMix continuity_mix;
  double plateau_bias = 0.35;
  double jump_bias = 0.45;

  /// Throws InvalidConfig: negative or all-zero weights, empty pools,
  /// non-positive slopes, probabilities outside [0, 1].
  void check() const;
};

/// Deterministic in (config.seed, index). Emits jumps, plateaus, strictly
/// increasing pieces, constant tails and left-, right- and
/// neither-continuous breakpoints, each with positive probability.
PiecewiseMonotone generate(const GeneratorConfig& config, std::uint64_t index);

/// Random CDF built from the same pools: point masses at breakpoints with
/// probability jump_bias, linear ramps or flat stretches in between.
CdfSpec generate_cdf(const GeneratorConfig& config, std::uint64_t index);

/// Brute-force inf{x : f(x) > y} (strict) or inf{x : f(x) >= y}. Cuts the
/// line at every breakpoint and every root of every affine law, evaluates f
/// once per cell and returns the left end of the first cell that satisfies
/// the predicate. Shares nothing with the closed-form inverse.
ExtReal oracle_inf(const PiecewiseMonotone& f, const Rational& y, bool strict);

/// Probe points for one function: every breakpoint, limit and level, points
/// just beside them, band and plateau midpoints, and seeded random rationals.
struct ProbeSet {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
};
ProbeSet probe_points(const PiecewiseMonotone& f, std::uint64_t seed, std::uint64_t index);

struct Violation {
  std::uint64_t case_index = 0;
  PiecewiseMonotone function;
  std::string witness;
  std::string expected;
  std::string got;
};

struct PropertyResult {
  std::string property_id;
  bool implication = false;
  std::size_t cases_run = 0;
  std::size_t checks = 0;
  /// Implication-form items: how often the hypothesis held.
  std::size_t hypothesis_hits = 0;
  /// Evaluations skipped because T+(y) or T-(y) was infinite.
  std::size_t skipped = 0;
  std::size_t violation_count = 0;
  /// The first few violations, each replayable from the function and seed.
  std::vector<Violation> violations;

  bool passed() const { return violation_count == 0; }
};

struct PropertyInfo {
  std::string_view id;
  std::string_view statement;
  bool implication;
};

std::span<const PropertyInfo> property_registry();
bool is_known_property(std::string_view id);

/// Throws UnknownProperty.
PropertyResult run_property(std::string_view id, const GeneratorConfig& config, std::size_t cases);

/// Runs every registered property (or only `only`) over `cases` generated
/// functions. Cases are spread over threads; results do not depend on the
/// schedule.
std::vector<PropertyResult> run_suite(const GeneratorConfig& config, std::size_t cases,
                                      std::optional<std::string_view> only = std::nullopt);

/// Same, over a fixed list of functions.
std::vector<PropertyResult> run_suite_on(std::span<const PiecewiseMonotone> functions, std::uint64_t probe_seed,
                                         std::optional<std::string_view> only = std::nullopt);

}  // namespace geninv
