// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 0 iff
// every criterion passes.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "cli.hpp"
#include "geninv/compose.hpp"
#include "geninv/fixtures.hpp"
#include "geninv/inverse.hpp"
#include "geninv/io.hpp"
#include "geninv/properties.hpp"
#include "geninv/sampling.hpp"
#include "rng.hpp"
#include "support.hpp"

namespace {

using namespace geninv;
using testing::bisect_inf_minus;
using testing::bisect_inf_plus;
using testing::fin;
using testing::q;
namespace fx = fixtures;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

constexpr std::uint64_t kSeed = 42;

// 1. Closed forms equal the brute-force oracle on 500 functions x >= 200 ys.
Outcome oracle_equivalence() {
  Outcome o;
  GeneratorConfig config;
  config.seed = kSeed;
  std::size_t compared = 0, min_probes = SIZE_MAX;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto f = generate(config, i);
    const auto plus = invert_plus(f);
    const auto minus = invert_minus(f);
    const auto probes = probe_points(f, kSeed, i);
    min_probes = std::min(min_probes, probes.ys.size());
    for (const auto& y : probes.ys) {
      o.require(plus.eval(y) == oracle_inf(f, y, true), "T+ case " + std::to_string(i) + " y=" + to_string(y));
      o.require(minus.eval(y) == oracle_inf(f, y, false), "T- case " + std::to_string(i) + " y=" + to_string(y));
      compared += 2;
    }
    // The oracle itself against bisection on a subset.
    if (i < 40) {
      for (std::size_t k = 0; k < probes.ys.size(); k += 4) {
        const auto& y = probes.ys[k];
        o.require(oracle_inf(f, y, true) == bisect_inf_plus(f, y), "oracle vs bisection case " + std::to_string(i));
        o.require(oracle_inf(f, y, false) == bisect_inf_minus(f, y), "oracle vs bisection case " + std::to_string(i));
      }
    }
  }
  o.require(min_probes >= 200, "fewer than 200 probes on some function");
  if (o.pass) {
    o.detail = std::to_string(compared) + " exact comparisons, >= " + std::to_string(min_probes) + " probes per function";
  }
  return o;
}

// 2. Whole registry at cases=200, seed=42; implication items hit >= 50 times.
Outcome lemma_suite() {
  Outcome o;
  GeneratorConfig config;
  config.seed = kSeed;
  const auto results = run_suite(config, 200);
  std::size_t min_hits = SIZE_MAX;
  for (const auto& r : results) {
    o.require(r.passed(), r.property_id + ": " + std::to_string(r.violation_count) + " violations" +
                              (r.violations.empty() ? "" : " e.g. " + r.violations[0].witness));
    if (r.implication) {
      min_hits = std::min(min_hits, r.hypothesis_hits);
      o.require(r.hypothesis_hits >= 50, r.property_id + ": only " + std::to_string(r.hypothesis_hits) + " hits");
    }
  }
  o.require(results.size() == property_registry().size(), "registry not fully run");
  if (o.pass) {
    o.detail = std::to_string(results.size()) + " properties, 0 violations, min implication hits " + std::to_string(min_hits);
  }
  return o;
}

// 3. Exact fixture table.
Outcome fixture_table() {
  Outcome o;
  const auto id = fx::identity(), f2 = fx::f2(), f3 = fx::f3(), f4 = fx::f4(), f5 = fx::f5();
  const ExtReal ninf = ExtReal::neg_inf(), pinf = ExtReal::pos_inf();

  o.require(canonical_equal(invert_plus(id), to_ext(id)), "invert_plus(identity)");
  o.require(canonical_equal(invert_plus(f3), validate(RawExtFunction{{{0, fin(1)}}, {Segment{1, 0}, Segment{1, 1}}})),
            "invert_plus(F3)");
  o.require(canonical_equal(invert_minus(f2), validate(RawExtFunction{{{0, ninf}, {1, fin(0)}},
                                                                      {ExtSegment::constant(ninf),
                                                                       ExtSegment::constant(fin(0)),
                                                                       ExtSegment::constant(pinf)}})),
            "invert_minus(F2)");
  for (const auto& [name, f] : fx::named_set()) {
    for (int k = -24; k <= 24; ++k) {
      const Rational y = q(k, 8);
      o.require(invert_plus(f).eval(y) == bisect_inf_plus(f, y), "T+ of " + name + " at " + to_string(y));
      o.require(invert_minus(f).eval(y) == bisect_inf_minus(f, y), "T- of " + name + " at " + to_string(y));
    }
  }
  o.require(pointwise_inf_plus(f2, 1) == pinf, "pointwise_inf_plus(F2, 1)");
  o.require(pointwise_inf_minus(f2, 0) == ninf, "pointwise_inf_minus(F2, 0)");
  o.require(pointwise_sup_plus(f2, 0) == fin(0), "pointwise_sup_plus(F2, 0)");
  o.require(pointwise_sup_minus(f2, 0) == ninf, "pointwise_sup_minus(F2, 0)");

  o.require(discontinuities(id).empty(), "jumps(identity)");
  o.require(discontinuities(f2) == std::vector<JumpRecord>{{0, 0, 1, 1}}, "jumps(F2)");
  o.require(discontinuities(f5) == std::vector<JumpRecord>{{1, 0, 1, 0}}, "jumps(F5)");
  o.require(plateaus(id).empty(), "plateaus(identity)");
  o.require(plateaus(f3) == std::vector<PlateauRecord>{{0, fin(0), fin(1), true, true}}, "plateaus(F3)");
  o.require(plateaus(f2) == std::vector<PlateauRecord>{{0, ninf, fin(0), false, false}, {1, fin(0), pinf, true, false}},
            "plateaus(F2)");

  for (Side side : {Side::Plus, Side::Minus}) {
    for (const auto* f : {&id, &f2, &f3, &f4, &f5}) {
      o.require(predict_T_after_inv(*f, side).ok(), "T∘T± report on a fixture");
      o.require(predict_inv_after_T(*f, side).ok(), "T±∘T report on a fixture");
    }
  }
  const auto r4 = predict_T_after_inv(f4, Side::Plus);
  o.require(r4.actual.eval(q(1, 2)) == fin(1) && f4.eval_ext(bisect_inf_plus(f4, q(1, 2))) == fin(1), "F4(T+(1/2)) = 1");
  const auto r3 = predict_inv_after_T(f3, Side::Plus);
  o.require(r3.actual.eval(q(1, 2)) == fin(1), "F3: T+(T(1/2)) = 1");
  o.require(predict_inv_after_T(f3, Side::Minus).actual.eval(q(1, 2)) == fin(0), "F3: T-(T(1/2)) = 0");
  o.require(!predict_T_after_inv(f5, Side::Plus).excluded.empty(), "F5 report lists excluded edges");
  const auto [right_outer, right_inner] = predict_one_sided(right_version(f5), Continuity::Right);
  o.require(right_outer.ok() && right_inner.ok(), "right_version(F5) one-sided report");
  o.require(right_outer.actual.eval(0) == fin(1), "right_version(F5): T(T+(0)) = 1");

  o.require(bisect_inf_plus(f5, f5.eval(1)) == fin(1), "F5: T+(T(1)) = 1");
  o.require(bisect_inf_minus(f5, f5.left_limit(1)) == fin(0), "F5: T+(T(1)-) = T-(0) = 0");
  o.require(regression_fig1(f5), "regression_fig1(F5)");
  o.require(!regression_fig1(id), "regression_fig1(identity) should be false");
  o.require(!regression_fig1(f4), "regression_fig1(F4) should be false");
  if (o.pass) o.detail = "identity, F2, F3, F4, F5 inverses, jumps, plateaus, reports and regression_fig1(F5)";
  return o;
}

// 4. General predictions on 200 functions, one-sided ones on 200 right- and
// 200 left-continuous versions.
Outcome compositions() {
  Outcome o;
  GeneratorConfig config;
  config.seed = kSeed;
  std::size_t reports = 0;
  auto check = [&](const CompositionReport& r, const std::string& where) {
    ++reports;
    if (!r.ok()) {
      const auto& m = r.mismatches.front();
      o.fail(where + " " + r.composition + " at " + to_string(m.point) + ": predicted " + to_string(m.predicted) +
             ", actual " + to_string(m.actual));
    }
  };
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto f = generate(config, i);
    const std::string where = "case " + std::to_string(i);
    for (Side side : {Side::Plus, Side::Minus}) {
      check(predict_T_after_inv(f, side), where);
      check(predict_inv_after_T(f, side), where);
    }
    const auto [ro, ri] = predict_one_sided(right_version(f), Continuity::Right);
    check(ro, where + " right");
    check(ri, where + " right");
    const auto [lo, li] = predict_one_sided(left_version(f), Continuity::Left);
    check(lo, where + " left");
    check(li, where + " left");
  }
  if (o.pass) o.detail = std::to_string(reports) + " reports, 0 mismatches";
  return o;
}

// 5. Exact pushforward identity and KS statistics of sampled ECDFs.
Outcome sampling() {
  Outcome o;
  GeneratorConfig config;
  config.seed = kSeed;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const auto cdf = generate_cdf(config, i);
    auto rng = detail::seeded_rng(kSeed, i, 0x6c616d);
    std::vector<Rational> lambdas;
    for (const auto& bp : cdf.function().breakpoints()) lambdas.push_back(bp.x);
    while (lambdas.size() < 20) {
      lambdas.push_back(q(static_cast<long>(detail::uniform_index(rng, 161)) - 80, 1 + static_cast<long>(detail::uniform_index(rng, 8))));
    }
    lambdas.resize(20);
    for (const auto& l : lambdas) {
      o.require(pushforward_identity_holds(cdf, l), "pushforward case " + std::to_string(i) + " lambda=" + to_string(l));
    }
  }
  std::ostringstream stats;
  for (const auto& [name, f] : {std::pair{"bernoulli", fx::bernoulli_half_cdf()}, std::pair{"ramp-jump", fx::ramp_jump_cdf()}}) {
    const auto cdf = validate_cdf(f);
    const auto xs = sample(cdf, 100000, kSeed);
    const Rational d = ks_distance(ecdf(xs), cdf);
    o.require(d <= q(1, 100), std::string(name) + " KS " + std::to_string(to_double(d)));
    stats << ' ' << name << " KS=" << to_double(d);
  }
  if (o.pass) o.detail = "100 CDFs x 20 lambdas exact;" + stats.str();
  return o;
}

// 6. Versions share T+, and function files round-trip through the CLI.
Outcome round_trip() {
  Outcome o;
  GeneratorConfig config;
  config.seed = kSeed;
  const auto dir = std::filesystem::temp_directory_path() / ("geninv_acc_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  for (std::uint64_t i = 0; i < 500; ++i) {
    const auto f = generate(config, i);
    const std::string where = "case " + std::to_string(i);
    o.require(canonical_equal(invert_plus(left_version(f)), invert_plus(right_version(f))), where + " T_l+ != T_r+");
    o.require(canonical_equal(io::parse_function(io::emit(f)), f), where + " emit/parse");
    const auto path = dir / "f.json";
    std::ofstream(path) << io::emit(f);
    const std::string p = path.string();
    const char* argv[] = {"geninv", "validate", p.c_str()};
    std::ostringstream out, err;
    const int code = run_cli(3, argv, out, err);
    o.require(code == 0 && canonical_equal(io::parse_function(out.str()), f), where + " CLI validate round-trip");
    const char* inv_argv[] = {"geninv", "invert", p.c_str(), "--plus"};
    std::ostringstream inv_out;
    run_cli(4, inv_argv, inv_out, err);
    o.require(canonical_equal(io::parse_ext_function(inv_out.str()), invert_plus(f)), where + " CLI invert round-trip");
  }
  std::filesystem::remove_all(dir);
  if (o.pass) o.detail = "500 functions: T_l+ = T_r+, emit/parse and CLI round-trips";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 oracle equivalence", oracle_equivalence},
      {"AC2 lemma suite", lemma_suite},
      {"AC3 fixture table", fixture_table},
      {"AC4 compositions", compositions},
      {"AC5 sampling", sampling},
      {"AC6 versions and round-trip", round_trip},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
