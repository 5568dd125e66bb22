#include "geninv/properties.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>

#include "geninv/compose.hpp"
#include "geninv/inverse.hpp"
#include "rng.hpp"

namespace geninv {

ExtReal oracle_inf(const PiecewiseMonotone& f, const Rational& y, bool strict) {
  std::vector<Rational> cuts;
  for (const auto& bp : f.breakpoints()) cuts.push_back(bp.x);
  for (const auto& seg : f.segments()) {
    if (!seg.is_constant()) cuts.push_back((y - seg.intercept) / seg.slope);
  }
  std::ranges::sort(cuts);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto holds = [&](const Rational& x) {
    Rational v = f.eval(x);
    return strict ? v > y : v >= y;
  };
  // Cells in order: (-inf, c0), {c0}, (c0, c1), {c1}, ..., (c_last, +inf).
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    ExtReal lo = i == 0 ? ExtReal::neg_inf() : ExtReal(cuts[i - 1]);
    ExtReal hi = i == cuts.size() ? ExtReal::pos_inf() : ExtReal(cuts[i]);
    if (holds(interior_point(lo, hi))) return lo;
    if (i < cuts.size() && holds(cuts[i])) return cuts[i];
  }
  return ExtReal::pos_inf();
}

namespace {

const Rational kNudge(1, 1024);

void add_unique_sorted(std::vector<Rational>& v) {
  std::ranges::sort(v);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Rational random_rational(std::mt19937_64& rng) {
  const long den = 1 + static_cast<long>(detail::uniform_index(rng, 12));
  const long span = 12 * den;
  const long num = static_cast<long>(detail::uniform_index(rng, static_cast<std::size_t>(2 * span + 1))) - span;
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

ProbeSet probe_points(const PiecewiseMonotone& f, std::uint64_t seed, std::uint64_t index) {
  auto rng = detail::seeded_rng(seed, index, 0x70726f6265);
  ProbeSet probes;
  const auto& bps = f.breakpoints();
  const auto& segs = f.segments();

  auto& xs = probes.xs;
  for (const auto& bp : bps) {
    xs.push_back(bp.x);
    xs.push_back(bp.x - kNudge);
    xs.push_back(bp.x + kNudge);
  }
  for (std::size_t k = 0; k < segs.size(); ++k) xs.push_back(interior_point(f.segment_lo(k), f.segment_hi(k)));
  if (!bps.empty()) {
    xs.push_back(bps.front().x - 5);
    xs.push_back(bps.back().x + 5);
  } else {
    xs.insert(xs.end(), {Rational(-1), Rational(0), Rational(1)});
  }

  std::vector<Rational> levels;
  for (std::size_t i = 0; i < bps.size(); ++i) {
    levels.push_back(bps[i].value);
    levels.push_back(segs[i].at(bps[i].x));
    levels.push_back(segs[i + 1].at(bps[i].x));
    levels.push_back((segs[i].at(bps[i].x) + segs[i + 1].at(bps[i].x)) / 2);
  }
  for (const auto& seg : segs) {
    if (seg.is_constant()) levels.push_back(seg.intercept);
  }
  add_unique_sorted(levels);

  auto& ys = probes.ys;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    ys.push_back(levels[i]);
    ys.push_back(levels[i] - kNudge);
    ys.push_back(levels[i] + kNudge);
    if (i + 1 < levels.size()) ys.push_back((levels[i] + levels[i + 1]) / 2);
  }
  if (!levels.empty()) {
    ys.push_back(levels.front() - 3);
    ys.push_back(levels.back() + 3);
  }
  // Inverse values at the structural levels are the interesting x's.
  for (const auto& y : levels) {
    for (const ExtReal& x : {pointwise_inf_plus(f, y), pointwise_inf_minus(f, y)}) {
      if (x.is_finite()) xs.push_back(x.value());
    }
  }
  for (int i = 0; i < 24; ++i) xs.push_back(random_rational(rng));
  add_unique_sorted(xs);

  for (const auto& x : xs) ys.push_back(f.eval(x));
  add_unique_sorted(ys);
  std::size_t added = 0;
  while (ys.size() < 200 || added < 40) {
    ys.push_back(random_rational(rng));
    ++added;
    if (ys.size() >= 200 && added >= 40) add_unique_sorted(ys);
  }
  add_unique_sorted(ys);
  return probes;
}

namespace {

struct XProbe {
  Rational x;
  Rational fx;
  Rational fl;
  Rational fr;
  ExtReal plus_fx;   // T+(T(x))
  ExtReal minus_fx;  // T-(T(x))

  bool right_continuous() const { return fx == fr; }
  bool left_continuous() const { return fx == fl; }
};

struct YProbe {
  Rational y;
  ExtReal plus;
  ExtReal minus;
  ExtReal plus_left;
  ExtReal plus_right;
  ExtReal minus_left;
  ExtReal minus_right;
  ExtReal def_plus;   // pointwise definition
  ExtReal def_minus;
};

struct Case {
  std::uint64_t index;
  const PiecewiseMonotone& f;
  ExtPiecewise plus;
  ExtPiecewise minus;
  ExtReal bottom;
  ExtReal top;
  std::vector<JumpRecord> jumps;
  std::vector<PlateauRecord> plats;
  std::vector<XProbe> xs;
  std::vector<YProbe> ys;
};

Case build_case(const PiecewiseMonotone& f, std::uint64_t seed, std::uint64_t index) {
  Case c{index, f, invert_plus(f), invert_minus(f), f.limit_at_neg_inf(), f.limit_at_pos_inf(),
         discontinuities(f), plateaus(f), {}, {}};
  ProbeSet probes = probe_points(f, seed, index);
  for (auto& x : probes.xs) {
    Rational fx = f.eval(x);
    ExtReal pf = c.plus.eval(fx);
    ExtReal mf = c.minus.eval(fx);
    c.xs.push_back({x, fx, f.left_limit(x), f.right_limit(x), std::move(pf), std::move(mf)});
  }
  for (auto& y : probes.ys) {
    c.ys.push_back({y, c.plus.eval(y), c.minus.eval(y), c.plus.left_limit(y), c.plus.right_limit(y),
                    c.minus.left_limit(y), c.minus.right_limit(y), pointwise_inf_plus(f, y),
                    pointwise_inf_minus(f, y)});
  }
  return c;
}

constexpr std::size_t kKeptViolations = 8;

struct Tally {
  std::size_t checks = 0;
  std::size_t hits = 0;
  std::size_t skipped = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;
};

struct Ctx {
  const Case& c;
  Tally& t;

  // Records one check of `ok`; on failure keeps a replayable witness.
  void expect(bool ok, const std::function<std::string()>& witness, const std::string& expected,
              const std::string& got) {
    ++t.checks;
    if (ok) return;
    ++t.violation_count;
    if (t.violations.size() < kKeptViolations) t.violations.push_back({c.index, c.f, witness(), expected, got});
  }
  void expect(bool ok, const std::function<std::string()>& witness, const ExtReal& expected, const ExtReal& got) {
    expect(ok, witness, to_string(expected), to_string(got));
  }
  void hit() { ++t.hits; }
  void skip() { ++t.skipped; }
};

std::string at_y(const Rational& y) { return "y=" + to_string(y); }
std::string at_x(const Rational& x) { return "x=" + to_string(x); }
std::string at_xy(const Rational& x, const Rational& y) { return at_x(x) + " " + at_y(y); }
std::string flag(bool b) { return b ? "true" : "false"; }

ExtReal fin(const Rational& v) { return ExtReal(v); }

bool in_open_plateau(const Case& c, const Rational& x) {
  return std::ranges::any_of(c.plats, [&](const PlateauRecord& p) { return p.x_minus < fin(x) && fin(x) < p.x_plus; });
}

bool has_plateau_at(const Case& c, const Rational& y) {
  return std::ranges::any_of(c.plats, [&](const PlateauRecord& p) { return p.y == y; });
}

// Finite constant piece of positive length at `level` in a closed-form inverse.
bool has_constant_piece(const ExtPiecewise& g, const Rational& level) {
  return std::ranges::any_of(g.segments(), [&](const ExtSegment& s) {
    return !s.is_infinite() && s.is_constant() && s.law().intercept == level;
  });
}

// --- Single inverses: values, order, continuity ---------------------------

void l1_i(Ctx& ctx) {
  const Case& c = ctx.c;
  const bool bottom_attained = c.f.segments().front().is_constant();
  const bool top_attained = c.f.segments().back().is_constant();
  for (const auto& p : c.ys) {
    const ExtReal y = fin(p.y);
    const bool all_above = c.bottom > y || (c.bottom == y && !bottom_attained);
    const bool all_at_most = c.top <= y;
    const bool all_at_least = c.bottom >= y;
    const bool all_below = c.top < y || (c.top == y && !top_attained);
    auto w = [&] { return at_y(p.y); };
    ctx.expect(p.plus.is_neg_inf() == all_above, w, "T+(y)=-inf iff T>y everywhere", to_string(p.plus));
    ctx.expect(p.plus.is_pos_inf() == all_at_most, w, "T+(y)=+inf iff T<=y everywhere", to_string(p.plus));
    ctx.expect(p.minus.is_neg_inf() == all_at_least, w, "T-(y)=-inf iff T>=y everywhere", to_string(p.minus));
    ctx.expect(p.minus.is_pos_inf() == all_below, w, "T-(y)=+inf iff T<y everywhere", to_string(p.minus));
  }
}

void l1_ii(Ctx& ctx) {
  const auto& ys = ctx.c.ys;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    auto w = [&] { return at_y(ys[i].y) + " and " + at_y(ys[i + 1].y); };
    ctx.expect(ys[i].plus <= ys[i + 1].plus, w, "T+ nondecreasing", to_string(ys[i].plus) + " > " + to_string(ys[i + 1].plus));
    ctx.expect(ys[i].minus <= ys[i + 1].minus, w, "T- nondecreasing",
               to_string(ys[i].minus) + " > " + to_string(ys[i + 1].minus));
  }
  for (const auto* g : {&ctx.c.plus, &ctx.c.minus}) {
    bool ok = true;
    try {
      RawExtFunction raw{g->breakpoints(), g->segments()};
      (void)validate(std::move(raw));
    } catch (const Error&) {
      ok = false;
    }
    ctx.expect(ok, [] { return std::string("closed form"); }, "valid nondecreasing", "rejected");
  }
}

void l1_iii(Ctx& ctx) {
  for (const auto& p : ctx.c.ys) {
    auto w = [&] { return at_y(p.y); };
    ctx.expect(p.plus_right == p.def_plus, w, p.def_plus, p.plus_right);    // T+(y+) = T+(y)
    ctx.expect(p.minus_left == p.def_minus, w, p.def_minus, p.minus_left);  // T-(y-) = T-(y)
    ctx.expect(p.plus_left == p.def_minus, w, p.def_minus, p.plus_left);    // T+(y-) = T-(y)
    ctx.expect(p.minus_right == p.def_plus, w, p.def_plus, p.minus_right);  // T-(y+) = T+(y)
  }
}

void l1_iv(Ctx& ctx) {
  for (const auto& p : ctx.c.ys) {
    const bool plus_cont = p.plus_left == p.plus && p.plus == p.plus_right;
    const bool minus_cont = p.minus_left == p.minus && p.minus == p.minus_right;
    ctx.expect(plus_cont == minus_cont, [&] { return at_y(p.y); }, "T+ continuous iff T- continuous",
               "T+ " + flag(plus_cont) + ", T- " + flag(minus_cont));
  }
  std::vector<Rational> a, b;
  for (const auto& bp : ctx.c.plus.breakpoints()) a.push_back(bp.x);
  for (const auto& bp : ctx.c.minus.breakpoints()) b.push_back(bp.x);
  ctx.expect(a == b, [] { return std::string("breakpoint sets"); }, "identical breakpoint sets", "differ");
}

void l1_v(Ctx& ctx) {
  for (const auto& p : ctx.c.ys) {
    ctx.expect(p.minus <= p.plus, [&] { return at_y(p.y); }, "T-(y) <= T+(y)",
               to_string(p.minus) + " > " + to_string(p.plus));
  }
}

void l1_vi(Ctx& ctx) {
  for (const auto& p : ctx.c.ys) {
    const bool at_most_one = !std::holds_alternative<IntervalPreimage>(preimage_size(ctx.c.f, p.y));
    ctx.expect((p.minus == p.plus) == at_most_one, [&] { return at_y(p.y); },
               "T-(y)=T+(y) iff |T^-1(y)| <= 1", "equal=" + flag(p.minus == p.plus) + " card<=1=" + flag(at_most_one));
  }
}

// Pairwise items: every x probe against every y probe.
template <class Fn>
void for_pairs(const Case& c, Fn&& fn) {
  for (const auto& xp : c.xs) {
    for (const auto& yp : c.ys) fn(xp, yp);
  }
}

void l1_vii_a(Ctx& ctx) {
  for_pairs(ctx.c, [&](const XProbe& xp, const YProbe& yp) {
    if (!(yp.y <= xp.fx)) return;
    ctx.hit();
    ctx.expect(yp.minus <= fin(xp.x), [&] { return at_xy(xp.x, yp.y); }, "T-(y) <= x", to_string(yp.minus));
  });
}

void l1_vii_b(Ctx& ctx) {
  for_pairs(ctx.c, [&](const XProbe& xp, const YProbe& yp) {
    if (!(yp.y < xp.fx)) return;
    ctx.hit();
    ctx.expect(yp.plus <= fin(xp.x), [&] { return at_xy(xp.x, yp.y); }, "T+(y) <= x", to_string(yp.plus));
  });
}

void l1_vii_c(Ctx& ctx) {
  for (const auto& xp : ctx.c.xs) {
    ctx.expect(xp.minus_fx <= fin(xp.x), [&] { return at_x(xp.x); }, "T-(T(x)) <= x", to_string(xp.minus_fx));
  }
}

void l1_vii_d(Ctx& ctx) {
  for_pairs(ctx.c, [&](const XProbe& xp, const YProbe& yp) {
    if (!(yp.y > xp.fx)) return;
    ctx.hit();
    ctx.expect(yp.minus >= fin(xp.x), [&] { return at_xy(xp.x, yp.y); }, "T-(y) >= x", to_string(yp.minus));
  });
}

void l1_vii_e(Ctx& ctx) {
  for_pairs(ctx.c, [&](const XProbe& xp, const YProbe& yp) {
    if (!(yp.y >= xp.fx)) return;
    ctx.hit();
    ctx.expect(yp.plus >= fin(xp.x), [&] { return at_xy(xp.x, yp.y); }, "T+(y) >= x", to_string(yp.plus));
  });
}

void l1_vii_f(Ctx& ctx) {
  for (const auto& xp : ctx.c.xs) {
    ctx.expect(xp.plus_fx >= fin(xp.x), [&] { return at_x(xp.x); }, "T+(T(x)) >= x", to_string(xp.plus_fx));
  }
}

void l1_vii_g(Ctx& ctx) {
  for (const auto& xp : ctx.c.xs) {
    if (xp.plus_fx != xp.minus_fx) continue;
    ctx.hit();
    ctx.expect(xp.plus_fx == fin(xp.x), [&] { return at_x(xp.x); }, fin(xp.x), xp.plus_fx);
  }
}

void l1_vii_h(Ctx& ctx) {
  for (const auto& p : ctx.c.ys) {
    if (!p.plus.is_finite()) {
      ctx.skip();
      continue;
    }
    ctx.hit();
    Rational before = ctx.c.f.left_limit(p.plus.value());
    ctx.expect(before <= p.y, [&] { return at_y(p.y); }, "T(T+(y)-) <= y", to_string(before));
  }
}

void l1_viii_a(Ctx& ctx) {
  for_pairs(ctx.c, [&](const XProbe& xp, const YProbe& yp) {
    if (!xp.right_continuous() || !(yp.y > xp.fx)) return;
    ctx.hit();
    ctx.expect(yp.minus > fin(xp.x), [&] { return at_xy(xp.x, yp.y); }, "T-(y) > x", to_string(yp.minus));
  });
}

void l1_viii_b(Ctx& ctx) {
  for_pairs(ctx.c, [&](const XProbe& xp, const YProbe& yp) {
    if (!xp.right_continuous() || !(yp.y > xp.fx)) return;
    ctx.hit();
    ctx.expect(yp.plus > fin(xp.x), [&] { return at_xy(xp.x, yp.y); }, "T+(y) > x", to_string(yp.plus));
  });
}

void l1_viii_c(Ctx& ctx) {
  for_pairs(ctx.c, [&](const XProbe& xp, const YProbe& yp) {
    if (!xp.right_continuous()) return;
    ctx.hit();
    const bool lhs = yp.y <= xp.fx;
    const bool rhs = yp.minus <= fin(xp.x);
    ctx.expect(lhs == rhs, [&] { return at_xy(xp.x, yp.y); }, "y<=T(x) iff T-(y)<=x",
               "y<=T(x) " + flag(lhs) + ", T-(y)<=x " + flag(rhs));
  });
}

// Items whose hypothesis is one-sided continuity of T at T±(y).
template <class Hyp, class Concl>
void at_inverse_points(Ctx& ctx, const char* statement, Hyp&& hypothesis, Concl&& conclusion) {
  for (const auto& p : ctx.c.ys) {
    for (const ExtReal* inv : {&p.plus, &p.minus}) {
      if (!inv->is_finite()) {
        ctx.skip();
        continue;
      }
      const Rational& x = inv->value();
      if (!hypothesis(x)) continue;
      ctx.hit();
      Rational fx = ctx.c.f.eval(x);
      ctx.expect(conclusion(fx, p.y), [&] { return at_y(p.y) + " " + at_x(x); }, statement, "T(x)=" + to_string(fx));
    }
  }
}

void l1_ix(Ctx& ctx) {
  const auto& f = ctx.c.f;
  at_inverse_points(
      ctx, "T(T±(y)) >= y", [&](const Rational& x) { return f.eval(x) == f.right_limit(x); },
      [](const Rational& fx, const Rational& y) { return fx >= y; });
}

void l1_x_a(Ctx& ctx) {
  for_pairs(ctx.c, [&](const XProbe& xp, const YProbe& yp) {
    if (!xp.left_continuous() || !(yp.y < xp.fx)) return;
    ctx.hit();
    ctx.expect(yp.minus < fin(xp.x), [&] { return at_xy(xp.x, yp.y); }, "T-(y) < x", to_string(yp.minus));
  });
}

void l1_x_b(Ctx& ctx) {
  for_pairs(ctx.c, [&](const XProbe& xp, const YProbe& yp) {
    if (!xp.left_continuous() || !(yp.y < xp.fx)) return;
    ctx.hit();
    ctx.expect(yp.plus < fin(xp.x), [&] { return at_xy(xp.x, yp.y); }, "T+(y) < x", to_string(yp.plus));
  });
}

void l1_x_c(Ctx& ctx) {
  for_pairs(ctx.c, [&](const XProbe& xp, const YProbe& yp) {
    if (!xp.left_continuous()) return;
    ctx.hit();
    const bool lhs = yp.y >= xp.fx;
    const bool rhs = yp.plus >= fin(xp.x);
    ctx.expect(lhs == rhs, [&] { return at_xy(xp.x, yp.y); }, "y>=T(x) iff T+(y)>=x",
               "y>=T(x) " + flag(lhs) + ", T+(y)>=x " + flag(rhs));
  });
}

void l1_xi(Ctx& ctx) {
  const auto& f = ctx.c.f;
  at_inverse_points(
      ctx, "T(T±(y)) <= y", [&](const Rational& x) { return f.eval(x) == f.left_limit(x); },
      [](const Rational& fx, const Rational& y) { return fx <= y; });
}

void l1_xii(Ctx& ctx) {
  const auto& f = ctx.c.f;
  at_inverse_points(
      ctx, "T(T±(y)) = y",
      [&](const Rational& x) { return f.left_limit(x) == f.eval(x) && f.eval(x) == f.right_limit(x); },
      [](const Rational& fx, const Rational& y) { return fx == y; });
}

void l1_xiii(Ctx& ctx) {
  for (const auto& xp : ctx.c.xs) {
    if (!in_open_plateau(ctx.c, xp.x)) continue;
    ctx.hit();
    const bool ok = xp.plus_fx > fin(xp.x) && fin(xp.x) > xp.minus_fx;
    ctx.expect(ok, [&] { return at_x(xp.x); }, "T+(T(x)) > x > T-(T(x))",
               to_string(xp.plus_fx) + ", " + to_string(xp.minus_fx));
  }
}

void l1_xiv(Ctx& ctx) {
  const auto left = ctx.c.f.left_version();
  const auto right = ctx.c.f.right_version();
  auto w = [] { return std::string("versions"); };
  ctx.expect(canonical_equal(invert_plus(left), invert_plus(right)), w, "T_l+ = T_r+", "differ");
  ctx.expect(canonical_equal(invert_minus(left), invert_minus(right)), w, "T_l- = T_r-", "differ");
  for (const auto& p : ctx.c.ys) {
    for (bool strict : {true, false}) {
      ExtReal a = oracle_inf(left, p.y, strict);
      ExtReal b = oracle_inf(right, p.y, strict);
      ctx.expect(a == b, [&] { return at_y(p.y) + (strict ? " (+)" : " (-)"); }, a, b);
    }
  }
}

// --- Plateaus of T are jumps of T± ----------------------------------------

void l2_nec(Ctx& ctx) {
  const Case& c = ctx.c;
  for (const auto& p : c.ys) {
    if (!(p.plus > p.minus)) continue;
    ctx.hit();
    std::vector<Rational> inside{interior_point(p.minus, p.plus)};
    std::vector<Rational> outside;
    if (p.plus.is_finite()) outside.push_back(p.plus.value() + kNudge / 64);
    if (p.minus.is_finite()) outside.push_back(p.minus.value() - kNudge / 64);
    for (const auto& xp : c.xs) {
      if (p.minus < fin(xp.x) && fin(xp.x) < p.plus) inside.push_back(xp.x);
      if (fin(xp.x) > p.plus || fin(xp.x) < p.minus) outside.push_back(xp.x);
    }
    for (const auto& x : inside) {
      const Rational fx = c.f.eval(x);
      ctx.expect(fx == p.y, [&] { return at_xy(x, p.y); }, "T(x) = y inside (T-(y), T+(y))", to_string(fx));
      const ExtReal pf = c.plus.eval(fx);
      const ExtReal mf = c.minus.eval(fx);
      ctx.expect(pf > fin(x) && fin(x) > mf, [&] { return at_xy(x, p.y); }, "T+(T(x)) > x > T-(T(x))",
                 to_string(pf) + ", " + to_string(mf));
    }
    // Maximality: T differs from y on both sides of the interval.
    for (const auto& x : outside) {
      const Rational fx = c.f.eval(x);
      const bool ok = fin(x) > p.plus ? fx > p.y : fx < p.y;
      ctx.expect(ok, [&] { return at_xy(x, p.y); }, "T(x) != y outside [T-(y), T+(y)]", to_string(fx));
    }
  }
}

void l2_suf(Ctx& ctx) {
  const Case& c = ctx.c;
  for (const auto& plat : c.plats) {
    if (!plat.bounded()) continue;  // the item quantifies over proper intervals (x1, x2)
    ctx.hit();
    const ExtReal pl = c.plus.eval(plat.y);
    const ExtReal mi = c.minus.eval(plat.y);
    ctx.expect(pl > mi, [&] { return at_y(plat.y); }, "T+(y) > T-(y)", to_string(pl) + " vs " + to_string(mi));
  }
  for (const auto& xp : c.xs) {
    if (xp.plus_fx > fin(xp.x) || xp.minus_fx < fin(xp.x)) {
      ctx.hit();
      ctx.expect(xp.plus_fx > xp.minus_fx, [&] { return at_x(xp.x); }, "T+(T(x)) > T-(T(x))",
                 to_string(xp.plus_fx) + " vs " + to_string(xp.minus_fx));
    }
  }
}

void l2_equiv(Ctx& ctx) {
  for (const auto& p : ctx.c.ys) {
    const bool gap = p.plus > p.minus;
    const bool constant = has_plateau_at(ctx.c, p.y);
    ctx.expect(gap == constant, [&] { return at_y(p.y); }, "T+(y)>T-(y) iff T = y on a proper interval",
               "gap " + flag(gap) + ", plateau " + flag(constant));
  }
}

// --- Jumps of T are plateaus of T± ----------------------------------------

void l3_nec(Ctx& ctx) {
  const Case& c = ctx.c;
  for (const auto& jump : c.jumps) {
    const ExtReal x = fin(jump.x);
    const Rational mid = (jump.y_minus + jump.y_plus) / 2;
    ctx.hit();
    for (const auto* g : {&c.plus, &c.minus}) {
      ctx.expect(g->eval(mid) == x, [&] { return at_y(mid); }, x, g->eval(mid));
    }
    for (const auto& p : c.ys) {
      if (jump.y_minus < p.y && p.y < jump.y_plus) {
        ctx.hit();
        ctx.expect(p.plus == x && p.minus == x, [&] { return at_y(p.y); }, "T+(y) = x = T-(y)",
                   to_string(p.plus) + ", " + to_string(p.minus));
      } else if (p.y > jump.y_plus) {
        ctx.expect(p.minus > x, [&] { return at_y(p.y); }, "T-(y) > x above the band", to_string(p.minus));
      } else if (p.y < jump.y_minus) {
        ctx.expect(p.plus < x, [&] { return at_y(p.y); }, "T+(y) < x below the band", to_string(p.plus));
      }
    }
  }
}

void l3_suf(Ctx& ctx) {
  const Case& c = ctx.c;
  auto has_jump = [&](const Rational& x) { return c.f.right_limit(x) > c.f.left_limit(x); };
  for (const auto* g : {&c.plus, &c.minus}) {
    for (const auto& seg : g->segments()) {
      if (seg.is_infinite() || !seg.is_constant()) continue;
      const Rational& x = seg.law().intercept;
      ctx.hit();
      ctx.expect(has_jump(x), [&] { return at_x(x); }, "T(x+) > T(x-)", "no jump");
    }
  }
  // Two probes with the same finite inverse value pin it on a proper interval.
  for (std::size_t i = 0; i + 1 < c.ys.size(); ++i) {
    const auto& a = c.ys[i];
    const auto& b = c.ys[i + 1];
    for (auto member : {&YProbe::plus, &YProbe::minus}) {
      const ExtReal& va = a.*member;
      if (!va.is_finite() || va != b.*member) continue;
      ctx.hit();
      ctx.expect(has_jump(va.value()), [&] { return at_y(a.y) + ".." + to_string(b.y); }, "T(x+) > T(x-)", "no jump");
    }
  }
}

void l3_equiv(Ctx& ctx) {
  for (const auto& xp : ctx.c.xs) {
    const bool jump = xp.fr > xp.fl;
    const bool flat = has_constant_piece(ctx.c.plus, xp.x) && has_constant_piece(ctx.c.minus, xp.x);
    ctx.expect(jump == flat, [&] { return at_x(xp.x); }, "jump at x iff T+ = x = T- on a proper interval",
               "jump " + flag(jump) + ", flat " + flag(flat));
  }
}

// --- Compositions ----------------------------------------------------------

void expect_report(Ctx& ctx, const CompositionReport& report) {
  ++ctx.t.checks;
  if (report.ok()) return;
  for (const auto& m : report.mismatches) {
    ctx.expect(false, [&] { return report.composition + " at " + to_string(m.point); }, m.predicted, m.actual);
  }
  --ctx.t.checks;
}

void l4_t_after_inv(Ctx& ctx) {
  for (Side side : {Side::Plus, Side::Minus}) expect_report(ctx, predict_T_after_inv(ctx.c.f, side));
}

void l4_inv_after_t(Ctx& ctx) {
  for (Side side : {Side::Plus, Side::Minus}) expect_report(ctx, predict_inv_after_T(ctx.c.f, side));
}

void l5_right(Ctx& ctx) {
  auto [outer, inner] = predict_one_sided(ctx.c.f.right_version(), Continuity::Right);
  expect_report(ctx, outer);
  expect_report(ctx, inner);
}

void l5_left(Ctx& ctx) {
  auto [outer, inner] = predict_one_sided(ctx.c.f.left_version(), Continuity::Left);
  expect_report(ctx, outer);
  expect_report(ctx, inner);
}

// --- Oracle agreement and sup forms ----------------------------------------

void def_oracle(Ctx& ctx) {
  for (const auto& p : ctx.c.ys) {
    const ExtReal op = oracle_inf(ctx.c.f, p.y, true);
    const ExtReal om = oracle_inf(ctx.c.f, p.y, false);
    auto w = [&] { return at_y(p.y); };
    ctx.expect(p.plus == op, w, op, p.plus);
    ctx.expect(p.def_plus == op, w, op, p.def_plus);
    ctx.expect(p.minus == om, w, om, p.minus);
    ctx.expect(p.def_minus == om, w, om, p.def_minus);
  }
}

void rem_sup(Ctx& ctx) {
  for (const auto& p : ctx.c.ys) {
    const ExtReal sp = pointwise_sup_plus(ctx.c.f, p.y);
    const ExtReal sm = pointwise_sup_minus(ctx.c.f, p.y);
    auto w = [&] { return at_y(p.y); };
    ctx.expect(sp == p.def_plus, w, p.def_plus, sp);
    ctx.expect(sm == p.def_minus, w, p.def_minus, sm);
  }
}

struct PropertyEntry {
  PropertyInfo info;
  void (*check)(Ctx&);
};

const PropertyEntry kRegistry[] = {
    {{"Def1.oracle", "closed-form and pointwise inverses equal the brute-force infimum", false}, def_oracle},
    {{"Rem1.sup", "sup{T<=y} = T+(y) and sup{T<y} = T-(y)", false}, rem_sup},
    {{"L1.i", "T±(y) = ±inf exactly under the stated global conditions", false}, l1_i},
    {{"L1.ii", "T+ and T- are nondecreasing", false}, l1_ii},
    {{"L1.iii", "T+ right-, T- left-continuous; T+(y-)=T-(y), T-(y+)=T+(y)", false}, l1_iii},
    {{"L1.iv", "T+ continuous at y iff T- continuous at y", false}, l1_iv},
    {{"L1.v", "T-(y) <= T+(y)", false}, l1_v},
    {{"L1.vi", "T-(y) = T+(y) iff Card T^-1({y}) <= 1", false}, l1_vi},
    {{"L1.vii.a", "y <= T(x) implies T-(y) <= x", true}, l1_vii_a},
    {{"L1.vii.b", "y < T(x) implies T+(y) <= x", true}, l1_vii_b},
    {{"L1.vii.c", "T-(T(x)) <= x", false}, l1_vii_c},
    {{"L1.vii.d", "y > T(x) implies T-(y) >= x", true}, l1_vii_d},
    {{"L1.vii.e", "y >= T(x) implies T+(y) >= x", true}, l1_vii_e},
    {{"L1.vii.f", "T+(T(x)) >= x", false}, l1_vii_f},
    {{"L1.vii.g", "T+(T(x)) = T-(T(x)) implies both equal x", true}, l1_vii_g},
    {{"L1.vii.h", "T(T+(y)-) <= y", true}, l1_vii_h},
    {{"L1.viii.a", "T right-continuous at x, y > T(x) implies T-(y) > x", true}, l1_viii_a},
    {{"L1.viii.b", "T right-continuous at x, y > T(x) implies T+(y) > x", true}, l1_viii_b},
    {{"L1.viii.c", "T right-continuous at x: y <= T(x) iff T-(y) <= x", true}, l1_viii_c},
    {{"L1.ix", "T right-continuous at T±(y) implies T(T±(y)) >= y", true}, l1_ix},
    {{"L1.x.a", "T left-continuous at x, y < T(x) implies T-(y) < x", true}, l1_x_a},
    {{"L1.x.b", "T left-continuous at x, y < T(x) implies T+(y) < x", true}, l1_x_b},
    {{"L1.x.c", "T left-continuous at x: y >= T(x) iff T+(y) >= x", true}, l1_x_c},
    {{"L1.xi", "T left-continuous at T±(y) implies T(T±(y)) <= y", true}, l1_xi},
    {{"L1.xii", "T continuous at T±(y) implies T(T±(y)) = y", true}, l1_xii},
    {{"L1.xiii", "T constant around x implies T+(T(x)) > x > T-(T(x))", true}, l1_xiii},
    {{"L1.xiv", "left and right versions have the same T+ and T-", false}, l1_xiv},
    {{"L2.nec", "T+(y) > T-(y) implies T = y exactly on (T-(y), T+(y)), maximal", true}, l2_nec},
    {{"L2.suf", "a proper constancy interval or T±(T(x)) != x implies T+(y) > T-(y)", true}, l2_suf},
    {{"L2.equiv", "T+(y) > T-(y) iff T = y on a proper interval", false}, l2_equiv},
    {{"L3.nec", "T(x+) > T(x-) implies T+ = x = T- exactly on (T(x-), T(x+)), maximal", true}, l3_nec},
    {{"L3.suf", "T+ or T- constant at x on a proper interval implies T(x+) > T(x-)", true}, l3_suf},
    {{"L3.equiv", "T(x+) > T(x-) iff T+ = x = T- on a proper interval", false}, l3_equiv},
    {{"L4.TTinv", "T(T±(y)) on open jump bands and off the closed bands", false}, l4_t_after_inv},
    {{"L4.invT", "T±(T(x)) on open plateaus and off the closed plateaus", false}, l4_inv_after_t},
    {{"L5.right", "gap-free T∘T+ and T+∘T for right-continuous T", false}, l5_right},
    {{"L5.left", "gap-free T∘T- and T-∘T for left-continuous T", false}, l5_left},
};

const std::vector<PropertyInfo>& registry_infos() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> out;
    for (const auto& entry : kRegistry) out.push_back(entry.info);
    return out;
  }();
  return infos;
}

std::vector<const PropertyEntry*> select(std::optional<std::string_view> only) {
  std::vector<const PropertyEntry*> out;
  for (const auto& entry : kRegistry) {
    if (!only || entry.info.id == *only) out.push_back(&entry);
  }
  if (out.empty()) throw Error(Errc::UnknownProperty, "no property named '" + std::string(*only) + "'");
  return out;
}

std::vector<PropertyResult> run_cases(std::size_t cases, const std::function<PiecewiseMonotone(std::size_t)>& function_at,
                                      std::uint64_t seed, std::optional<std::string_view> only) {
  const auto selected = select(only);
  std::vector<std::vector<Tally>> tallies(cases, std::vector<Tally>(selected.size()));

  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < cases; i += stride) {
      const PiecewiseMonotone f = function_at(i);
      const Case c = build_case(f, seed, i);
      for (std::size_t p = 0; p < selected.size(); ++p) {
        Ctx ctx{c, tallies[i][p]};
        try {
          selected[p]->check(ctx);
        } catch (const std::exception& e) {
          ctx.expect(false, [] { return std::string("exception"); }, "no exception", e.what());
        }
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(cases, 1));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
  }

  std::vector<PropertyResult> results;
  for (std::size_t p = 0; p < selected.size(); ++p) {
    PropertyResult r;
    r.property_id = std::string(selected[p]->info.id);
    r.implication = selected[p]->info.implication;
    r.cases_run = cases;
    for (std::size_t i = 0; i < cases; ++i) {
      auto& t = tallies[i][p];
      r.checks += t.checks;
      r.hypothesis_hits += t.hits;
      r.skipped += t.skipped;
      r.violation_count += t.violation_count;
      for (auto& v : t.violations) {
        if (r.violations.size() < kKeptViolations) r.violations.push_back(std::move(v));
      }
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace

std::span<const PropertyInfo> property_registry() { return registry_infos(); }

bool is_known_property(std::string_view id) {
  return std::ranges::any_of(kRegistry, [&](const PropertyEntry& s) { return s.info.id == id; });
}

PropertyResult run_property(std::string_view id, const GeneratorConfig& config, std::size_t cases) {
  return run_suite(config, cases, id).front();
}

std::vector<PropertyResult> run_suite(const GeneratorConfig& config, std::size_t cases,
                                      std::optional<std::string_view> only) {
  config.check();
  return run_cases(cases, [&](std::size_t i) { return generate(config, i); }, config.seed, only);
}

std::vector<PropertyResult> run_suite_on(std::span<const PiecewiseMonotone> functions, std::uint64_t probe_seed,
                                         std::optional<std::string_view> only) {
  return run_cases(functions.size(), [&](std::size_t i) { return functions[i]; }, probe_seed, only);
}

}  // namespace geninv
