#pragma once

#include <functional>

#include "geninv/piecewise.hpp"

// Test-side ground truth for generalized inverses. It only ever asks whether
// the predicate holds at a point: bisection brackets the infimum of the
// up-set {x : pred(x)} to width 2^-80, then the simplest rational in the
// bracket is returned. Exact for fixtures whose data has small denominators.
namespace geninv::testing {

inline Rational simplest_between(Rational lo, Rational hi) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (lo == Rational(fl)) return Rational(fl);
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  Rational out = Rational(fl) + 1 / inner;
  out.canonicalize();
  return out;
}

inline ExtReal bisect_inf(const std::function<bool(const Rational&)>& pred) {
  const Rational bound(mpz_class(1) << 20);
  if (pred(-bound)) return ExtReal::neg_inf();
  if (!pred(bound)) return ExtReal::pos_inf();
  Rational lo = -bound, hi = bound;
  for (int i = 0; i < 100; ++i) {
    Rational mid = (lo + hi) / 2;
    (pred(mid) ? hi : lo) = mid;
  }
  return simplest_between(lo, hi);
}

inline ExtReal bisect_inf_plus(const PiecewiseMonotone& f, const Rational& y) {
  return bisect_inf([&](const Rational& x) { return f.eval(x) > y; });
}

inline ExtReal bisect_inf_minus(const PiecewiseMonotone& f, const Rational& y) {
  return bisect_inf([&](const Rational& x) { return f.eval(x) >= y; });
}

/// sup{x : pred(x)} for a down-set, by the same method.
inline ExtReal bisect_sup(const std::function<bool(const Rational&)>& pred) {
  ExtReal r = bisect_inf([&](const Rational& x) { return !pred(x); });
  return r;
}

inline Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

inline ExtReal fin(long p, long d = 1) { return ExtReal(q(p, d)); }

}  // namespace geninv::testing
