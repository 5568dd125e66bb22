#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace geninv {

/// Exact rational scalar. Always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses an integer ("-3"), a fraction ("p/q", q > 0) or a decimal literal
/// ("1.25", "-0.5e-3") exactly. Throws Error{Parse} or
/// Error{NonPositiveDenominator}.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Element of R ∪ {-inf, +inf} with the usual total order.
class ExtReal {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  ExtReal() = default;
  ExtReal(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static ExtReal neg_inf() { return ExtReal(Kind::NegInf); }
  static ExtReal pos_inf() { return ExtReal(Kind::PosInf); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }

  /// Precondition: is_finite().
  const Rational& value() const;

  friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b);
  friend bool operator==(const ExtReal& a, const ExtReal& b) { return (a <=> b) == 0; }

 private:
  explicit ExtReal(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

/// "-inf", "+inf" or the rational literal.
std::string to_string(const ExtReal& value);
ExtReal parse_ext_real(std::string_view text);
std::ostream& operator<<(std::ostream& os, const ExtReal& value);

inline const ExtReal& max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }
inline const ExtReal& min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }

}  // namespace geninv
