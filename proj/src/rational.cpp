#include "geninv/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "geninv/error.hpp"

namespace geninv {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::MalformedShape: return "MalformedShape";
    case Errc::MonotonicityViolation: return "MonotonicityViolation";
    case Errc::NonPositiveDenominator: return "NonPositiveDenominator";
    case Errc::Parse: return "ParseError";
    case Errc::NotOneSidedContinuous: return "NotOneSidedContinuous";
    case Errc::NotRightContinuous: return "NotRightContinuous";
    case Errc::BadLimits: return "BadLimits";
    case Errc::OutOfUnitRange: return "OutOfUnitRange";
    case Errc::EmptySample: return "EmptySample";
    case Errc::UnknownProperty: return "UnknownProperty";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::Io: return "IoError";
  }
  return "Error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
  }
  return true;
}

// Optional sign followed by digits.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(Errc::Parse, "not a rational literal: '" + std::string(text) + "'");
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    if (!is_integer_literal(exp_part) || exp_part.size() > 8) bad_literal(text);
    exponent = std::strtol(std::string(exp_part).c_str(), nullptr, 10);
    s = s.substr(0, e);
  }
  std::string digits;
  auto dot = s.find('.');
  std::string_view int_part = s.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) bad_literal(text);
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    bad_literal(text);
  }
  digits.append(int_part).append(frac_part);
  exponent -= static_cast<long>(frac_part.size());

  mpz_class numerator(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational out = exponent < 0 ? Rational(numerator, scale) : Rational(numerator * scale);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) bad_literal(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) bad_literal(text);
    mpz_class d = parse_integer(den);
    if (d <= 0) {
      throw Error(Errc::NonPositiveDenominator, "denominator of '" + std::string(text) + "' is not positive");
    }
    Rational out(parse_integer(num), d);
    out.canonicalize();
    return out;
  }
  if (is_integer_literal(text)) return Rational(parse_integer(text));
  return parse_decimal(text);
}

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

const Rational& ExtReal::value() const {
  if (!is_finite()) throw std::logic_error("ExtReal::value() on an infinite value");
  return value_;
}

std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const ExtReal& value) {
  switch (value.kind()) {
    case ExtReal::Kind::NegInf: return "-inf";
    case ExtReal::Kind::PosInf: return "+inf";
    case ExtReal::Kind::Finite: break;
  }
  return to_string(value.value());
}

ExtReal parse_ext_real(std::string_view text) {
  if (text == "-inf") return ExtReal::neg_inf();
  if (text == "+inf" || text == "inf") return ExtReal::pos_inf();
  return ExtReal(parse_rational(text));
}

std::ostream& operator<<(std::ostream& os, const ExtReal& value) { return os << to_string(value); }

}  // namespace geninv
