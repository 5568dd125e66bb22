#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geninv {

enum class Errc : std::uint8_t {
  MalformedShape,
  MonotonicityViolation,
  NonPositiveDenominator,
  Parse,
  NotOneSidedContinuous,
  NotRightContinuous,
  BadLimits,
  OutOfUnitRange,
  EmptySample,
  UnknownProperty,
  InvalidConfig,
  Io,
};

const char* errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message names the offending breakpoint/segment where there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), detail_(message) {}

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace geninv
