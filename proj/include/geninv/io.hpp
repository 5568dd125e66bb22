#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "geninv/compose.hpp"
#include "geninv/piecewise.hpp"
#include "geninv/properties.hpp"

namespace geninv::io {

using nlohmann::json;

// Function files:
//   {"breakpoints": [{"x": "0", "value": "1/2"}, ...],
//    "segments":    [{"slope": "1", "intercept": "-3/4"}, ...]}
// Numbers are strings holding an integer, a decimal or "p/q"; bare JSON
// integers are also accepted. Extended files may use "-inf"/"+inf" for
// breakpoint values and mark an infinite piece as {"slope": "0",
// "intercept": "-inf"}.

json to_json(const PiecewiseMonotone& f);
json to_json(const ExtPiecewise& f);
json to_json(const Violation& v);
json to_json(const PropertyResult& r);
json to_json(const Interval& interval);
json to_json(const CompositionReport& report);

/// Throws Error{Parse} with a JSON path for shape problems; the checks of
/// validate() apply afterwards.
PiecewiseMonotone function_from_json(const json& doc);
ExtPiecewise ext_function_from_json(const json& doc);

PiecewiseMonotone parse_function(std::string_view text);
ExtPiecewise parse_ext_function(std::string_view text);

std::string emit(const PiecewiseMonotone& f);
std::string emit(const ExtPiecewise& f);

/// Reads a whole file; "-" means standard input.
std::string read_text(const std::filesystem::path& path);

/// One rational literal per line; blank lines and lines starting with '#'
/// are skipped.
std::vector<Rational> read_samples(std::istream& in);
void write_samples(std::ostream& out, const std::vector<Rational>& values);

}  // namespace geninv::io
