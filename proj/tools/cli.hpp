#pragma once

#include <iosfwd>

namespace geninv {

/// Entry point of the geninv tool. Exit codes: 0 success, 2 usage or
/// validation error, 3 property violations or composition mismatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geninv
