#pragma once

#include <string>

namespace aphid {

/// Shortest decimal form that parses back to the identical double, so a
/// write/read round trip is byte-stable.
std::string format_double(double value);

/// Strict full-token parse; throws ParseError (MalformedDocument or
/// NonFiniteValue) naming origin and line on failure.
double parse_double(const std::string& token, const std::string& origin, long line);

} // namespace aphid
