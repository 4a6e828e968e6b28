#include "aphidcount/numio.hpp"

#include <charconv>
#include <cmath>

#include "aphidcount/errors.hpp"

namespace aphid {

std::string format_double(double value) {
    char buf[40];
    const auto result = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, result.ptr);
}

double parse_double(const std::string& token, const std::string& origin, long line) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ParseError(ParseErrorKind::MalformedDocument, origin, line,
                         "not a number: '" + token + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(ParseErrorKind::NonFiniteValue, origin, line, "non-finite value");
    }
    return value;
}

} // namespace aphid
