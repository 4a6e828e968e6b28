#pragma once

#include <stdexcept>
#include <string>

namespace aphid {

/// What went wrong while reading an external file. Kept as a kind so
/// callers (and tests) can tell the failure modes apart without string
/// matching.
enum class ParseErrorKind {
    Io,               ///< file missing / unreadable
    MalformedHeader,  ///< magic number or header tokens unusable
    TruncatedPayload, ///< header promised more data than present
    UnsupportedMaxval,///< pnm maxval > 255
    MalformedDocument,///< document structure unusable (bad line, unknown key)
    MissingField,     ///< required key absent
    NonFiniteValue,   ///< a numeric field parsed to nan/inf
    BadValue          ///< a value violates the format's constraints
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::string file, long line, const std::string& what)
        : std::runtime_error(format(file, line, what)),
          kind_(kind), file_(std::move(file)), line_(line) {}

    ParseErrorKind kind() const noexcept { return kind_; }
    const std::string& file() const noexcept { return file_; }
    long line() const noexcept { return line_; } ///< 1-based; 0 when not line-addressable

private:
    static std::string format(const std::string& file, long line, const std::string& what) {
        std::string msg = file.empty() ? std::string("<memory>") : file;
        if (line > 0) msg += ":" + std::to_string(line);
        msg += ": " + what;
        return msg;
    }

    ParseErrorKind kind_;
    std::string file_;
    long line_;
};

} // namespace aphid
