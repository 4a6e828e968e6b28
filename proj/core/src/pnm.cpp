#include "aphidcount/pnm.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "aphidcount/errors.hpp"

namespace aphid {

namespace {

struct Cursor {
    const std::string& bytes;
    std::size_t pos = 0;
    const std::string& origin;

    [[noreturn]] void fail(ParseErrorKind kind, const std::string& what) const {
        throw ParseError(kind, origin, 0, what);
    }

    bool eof() const { return pos >= bytes.size(); }

    // Skips whitespace and '#' comment lines between header tokens.
    void skip_separators() {
        while (!eof()) {
            const char c = bytes[pos];
            if (c == '#') {
                while (!eof() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else {
                break;
            }
        }
    }

    // Reads one unsigned decimal header token.
    long read_header_int(const char* name) {
        skip_separators();
        if (eof() || !std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            fail(ParseErrorKind::MalformedHeader, std::string("pnm: expected ") + name);
        }
        long value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) {
            value = value * 10 + (bytes[pos] - '0');
            if (value > 1'000'000'000L) {
                fail(ParseErrorKind::MalformedHeader, std::string("pnm: ") + name + " out of range");
            }
            ++pos;
        }
        return value;
    }
};

} // namespace

GrayImage decode_pnm(const std::string& bytes, const std::string& origin) {
    Cursor cur{bytes, 0, origin};

    if (bytes.size() < 2 || bytes[0] != 'P') {
        cur.fail(ParseErrorKind::MalformedHeader, "pnm: missing magic number");
    }
    const char format = bytes[1];
    if (format != '2' && format != '5' && format != '6') {
        cur.fail(ParseErrorKind::MalformedHeader,
                 std::string("pnm: unsupported format P") + format);
    }
    cur.pos = 2;

    const long width = cur.read_header_int("width");
    const long height = cur.read_header_int("height");
    const long maxval = cur.read_header_int("maxval");
    if (width < 1 || height < 1) {
        cur.fail(ParseErrorKind::MalformedHeader, "pnm: non-positive dimensions");
    }
    if (maxval < 1) {
        cur.fail(ParseErrorKind::MalformedHeader, "pnm: maxval must be >= 1");
    }
    if (maxval > 255) {
        cur.fail(ParseErrorKind::UnsupportedMaxval,
                 "pnm: maxval " + std::to_string(maxval) + " unsupported (must be <= 255)");
    }

    GrayImage img(static_cast<int>(width), static_cast<int>(height));
    const std::size_t count = img.pixels.size();

    if (format == '2') {
        for (std::size_t i = 0; i < count; ++i) {
            const long v = [&] {
                cur.skip_separators();
                if (cur.eof()) {
                    cur.fail(ParseErrorKind::TruncatedPayload, "pnm: ascii payload ended early");
                }
                if (!std::isdigit(static_cast<unsigned char>(bytes[cur.pos]))) {
                    cur.fail(ParseErrorKind::BadValue, "pnm: non-numeric ascii sample");
                }
                return cur.read_header_int("sample");
            }();
            if (v > maxval) {
                cur.fail(ParseErrorKind::BadValue, "pnm: sample exceeds maxval");
            }
            img.pixels[i] = static_cast<std::uint8_t>(v);
        }
        return img;
    }

    // Binary payloads start after exactly one whitespace byte following maxval.
    if (cur.eof() || !std::isspace(static_cast<unsigned char>(bytes[cur.pos]))) {
        cur.fail(ParseErrorKind::MalformedHeader, "pnm: missing separator before payload");
    }
    ++cur.pos;

    const std::size_t samples = format == '5' ? count : count * 3;
    if (bytes.size() - cur.pos < samples) {
        cur.fail(ParseErrorKind::TruncatedPayload,
                 "pnm: payload has " + std::to_string(bytes.size() - cur.pos) +
                     " bytes, expected " + std::to_string(samples));
    }

    const auto* data = reinterpret_cast<const std::uint8_t*>(bytes.data()) + cur.pos;
    if (format == '5') {
        for (std::size_t i = 0; i < count; ++i) {
            if (data[i] > maxval) cur.fail(ParseErrorKind::BadValue, "pnm: sample exceeds maxval");
            img.pixels[i] = data[i];
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint8_t r = data[3 * i], g = data[3 * i + 1], b = data[3 * i + 2];
            if (r > maxval || g > maxval || b > maxval) {
                cur.fail(ParseErrorKind::BadValue, "pnm: sample exceeds maxval");
            }
            const double luma = 0.299 * r + 0.587 * g + 0.114 * b;
            img.pixels[i] = static_cast<std::uint8_t>(std::lround(luma));
        }
    }
    return img;
}

GrayImage load_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseErrorKind::Io, path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return decode_pnm(buf.str(), path);
}

std::string encode_pgm(const GrayImage& img) {
    std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
    return out;
}

void save_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(ParseErrorKind::Io, path, 0, "cannot open file for writing");
    const std::string bytes = encode_pgm(img);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ParseError(ParseErrorKind::Io, path, 0, "short write");
}

} // namespace aphid
