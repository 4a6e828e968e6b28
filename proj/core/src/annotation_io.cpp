#include "aphidcount/annotation_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "aphidcount/errors.hpp"

namespace aphid {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_real(const std::string& tok, const std::string& origin, long line) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(ParseErrorKind::BadValue, origin, line, "not a number: '" + tok + "'");
    }
    if (used != tok.size()) {
        throw ParseError(ParseErrorKind::BadValue, origin, line, "not a number: '" + tok + "'");
    }
    if (!std::isfinite(value)) {
        throw ParseError(ParseErrorKind::NonFiniteValue, origin, line, "non-finite value");
    }
    return value;
}

int parse_class_id(const std::string& tok, const std::string& origin, long line) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(ParseErrorKind::BadValue, origin, line, "bad class id: '" + tok + "'");
    }
    if (used != tok.size()) {
        throw ParseError(ParseErrorKind::BadValue, origin, line, "bad class id: '" + tok + "'");
    }
    return value;
}

BoundingBox denormalize(double cx, double cy, double w, double h, int image_width,
                        int image_height, const std::string& origin, long line) {
    if (w < 0.0 || h < 0.0) {
        throw ParseError(ParseErrorKind::BadValue, origin, line, "negative box size");
    }
    BoundingBox box;
    box.xmin = (cx - w / 2.0) * image_width;
    box.xmax = (cx + w / 2.0) * image_width;
    box.ymin = (cy - h / 2.0) * image_height;
    box.ymax = (cy + h / 2.0) * image_height;
    return box;
}

void append_box_fields(std::string& out, const BoundingBox& box, int image_width,
                       int image_height) {
    const double cx = (box.xmin + box.xmax) / 2.0 / image_width;
    const double cy = (box.ymin + box.ymax) / 2.0 / image_height;
    const double w = box.width() / image_width;
    const double h = box.height() / image_height;
    char buf[128];
    std::snprintf(buf, sizeof buf, " %.6f %.6f %.6f %.6f", cx, cy, w, h);
    out += buf;
}

template <typename Fn>
void for_each_record(const std::string& text, Fn&& fn) {
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue; // blank line tolerated
        fn(tokens, line_no);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseErrorKind::Io, path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError(ParseErrorKind::Io, path, 0, "cannot open file for writing");
    out << text;
    if (!out) throw ParseError(ParseErrorKind::Io, path, 0, "short write");
}

} // namespace

std::vector<Detection> parse_detections(const std::string& text, int image_width,
                                        int image_height, const std::string& origin) {
    std::vector<Detection> dets;
    for_each_record(text, [&](const std::vector<std::string>& tok, long line) {
        if (tok.size() != 6) {
            throw ParseError(ParseErrorKind::MalformedDocument, origin, line,
                             "expected 6 fields (class cx cy w h conf), got " +
                                 std::to_string(tok.size()));
        }
        Detection det;
        det.class_id = parse_class_id(tok[0], origin, line);
        det.box = denormalize(parse_real(tok[1], origin, line), parse_real(tok[2], origin, line),
                              parse_real(tok[3], origin, line), parse_real(tok[4], origin, line),
                              image_width, image_height, origin, line);
        det.confidence = parse_real(tok[5], origin, line);
        if (det.confidence < 0.0 || det.confidence > 1.0) {
            throw ParseError(ParseErrorKind::BadValue, origin, line, "confidence outside [0, 1]");
        }
        dets.push_back(det);
    });
    return dets;
}

std::vector<BoundingBox> parse_ground_truth(const std::string& text, int image_width,
                                            int image_height, const std::string& origin) {
    std::vector<BoundingBox> boxes;
    for_each_record(text, [&](const std::vector<std::string>& tok, long line) {
        if (tok.size() != 5) {
            throw ParseError(ParseErrorKind::MalformedDocument, origin, line,
                             "expected 5 fields (class cx cy w h), got " +
                                 std::to_string(tok.size()));
        }
        parse_class_id(tok[0], origin, line);
        boxes.push_back(denormalize(parse_real(tok[1], origin, line),
                                    parse_real(tok[2], origin, line),
                                    parse_real(tok[3], origin, line),
                                    parse_real(tok[4], origin, line), image_width, image_height,
                                    origin, line));
    });
    return boxes;
}

std::vector<Detection> load_detections(const std::string& path, int image_width,
                                       int image_height) {
    return parse_detections(read_file(path), image_width, image_height, path);
}

std::vector<BoundingBox> load_ground_truth(const std::string& path, int image_width,
                                           int image_height) {
    return parse_ground_truth(read_file(path), image_width, image_height, path);
}

std::string format_detections(const std::vector<Detection>& dets, int image_width,
                              int image_height) {
    std::string out;
    for (const auto& det : dets) {
        out += std::to_string(det.class_id);
        append_box_fields(out, det.box, image_width, image_height);
        char buf[32];
        std::snprintf(buf, sizeof buf, " %.6f", det.confidence);
        out += buf;
        out += '\n';
    }
    return out;
}

std::string format_ground_truth(const std::vector<BoundingBox>& boxes, int image_width,
                                int image_height) {
    std::string out;
    for (const auto& box : boxes) {
        out += '0';
        append_box_fields(out, box, image_width, image_height);
        out += '\n';
    }
    return out;
}

void save_detections(const std::vector<Detection>& dets, const std::string& path,
                     int image_width, int image_height) {
    write_file(format_detections(dets, image_width, image_height), path);
}

void save_ground_truth(const std::vector<BoundingBox>& boxes, const std::string& path,
                       int image_width, int image_height) {
    write_file(format_ground_truth(boxes, image_width, image_height), path);
}

} // namespace aphid
