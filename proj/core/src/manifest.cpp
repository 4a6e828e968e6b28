#include "aphidcount/manifest.hpp"

#include <fstream>
#include <sstream>

#include "aphidcount/errors.hpp"

namespace aphid {

bool SequenceManifest::has_ground_truth() const {
    if (entries.empty()) return false;
    for (const auto& e : entries)
        if (!e.gt_path) return false;
    return true;
}

SequenceManifest parse_manifest(const std::string& text, const std::string& origin) {
    SequenceManifest manifest;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::istringstream fields(line);
        int index = 0;
        std::string image, dets, gt;
        if (!(fields >> index >> image >> dets >> gt))
            throw ParseError(ParseErrorKind::MalformedDocument, origin, line_no,
                             "manifest line needs: frame_index image detections gt|-");
        std::string extra;
        if (fields >> extra)
            throw ParseError(ParseErrorKind::MalformedDocument, origin, line_no,
                             "trailing fields after gt path");
        const int expected = static_cast<int>(manifest.entries.size());
        if (index != expected)
            throw ParseError(ParseErrorKind::BadValue, origin, line_no,
                             "frame index " + std::to_string(index) + ", expected " +
                                 std::to_string(expected));
        ManifestEntry entry;
        entry.frame_index = index;
        entry.image_path = image;
        entry.detections_path = dets;
        if (gt != "-") entry.gt_path = gt;
        manifest.entries.push_back(std::move(entry));
    }
    if (manifest.entries.empty())
        throw ParseError(ParseErrorKind::MalformedDocument, origin, 1, "manifest has no frames");
    return manifest;
}

SequenceManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw ParseError(ParseErrorKind::Io, path.string(), 0, "cannot open manifest");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    SequenceManifest manifest = parse_manifest(buffer.str(), path.string());

    const std::filesystem::path base = path.parent_path();
    int line_no = 0;
    for (auto& entry : manifest.entries) {
        ++line_no;
        auto resolve = [&](const std::string& rel) {
            const std::filesystem::path full = base / rel;
            if (!std::filesystem::exists(full))
                throw ParseError(ParseErrorKind::Io, path.string(), line_no,
                                 "referenced file missing: " + full.string());
            return full.string();
        };
        entry.image_path = resolve(entry.image_path);
        entry.detections_path = resolve(entry.detections_path);
        if (entry.gt_path) entry.gt_path = resolve(*entry.gt_path);
    }
    return manifest;
}

std::string format_manifest(const SequenceManifest& manifest) {
    std::ostringstream out;
    for (const auto& entry : manifest.entries) {
        out << entry.frame_index << ' ' << entry.image_path << ' ' << entry.detections_path << ' '
            << (entry.gt_path ? *entry.gt_path : std::string("-")) << '\n';
    }
    return out.str();
}

void save_manifest(const SequenceManifest& manifest, const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw ParseError(ParseErrorKind::Io, path.string(), 0, "cannot write manifest");
    file << format_manifest(manifest);
}

} // namespace aphid
