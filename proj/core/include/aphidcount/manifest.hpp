#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace aphid {

/// One frame of a sequence: paths are stored relative to the manifest file,
/// resolved against its directory on load. gt_path is absent when the frame
/// has no ground truth ('-' in the file).
struct ManifestEntry {
    int frame_index = 0;
    std::string image_path;
    std::string detections_path;
    std::optional<std::string> gt_path;
};

struct SequenceManifest {
    std::vector<ManifestEntry> entries;

    bool has_ground_truth() const;
};

/// Line format: "<frame_index> <image_path> <detections_path> <gt_path|->".
/// Frame indices must start at 0 and increase by 1.
SequenceManifest parse_manifest(const std::string& text, const std::string& origin);

/// Loads and additionally resolves every referenced path against the
/// manifest's directory, failing if any file is missing.
SequenceManifest load_manifest(const std::filesystem::path& path);

std::string format_manifest(const SequenceManifest& manifest);
void save_manifest(const SequenceManifest& manifest, const std::filesystem::path& path);

} // namespace aphid
